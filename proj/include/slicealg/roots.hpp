#pragma once

#include <complex>
#include <vector>

namespace slicealg {

struct RootCluster {
    std::complex<double> root;
    int multiplicity = 1;
};

/// Simultaneous (Aberth-Ehrlich) iteration with deterministic initial guesses
/// on a circle; multiple roots are reported by clustering the converged
/// approximants, then polished on the matching derivative. For real input the
/// root list is exactly conjugation-symmetric and near-real roots are snapped
/// onto the axis. Coefficients are low-to-high; the leading one must be
/// nonzero. Throws NoConvergence after 500 sweeps.
std::vector<RootCluster> complex_roots(const std::vector<std::complex<double>>& coeffs,
                                       double tol = 1e-9);
std::vector<RootCluster> complex_roots(const std::vector<double>& coeffs, double tol = 1e-9);

}  // namespace slicealg
