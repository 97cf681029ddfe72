#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "slicealg/slicefn.hpp"

namespace slicealg {

/// The characteristic polynomial Delta_y(x) = x^2 - x t(y) + n(y): the real
/// monic quadratic vanishing exactly on the sphere through y.
struct CharPoly {
    double t_y = 0.0;
    double n_y = 0.0;
    std::complex<double> eval(std::complex<double> z) const { return z * z - z * t_y + n_y; }
};

CharPoly char_poly(const Element& y, double tol = kDefaultTol);

enum class ZeroKind { real, spherical, isolated };

/// One classified zero locus of a polynomial: a real point, a whole sphere, or
/// a single non-real point on its sphere.
struct ZeroRecord {
    ZeroKind kind = ZeroKind::real;
    double alpha = 0.0;
    double beta = 0.0;  // >= 0; 0 exactly for real zeros
    /// The real zero, the isolated zero, or a chosen sphere representative
    /// alpha + beta*J0 (absent when no basis square root of -1 exists).
    std::optional<Element> point;
    int multiplicity = 1;
    double residual = 0.0;  // max |p| over the checked witnesses
};

/// Real coefficients of N(p) = p * p^c, c_n = sum_{j+k=n} a_j a_k^c. Throws
/// NonRealNormal when some c_n is not real, i.e. p was not admissible.
std::vector<double> normal_poly_coeffs(const SlicePoly& p, double tol = kDefaultTol);

/// Classifies the sphere with parameter zeta = alpha + i beta (beta >= 0),
/// which must be a root of the normal polynomial. For isolated zeros the point
/// is found as alpha + beta K via the complexified-algebra zero divisor and
/// cross-checked against the Newton-style form alpha - v_s p (d_s p)^{-1}.
ZeroRecord classify_sphere(const SlicePoly& p, std::complex<double> zeta,
                           double tol = kDefaultTol);

/// Multiplicity of the zero locus in `record`: the multiplicity of zeta as a
/// root of the normal polynomial for non-real spheres; half the (necessarily
/// even) real-root multiplicity for real zeros.
int multiplicity(const SlicePoly& p, const ZeroRecord& record, double tol = kDefaultTol);

/// Synthetic division by (x - y), y real with p(y) = 0.
SlicePoly divide_linear_real(const SlicePoly& p, double y, double tol = kDefaultTol);

/// f = Delta_y h + x a + b.
struct DivisionResult {
    SlicePoly quotient;
    Element a;
    Element b;
};

/// Long division of p by the real monic quadratic Delta_y, y non-real in the
/// quadratic cone. Always possible; the zero-classification facts (a equals
/// the spherical derivative on the sphere, y a + b = 0 at isolated zeros) are
/// asserted by callers when wanted.
DivisionResult divide_char(const SlicePoly& p, const Element& y, double tol = kDefaultTol);

/// Full pipeline: normal polynomial -> complex roots (upper half plane
/// representatives) -> sphere classification -> multiplicities. Requires an
/// admissible p (span test, else sampled test) unless forced; asserts that the
/// multiplicities sum to deg p.
std::vector<ZeroRecord> all_zeros(const SlicePoly& p, double tol = kDefaultTol,
                                  bool force_admissible = false);

struct SphereParam {
    double alpha = 0.0;
    double beta = 0.0;
};

/// Checks that the spheres through zeros of f*g coincide with those through
/// zeros of f and of g.
struct ProductZeroReport {
    std::vector<SphereParam> product_spheres;
    std::vector<SphereParam> factor_spheres;
    bool equal = false;
};

ProductZeroReport zeros_of_product_check(const SlicePoly& f, const SlicePoly& g,
                                         double tol = kDefaultTol);

}  // namespace slicealg
