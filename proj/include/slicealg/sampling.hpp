#pragma once

#include <random>

#include "slicealg/algebra.hpp"
#include "slicealg/slicefn.hpp"

namespace slicealg {

/// Deterministic generator used by all sampled checks and verification suites.
class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }
    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen_);
    }

private:
    std::mt19937_64 gen_;
};

Element random_element(const AlgebraPtr& a, Rng& rng, double lo = -1.0, double hi = 1.0);

/// Samples square roots of -1 from the unit sphere of a span of pairwise
/// anticommuting basis elements (greedily collected). For the quaternions,
/// octonions and the 1-vectors of a Clifford algebra this covers the familiar
/// spheres; in general it is a sub-family of all square roots of -1.
class SphereSampler {
public:
    explicit SphereSampler(const AlgebraPtr& a, double tol = kDefaultTol);

    bool empty() const { return span_.empty(); }
    size_t span_dim() const { return span_.size(); }
    /// A fixed representative (the first anticommuting basis element found).
    const Element& canonical() const;
    Element sample(Rng& rng) const;
    /// A point alpha + beta J with J sampled from the sphere family.
    Element cone_point(Rng& rng, double alpha_lo = -1.0, double alpha_hi = 1.0,
                       double beta_hi = 1.0) const;

private:
    AlgebraPtr algebra_;
    std::vector<Element> span_;
};

/// Random polynomial with coefficients drawn coordinatewise in [lo, hi].
SlicePoly random_poly(const AlgebraPtr& a, Rng& rng, int degree, double lo = -1.0,
                      double hi = 1.0);

/// Random polynomial over a Clifford algebra with small-integer paravector
/// coefficients (unity + 1-vector coordinates); always admissible.
SlicePoly random_paravector_poly(const AlgebraPtr& clifford, Rng& rng, int degree,
                                 int coord_range = 3);

/// Random polynomial with pure 1-vector coefficients. Also admissible, and over
/// clifford(3) this family is closed under the slice product (products land in
/// the even subalgebra, whose nonzero elements all have real nonzero norm).
SlicePoly random_vector_poly(const AlgebraPtr& clifford, Rng& rng, int degree,
                             int coord_range = 3);

}  // namespace slicealg
