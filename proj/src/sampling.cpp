#include "slicealg/sampling.hpp"

#include <cmath>

namespace slicealg {

Element random_element(const AlgebraPtr& a, Rng& rng, double lo, double hi) {
    std::vector<double> c(static_cast<size_t>(a->dim()));
    for (double& v : c) v = rng.uniform(lo, hi);
    return Element(a, std::move(c));
}

SphereSampler::SphereSampler(const AlgebraPtr& a, double tol) : algebra_(a) {
    for (int k = 1; k < a->dim(); ++k) {
        Element cand = Element::basis(a, k);
        if (!is_sqrt_minus_one(cand, tol)) continue;
        bool anticommutes = true;
        for (const Element& j : span_) {
            if ((mul(cand, j) + mul(j, cand)).inf_norm() > tol) {
                anticommutes = false;
                break;
            }
        }
        if (anticommutes) span_.push_back(std::move(cand));
    }
}

const Element& SphereSampler::canonical() const {
    if (span_.empty()) throw Error("algebra has no basis square root of -1");
    return span_.front();
}

Element SphereSampler::sample(Rng& rng) const {
    if (span_.empty()) throw Error("algebra has no basis square root of -1");
    Element j = Element::zero(algebra_);
    double norm2 = 0.0;
    while (norm2 < 1e-6) {
        j = Element::zero(algebra_);
        norm2 = 0.0;
        for (const Element& b : span_) {
            const double w = rng.uniform(-1.0, 1.0);
            j += b * w;
            norm2 += w * w;
        }
    }
    return j * (1.0 / std::sqrt(norm2));
}

Element SphereSampler::cone_point(Rng& rng, double alpha_lo, double alpha_hi,
                                  double beta_hi) const {
    const double alpha = rng.uniform(alpha_lo, alpha_hi);
    const double beta = rng.uniform(0.0, beta_hi);
    return Element::scalar(algebra_, alpha) + sample(rng) * beta;
}

SlicePoly random_poly(const AlgebraPtr& a, Rng& rng, int degree, double lo, double hi) {
    std::vector<Element> coeffs;
    for (int j = 0; j <= degree; ++j) coeffs.push_back(random_element(a, rng, lo, hi));
    if (coeffs.back().is_zero()) coeffs.back()[0] = 1.0;
    return SlicePoly(a, std::move(coeffs));
}

namespace {

SlicePoly random_low_grade_poly(const AlgebraPtr& clifford, Rng& rng, int degree, int coord_range,
                                int k_lo) {
    // For the (grade, lex) basis order the unity is index 0 and the grade-1
    // blades are indices 1..n.
    int n = 0;
    while ((1 << n) < clifford->dim()) ++n;
    std::vector<Element> coeffs;
    for (int j = 0; j <= degree; ++j) {
        Element c = Element::zero(clifford);
        for (int k = k_lo; k <= n; ++k)
            c[k] = static_cast<double>(rng.uniform_int(-coord_range, coord_range));
        coeffs.push_back(std::move(c));
    }
    while (coeffs.back().is_zero()) coeffs.back()[rng.uniform_int(k_lo, n)] = 1.0;
    return SlicePoly(clifford, std::move(coeffs));
}

}  // namespace

SlicePoly random_paravector_poly(const AlgebraPtr& clifford, Rng& rng, int degree,
                                 int coord_range) {
    return random_low_grade_poly(clifford, rng, degree, coord_range, 0);
}

SlicePoly random_vector_poly(const AlgebraPtr& clifford, Rng& rng, int degree, int coord_range) {
    return random_low_grade_poly(clifford, rng, degree, coord_range, 1);
}

}  // namespace slicealg
