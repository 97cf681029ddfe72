#pragma once

#include <complex>

#include "slicealg/algebra.hpp"

namespace slicealg {

/// w = x + i y in the complexified algebra; i commutes with everything and the
/// product is (x+iy)(x'+iy') = xx' - yy' + i(xy' + yx').
struct CElement {
    Element re;
    Element im;

    CElement(Element r, Element i) : re(std::move(r)), im(std::move(i)) {
        require_same_algebra(re, im);
    }

    static CElement zero(const AlgebraPtr& a) { return {Element::zero(a), Element::zero(a)}; }
    static CElement from_real(Element x) {
        Element z = Element::zero(x.algebra());
        return {std::move(x), std::move(z)};
    }
    /// The complex scalar z acting as z * e0.
    static CElement from_complex(const AlgebraPtr& a, std::complex<double> z) {
        return {Element::scalar(a, z.real()), Element::scalar(a, z.imag())};
    }

    const AlgebraPtr& algebra() const { return re.algebra(); }
    double inf_norm() const { return std::max(re.inf_norm(), im.inf_norm()); }
};

CElement operator+(const CElement& a, const CElement& b);
CElement operator-(const CElement& a, const CElement& b);
CElement operator-(const CElement& a);
CElement operator*(const CElement& a, double s);

/// Product in the complexified algebra.
CElement cmul(const CElement& w, const CElement& v);

/// Multiplication by a complex scalar (central, so no ordering concerns).
CElement cscale(const CElement& w, std::complex<double> z);

/// The complex-linear antiinvolution w^c = x^c + i y^c.
CElement c_antiinvolution(const CElement& w);

/// Complex conjugation, bar(w) = x - i y.
CElement bar_conj(const CElement& w);

/// cn(w) = w w^c. Computed as the literal product; the expanded form
/// n(x) - n(y) + i t(x y^c) is recomputed and the two are required to agree,
/// which catches inconsistent multiplication tables early.
CElement cn(const CElement& w);

/// Both components lie in R*e0.
bool is_complex_valued(const CElement& w, double tol = kDefaultTol);

/// For w = x + iy with cn(w) = 0, w != 0: the unique K with t(K)=0, n(K)=1 and
/// x + K y = 0, namely K = -x y^c / n(y). Requires y in the normal cone.
Element solve_K(const CElement& w, double tol = kDefaultTol);

}  // namespace slicealg
