#include "slicealg/complexify.hpp"

#include <cmath>

namespace slicealg {

CElement operator+(const CElement& a, const CElement& b) { return {a.re + b.re, a.im + b.im}; }
CElement operator-(const CElement& a, const CElement& b) { return {a.re - b.re, a.im - b.im}; }
CElement operator-(const CElement& a) { return {-a.re, -a.im}; }
CElement operator*(const CElement& a, double s) { return {a.re * s, a.im * s}; }

CElement cmul(const CElement& w, const CElement& v) {
    require_same_algebra(w.re, v.re);
    return {mul(w.re, v.re) - mul(w.im, v.im), mul(w.re, v.im) + mul(w.im, v.re)};
}

CElement cscale(const CElement& w, std::complex<double> z) {
    const double u = z.real(), v = z.imag();
    return {w.re * u - w.im * v, w.re * v + w.im * u};
}

CElement c_antiinvolution(const CElement& w) { return {conj(w.re), conj(w.im)}; }

CElement bar_conj(const CElement& w) { return {w.re, -w.im}; }

CElement cn(const CElement& w) {
    CElement product = cmul(w, c_antiinvolution(w));
    // Expanded form as a consistency check on the algebra tables.
    const Element expanded_re = norm_elem(w.re) - norm_elem(w.im);
    const Element expanded_im = trace(mul(w.re, conj(w.im)));
    const double scale = (1.0 + w.inf_norm()) * (1.0 + w.inf_norm());
    if ((product.re - expanded_re).inf_norm() > 1e-8 * scale ||
        (product.im - expanded_im).inf_norm() > 1e-8 * scale)
        throw NumericalError("cn(w): product and expanded forms disagree");
    return product;
}

bool is_complex_valued(const CElement& w, double tol) {
    return is_real(w.re, tol) && is_real(w.im, tol);
}

Element solve_K(const CElement& w, double tol) {
    const double scale = (1.0 + w.inf_norm()) * (1.0 + w.inf_norm());
    if (w.re.is_zero() && w.im.is_zero()) throw NotAZeroDivisor("w = 0 determines no K");
    const CElement norm = cn(w);
    if (norm.inf_norm() > tol * scale) throw NotAZeroDivisor();

    const Element ny = norm_elem(w.im);
    if (!is_real(ny, tol) || std::abs(ny[0]) <= tol * scale) throw DegenerateY();

    Element k = mul(w.re, conj(w.im)) * (-1.0 / ny[0]);
    if (!is_sqrt_minus_one(k, std::max(tol * 1e3, 1e-7)))
        throw NumericalError("solve_K produced no square root of -1");
    const Element residual = w.re + mul(k, w.im);
    if (residual.inf_norm() > std::max(tol * 1e3, 1e-7) * (1.0 + w.inf_norm()))
        throw NumericalError("solve_K: x + K y does not vanish");
    return k;
}

}  // namespace slicealg
