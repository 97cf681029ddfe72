#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "slicealg/complexify.hpp"

namespace slicealg {

/// Conjugation-symmetric planar domains on which stem functions live.
struct DomainDescriptor {
    enum class Kind { disk, conj_pair_disks, whole_plane };

    Kind kind = Kind::whole_plane;
    std::complex<double> center{0.0, 0.0};  // real for disk; Im > 0 for conj_pair_disks
    double radius = 0.0;

    static DomainDescriptor disk(double center, double radius);
    /// Two disks around center and conj(center), disjoint from the real axis.
    static DomainDescriptor conj_pair(std::complex<double> center, double radius);
    static DomainDescriptor whole_plane();

    /// Closed containment with a small relative slack so boundary quadrature
    /// nodes evaluate cleanly.
    bool contains(std::complex<double> z) const;
    /// Strict interior containment with relative margin.
    bool contains_interior(std::complex<double> z, double margin = 0.0) const;
    bool meets_real_axis() const;
    /// Characteristic length, used to scale finite-difference steps.
    double length_scale() const;

    /// Deterministic n x n sample grid per component, shrunk toward the center
    /// by `shrink`; whole-plane domains use the box [-box, box]^2.
    std::vector<std::complex<double>> sample_grid(int n, double shrink = 0.95,
                                                  double box = 2.0) const;

    bool operator==(const DomainDescriptor&) const = default;
};

/// Polynomial sum_j x^j a_j with right coefficients; its stem is
/// z -> sum_j z^j a_j on the whole plane.
class SlicePoly {
public:
    SlicePoly(AlgebraPtr algebra, std::vector<Element> coeffs);

    static SlicePoly zero(const AlgebraPtr& a);
    static SlicePoly constant(Element value);
    /// The identity monomial x.
    static SlicePoly identity(const AlgebraPtr& a);

    const AlgebraPtr& algebra() const { return algebra_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Element>& coeffs() const { return coeffs_; }
    /// a_j, or 0 beyond the degree.
    Element coeff(int j) const;
    bool is_zero_poly() const;

private:
    AlgebraPtr algebra_;
    std::vector<Element> coeffs_;  // trailing exact zeros trimmed
};

using StemCallback = std::function<CElement(std::complex<double>)>;

/// A stem given by a callback D -> A (x) C, with declared intrinsicity
/// (F(conj z) = bar(F(z))) and optional d/dz, d/dzbar callbacks. Callbacks must
/// be pure and reentrant; the library never mutates them.
struct StemClosure {
    AlgebraPtr algebra;
    StemCallback eval;
    DomainDescriptor domain;
    bool declared_intrinsic = true;
    std::optional<StemCallback> dz_eval;
    std::optional<StemCallback> dzbar_eval;

    StemClosure(AlgebraPtr alg, StemCallback f, DomainDescriptor dom, bool intrinsic = true,
                std::optional<StemCallback> dz = std::nullopt,
                std::optional<StemCallback> dzbar = std::nullopt);
};

/// Either a polynomial stem or a closure stem; the induced slice function is
/// f(alpha + beta J) = F_1(alpha + i beta) + J F_2(alpha + i beta).
class SliceFunction {
public:
    SliceFunction(SlicePoly p) : repr_(std::move(p)) {}
    SliceFunction(StemClosure c) : repr_(std::move(c)) {}

    bool is_poly() const { return std::holds_alternative<SlicePoly>(repr_); }
    const SlicePoly& poly() const { return std::get<SlicePoly>(repr_); }
    const StemClosure& closure() const { return std::get<StemClosure>(repr_); }

    const AlgebraPtr& algebra() const;
    DomainDescriptor domain() const;

private:
    std::variant<SlicePoly, StemClosure> repr_;
};

/// Real components (A_n, B_n) of z^n.
std::pair<double, double> zpow_components(int n, std::complex<double> z);

/// Stem value F(z) = F_1(z) + i F_2(z).
CElement stem_eval(const SliceFunction& f, std::complex<double> z);

/// f(x) for x in the quadratic cone with slice parameter inside the domain.
Element slice_eval(const SliceFunction& f, const Element& x, double tol = kDefaultTol);

/// v_s f(x) = (f(x) + f(x^c)) / 2.
Element spherical_value(const SliceFunction& f, const Element& x, double tol = kDefaultTol);

/// d_s f(x) = IM(x)^{-1} (f(x) - f(x^c)) / 2; undefined at real points.
Element spherical_derivative(const SliceFunction& f, const Element& x, double tol = kDefaultTol);

/// The spherical derivative as a slice function, induced by the stem
/// F_2(z)/Im(z). Left undefined on the real axis (no continuous extension is
/// attempted); evaluating there raises RealPointForDerivative.
SliceFunction spherical_derivative_closure(const SliceFunction& f);

/// Recovers f(alpha + beta I) from values on the half planes C_J+ and C_K+:
///   (I - K)((J - K)^{-1} f_J) - (I - J)((J - K)^{-1} f_K),
/// using the two-point average form when K = -J.
Element representation(const Element& f_at_J, const Element& f_at_K, const Element& J,
                       const Element& K, const Element& I, double alpha, double beta,
                       double tol = kDefaultTol);

/// Product induced by pointwise stem multiplication. On polynomials this is the
/// star product sum_n x^n (sum_{j+k=n} a_j b_k); any closure operand yields a
/// closure with stem z -> F(z) G(z).
SliceFunction sprod(const SliceFunction& f, const SliceFunction& g);

/// Conjugate slice function, stem z -> F(z)^c.
SliceFunction sconj(const SliceFunction& f);

/// Normal function N(f) = f * f^c.
SliceFunction normal(const SliceFunction& f);

/// True when both stem components are real-valued (coefficients in R*e0 for
/// polynomials; sampled on a grid for closures).
bool is_real_slicefn(const SliceFunction& f, double tol = kDefaultTol);

/// Sufficient polynomial admissibility test: the coefficient span lies in the
/// normal cone. Not necessary in general.
bool is_admissible_span(const SlicePoly& p, double tol = kDefaultTol);

/// Sampled admissibility falsifier: checks span{F_1(z), F_2(z)} in the normal
/// cone on a deterministic grid (plus the normal polynomial's root parameters
/// when they are available). Returns false on the first counterexample; true
/// means "no counterexample found", not a proof.
bool is_admissible_sampled(const SliceFunction& f, int grid_n = 32, double tol = kDefaultTol);

/// Slice derivatives df/dx = I(dF/dz) and df/dx^c = I(dF/dzbar).
SliceFunction ddx(const SliceFunction& f);
SliceFunction ddxc(const SliceFunction& f);

/// Polynomial stems are holomorphic; closures are checked via the dzbar
/// callback or central finite differences on a grid.
bool is_slice_regular(const SliceFunction& f, int grid_n = 16, double tol = 1e-6);

/// Both sides of d_s(f.g) = (d_s f)(v_s g) + (v_s f)(d_s g) at x, for tests.
std::pair<Element, Element> leibniz_check(const SliceFunction& f, const SliceFunction& g,
                                          const Element& x, double tol = kDefaultTol);

/// The slice function equal to 1 - I*j0 at alpha + beta I (beta > 0): constant
/// 2 on C_{j0}+ and 0 on C_{-j0}+, induced by a locally constant stem on a
/// conjugate pair of disks. Its normal function vanishes identically, which is
/// only possible because the domain avoids the real axis.
SliceFunction make_halfplane_constant(const Element& j0, const DomainDescriptor& domain);

namespace detail {
/// Coefficients of the normal polynomial c_n = sum_{j+k=n} a_j a_k^c if they
/// are all real within tol; nullopt (with the offender index) otherwise.
std::optional<std::vector<double>> try_real_normal_coeffs(const SlicePoly& p, double tol,
                                                          int* offender = nullptr);
}  // namespace detail

}  // namespace slicealg
