#include "slicealg/slicefn.hpp"

#include <algorithm>
#include <cmath>

#include "slicealg/roots.hpp"

namespace slicealg {

using cdouble = std::complex<double>;

// ---------------------------------------------------------------------------
// Domains

DomainDescriptor DomainDescriptor::disk(double center, double radius) {
    if (radius <= 0.0) throw Error("disk radius must be positive");
    return {Kind::disk, {center, 0.0}, radius};
}

DomainDescriptor DomainDescriptor::conj_pair(cdouble center, double radius) {
    if (radius <= 0.0) throw Error("disk radius must be positive");
    if (center.imag() <= 0.0) throw Error("conj_pair center must have positive imaginary part");
    if (radius >= center.imag()) throw Error("conj_pair disks must not meet the real axis");
    return {Kind::conj_pair_disks, center, radius};
}

DomainDescriptor DomainDescriptor::whole_plane() { return {Kind::whole_plane, {0.0, 0.0}, 0.0}; }

bool DomainDescriptor::contains(cdouble z) const {
    const double slack = 1.0 + 1e-12;
    switch (kind) {
        case Kind::whole_plane:
            return true;
        case Kind::disk:
            return std::abs(z - center) <= radius * slack;
        case Kind::conj_pair_disks:
            return std::abs(z - center) <= radius * slack ||
                   std::abs(z - std::conj(center)) <= radius * slack;
    }
    return false;
}

bool DomainDescriptor::contains_interior(cdouble z, double margin) const {
    switch (kind) {
        case Kind::whole_plane:
            return true;
        case Kind::disk:
            return std::abs(z - center) < radius * (1.0 - margin);
        case Kind::conj_pair_disks:
            return std::abs(z - center) < radius * (1.0 - margin) ||
                   std::abs(z - std::conj(center)) < radius * (1.0 - margin);
    }
    return false;
}

bool DomainDescriptor::meets_real_axis() const { return kind != Kind::conj_pair_disks; }

double DomainDescriptor::length_scale() const {
    return kind == Kind::whole_plane ? 1.0 : radius;
}

std::vector<cdouble> DomainDescriptor::sample_grid(int n, double shrink, double box) const {
    std::vector<cdouble> out;
    auto fill_box = [&](cdouble c, double half) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double u = n == 1 ? 0.0 : -1.0 + 2.0 * i / (n - 1);
                const double v = n == 1 ? 0.0 : -1.0 + 2.0 * j / (n - 1);
                const cdouble z = c + cdouble(u * half, v * half);
                if (contains_interior(z, 1.0 - shrink) || kind == Kind::whole_plane)
                    out.push_back(z);
            }
    };
    switch (kind) {
        case Kind::whole_plane:
            fill_box({0.0, 0.0}, box);
            break;
        case Kind::disk:
            fill_box(center, radius * shrink);
            break;
        case Kind::conj_pair_disks:
            fill_box(center, radius * shrink);
            fill_box(std::conj(center), radius * shrink);
            break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// SlicePoly / StemClosure / SliceFunction

SlicePoly::SlicePoly(AlgebraPtr algebra, std::vector<Element> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
    if (!algebra_) throw Error("polynomial requires an algebra");
    if (coeffs_.empty()) coeffs_.push_back(Element::zero(algebra_));
    for (const auto& c : coeffs_)
        if (c.algebra() != algebra_) throw AlgebraMismatch("coefficient from a different algebra");
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SlicePoly SlicePoly::zero(const AlgebraPtr& a) { return SlicePoly(a, {Element::zero(a)}); }

SlicePoly SlicePoly::constant(Element value) {
    AlgebraPtr a = value.algebra();
    return SlicePoly(a, {std::move(value)});
}

SlicePoly SlicePoly::identity(const AlgebraPtr& a) {
    return SlicePoly(a, {Element::zero(a), Element::scalar(a, 1.0)});
}

Element SlicePoly::coeff(int j) const {
    if (j < 0 || j > degree()) return Element::zero(algebra_);
    return coeffs_[static_cast<size_t>(j)];
}

bool SlicePoly::is_zero_poly() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

StemClosure::StemClosure(AlgebraPtr alg, StemCallback f, DomainDescriptor dom, bool intrinsic,
                         std::optional<StemCallback> dz, std::optional<StemCallback> dzbar)
    : algebra(std::move(alg)),
      eval(std::move(f)),
      domain(dom),
      declared_intrinsic(intrinsic),
      dz_eval(std::move(dz)),
      dzbar_eval(std::move(dzbar)) {
    if (!algebra || !eval) throw Error("stem closure requires an algebra and a callback");
    if (declared_intrinsic) {
        // Spot-check F(conj z) = bar(F(z)) on a few conjugate pairs.
        for (cdouble z : domain.sample_grid(3, 0.7)) {
            if (!domain.contains(std::conj(z))) continue;
            const CElement a = eval(z);
            const CElement b = bar_conj(eval(std::conj(z)));
            if ((a.re - b.re).inf_norm() + (a.im - b.im).inf_norm() >
                1e-7 * (1.0 + a.inf_norm()))
                throw Error("stem closure declared intrinsic but F(conj z) != bar F(z)");
        }
    }
}

const AlgebraPtr& SliceFunction::algebra() const {
    if (is_poly()) return poly().algebra();
    return closure().algebra;
}

DomainDescriptor SliceFunction::domain() const {
    if (is_poly()) return DomainDescriptor::whole_plane();
    return closure().domain;
}

// ---------------------------------------------------------------------------
// Evaluation

std::pair<double, double> zpow_components(int n, cdouble z) {
    cdouble p{1.0, 0.0};
    for (int k = 0; k < n; ++k) p *= z;
    return {p.real(), p.imag()};
}

CElement stem_eval(const SliceFunction& f, cdouble z) {
    if (f.is_poly()) {
        const SlicePoly& p = f.poly();
        CElement acc = CElement::from_real(p.coeff(p.degree()));
        for (int j = p.degree() - 1; j >= 0; --j)
            acc = cscale(acc, z) + CElement::from_real(p.coeff(j));
        return acc;
    }
    const StemClosure& c = f.closure();
    if (!c.domain.contains(z)) throw OutOfDomain();
    return c.eval(z);
}

Element slice_eval(const SliceFunction& f, const Element& x, double tol) {
    if (x.algebra() != f.algebra()) throw AlgebraMismatch();
    const SliceCoords sc = slice_coords(x, tol);
    const cdouble z{sc.alpha, sc.beta};
    const CElement w = stem_eval(f, z);
    if (!sc.unit) return w.re;
    return w.re + mul(*sc.unit, w.im);
}

Element spherical_value(const SliceFunction& f, const Element& x, double tol) {
    return (slice_eval(f, x, tol) + slice_eval(f, conj(x), tol)) * 0.5;
}

Element spherical_derivative(const SliceFunction& f, const Element& x, double tol) {
    const SliceCoords sc = slice_coords(x, tol);
    if (!sc.unit) throw RealPointForDerivative();
    const Element diff = slice_eval(f, x, tol) - slice_eval(f, conj(x), tol);
    // IM(x)^{-1} = -J / beta.
    return mul(*sc.unit, diff) * (-0.5 / sc.beta);
}

SliceFunction spherical_derivative_closure(const SliceFunction& f) {
    SliceFunction copy = f;
    auto eval = [copy](cdouble z) -> CElement {
        if (z.imag() == 0.0) throw RealPointForDerivative();
        const CElement w = stem_eval(copy, z);
        return {w.im * (1.0 / z.imag()), Element::zero(w.algebra())};
    };
    return SliceFunction(StemClosure(f.algebra(), eval, f.domain(), /*intrinsic=*/false));
}

Element representation(const Element& f_at_J, const Element& f_at_K, const Element& J,
                       const Element& K, const Element& I, double alpha, double beta,
                       double tol) {
    (void)alpha;  // identifies the point; the combination uses only the values
    for (const Element* u : {&J, &K, &I})
        if (!is_sqrt_minus_one(*u, std::max(tol, 1e-7))) throw NotSqrtMinusOne();
    if (beta < 0.0) throw Error("representation expects beta >= 0");

    if ((J + K).inf_norm() <= tol * (1.0 + J.inf_norm())) {
        // Two-point average form on C_J.
        const Element avg = (f_at_J + f_at_K) * 0.5;
        const Element diff = f_at_J - f_at_K;
        return avg - mul(I, mul(J, diff)) * 0.5;
    }
    const Element jk_inv = inverse(J - K, tol);
    const Element i_minus_k = I - K;
    const Element i_minus_j = I - J;
    return mul(i_minus_k, mul(jk_inv, f_at_J)) - mul(i_minus_j, mul(jk_inv, f_at_K));
}

// ---------------------------------------------------------------------------
// Products and conjugates

namespace {

StemClosure to_closure(const SlicePoly& p) {
    SliceFunction f{p};
    std::vector<Element> dcoef;
    for (int j = 1; j <= p.degree(); ++j) dcoef.push_back(p.coeff(j) * static_cast<double>(j));
    SliceFunction df{SlicePoly(p.algebra(), std::move(dcoef))};
    AlgebraPtr alg = p.algebra();
    return StemClosure(
        alg, [f](cdouble z) { return stem_eval(f, z); }, DomainDescriptor::whole_plane(), true,
        [df](cdouble z) { return stem_eval(df, z); },
        [alg](cdouble) { return CElement::zero(alg); });
}

SliceFunction closure_product(const StemClosure& a, const StemClosure& b) {
    if (a.algebra != b.algebra) throw AlgebraMismatch();
    // Whole-plane polynomial stems adapt to the partner's domain; genuine
    // closures must agree exactly.
    DomainDescriptor dom;
    if (a.domain == b.domain)
        dom = a.domain;
    else if (a.domain.kind == DomainDescriptor::Kind::whole_plane)
        dom = b.domain;
    else if (b.domain.kind == DomainDescriptor::Kind::whole_plane)
        dom = a.domain;
    else
        throw Error("product of closure stems requires identical domains");

    auto ea = a.eval, eb = b.eval;
    StemCallback eval = [ea, eb](cdouble z) { return cmul(ea(z), eb(z)); };
    std::optional<StemCallback> dz, dzbar;
    if (a.dz_eval && b.dz_eval) {
        auto da = *a.dz_eval, db = *b.dz_eval;
        dz = [ea, eb, da, db](cdouble z) {
            return cmul(da(z), eb(z)) + cmul(ea(z), db(z));
        };
    }
    if (a.dzbar_eval && b.dzbar_eval) {
        auto da = *a.dzbar_eval, db = *b.dzbar_eval;
        dzbar = [ea, eb, da, db](cdouble z) {
            return cmul(da(z), eb(z)) + cmul(ea(z), db(z));
        };
    }
    return SliceFunction(StemClosure(a.algebra, eval, dom,
                                     a.declared_intrinsic && b.declared_intrinsic, dz, dzbar));
}

}  // namespace

SliceFunction sprod(const SliceFunction& f, const SliceFunction& g) {
    if (f.algebra() != g.algebra()) throw AlgebraMismatch();
    if (f.is_poly() && g.is_poly()) {
        const SlicePoly& a = f.poly();
        const SlicePoly& b = g.poly();
        const int m = a.degree(), n = b.degree();
        std::vector<Element> c;
        for (int s = 0; s <= m + n; ++s) {
            Element acc = Element::zero(a.algebra());
            for (int j = std::max(0, s - n); j <= std::min(s, m); ++j)
                acc += mul(a.coeff(j), b.coeff(s - j));
            c.push_back(std::move(acc));
        }
        return SliceFunction(SlicePoly(a.algebra(), std::move(c)));
    }
    const StemClosure ca = f.is_poly() ? to_closure(f.poly()) : f.closure();
    const StemClosure cb = g.is_poly() ? to_closure(g.poly()) : g.closure();
    return closure_product(ca, cb);
}

SliceFunction sconj(const SliceFunction& f) {
    if (f.is_poly()) {
        std::vector<Element> c;
        for (const auto& a : f.poly().coeffs()) c.push_back(conj(a));
        return SliceFunction(SlicePoly(f.algebra(), std::move(c)));
    }
    const StemClosure& cl = f.closure();
    auto ev = cl.eval;
    StemCallback eval = [ev](cdouble z) { return c_antiinvolution(ev(z)); };
    std::optional<StemCallback> dz, dzbar;
    if (cl.dz_eval) {
        auto d = *cl.dz_eval;
        dz = [d](cdouble z) { return c_antiinvolution(d(z)); };
    }
    if (cl.dzbar_eval) {
        auto d = *cl.dzbar_eval;
        dzbar = [d](cdouble z) { return c_antiinvolution(d(z)); };
    }
    return SliceFunction(StemClosure(cl.algebra, eval, cl.domain, cl.declared_intrinsic, dz, dzbar));
}

SliceFunction normal(const SliceFunction& f) { return sprod(f, sconj(f)); }

bool is_real_slicefn(const SliceFunction& f, double tol) {
    if (f.is_poly()) {
        for (const auto& a : f.poly().coeffs())
            if (!is_real(a, tol)) return false;
        return true;
    }
    for (cdouble z : f.domain().sample_grid(16)) {
        const CElement w = stem_eval(f, z);
        if (!is_real(w.re, tol) || !is_real(w.im, tol)) return false;
    }
    return true;
}

bool is_admissible_span(const SlicePoly& p, double tol) {
    return subspace_in_normal_cone(p.coeffs(), tol);
}

namespace detail {

std::optional<std::vector<double>> try_real_normal_coeffs(const SlicePoly& p, double tol,
                                                          int* offender) {
    const int m = p.degree();
    double coeff_scale = 1.0;
    for (const auto& a : p.coeffs()) coeff_scale = std::max(coeff_scale, a.inf_norm());
    std::vector<double> out;
    for (int s = 0; s <= 2 * m; ++s) {
        Element acc = Element::zero(p.algebra());
        for (int j = std::max(0, s - m); j <= std::min(s, m); ++j)
            acc += mul(p.coeff(j), conj(p.coeff(s - j)));
        if (!is_real(acc, tol * coeff_scale * coeff_scale * (m + 1))) {
            if (offender) *offender = s;
            return std::nullopt;
        }
        out.push_back(acc[0]);
    }
    return out;
}

}  // namespace detail

bool is_admissible_sampled(const SliceFunction& f, int grid_n, double tol) {
    std::vector<cdouble> points;
    double box = 2.0;
    if (f.is_poly()) {
        // When the normal polynomial is real its roots are exactly the sphere
        // parameters where zeros live; sample those too, and widen the box to
        // reach them.
        if (auto cn = detail::try_real_normal_coeffs(f.poly(), tol); cn && f.poly().degree() >= 1) {
            try {
                for (const auto& rc : complex_roots(*cn, tol)) {
                    points.push_back(rc.root);
                    box = std::max(box, 1.25 * std::abs(rc.root));
                }
            } catch (const NoConvergence&) {
            }
        }
    }
    auto grid = f.domain().sample_grid(grid_n, 0.95, box);
    points.insert(points.end(), grid.begin(), grid.end());

    for (cdouble z : points) {
        if (!f.domain().contains(z)) continue;
        const CElement w = stem_eval(f, z);
        const Element span[2] = {w.re, w.im};
        if (!subspace_in_normal_cone(span, tol)) return false;
    }
    return true;
}

SliceFunction ddx(const SliceFunction& f) {
    if (f.is_poly()) {
        const SlicePoly& p = f.poly();
        std::vector<Element> c;
        for (int j = 1; j <= p.degree(); ++j) c.push_back(p.coeff(j) * static_cast<double>(j));
        return SliceFunction(SlicePoly(p.algebra(), std::move(c)));
    }
    const StemClosure& cl = f.closure();
    if (!cl.dz_eval) throw MissingDerivativeCallback();
    return SliceFunction(StemClosure(cl.algebra, *cl.dz_eval, cl.domain, cl.declared_intrinsic));
}

SliceFunction ddxc(const SliceFunction& f) {
    if (f.is_poly()) return SliceFunction(SlicePoly::zero(f.algebra()));
    const StemClosure& cl = f.closure();
    if (!cl.dzbar_eval) throw MissingDerivativeCallback();
    return SliceFunction(StemClosure(cl.algebra, *cl.dzbar_eval, cl.domain, cl.declared_intrinsic));
}

bool is_slice_regular(const SliceFunction& f, int grid_n, double tol) {
    if (f.is_poly()) return true;
    const StemClosure& cl = f.closure();
    const double h = 1e-5 * cl.domain.length_scale();
    for (cdouble z : cl.domain.sample_grid(grid_n, 0.9)) {
        CElement dzbar = CElement::zero(cl.algebra);
        if (cl.dzbar_eval) {
            dzbar = (*cl.dzbar_eval)(z);
        } else {
            const cdouble dx{h, 0.0}, dy{0.0, h};
            if (!cl.domain.contains(z + dx) || !cl.domain.contains(z - dx) ||
                !cl.domain.contains(z + dy) || !cl.domain.contains(z - dy))
                continue;
            const CElement dalpha = (cl.eval(z + dx) - cl.eval(z - dx)) * (0.5 / h);
            const CElement dbeta = (cl.eval(z + dy) - cl.eval(z - dy)) * (0.5 / h);
            dzbar = (dalpha + cscale(dbeta, {0.0, 1.0})) * 0.5;
        }
        const double scale = 1.0 + cl.eval(z).inf_norm();
        if (dzbar.inf_norm() > tol * scale) return false;
    }
    return true;
}

std::pair<Element, Element> leibniz_check(const SliceFunction& f, const SliceFunction& g,
                                          const Element& x, double tol) {
    const Element lhs = spherical_derivative(sprod(f, g), x, tol);
    const Element rhs = mul(spherical_derivative(f, x, tol), spherical_value(g, x, tol)) +
                        mul(spherical_value(f, x, tol), spherical_derivative(g, x, tol));
    return {lhs, rhs};
}

SliceFunction make_halfplane_constant(const Element& j0, const DomainDescriptor& domain) {
    if (!is_sqrt_minus_one(j0)) throw NotSqrtMinusOne();
    if (domain.kind != DomainDescriptor::Kind::conj_pair_disks)
        throw Error("the half-plane constant stem needs a domain avoiding the real axis");
    AlgebraPtr alg = j0.algebra();
    Element j = j0;
    StemCallback eval = [alg, j](cdouble z) -> CElement {
        if (z.imag() == 0.0) throw OutOfDomain();
        const double sign = z.imag() > 0.0 ? -1.0 : 1.0;
        return {Element::scalar(alg, 1.0), j * sign};
    };
    StemCallback zero_cb = [alg](cdouble) { return CElement::zero(alg); };
    return SliceFunction(StemClosure(alg, eval, domain, true, zero_cb, zero_cb));
}

}  // namespace slicealg
