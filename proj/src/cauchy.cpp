#include "slicealg/cauchy.hpp"

#include <cmath>

#include "slicealg/zeros.hpp"

namespace slicealg {

namespace {

using cdouble = std::complex<double>;

constexpr double kKernelGuard = 1e-13;  // pole guard inside quadrature loops

struct Disk {
    cdouble center;
    double radius;
};

std::vector<Disk> disk_components(const DomainDescriptor& d) {
    switch (d.kind) {
        case DomainDescriptor::Kind::disk:
            return {{d.center, d.radius}};
        case DomainDescriptor::Kind::conj_pair_disks:
            return {{d.center, d.radius}, {std::conj(d.center), d.radius}};
        case DomainDescriptor::Kind::whole_plane:
            break;
    }
    throw Error("contour domains must be a disk or a conjugate pair of disks");
}

void check_contour(const ContourSpec& c) {
    if (!is_sqrt_minus_one(c.J)) throw NotSqrtMinusOne("contour J must be a square root of -1");
    if (c.n_boundary < 8 || c.n_radial < 8 || c.n_angular < 8)
        throw Error("contour node counts must be >= 8");
    disk_components(c.domain);
}

Element plane_point(const AlgebraPtr& a, const Element& j, cdouble z) {
    return Element::scalar(a, z.real()) + j * z.imag();
}

// Kernel evaluated with an explicit guard tolerance; the stem is intrinsic, and
// the symmetrized split below keeps it exactly so under roundoff.
Element kernel_impl(const Element& x, const Element& y, double tol, double guard) {
    const SliceCoords sx = slice_coords(x, tol);
    const CharPoly cp = char_poly(y, tol);
    const cdouble z{sx.alpha, sx.beta};

    const cdouble den = cp.eval(z);
    const double scale = std::max(1.0, std::abs(z)) * std::max(1.0, std::abs(z)) +
                         std::abs(cp.t_y) * std::abs(z) + std::abs(cp.n_y);
    if (std::abs(den) <= guard * scale) throw OnSingularSphere();

    const AlgebraPtr& a = x.algebra();
    const Element yc = conj(y);
    auto stem = [&](cdouble zz) {
        const CElement lin{Element::scalar(a, zz.real()) - yc, Element::scalar(a, zz.imag())};
        return cscale(lin, -1.0 / cp.eval(zz));
    };
    const CElement f = (stem(z) + bar_conj(stem(std::conj(z)))) * 0.5;
    if (!sx.unit) return f.re;
    return f.re + mul(*sx.unit, f.im);
}

struct SliceGeometry {
    SliceCoords coords;
    bool on_slice = false;   // x lies in the contour's plane (or is real)
    cdouble plane_param{0.0, 0.0};  // signed parameter of x within that plane
};

SliceGeometry slice_geometry(const Element& x, const ContourSpec& contour, double tol) {
    SliceGeometry g;
    g.coords = slice_coords(x, tol);
    if (!g.coords.unit) {
        g.on_slice = true;
        g.plane_param = {g.coords.alpha, 0.0};
        return g;
    }
    const double scl = 1.0 + contour.J.inf_norm();
    if ((*g.coords.unit - contour.J).inf_norm() <= 1e-7 * scl) {
        g.on_slice = true;
        g.plane_param = {g.coords.alpha, g.coords.beta};
    } else if ((*g.coords.unit + contour.J).inf_norm() <= 1e-7 * scl) {
        g.on_slice = true;
        g.plane_param = {g.coords.alpha, -g.coords.beta};
    }
    return g;
}

Element boundary_integral(const SliceFunction& f, const ContourSpec& contour, const Element& x,
                          double tol) {
    const AlgebraPtr& a = f.algebra();
    const Element neg_j = -contour.J;
    const int n = contour.n_boundary;
    std::vector<Element> terms;
    terms.reserve(static_cast<size_t>(n));

    Element acc = Element::zero(a);
    for (const Disk& disk : disk_components(contour.domain)) {
        terms.clear();
        for (int k = 0; k < n; ++k) {
            const double th = 2.0 * M_PI * k / n;
            const cdouble zy = disk.center + disk.radius * cdouble(std::cos(th), std::sin(th));
            const Element y = plane_point(a, contour.J, zy);
            const Element dy =
                (Element::scalar(a, -std::sin(th)) + contour.J * std::cos(th)) * disk.radius;
            const Element ker = kernel_impl(x, y, tol, kKernelGuard);
            const Element fy = slice_eval(f, y, tol);
            terms.push_back(mul(mul(mul(ker, neg_j), dy), fy));
        }
        acc += detail::pairwise_sum(terms, a) * (1.0 / n);
    }
    return acc;
}

// Area term of the C^1 formula for an on-slice evaluation point with signed
// plane parameter zp. The integrand's only pole in the parameter plane sits at
// zp (the conjugate pole cancels on the slice), so the disk containing zp is
// integrated in polar coordinates centred there: the polar Jacobian cancels
// the 1/|y - x| growth and the integrand becomes smooth. Pole-free components
// use plain centre-polar coordinates.
Element area_integral(const SliceFunction& dfc, const ContourSpec& contour, const Element& x,
                      cdouble zp, double tol) {
    const AlgebraPtr& a = dfc.algebra();
    const Element neg_j = -contour.J;
    const Element two_j = contour.J * 2.0;

    std::vector<double> gl_nodes, gl_weights;
    detail::gauss_legendre01(contour.n_radial, gl_nodes, gl_weights);
    const int na = contour.n_angular;
    const double dth = 2.0 * M_PI / na;

    std::vector<Element> terms;
    Element acc = Element::zero(a);
    auto add_node = [&](cdouble zy, double weight) {
        const Element y = plane_point(a, contour.J, zy);
        const Element ker = kernel_impl(x, y, tol, kKernelGuard);
        const Element val = slice_eval(dfc, y, tol);
        terms.push_back(mul(mul(mul(ker, neg_j), two_j), val) * weight);
    };

    for (const Disk& disk : disk_components(contour.domain)) {
        terms.clear();
        const double s = std::abs(zp - disk.center);
        if (s < disk.radius * (1.0 - 1e-9)) {
            const double phi = s > 0.0 ? std::arg(zp - disk.center) : 0.0;
            for (int k = 0; k < na; ++k) {
                const double th = dth * k;
                const double g = th - phi;
                const double sg = s * std::sin(g);
                const double reach = -s * std::cos(g) + std::sqrt(disk.radius * disk.radius - sg * sg);
                const cdouble dir{std::cos(th), std::sin(th)};
                for (int i = 0; i < contour.n_radial; ++i) {
                    const double rho = reach * gl_nodes[i];
                    if (rho == 0.0) continue;
                    add_node(zp + rho * dir, gl_weights[i] * reach * rho * dth);
                }
            }
        } else {
            for (int k = 0; k < na; ++k) {
                const double th = dth * k;
                const cdouble dir{std::cos(th), std::sin(th)};
                for (int i = 0; i < contour.n_radial; ++i) {
                    const double rho = disk.radius * gl_nodes[i];
                    add_node(disk.center + rho * dir, gl_weights[i] * disk.radius * rho * dth);
                }
            }
        }
        acc += detail::pairwise_sum(terms, a);
    }
    return acc * (-1.0 / (2.0 * M_PI));
}

}  // namespace

Element cauchy_kernel(const Element& x, const Element& y, double tol) {
    require_same_algebra(x, y);
    return kernel_impl(x, y, tol, std::max(tol, 1e-12));
}

Element cauchy_boundary(const SliceFunction& f, const ContourSpec& contour, const Element& x,
                        double tol) {
    check_contour(contour);
    if (f.algebra() != x.algebra() || f.algebra() != contour.J.algebra())
        throw AlgebraMismatch();
    if (!f.is_poly() && !is_slice_regular(f, 12, 1e-6)) throw NotSliceRegular();

    const SliceGeometry g = slice_geometry(x, contour, tol);
    if (!contour.domain.contains_interior(cdouble{g.coords.alpha, g.coords.beta}))
        throw OutsideDomain();
    if (!g.on_slice && !x.algebra()->is_associative() && !is_real_slicefn(f, tol))
        throw NonAssociativeOffSlice();

    return boundary_integral(f, contour, x, tol);
}

Element cauchy_pompeiu(const SliceFunction& f, const ContourSpec& contour, const Element& x,
                       double tol) {
    check_contour(contour);
    if (f.algebra() != x.algebra() || f.algebra() != contour.J.algebra())
        throw AlgebraMismatch();

    const SliceGeometry g = slice_geometry(x, contour, tol);
    if (!contour.domain.contains_interior(cdouble{g.coords.alpha, g.coords.beta}))
        throw OutsideDomain();

    if (!g.on_slice) {
        if (!x.algebra()->is_associative()) throw NonAssociativeOffSlice();
        // The reconstruction is a slice function of x, so its off-slice values
        // follow from the two on-slice ones exactly as in the formula's own
        // derivation.
        const AlgebraPtr& a = f.algebra();
        const Element x_up = plane_point(a, contour.J, {g.coords.alpha, g.coords.beta});
        const Element x_dn = plane_point(a, contour.J, {g.coords.alpha, -g.coords.beta});
        const Element v_up = cauchy_pompeiu(f, contour, x_up, tol);
        const Element v_dn = cauchy_pompeiu(f, contour, x_dn, tol);
        return representation(v_up, v_dn, contour.J, -contour.J, *g.coords.unit, g.coords.alpha,
                              g.coords.beta, tol);
    }

    Element result = boundary_integral(f, contour, x, tol);
    if (f.is_poly()) return result;  // holomorphic stem: the area term vanishes
    const SliceFunction dfc = ddxc(f);
    return result + area_integral(dfc, contour, x, g.plane_param, tol);
}

std::pair<Element, Element> representation_via_kernel_check(const SliceFunction& f,
                                                            const ContourSpec& contour,
                                                            const Element& K, const Element& x,
                                                            double tol) {
    if (!x.algebra()->is_associative() && !is_real_slicefn(f, tol))
        throw NonAssociativeOffSlice();
    const Element direct = cauchy_boundary(f, contour, x, tol);

    const SliceCoords sc = slice_coords(x, tol);
    const AlgebraPtr& a = f.algebra();
    const Element x_j = plane_point(a, contour.J, {sc.alpha, sc.beta});
    const Element at_j = cauchy_boundary(f, contour, x_j, tol);
    Element x_k = Element::scalar(a, sc.alpha) + K * sc.beta;
    const Element at_k = cauchy_boundary(f, contour, x_k, tol);
    const Element unit = sc.unit ? *sc.unit : contour.J;
    const Element assembled =
        representation(at_j, at_k, contour.J, K, unit, sc.alpha, sc.beta, tol);
    return {direct, assembled};
}

namespace detail {

void gauss_legendre01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(static_cast<size_t>(n));
    weights.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Newton on P_n from the Chebyshev guess.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 64; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        nodes[static_cast<size_t>(i)] = 0.5 * (1.0 - x);  // descending x -> ascending node
        weights[static_cast<size_t>(i)] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
}

Element pairwise_sum(std::vector<Element>& terms, const AlgebraPtr& a) {
    if (terms.empty()) return Element::zero(a);
    size_t count = terms.size();
    while (count > 1) {
        const size_t half = count / 2;
        for (size_t i = 0; i < half; ++i) terms[i] += terms[count - 1 - i];
        count = half + (count % 2);
    }
    return terms[0];
}

}  // namespace slicealg::detail

}  // namespace slicealg
