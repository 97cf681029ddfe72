#include "slicealg/zeros.hpp"

#include <algorithm>
#include <cmath>

#include "slicealg/roots.hpp"
#include "slicealg/sampling.hpp"

namespace slicealg {

namespace {

using cdouble = std::complex<double>;

double poly_scale(const SlicePoly& p, double az) {
    double s = 0.0, zk = 1.0;
    const double a = std::max(1.0, az);
    for (int j = 0; j <= p.degree(); ++j) {
        s += p.coeff(j).inf_norm() * zk;
        zk *= a;
    }
    return std::max(1.0, s);
}

double real_scale(const std::vector<double>& c, double az) {
    double s = 0.0, zk = 1.0;
    const double a = std::max(1.0, az);
    for (double v : c) {
        s += std::abs(v) * zk;
        zk *= a;
    }
    return std::max(1.0, s);
}

cdouble eval_real_poly(const std::vector<double>& c, cdouble z) {
    cdouble p = 0.0;
    for (size_t k = c.size(); k-- > 0;) p = p * z + c[k];
    return p;
}

// Discrimination threshold between "the whole sphere vanishes" and "one point
// vanishes": the stem value at an exactly computed sphere parameter is either
// ~0 or order 1, so a relative 1e-6 band separates them robustly.
constexpr double kSphericalBand = 1e-6;

}  // namespace

CharPoly char_poly(const Element& y, double tol) {
    if (!in_quadratic_cone(y, tol)) throw NotInQuadraticCone();
    return {trace(y)[0], norm_elem(y)[0]};
}

std::vector<double> normal_poly_coeffs(const SlicePoly& p, double tol) {
    int offender = -1;
    auto cn = detail::try_real_normal_coeffs(p, tol, &offender);
    if (!cn)
        throw NonRealNormal("normal polynomial coefficient " + std::to_string(offender) +
                            " is not real; the polynomial is not admissible");
    return *cn;
}

ZeroRecord classify_sphere(const SlicePoly& p, cdouble zeta, double tol) {
    if (zeta.imag() < 0.0) throw Error("classify_sphere expects Im(zeta) >= 0");
    const std::vector<double> cn = normal_poly_coeffs(p, tol);
    const double cn_resid = std::abs(eval_real_poly(cn, zeta));
    if (cn_resid > 100.0 * std::max(tol, 1e-12) * real_scale(cn, std::abs(zeta)))
        throw NotARoot("normal polynomial does not vanish at the given parameter");

    const double alpha = zeta.real(), beta = zeta.imag();
    const CElement w = stem_eval(SliceFunction(p), zeta);
    const double band = kSphericalBand * poly_scale(p, std::abs(zeta));

    ZeroRecord rec;
    rec.alpha = alpha;
    rec.beta = beta;

    if (beta == 0.0 || beta <= tol * (1.0 + std::abs(zeta))) {
        if (w.inf_norm() > band)
            throw NotARoot("real root of the normal polynomial is not a zero of p");
        rec.kind = ZeroKind::real;
        rec.beta = 0.0;
        rec.point = Element::scalar(p.algebra(), alpha);
        rec.residual = w.inf_norm();
        return rec;
    }

    if (w.inf_norm() <= band) {
        rec.kind = ZeroKind::spherical;
        rec.multiplicity = 2;
        SphereSampler sampler(p.algebra());
        if (!sampler.empty()) {
            const Element witness = Element::scalar(p.algebra(), alpha) + sampler.canonical() * beta;
            rec.point = witness;
            rec.residual = slice_eval(SliceFunction(p), witness, tol).inf_norm();
        } else {
            rec.residual = w.inf_norm();
        }
        return rec;
    }

    // One zero on the sphere: alpha + beta K with K the unique unit solving
    // F_1 + K F_2 = 0, cross-checked against alpha - v_s p (d_s p)^{-1}.
    rec.kind = ZeroKind::isolated;
    const Element k = solve_K(w, std::max(tol, cn_resid / real_scale(cn, std::abs(zeta))));
    const Element point = Element::scalar(p.algebra(), alpha) + k * beta;
    const Element newton =
        Element::scalar(p.algebra(), alpha) - mul(w.re, inverse(w.im, tol)) * beta;
    if ((point - newton).inf_norm() > 1e-6 * (1.0 + point.inf_norm()))
        throw NumericalError("isolated zero: divisor and Newton forms disagree");
    rec.point = point;
    rec.residual = slice_eval(SliceFunction(p), point, tol).inf_norm();
    if (rec.residual > band * 10.0)
        throw NumericalError("isolated zero witness has a large residual");
    return rec;
}

int multiplicity(const SlicePoly& p, const ZeroRecord& record, double tol) {
    const std::vector<double> cn = normal_poly_coeffs(p, tol);
    const cdouble zeta{record.alpha, record.beta};
    const auto clusters = complex_roots(cn, tol);
    for (const auto& rc : clusters) {
        if (std::abs(rc.root - zeta) > 1e-5 * (1.0 + std::abs(zeta))) continue;
        if (record.kind == ZeroKind::real) {
            if (rc.multiplicity % 2 != 0) throw OddRealMultiplicity();
            return rc.multiplicity / 2;
        }
        return rc.multiplicity;
    }
    throw NotARoot("record does not match any root of the normal polynomial");
}

SlicePoly divide_linear_real(const SlicePoly& p, double y, double tol) {
    const int m = p.degree();
    if (m < 1) throw Error("cannot divide a constant polynomial");
    std::vector<Element> q(static_cast<size_t>(m), Element::zero(p.algebra()));
    Element carry = p.coeff(m);
    for (int j = m - 1; j >= 0; --j) {
        q[static_cast<size_t>(j)] = carry;
        carry = p.coeff(j) + carry * y;
    }
    if (carry.inf_norm() > 10.0 * tol * poly_scale(p, std::abs(y)))
        throw NonZeroRemainder("p(" + std::to_string(y) + ") does not vanish");
    return SlicePoly(p.algebra(), std::move(q));
}

DivisionResult divide_char(const SlicePoly& p, const Element& y, double tol) {
    const SliceCoords sc = slice_coords(y, tol);
    if (!sc.unit) throw Error("divide_char expects a non-real y");
    const CharPoly d = char_poly(y, tol);

    const int m = p.degree();
    std::vector<Element> rem;
    for (int j = 0; j <= m; ++j) rem.push_back(p.coeff(j));
    std::vector<Element> h(static_cast<size_t>(std::max(m - 1, 1)), Element::zero(p.algebra()));
    // Right coefficients are untouched by a real divisor, so ordinary long
    // division applies.
    for (int j = m; j >= 2; --j) {
        const Element lead = rem[static_cast<size_t>(j)];
        h[static_cast<size_t>(j - 2)] = lead;
        rem[static_cast<size_t>(j - 1)] += lead * d.t_y;
        rem[static_cast<size_t>(j - 2)] -= lead * d.n_y;
        rem[static_cast<size_t>(j)] = Element::zero(p.algebra());
    }
    return {SlicePoly(p.algebra(), std::move(h)), rem[1], rem[0]};
}

std::vector<ZeroRecord> all_zeros(const SlicePoly& p, double tol, bool force_admissible) {
    if (p.degree() < 1) throw Error("all_zeros requires degree >= 1");
    if (!force_admissible) {
        if (!is_admissible_span(p, tol) && !is_admissible_sampled(SliceFunction(p), 32, tol))
            throw NotAdmissible();
    }

    const std::vector<double> cn = normal_poly_coeffs(p, tol);
    const auto clusters = complex_roots(cn, tol);

    std::vector<ZeroRecord> records;
    int total = 0;
    for (const auto& rc : clusters) {
        if (rc.root.imag() < 0.0) continue;  // conjugate partners are implied
        if (rc.root.imag() > 0.0) {
            // The finder returns an exactly symmetric list for real input.
            const auto partner = std::find_if(clusters.begin(), clusters.end(), [&](const auto& o) {
                return std::abs(o.root - std::conj(rc.root)) <= 1e-9 * (1.0 + std::abs(rc.root));
            });
            if (partner == clusters.end() || partner->multiplicity != rc.multiplicity)
                throw NumericalError("conjugate root pairing failed on the normal polynomial");
        }
        ZeroRecord rec = classify_sphere(p, rc.root, tol);
        if (rec.kind == ZeroKind::real) {
            if (rc.multiplicity % 2 != 0) throw OddRealMultiplicity();
            rec.multiplicity = rc.multiplicity / 2;
        } else {
            rec.multiplicity = rc.multiplicity;
            if (rec.kind == ZeroKind::spherical && rec.multiplicity < 2)
                throw NumericalError("spherical zero reported with multiplicity < 2");
        }
        total += rec.multiplicity;
        records.push_back(std::move(rec));
    }

    if (total != p.degree())
        throw DegreeMismatch("multiplicities sum to " + std::to_string(total) + ", degree is " +
                             std::to_string(p.degree()));

    std::sort(records.begin(), records.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        return a.beta < b.beta;
    });
    return records;
}

namespace {

void collect_spheres(const std::vector<ZeroRecord>& recs, std::vector<SphereParam>& out,
                     double tol) {
    for (const auto& r : recs) {
        bool seen = false;
        for (const auto& s : out)
            if (std::abs(s.alpha - r.alpha) <= tol * (1.0 + std::abs(r.alpha)) &&
                std::abs(s.beta - r.beta) <= tol * (1.0 + r.beta)) {
                seen = true;
                break;
            }
        if (!seen) out.push_back({r.alpha, r.beta});
    }
}

}  // namespace

ProductZeroReport zeros_of_product_check(const SlicePoly& f, const SlicePoly& g, double tol) {
    ProductZeroReport rep;
    const SliceFunction prod = sprod(SliceFunction(f), SliceFunction(g));
    collect_spheres(all_zeros(prod.poly(), tol), rep.product_spheres, 1e-6);
    collect_spheres(all_zeros(f, tol), rep.factor_spheres, 1e-6);
    collect_spheres(all_zeros(g, tol), rep.factor_spheres, 1e-6);

    auto match = [&](const std::vector<SphereParam>& a, const std::vector<SphereParam>& b) {
        for (const auto& s : a) {
            bool found = false;
            for (const auto& t : b)
                if (std::abs(s.alpha - t.alpha) <= 1e-6 * (1.0 + std::abs(s.alpha)) &&
                    std::abs(s.beta - t.beta) <= 1e-6 * (1.0 + s.beta)) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
        return true;
    };
    rep.equal = match(rep.product_spheres, rep.factor_spheres) &&
                match(rep.factor_spheres, rep.product_spheres);
    return rep;
}

}  // namespace slicealg
