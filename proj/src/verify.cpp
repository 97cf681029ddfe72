#include "slicealg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>

#include "slicealg/cauchy.hpp"
#include "slicealg/roots.hpp"
#include "slicealg/sampling.hpp"
#include "slicealg/zeros.hpp"

namespace slicealg::verify {

namespace {

using cdouble = std::complex<double>;

struct Check {
    PropertyResult r;
    explicit Check(std::string name) { r.name = std::move(name); }
    void count(bool ok, double err = 0.0) {
        ++r.checked;
        if (!ok) ++r.failures;
        r.max_err = std::max(r.max_err, err);
    }
    void require(bool ok, const std::string& note = "") {
        count(ok);
        if (!ok && r.note.empty()) r.note = note;
    }
    PropertyResult done() && { return std::move(r); }
};

int basis_index(const AlgebraPtr& a, const std::string& label) {
    const auto& labels = a->basis_labels();
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw Error("no basis element labelled '" + label + "'");
}

Element be(const AlgebraPtr& a, const std::string& label) {
    return Element::basis(a, basis_index(a, label));
}

double rel_err(const Element& diff, double scale) { return diff.inf_norm() / std::max(1.0, scale); }

SlicePoly poly_from(const AlgebraPtr& a, std::vector<Element> coeffs) {
    return SlicePoly(a, std::move(coeffs));
}

std::vector<AlgebraPtr> cone_algebras() {
    return {make_builtin(Builtin::quaternions), make_builtin(Builtin::octonions), make_clifford(2),
            make_clifford(3), make_clifford(4)};
}

// f = x^c as a closure stem (intrinsic, C^1, not holomorphic).
SliceFunction conj_variable_fn(const AlgebraPtr& a, const DomainDescriptor& dom) {
    auto eval = [a](cdouble z) { return CElement::from_complex(a, std::conj(z)); };
    auto dz = [a](cdouble) { return CElement::zero(a); };
    auto dzbar = [a](cdouble) { return CElement::from_complex(a, 1.0); };
    return SliceFunction(StemClosure(a, eval, dom, true, dz, dzbar));
}

// f with stem z * conj(z): the squared-norm slice function.
SliceFunction norm_stem_fn(const AlgebraPtr& a, const DomainDescriptor& dom) {
    auto eval = [a](cdouble z) { return CElement::from_complex(a, z * std::conj(z)); };
    auto dz = [a](cdouble z) { return CElement::from_complex(a, std::conj(z)); };
    auto dzbar = [a](cdouble z) { return CElement::from_complex(a, z); };
    return SliceFunction(StemClosure(a, eval, dom, true, dz, dzbar));
}

bool in_plane(const Element& v, const Element& j, double tol) {
    double jj = 0.0, vj = 0.0;
    for (int k = 0; k < v.dim(); ++k) {
        jj += j[k] * j[k];
        vj += v[k] * j[k];
    }
    const Element res = v - Element::scalar(v.algebra(), v[0]) - j * (vj / jj);
    return res.inf_norm() <= tol * (1.0 + v.inf_norm());
}

// ---------------------------------------------------------------------------
// Worked examples

Suite worked_examples(const Options& opt) {
    Suite suite;
    const auto cl3 = make_clifford(3);
    const auto quat = make_builtin(Builtin::quaternions);

    {  // Closed cone equations in clifford(3) against the membership predicates.
        Check c("worked/cone-closed-forms-cl3");
        Rng rng(101);
        const int i1 = basis_index(cl3, "e1"), i2 = basis_index(cl3, "e2"),
                  i3 = basis_index(cl3, "e3"), i12 = basis_index(cl3, "e12"),
                  i13 = basis_index(cl3, "e13"), i23 = basis_index(cl3, "e23"),
                  i123 = basis_index(cl3, "e123");
        auto closed_q = [&](const Element& x) {
            const double s = 1.0 + x.inf_norm();
            const double bilinear = x[i1] * x[i23] - x[i2] * x[i13] + x[i3] * x[i12];
            return std::abs(x[i123]) <= opt.tol * s && std::abs(bilinear) <= opt.tol * s * s;
        };
        auto closed_n = [&](const Element& x) {
            const double s = 1.0 + x.inf_norm();
            const double expr =
                x[0] * x[i123] - x[i1] * x[i23] + x[i2] * x[i13] - x[i3] * x[i12];
            return std::abs(expr) <= opt.tol * s * s;
        };
        for (int t = 0; t < 10000; ++t) {
            Element x = random_element(cl3, rng, -1.5, 1.5);
            if (t % 2 == 0) {
                // Project onto the quadratic cone's algebraic set.
                x[i123] = 0.0;
                if (std::abs(x[i1]) > 0.2)
                    x[i23] = (x[i2] * x[i13] - x[i3] * x[i12]) / x[i1];
                else
                    x[i12] = x[i13] = x[i23] = 0.0;
            }
            c.count(in_quadratic_cone(x, opt.tol) == closed_q(x));
            c.count(in_normal_cone(x, opt.tol) ==
                    (closed_n(x) && (x.is_zero() || std::abs(norm_elem(x)[0]) >
                                                        opt.tol * (1.0 + x.inf_norm()))));
        }
        // The named membership facts.
        c.require(in_normal_cone(be(cl3, "e1")) && in_normal_cone(be(cl3, "e23")) &&
                  !in_normal_cone(be(cl3, "e1") + be(cl3, "e23")));
        c.require(!in_quadratic_cone(be(cl3, "e123")));
        c.require(in_quadratic_cone(Element::scalar(cl3, 1.0) + be(cl3, "e1")));
        suite.push_back(std::move(c).done());
    }

    {  // (x - I) * (x - J) = x^2 - x(I + J) + IJ over the quaternions.
        Check c("worked/star-product-quaternions");
        Rng rng(102);
        SphereSampler sph(quat);
        for (int t = 0; t < 200; ++t) {
            const Element I = t == 0 ? be(quat, "i") : sph.sample(rng);
            const Element J = t == 0 ? be(quat, "j") : sph.sample(rng);
            auto f = poly_from(quat, {-I, Element::scalar(quat, 1.0)});
            auto g = poly_from(quat, {-J, Element::scalar(quat, 1.0)});
            const SlicePoly prod = sprod(SliceFunction(f), SliceFunction(g)).poly();
            double err = rel_err(prod.coeff(0) - mul(I, J), 1.0);
            err = std::max(err, rel_err(prod.coeff(1) + (I + J), 1.0));
            err = std::max(err, rel_err(prod.coeff(2) - Element::scalar(quat, 1.0), 1.0));
            c.count(err <= opt.tol, err);
        }
        suite.push_back(std::move(c).done());
    }

    const Element one_cl3 = Element::scalar(cl3, 1.0);
    const SlicePoly f_ex = poly_from(cl3, {be(cl3, "e1"), be(cl3, "e2")});  // x e2 + e1
    const SlicePoly g_ex = poly_from(cl3, {be(cl3, "e2"), be(cl3, "e3")});  // x e3 + e2
    const SlicePoly fg_ex = sprod(SliceFunction(f_ex), SliceFunction(g_ex)).poly();

    {  // Product and normal-function chain for the bivector example.
        Check c("worked/normal-chain-cl3");
        double err = rel_err(fg_ex.coeff(0) - be(cl3, "e12"), 1.0);
        err = std::max(err, rel_err(fg_ex.coeff(1) - (be(cl3, "e13") - one_cl3), 1.0));
        err = std::max(err, rel_err(fg_ex.coeff(2) - be(cl3, "e23"), 1.0));
        c.count(err <= opt.tol, err);

        const auto nf = normal_poly_coeffs(f_ex, opt.tol);
        const auto ng = normal_poly_coeffs(g_ex, opt.tol);
        const auto nfg = normal_poly_coeffs(fg_ex, opt.tol);
        auto close = [&](const std::vector<double>& got, const std::vector<double>& want) {
            if (got.size() != want.size()) return false;
            for (size_t i = 0; i < got.size(); ++i)
                if (std::abs(got[i] - want[i]) > opt.tol) return false;
            return true;
        };
        c.require(close(nf, {1, 0, 1}), "N(f) != x^2 + 1");
        c.require(close(ng, {1, 0, 1}), "N(g) != x^2 + 1");
        c.require(close(nfg, {1, 0, 2, 0, 1}), "N(fg) != (x^2 + 1)^2");
        suite.push_back(std::move(c).done());
    }

    {  // Division by the characteristic polynomial of e12 and the isolated zero.
        Check c("worked/division-bivector-cl3");
        const DivisionResult div = divide_char(fg_ex, be(cl3, "e12"), opt.tol);
        double err = rel_err(div.quotient.coeff(0) - be(cl3, "e23"), 1.0);
        err = std::max(err, static_cast<double>(div.quotient.degree() != 0));
        err = std::max(err, rel_err(div.a - (be(cl3, "e13") - one_cl3), 1.0));
        err = std::max(err, rel_err(div.b - (be(cl3, "e12") - be(cl3, "e23")), 1.0));
        c.count(err <= opt.tol, err);

        const auto records = all_zeros(fg_ex, opt.tol);
        c.require(records.size() == 1, "expected a single zero record");
        if (records.size() == 1) {
            const auto& r = records.front();
            c.require(r.kind == ZeroKind::isolated && r.multiplicity == 2);
            c.count(r.point && rel_err(*r.point - be(cl3, "e12"), 1.0) <= 1e-8,
                    r.point ? rel_err(*r.point - be(cl3, "e12"), 1.0) : 1.0);
            // The division remainder data matches the spherical derivative.
            const Element sd = spherical_derivative(SliceFunction(fg_ex), *r.point, opt.tol);
            c.count(rel_err(div.a - sd, 1.0) <= opt.tol, rel_err(div.a - sd, 1.0));
            c.count(rel_err(mul(*r.point, div.a) + div.b, 1.0) <= opt.tol);
        }
        suite.push_back(std::move(c).done());
    }

    {  // x^2 + x e3 + e2: two isolated zeros through z^4 + z^2 + 1.
        Check c("worked/isolated-roots-cl3");
        const SlicePoly p =
            poly_from(cl3, {be(cl3, "e2"), be(cl3, "e3"), Element::scalar(cl3, 1.0)});
        const auto cn = normal_poly_coeffs(p, opt.tol);
        c.require(cn.size() == 5, "normal polynomial degree != 4");
        double cnerr = 0.0;
        const double want[5] = {1, 0, 1, 0, 1};
        for (size_t i = 0; i < cn.size() && i < 5; ++i)
            cnerr = std::max(cnerr, std::abs(cn[i] - want[i]));
        c.count(cnerr <= opt.tol, cnerr);

        const auto records = all_zeros(p, opt.tol);
        c.require(records.size() == 2, "expected two zero records");
        Element y1 = (one_cl3 - be(cl3, "e2") - be(cl3, "e3") + be(cl3, "e23")) * 0.5;
        Element y2 = (-one_cl3 + be(cl3, "e2") - be(cl3, "e3") + be(cl3, "e23")) * 0.5;
        for (const auto& r : records) {
            c.require(r.kind == ZeroKind::isolated && r.multiplicity == 1);
            if (!r.point) {
                c.require(false, "missing witness point");
                continue;
            }
            const double e = std::min((*r.point - y1).inf_norm(), (*r.point - y2).inf_norm());
            c.count(e <= 1e-8, e);
        }
        suite.push_back(std::move(c).done());
    }

    {  // Non-admissible polynomials must be rejected.
        Check c("worked/admissibility-rejections");
        const SlicePoly p2 = poly_from(cl3, {be(cl3, "e1"), be(cl3, "e23")});
        bool rejected = false;
        try {
            all_zeros(p2, opt.tol);
        } catch (const NotAdmissible&) {
            rejected = true;
        }
        c.require(rejected, "x e23 + e1 was not rejected");

        const SlicePoly p5 =
            poly_from(cl3, {one_cl3, be(cl3, "e1") + be(cl3, "e23"), be(cl3, "e123")});
        auto cn = slicealg::detail::try_real_normal_coeffs(p5, opt.tol);
        c.require(cn.has_value(), "N(p) of the degree-2 example should be real");
        if (cn) {
            double err = 0.0;
            const double want[5] = {1, 0, 2, 0, 1};
            for (size_t i = 0; i < cn->size() && i < 5; ++i)
                err = std::max(err, std::abs((*cn)[i] - want[i]));
            c.count(err <= opt.tol, err);
        }
        c.require(!is_admissible_sampled(SliceFunction(p5), 32, opt.tol),
                  "sampled admissibility failed to falsify");
        rejected = false;
        try {
            all_zeros(p5, opt.tol);
        } catch (const NotAdmissible&) {
            rejected = true;
        }
        c.require(rejected, "the real-normal non-admissible example was not rejected");
        suite.push_back(std::move(c).done());
    }

    {  // x^2 - 1 over clifford(3): exactly the two real roots in the cone.
        Check c("worked/real-roots-cl3");
        const SlicePoly p = poly_from(cl3, {-one_cl3, Element::zero(cl3), one_cl3});
        const auto records = all_zeros(p, opt.tol);
        c.require(records.size() == 2, "expected exactly two records");
        if (records.size() == 2) {
            c.count(records[0].kind == ZeroKind::real && records[0].multiplicity == 1 &&
                        std::abs(records[0].alpha + 1.0) <= 1e-9,
                    std::abs(records[0].alpha + 1.0));
            c.count(records[1].kind == ZeroKind::real && records[1].multiplicity == 1 &&
                        std::abs(records[1].alpha - 1.0) <= 1e-9,
                    std::abs(records[1].alpha - 1.0));
        }
        suite.push_back(std::move(c).done());
    }
    return suite;
}

// ---------------------------------------------------------------------------
// Cone properties

Suite cones_suite(const Options& opt) {
    Suite suite;
    Check ident("cones/quadratic-identity");
    Check closure("cones/real-scaling-closure");
    Check conj_sym("cones/conjugate-and-normal");
    Check roundtrip("cones/slice-coords-roundtrip");
    Check inv("cones/inverse-roundtrip");
    unsigned seed = 7000;
    for (const auto& alg : cone_algebras()) {
        SphereSampler sph(alg);
        Rng rng(seed++);
        for (size_t t = 0; t < opt.samples; ++t) {
            const Element x = sph.cone_point(rng, -2.0, 2.0, 2.0);
            const double s2 = (1.0 + x.inf_norm()) * (1.0 + x.inf_norm());
            const double t0 = trace(x)[0], n0 = norm_elem(x)[0];
            const Element resid = mul(x, x) - x * t0 + Element::scalar(alg, n0);
            ident.count(resid.inf_norm() <= opt.tol * s2, resid.inf_norm() / s2);

            const double a = rng.uniform(-2.0, 2.0);
            closure.count(in_quadratic_cone(x * a, opt.tol) &&
                          in_quadratic_cone(Element::scalar(alg, a) + x, opt.tol));
            conj_sym.count(in_quadratic_cone(conj(x), opt.tol) &&
                           (x.inf_norm() <= opt.tol || in_normal_cone(x, opt.tol)));

            const SliceCoords sc = slice_coords(x, opt.tol);
            Element rebuilt = Element::scalar(alg, sc.alpha);
            if (sc.unit) rebuilt += *sc.unit * sc.beta;
            roundtrip.count((rebuilt - x).inf_norm() <= opt.tol * (1.0 + x.inf_norm()),
                            rel_err(rebuilt - x, x.inf_norm()));

            if (std::abs(norm_elem(x)[0]) > 1e-3) {
                const Element v = inverse(x, opt.tol);
                Element lhs = mul(v, x), rhs = mul(x, v);
                lhs[0] -= 1.0;
                rhs[0] -= 1.0;
                const double err = std::max(lhs.inf_norm(), rhs.inf_norm());
                inv.count(err <= 1e-8 * (1.0 + v.inf_norm()) * (1.0 + x.inf_norm()), err);
            }
        }
        // General (not necessarily cone) invertibility through the linear solve.
        for (int t = 0; t < 50; ++t) {
            const Element x = random_element(alg, rng);
            try {
                const Element v = inverse(x, opt.tol);
                Element lhs = mul(v, x);
                lhs[0] -= 1.0;
                inv.count(lhs.inf_norm() <= 1e-7 * (1.0 + v.inf_norm()) * (1.0 + x.inf_norm()),
                          lhs.inf_norm());
            } catch (const Singular&) {
                inv.count(true);
            }
        }
    }
    suite.push_back(std::move(ident).done());
    suite.push_back(std::move(closure).done());
    suite.push_back(std::move(conj_sym).done());
    suite.push_back(std::move(roundtrip).done());
    suite.push_back(std::move(inv).done());
    return suite;
}

Suite alternativity_suite(const Options&) {
    Suite suite;
    Check c("alternativity/builtin-tables");
    for (const auto& alg : cone_algebras()) c.require(validate_algebra(*alg).ok(), alg->name());
    c.require(validate_algebra(*make_builtin(Builtin::complexes)).ok());
    suite.push_back(std::move(c).done());

    Check oct("alternativity/octonion-exhaustive");
    const auto o = make_builtin(Builtin::octonions);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            for (int k = 0; k < 8; ++k) {
                const Element a = associator(Element::basis(o, i), Element::basis(o, j),
                                             Element::basis(o, k));
                const Element b = associator(Element::basis(o, j), Element::basis(o, i),
                                             Element::basis(o, k));
                const Element c2 = associator(Element::basis(o, i), Element::basis(o, k),
                                              Element::basis(o, j));
                oct.count((a + b).is_zero() && (a + c2).is_zero());
            }
    oct.require(!o->is_associative(), "octonions reported associative");
    oct.require(!associator(Element::basis(o, 1), Element::basis(o, 2), Element::basis(o, 4))
                     .is_zero(),
                "(e1,e2,e4) should not associate");
    oct.require(make_builtin(Builtin::quaternions)->is_associative());
    suite.push_back(std::move(oct).done());
    return suite;
}

// ---------------------------------------------------------------------------
// Complexified algebra properties

Suite complexify_suite(const Options& opt) {
    Suite suite;
    Check reversal("complexify/antiinvolution-reversal");
    Check center("complexify/complex-center");
    Check comp("complexify/cn-multiplicative");
    Check lemma_inv("complexify/zero-divisor-inverse");
    unsigned seed = 7100;
    for (const auto& alg :
         {make_builtin(Builtin::quaternions), make_builtin(Builtin::octonions), make_clifford(3)}) {
        Rng rng(seed++);
        const bool composition = alg->name() != "clifford3";
        for (size_t t = 0; t < opt.samples / 4; ++t) {
            const CElement w{random_element(alg, rng), random_element(alg, rng)};
            const CElement v{random_element(alg, rng), random_element(alg, rng)};
            const double scale = (1.0 + w.inf_norm()) * (1.0 + v.inf_norm());

            const CElement lhs = c_antiinvolution(cmul(w, v));
            const CElement rhs = cmul(c_antiinvolution(v), c_antiinvolution(w));
            reversal.count((lhs.re - rhs.re).inf_norm() + (lhs.im - rhs.im).inf_norm() <=
                               opt.tol * scale,
                           ((lhs.re - rhs.re).inf_norm() + (lhs.im - rhs.im).inf_norm()) / scale);

            const cdouble z{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
            const CElement zc = CElement::from_complex(alg, z);
            const CElement a1 = cmul(zc, w), a2 = cmul(w, zc), a3 = cscale(w, z);
            center.count((a1.re - a3.re).inf_norm() + (a1.im - a3.im).inf_norm() +
                             (a2.re - a3.re).inf_norm() + (a2.im - a3.im).inf_norm() <=
                         opt.tol * scale);

            if (composition) {
                const CElement lhs2 = cn(cmul(w, v));
                const CElement rhs2 = cmul(cn(w), cn(v));
                const double s2 = scale * scale;
                comp.count((lhs2.re - rhs2.re).inf_norm() + (lhs2.im - rhs2.im).inf_norm() <=
                               1e-8 * s2,
                           ((lhs2.re - rhs2.re).inf_norm() + (lhs2.im - rhs2.im).inf_norm()) / s2);
            }
        }
        // Explicit inverse when the span of (x, y) lies in the normal cone.
        SphereSampler sph(alg);
        for (size_t t = 0; t < 100; ++t) {
            Element x = random_element(alg, rng), y = random_element(alg, rng);
            if (alg->name() == "clifford3") {
                // restrict to paravectors so the span lies in the normal cone
                for (int k = 4; k < 8; ++k) x[k] = y[k] = 0.0;
            }
            const Element span[2] = {x, y};
            if (!subspace_in_normal_cone(span, opt.tol)) continue;
            const CElement w{x, y};
            const CElement nw = cn(w);
            const cdouble u{nw.re[0], nw.im[0]};
            if (std::abs(u) < 1e-3) continue;
            const CElement winv = cscale(c_antiinvolution(w), std::conj(u) / std::norm(u));
            CElement prod = cmul(w, winv);
            prod.re[0] -= 1.0;
            const double err = prod.re.inf_norm() + prod.im.inf_norm();
            lemma_inv.count(err <= 1e-8 * (1.0 + w.inf_norm() * w.inf_norm()), err);
        }
    }
    suite.push_back(std::move(reversal).done());
    suite.push_back(std::move(center).done());
    suite.push_back(std::move(comp).done());
    suite.push_back(std::move(lemma_inv).done());
    return suite;
}

// ---------------------------------------------------------------------------
// Slice function properties

Suite slice_suite(const Options& opt) {
    Suite suite;
    Check welldef("slice/well-definedness");
    Check ident("slice/value-derivative-identity");
    Check sphere_const("slice/spherical-parts-constant");
    Check intrinsic("slice/stem-intrinsicity");
    Check reality("slice/reality-criterion");
    Check rep("slice/representation-formulas");
    unsigned seed = 7200;
    for (const auto& alg : {make_builtin(Builtin::quaternions), make_clifford(3)}) {
        Rng rng(seed++);
        SphereSampler sph(alg);
        const bool cl = alg->name() == "clifford3";
        for (size_t t = 0; t < opt.samples / 4; ++t) {
            const SlicePoly p = cl ? random_paravector_poly(alg, rng, 1 + (t % 4))
                                   : random_poly(alg, rng, 1 + (t % 4));
            const SliceFunction f{p};
            const double alpha = rng.uniform(-1.5, 1.5);
            const double beta = rng.uniform(0.2, 1.5);
            const Element j = sph.sample(rng);
            const Element x = Element::scalar(alg, alpha) + j * beta;
            const double fscale = 1.0 + slice_eval(f, x, opt.tol).inf_norm();

            // Same point through the opposite sign choice (alpha, -beta, -J).
            const CElement w = stem_eval(f, {alpha, -beta});
            const Element other = w.re + mul(-j, w.im);
            welldef.count(rel_err(other - slice_eval(f, x, opt.tol), fscale) <= opt.tol,
                          rel_err(other - slice_eval(f, x, opt.tol), fscale));

            const Element vs = spherical_value(f, x, opt.tol);
            const Element sd = spherical_derivative(f, x, opt.tol);
            const Element im = (x - conj(x)) * 0.5;
            ident.count(rel_err(slice_eval(f, x, opt.tol) - vs - mul(im, sd), fscale) <= opt.tol,
                        rel_err(slice_eval(f, x, opt.tol) - vs - mul(im, sd), fscale));

            // Spherical value/derivative are constant on the sphere, and the
            // derivative of either vanishes.
            const Element j2 = sph.sample(rng);
            const Element x2 = Element::scalar(alg, alpha) + j2 * beta;
            sphere_const.count(
                rel_err(sd - spherical_derivative(f, x2, opt.tol), fscale) <= opt.tol &&
                rel_err(vs - spherical_value(f, x2, opt.tol), fscale) <= opt.tol);
            const SliceFunction sdf = spherical_derivative_closure(f);
            sphere_const.count(
                spherical_derivative(sdf, x, opt.tol).inf_norm() <= opt.tol * fscale);

            const cdouble z{alpha, beta};
            const CElement a = stem_eval(f, std::conj(z));
            const CElement b = bar_conj(stem_eval(f, z));
            intrinsic.count((a.re - b.re).inf_norm() + (a.im - b.im).inf_norm() <=
                            opt.tol * fscale);

            // Representation from two half-planes.
            const Element K = t % 5 == 0 ? -j : sph.sample(rng);
            const Element I = sph.sample(rng);
            if ((j - K).inf_norm() > 1e-3) {
                const Element fj = slice_eval(f, x, opt.tol);
                const Element fk =
                    slice_eval(f, Element::scalar(alg, alpha) + K * beta, opt.tol);
                const Element got = representation(fj, fk, j, K, I, alpha, beta, opt.tol);
                const Element want =
                    slice_eval(f, Element::scalar(alg, alpha) + I * beta, opt.tol);
                rep.count(rel_err(got - want, fscale) <= opt.tol, rel_err(got - want, fscale));
            }
        }
        // Reality criterion, both directions.
        for (int t = 0; t < 60; ++t) {
            SlicePoly p = random_poly(alg, rng, 2);
            if (t % 2 == 0) {  // make it real
                std::vector<Element> cs;
                for (const auto& cc : p.coeffs())
                    cs.push_back(Element::scalar(alg, cc[0] == 0.0 ? 1.0 : cc[0]));
                p = SlicePoly(alg, std::move(cs));
            }
            const SliceFunction f{p};
            const bool declared = is_real_slicefn(f, opt.tol);
            bool maps_into_plane = true;
            for (int s = 0; s < 20; ++s) {
                const Element j = sph.sample(rng);
                const Element x =
                    Element::scalar(alg, rng.uniform(-1.0, 1.0)) + j * rng.uniform(0.0, 1.5);
                if (!in_plane(slice_eval(f, x, opt.tol), j, 1e-7)) {
                    maps_into_plane = false;
                    break;
                }
            }
            reality.count(declared == maps_into_plane);
        }
    }
    suite.push_back(std::move(welldef).done());
    suite.push_back(std::move(ident).done());
    suite.push_back(std::move(sphere_const).done());
    suite.push_back(std::move(intrinsic).done());
    suite.push_back(std::move(reality).done());
    suite.push_back(std::move(rep).done());
    return suite;
}

// ---------------------------------------------------------------------------
// Products, Leibniz rule, normal multiplicativity, admissibility

Suite product_suite(const Options& opt) {
    Suite suite;
    Check pointwise("product/real-factor-pointwise");
    Check leibniz("product/leibniz-rule");
    Check regular("product/poly-product-regular");
    unsigned seed = 7300;
    for (const auto& alg : {make_builtin(Builtin::quaternions), make_clifford(3)}) {
        Rng rng(seed++);
        SphereSampler sph(alg);
        const bool cl = alg->name() == "clifford3";
        for (int t = 0; t < 200; ++t) {
            const SlicePoly g = cl ? random_paravector_poly(alg, rng, 3)
                                   : random_poly(alg, rng, 3);
            std::vector<Element> rc;
            for (int k = 0; k <= 2; ++k) rc.push_back(Element::scalar(alg, rng.uniform(-2, 2)));
            const SlicePoly fr(alg, std::move(rc));
            const SliceFunction prod = sprod(SliceFunction(fr), SliceFunction(g));
            regular.count(prod.is_poly() && is_slice_regular(prod));

            const Element x = sph.cone_point(rng, -1.5, 1.5, 1.5);
            const Element lhs = slice_eval(prod, x, opt.tol);
            const Element rhs =
                mul(slice_eval(SliceFunction(fr), x, opt.tol), slice_eval(SliceFunction(g), x, opt.tol));
            const double s = 1.0 + lhs.inf_norm();
            pointwise.count(rel_err(lhs - rhs, s) <= opt.tol, rel_err(lhs - rhs, s));

            const SlicePoly f2 = cl ? random_paravector_poly(alg, rng, 2)
                                    : random_poly(alg, rng, 2);
            Element xq = Element::scalar(alg, rng.uniform(-1.0, 1.0)) +
                         sph.sample(rng) * rng.uniform(0.3, 1.2);
            const auto [l, r] = leibniz_check(SliceFunction(f2), SliceFunction(g), xq, opt.tol);
            const double ls = 1.0 + l.inf_norm();
            leibniz.count(rel_err(l - r, ls) <= 1e-8, rel_err(l - r, ls));
        }
    }
    suite.push_back(std::move(pointwise).done());
    suite.push_back(std::move(leibniz).done());
    suite.push_back(std::move(regular).done());
    return suite;
}

Suite normal_mult_suite(const Options& opt) {
    Suite suite;
    Check mult("normal/multiplicativity");
    Check adm_closed("normal/admissible-product-closure");
    Check pro12("normal/admissibility-via-normals");
    unsigned seed = 7400;
    for (const auto& alg :
         {make_builtin(Builtin::quaternions), make_builtin(Builtin::octonions), make_clifford(3)}) {
        Rng rng(seed++);
        const bool cl = alg->name() == "clifford3";
        for (int t = 0; t < opt.pair_count; ++t) {
            const int df = 1 + t % 5, dg = 1 + (t / 2) % 5;
            const SlicePoly f = cl ? random_paravector_poly(alg, rng, df)
                                   : random_poly(alg, rng, df);
            const SlicePoly g = cl ? random_paravector_poly(alg, rng, dg)
                                   : random_poly(alg, rng, dg);
            const SlicePoly lhs = normal(sprod(SliceFunction(f), SliceFunction(g))).poly();
            const SlicePoly rhs =
                sprod(normal(SliceFunction(f)), normal(SliceFunction(g))).poly();
            double scale = 1.0;
            for (const auto& c : lhs.coeffs()) scale = std::max(scale, c.inf_norm());
            double err = std::abs(static_cast<double>(lhs.degree() - rhs.degree()));
            for (int k = 0; k <= std::max(lhs.degree(), rhs.degree()); ++k)
                err = std::max(err, (lhs.coeff(k) - rhs.coeff(k)).inf_norm() / scale);
            mult.count(err <= 1e-8, err);
        }
    }
    {
        const auto cl3 = make_clifford(3);
        Rng rng(7450);
        // Product closure is tested on families where it provably holds:
        // 1-vector coefficients (products land in the even subalgebra, all of
        // whose nonzero elements have real nonzero norm) and real left factors.
        // It does NOT hold for arbitrary admissible pairs: f = x + e1 and
        // g = x e3 + e2 are admissible but their product has
        // n(H_1(i)) = 2 + 2 e123, so the closure test would falsify it.
        for (int t = 0; t < 20; ++t) {
            const SlicePoly f = random_vector_poly(cl3, rng, 1 + t % 3);
            const SlicePoly g = t % 2 == 0 ? random_vector_poly(cl3, rng, 1 + (t / 3) % 3)
                                           : random_paravector_poly(cl3, rng, 1 + (t / 3) % 3);
            SliceFunction left{f};
            if (t % 2 == 1) {
                std::vector<Element> rc;
                for (int k = 0; k <= 2; ++k)
                    rc.push_back(Element::scalar(cl3, rng.uniform_int(-3, 3)));
                if (rc.back().is_zero()) rc.back()[0] = 1.0;
                left = SliceFunction(SlicePoly(cl3, std::move(rc)));
            }
            const SliceFunction prod = sprod(left, SliceFunction(g));
            adm_closed.count(is_admissible_sampled(prod, 16, opt.tol));
        }
        {  // the documented counterexample stays non-admissible
            const SlicePoly f(cl3, {be(cl3, "e1"), Element::scalar(cl3, 1.0)});
            const SlicePoly g(cl3, {be(cl3, "e2"), be(cl3, "e3")});
            adm_closed.count(
                !is_admissible_sampled(sprod(SliceFunction(f), SliceFunction(g)), 16, opt.tol));
        }
        // Admissibility equals reality of N(f) and N(d_s f), on polynomials
        // where the verdict is known or sampled consistently.
        std::vector<SlicePoly> cases;
        cases.push_back(random_paravector_poly(cl3, rng, 3));
        cases.push_back(random_paravector_poly(cl3, rng, 2));
        cases.push_back(SlicePoly(cl3, {be(cl3, "e1"), be(cl3, "e23")}));  // not admissible
        cases.push_back(SlicePoly(
            cl3, {Element::scalar(cl3, 1.0), be(cl3, "e1") + be(cl3, "e23"), be(cl3, "e123")}));
        for (int t = 0; t < 10; ++t) cases.push_back(random_poly(cl3, rng, 2));
        for (const auto& p : cases) {
            const SliceFunction f{p};
            const bool adm = is_admissible_sampled(f, 24, opt.tol);
            bool normals_real = detail::try_real_normal_coeffs(p, opt.tol).has_value();
            if (normals_real) {
                const SliceFunction nsd = normal(spherical_derivative_closure(f));
                for (cdouble z : DomainDescriptor::whole_plane().sample_grid(12, 0.95, 1.7)) {
                    if (std::abs(z.imag()) < 0.05) continue;
                    const CElement w = stem_eval(nsd, z);
                    if (!is_real(w.re, opt.tol) || !is_real(w.im, opt.tol)) {
                        normals_real = false;
                        break;
                    }
                }
            }
            pro12.count(adm == normals_real);
        }
    }
    suite.push_back(std::move(mult).done());
    suite.push_back(std::move(adm_closed).done());
    suite.push_back(std::move(pro12).done());
    return suite;
}

// ---------------------------------------------------------------------------
// Zero sets

// Remainder magnitude after dividing cn by delta `power` times.
double real_division_remainder(std::vector<double> cn, const CharPoly& delta, int power) {
    double rem = 0.0;
    for (int rep = 0; rep < power; ++rep) {
        const int deg = static_cast<int>(cn.size()) - 1;
        if (deg < 2) return 1.0;
        std::vector<double> quotient(static_cast<size_t>(deg - 1), 0.0);
        for (int j = deg; j >= 2; --j) {
            const double lead = cn[static_cast<size_t>(j)];
            quotient[static_cast<size_t>(j - 2)] = lead;
            cn[static_cast<size_t>(j - 1)] += lead * delta.t_y;
            cn[static_cast<size_t>(j - 2)] -= lead * delta.n_y;
        }
        rem = std::abs(cn[0]) + std::abs(cn[1]);
        cn = std::move(quotient);
    }
    return rem;
}

Suite fta_suite(const Options& opt) {
    Suite suite;
    const auto cl3 = make_clifford(3);
    Check fta("zeros/fta-degree-count");
    Check bound("zeros/zero-count-bound");
    Check charp("zeros/characteristic-sphere");
    Check rem("zeros/normal-divisibility");
    Check prods("zeros/product-spheres");
    Rng rng(7500);
    SphereSampler sph(cl3);

    // Over the quaternions every polynomial is admissible; include them too.
    {
        const auto quat = make_builtin(Builtin::quaternions);
        Rng qrng(7505);
        for (int t = 0; t < 30; ++t) {
            const SlicePoly p = random_poly(quat, qrng, 1 + t % 4);
            try {
                int total = 0;
                for (const auto& rec : all_zeros(p, opt.tol)) total += rec.multiplicity;
                fta.count(total == p.degree());
            } catch (const Error& e) {
                fta.count(false);
                if (fta.r.note.empty()) fta.r.note = e.what();
            }
        }
    }

    for (int t = 0; t < opt.fta_polys; ++t) {
        const int deg = 1 + t % std::max(opt.fta_max_degree, 1);
        const SlicePoly p = random_paravector_poly(cl3, rng, deg);
        try {
            const auto records = all_zeros(p, opt.tol);
            int total = 0, r = 0, i = 0, s = 0;
            for (const auto& rec : records) {
                total += rec.multiplicity;
                if (rec.kind == ZeroKind::real) ++r;
                if (rec.kind == ZeroKind::isolated) ++i;
                if (rec.kind == ZeroKind::spherical) ++s;
            }
            fta.count(total == deg);
            bound.count(r + i + 2 * s <= deg);

            // Whenever a sphere carries a zero, Delta_y divides N(p) exactly.
            if (!records.empty()) {
                const auto& rec = records.front();
                const auto cn = normal_poly_coeffs(p, opt.tol);
                CharPoly delta{2.0 * rec.alpha, rec.alpha * rec.alpha + rec.beta * rec.beta};
                double cscale = 1.0;
                for (double v : cn) cscale = std::max(cscale, std::abs(v));
                rem.count(real_division_remainder(cn, delta, 1) <= 1e-6 * cscale);
            }
        } catch (const Error& e) {
            fta.count(false);
            if (fta.r.note.empty()) fta.r.note = e.what();
        }
    }

    // Characteristic polynomial vanishes exactly on its sphere.
    for (int t = 0; t < 20; ++t) {
        const Element y = sph.cone_point(rng, -1.5, 1.5, 1.5);
        const CharPoly d = char_poly(y, opt.tol);
        const SlicePoly delta(cl3, {Element::scalar(cl3, d.n_y), Element::scalar(cl3, -d.t_y),
                                    Element::scalar(cl3, 1.0)});
        const SliceCoords sc = slice_coords(y, opt.tol);
        bool ok = true;
        for (int k = 0; k < 50; ++k) {
            const Element I = sph.sample(rng);
            const Element on = Element::scalar(cl3, sc.alpha) + I * sc.beta;
            if (slice_eval(SliceFunction(delta), on, opt.tol).inf_norm() >
                1e-9 * (1.0 + d.n_y + d.t_y * d.t_y)) {
                ok = false;
                break;
            }
        }
        const Element off = Element::scalar(cl3, sc.alpha + 1.0 + rng.uniform(0.0, 1.0)) +
                            sph.sample(rng) * sc.beta;
        ok = ok && slice_eval(SliceFunction(delta), off, opt.tol).inf_norm() > 1e-3;
        charp.count(ok);
    }

    // Spheres of a product match the union of the factors' spheres, on pairs
    // whose product stays admissible: arbitrary ones over the quaternions,
    // 1-vector-coefficient ones over clifford(3).
    {
        const auto quat = make_builtin(Builtin::quaternions);
        Rng qrng(7510);
        for (int t = 0; t < 6; ++t) {
            const SlicePoly f = random_poly(quat, qrng, 1 + t % 2);
            const SlicePoly g = random_poly(quat, qrng, 1 + (t / 2) % 2);
            try {
                prods.count(zeros_of_product_check(f, g, opt.tol).equal);
            } catch (const Error&) {
                prods.count(false);
            }
        }
    }
    for (int t = 0; t < 6; ++t) {
        const SlicePoly f = random_vector_poly(cl3, rng, 1 + t % 2);
        const SlicePoly g = random_vector_poly(cl3, rng, 1 + (t / 2) % 2);
        try {
            prods.count(zeros_of_product_check(f, g, opt.tol).equal);
        } catch (const Error&) {
            prods.count(false);
        }
    }
    {  // the bivector pair has the single common sphere (0, 1)
        const SlicePoly f(cl3, {be(cl3, "e1"), be(cl3, "e2")});
        const SlicePoly g(cl3, {be(cl3, "e2"), be(cl3, "e3")});
        const auto repz = zeros_of_product_check(f, g, opt.tol);
        prods.count(repz.equal && repz.product_spheres.size() == 1 &&
                    std::abs(repz.product_spheres[0].alpha) < 1e-9 &&
                    std::abs(repz.product_spheres[0].beta - 1.0) < 1e-9);
    }

    suite.push_back(std::move(fta).done());
    suite.push_back(std::move(bound).done());
    suite.push_back(std::move(charp).done());
    suite.push_back(std::move(rem).done());
    suite.push_back(std::move(prods).done());
    return suite;
}

// ---------------------------------------------------------------------------
// Cauchy kernel and integral formulas

Suite kernel_suite(const Options& opt) {
    Suite suite;
    Check invprop("kernel/slice-inverse-of-y-minus-x");
    Check realy("kernel/real-pole-closed-form");
    Check reg("kernel/slice-regular-in-x");
    unsigned seed = 7600;
    for (const auto& alg :
         {make_builtin(Builtin::quaternions), make_builtin(Builtin::octonions), make_clifford(3)}) {
        Rng rng(seed++);
        SphereSampler sph(alg);
        for (int t = 0; t < 100; ++t) {
            const Element j = sph.sample(rng);
            const double a1 = rng.uniform(-1.5, 1.5), b1 = rng.uniform(0.0, 1.5);
            const double a2 = rng.uniform(-1.5, 1.5), b2 = rng.uniform(0.0, 1.5);
            if (std::hypot(a1 - a2, b1 - b2) < 0.1 || std::hypot(a1 - a2, b1 + b2) < 0.1) {
                invprop.count(true);
                continue;
            }
            const Element x = Element::scalar(alg, a1) + j * b1;
            const Element y = Element::scalar(alg, a2) + j * b2;
            Element prod = mul(cauchy_kernel(x, y, opt.tol), y - x);
            prod[0] -= 1.0;
            invprop.count(prod.inf_norm() <= opt.tol * 10.0 * (1.0 + y.inf_norm()),
                          prod.inf_norm());
        }
        for (int t = 0; t < 30; ++t) {
            const double yr = rng.uniform(-1.5, 1.5);
            const Element y = Element::scalar(alg, yr);
            const Element x = sph.cone_point(rng, yr + 0.3, yr + 2.0, 1.5);
            const Element lhs = cauchy_kernel(x, y, opt.tol);
            const Element rhs = inverse(y - x, opt.tol);
            realy.count(rel_err(lhs - rhs, rhs.inf_norm()) <= 1e-8,
                        rel_err(lhs - rhs, rhs.inf_norm()));
        }
        // Slice regularity of x -> C_A(x, y) away from the singular sphere:
        // its stem on a disk avoiding S_y has vanishing dzbar.
        const Element y = Element::scalar(alg, 2.0) + sph.canonical() * 2.0;
        const CharPoly cp = char_poly(y, opt.tol);
        AlgebraPtr aa = alg;
        Element yc = conj(y);
        auto stem = [aa, yc, cp](cdouble z) {
            const CElement lin{Element::scalar(aa, z.real()) - yc, Element::scalar(aa, z.imag())};
            return cscale(lin, -1.0 / cp.eval(z));
        };
        reg.count(is_slice_regular(
            SliceFunction(StemClosure(alg, stem, DomainDescriptor::disk(0.0, 1.0), true)), 12,
            1e-6));
    }
    suite.push_back(std::move(invprop).done());
    suite.push_back(std::move(realy).done());
    suite.push_back(std::move(reg).done());
    return suite;
}

Suite cauchy_suite(const Options& opt) {
    Suite suite;
    const auto quat = make_builtin(Builtin::quaternions);
    const auto oct = make_builtin(Builtin::octonions);
    Rng rng(7700);
    SphereSampler sphq(quat);
    SphereSampler spho(oct);

    {  // Boundary reconstruction of a degree-5 polynomial, plus node halving.
        Check c("cauchy/boundary-degree5");
        Check h("cauchy/boundary-halving-ratio");
        const SlicePoly p = random_poly(quat, rng, 5);
        ContourSpec contour{sphq.canonical(), DomainDescriptor::disk(0.0, 2.0), 256};
        ContourSpec half = contour;
        half.n_boundary = 128;
        double max_full = 0.0, max_half = 0.0;
        for (int t = 0; t < 20; ++t) {
            const double r = 0.2 + 1.5 * t / 19.0;  // up to 0.85 of the radius
            const double th = rng.uniform(0.0, 2.0 * M_PI);
            const Element I = sphq.sample(rng);
            const Element x = Element::scalar(quat, r * std::cos(th)) +
                              I * std::abs(r * std::sin(th));
            const Element want = slice_eval(SliceFunction(p), x, opt.tol);
            const double scale = 1.0 + want.inf_norm();
            const double e_full =
                (cauchy_boundary(SliceFunction(p), contour, x, opt.tol) - want).inf_norm() / scale;
            const double e_half =
                (cauchy_boundary(SliceFunction(p), half, x, opt.tol) - want).inf_norm() / scale;
            c.count(e_full <= 1e-9, e_full);
            max_full = std::max(max_full, e_full);
            max_half = std::max(max_half, e_half);
        }
        h.count(max_half >= 4.0 * max_full, max_half / std::max(max_full, 1e-300));
        suite.push_back(std::move(c).done());
        suite.push_back(std::move(h).done());
    }

    {  // C^1 reconstruction of x -> x^c on the unit disk.
        Check c("cauchy/pompeiu-conjugate-variable");
        const SliceFunction f = conj_variable_fn(quat, DomainDescriptor::disk(0.0, 1.0));
        ContourSpec contour{sphq.canonical(), DomainDescriptor::disk(0.0, 1.0), 256, 64, 128};
        for (int t = 0; t < 8; ++t) {
            const double r = 0.12 + 0.76 * t / 7.0;  // stay 0.1 inside the boundary
            const double th = 0.4 + t;
            const Element I = t % 2 == 0 ? sphq.canonical() : sphq.sample(rng);
            const Element x = Element::scalar(quat, r * std::cos(th)) +
                              I * std::abs(r * std::sin(th));
            const Element want = conj(x);
            const double err =
                (cauchy_pompeiu(f, contour, x, opt.tol) - want).inf_norm() /
                (1.0 + want.inf_norm());
            c.count(err <= 1e-6, err);
        }
        suite.push_back(std::move(c).done());
    }

    {  // C^1 reconstruction of the squared-norm stem z conj(z).
        Check c("cauchy/pompeiu-squared-norm");
        const SliceFunction f = norm_stem_fn(quat, DomainDescriptor::disk(0.0, 1.0));
        ContourSpec contour{sphq.canonical(), DomainDescriptor::disk(0.0, 1.0), 256, 64, 128};
        for (int t = 0; t < 5; ++t) {
            const Element I = sphq.sample(rng);
            const double a = rng.uniform(-0.5, 0.5), b = rng.uniform(0.0, 0.5);
            const Element x = Element::scalar(quat, a) + I * b;
            const Element want = Element::scalar(quat, a * a + b * b);
            const double err = (cauchy_pompeiu(f, contour, x, opt.tol) - want).inf_norm();
            c.count(err <= 1e-5, err);
        }
        suite.push_back(std::move(c).done());
    }

    {  // Polynomials: the area term vanishes and pompeiu equals the boundary op.
        Check c("cauchy/pompeiu-poly-boundary-match");
        const SlicePoly p = random_poly(quat, rng, 3);
        ContourSpec contour{sphq.canonical(), DomainDescriptor::disk(0.0, 2.0), 128, 32, 64};
        const Element x = Element::scalar(quat, 0.3) + sphq.sample(rng) * 0.7;
        const Element a = cauchy_pompeiu(SliceFunction(p), contour, x, opt.tol);
        const Element b = cauchy_boundary(SliceFunction(p), contour, x, opt.tol);
        c.count((a - b).inf_norm() <= 1e-12 * (1.0 + a.inf_norm()));
        suite.push_back(std::move(c).done());
    }

    {  // Off-slice evaluation over the octonions: gated unless f is real.
        Check c("cauchy/nonassociative-gate");
        const SlicePoly fr(oct, {Element::scalar(oct, 1.0), Element::zero(oct),
                                 Element::scalar(oct, 1.0)});  // x^2 + 1, real
        const SlicePoly fn(oct, {Element::basis(oct, 1), Element::basis(oct, 2)});
        ContourSpec contour{Element::basis(oct, 1), DomainDescriptor::disk(0.0, 2.0), 256};
        const Element x_off = Element::scalar(oct, 0.4) + Element::basis(oct, 3) * 0.6;
        bool gated = false;
        try {
            cauchy_boundary(SliceFunction(fn), contour, x_off, opt.tol);
        } catch (const NonAssociativeOffSlice&) {
            gated = true;
        }
        c.require(gated, "non-real octonionic reconstruction off the slice was not gated");
        const Element want = slice_eval(SliceFunction(fr), x_off, opt.tol);
        const double err = (cauchy_boundary(SliceFunction(fr), contour, x_off, opt.tol) - want)
                               .inf_norm() /
                           (1.0 + want.inf_norm());
        c.count(err <= 1e-9, err);
        // On the slice plane both work.
        const Element x_on = Element::scalar(oct, 0.4) + Element::basis(oct, 1) * 0.6;
        const Element want_on = slice_eval(SliceFunction(fn), x_on, opt.tol);
        const double err_on =
            (cauchy_boundary(SliceFunction(fn), contour, x_on, opt.tol) - want_on).inf_norm() /
            (1.0 + want_on.inf_norm());
        c.count(err_on <= 1e-9, err_on);
        suite.push_back(std::move(c).done());
    }

    {  // Locally constant stem on a conjugate pair of disks.
        Check c("cauchy/halfplane-constant-stem");
        const Element j0 = sphq.canonical();
        const DomainDescriptor dom = DomainDescriptor::conj_pair({0.0, 1.0}, 0.6);
        const SliceFunction f = make_halfplane_constant(j0, dom);
        c.require(is_slice_regular(f, 10, 1e-8), "locally constant stem must be regular");
        // N(f) vanishes identically on the domain.
        const SliceFunction nf = normal(f);
        double nmax = 0.0;
        for (cdouble z : dom.sample_grid(6, 0.8)) nmax = std::max(nmax, stem_eval(nf, z).inf_norm());
        c.count(nmax <= 1e-12, nmax);
        // Boundary reconstruction across slices (quaternions are associative).
        ContourSpec contour{j0, dom, 256};
        for (int t = 0; t < 6; ++t) {
            const Element I = t == 0 ? j0 : sphq.sample(rng);
            const Element x = Element::scalar(quat, 0.1 * t - 0.2) + I * (1.0 + 0.3 * (t % 3));
            if (!dom.contains_interior({0.1 * t - 0.2, 1.0 + 0.3 * (t % 3)}, 0.05)) continue;
            const Element want = slice_eval(f, x, opt.tol);
            const double err =
                (cauchy_boundary(f, contour, x, opt.tol) - want).inf_norm() / (1.0 + want.inf_norm());
            c.count(err <= 1e-9, err);
        }
        suite.push_back(std::move(c).done());
    }

    {  // Direct boundary value versus representation-assembled value.
        Check c("cauchy/representation-assembly");
        const SlicePoly p = random_poly(quat, rng, 4);
        ContourSpec contour{sphq.canonical(), DomainDescriptor::disk(0.0, 2.0), 256};
        for (int t = 0; t < 5; ++t) {
            const Element K = t % 2 == 0 ? -contour.J : sphq.sample(rng);
            const Element x = Element::scalar(quat, rng.uniform(-0.8, 0.8)) +
                              sphq.sample(rng) * rng.uniform(0.1, 1.2);
            if ((contour.J - K).inf_norm() < 1e-3) continue;
            const auto [direct, assembled] =
                representation_via_kernel_check(SliceFunction(p), contour, K, x, opt.tol);
            const double err = (direct - assembled).inf_norm() / (1.0 + direct.inf_norm());
            c.count(err <= 1e-9, err);
        }
        // Real integrand over the octonions.
        const SlicePoly fr(oct, {Element::scalar(oct, -1.0), Element::scalar(oct, 2.0),
                                 Element::scalar(oct, 1.0)});
        ContourSpec co{Element::basis(oct, 2), DomainDescriptor::disk(0.0, 2.0), 256};
        const Element xo = Element::scalar(oct, 0.2) + Element::basis(oct, 5) * 0.8;
        const auto [od, oa] = representation_via_kernel_check(SliceFunction(fr), co,
                                                              Element::basis(oct, 4), xo, opt.tol);
        c.count((od - oa).inf_norm() <= 1e-9 * (1.0 + od.inf_norm()),
                (od - oa).inf_norm() / (1.0 + od.inf_norm()));
        suite.push_back(std::move(c).done());
    }
    return suite;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"worked",  "cones",       "alternativity", "complexify", "slice",
            "product", "normal-mult", "fta",           "kernel",     "cauchy",
            "all"};
}

Suite run_suite(const std::string& name, const Options& opts) {
    static const std::map<std::string, Suite (*)(const Options&)> registry = {
        {"worked", worked_examples},       {"cones", cones_suite},
        {"alternativity", alternativity_suite}, {"complexify", complexify_suite},
        {"slice", slice_suite},            {"product", product_suite},
        {"normal-mult", normal_mult_suite}, {"fta", fta_suite},
        {"kernel", kernel_suite},          {"cauchy", cauchy_suite},
    };
    if (name == "all") {
        Suite all;
        for (const auto& [n, fn] : registry) {
            Suite s = fn(opts);
            all.insert(all.end(), s.begin(), s.end());
        }
        return all;
    }
    const auto it = registry.find(name);
    if (it == registry.end()) throw Error("unknown verification suite '" + name + "'");
    return it->second(opts);
}

Suite run_acceptance(const Options& opts) {
    Suite all = worked_examples(opts);
    for (const char* n : {"cones", "alternativity", "slice", "product", "normal-mult", "fta",
                          "kernel", "cauchy"}) {
        Suite s = run_suite(n, opts);
        all.insert(all.end(), s.begin(), s.end());
    }
    return all;
}

}  // namespace slicealg::verify
