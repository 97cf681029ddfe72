#include <doctest.h>

#include <cmath>
#include <complex>

#include "slicealg/sampling.hpp"
#include "slicealg/zeros.hpp"

using namespace slicealg;

namespace {
Element bas(const AlgebraPtr& a, int k) { return Element::basis(a, k); }
}  // namespace

TEST_CASE("characteristic polynomial") {
    const auto cl3 = make_clifford(3);
    const CharPoly d1 = char_poly(bas(cl3, 2));  // e2: x^2 + 1
    CHECK(d1.t_y == doctest::Approx(0.0));
    CHECK(d1.n_y == doctest::Approx(1.0));

    Element y1 = Element::zero(cl3);
    y1[0] = 0.5;
    y1[2] = -0.5;
    y1[3] = -0.5;
    y1[6] = 0.5;
    const CharPoly d2 = char_poly(y1);  // x^2 - x + 1
    CHECK(d2.t_y == doctest::Approx(1.0));
    CHECK(d2.n_y == doctest::Approx(1.0));

    // equal characteristic polynomials exactly when the sphere data agree
    Rng rng(21);
    SphereSampler sph(cl3);
    const Element y = sph.cone_point(rng, -1, 1, 1);
    const Element same_sphere =
        Element::scalar(cl3, slice_coords(y).alpha) + sph.sample(rng) * slice_coords(y).beta;
    const CharPoly a = char_poly(y), b = char_poly(same_sphere);
    CHECK(a.t_y == doctest::Approx(b.t_y));
    CHECK(a.n_y == doctest::Approx(b.n_y));

    CHECK_THROWS_AS(char_poly(bas(cl3, 7)), NotInQuadraticCone);
}

TEST_CASE("normal polynomial coefficients") {
    const auto cl3 = make_clifford(3);
    const SlicePoly p(cl3, {bas(cl3, 2), bas(cl3, 3), Element::scalar(cl3, 1.0)});
    const auto cn = normal_poly_coeffs(p);
    REQUIRE(cn.size() == 5);
    const double want[5] = {1, 0, 1, 0, 1};
    for (int i = 0; i < 5; ++i) CHECK(cn[i] == doctest::Approx(want[i]));

    // (x - y)^2 for real y
    const SlicePoly lin(cl3, {Element::scalar(cl3, -2.0), Element::scalar(cl3, 1.0)});
    const auto cn2 = normal_poly_coeffs(lin);
    REQUIRE(cn2.size() == 3);
    CHECK(cn2[0] == doctest::Approx(4.0));
    CHECK(cn2[1] == doctest::Approx(-4.0));
    CHECK(cn2[2] == doctest::Approx(1.0));

    // x e2 + e1 -> x^2 + 1
    const auto cn3 = normal_poly_coeffs(SlicePoly(cl3, {bas(cl3, 1), bas(cl3, 2)}));
    CHECK(cn3[0] == doctest::Approx(1.0));
    CHECK(cn3[1] == doctest::Approx(0.0));
    CHECK(cn3[2] == doctest::Approx(1.0));

    CHECK_THROWS_AS(normal_poly_coeffs(SlicePoly(cl3, {bas(cl3, 1), bas(cl3, 6)})),
                    NonRealNormal);
}

TEST_CASE("sphere classification") {
    const auto quat = make_builtin(Builtin::quaternions);
    const SlicePoly x2p1(quat, {Element::scalar(quat, 1.0), Element::zero(quat),
                                Element::scalar(quat, 1.0)});
    const ZeroRecord spherical = classify_sphere(x2p1, {0.0, 1.0});
    CHECK(spherical.kind == ZeroKind::spherical);
    CHECK(spherical.alpha == doctest::Approx(0.0));
    CHECK(spherical.beta == doctest::Approx(1.0));
    CHECK(spherical.residual < 1e-12);

    const auto cl3 = make_clifford(3);
    const SlicePoly p(cl3, {bas(cl3, 2), bas(cl3, 3), Element::scalar(cl3, 1.0)});
    const ZeroRecord isolated = classify_sphere(p, std::polar(1.0, M_PI / 3.0));
    CHECK(isolated.kind == ZeroKind::isolated);
    REQUIRE(isolated.point.has_value());
    Element y1 = Element::zero(cl3);
    y1[0] = 0.5;
    y1[2] = -0.5;
    y1[3] = -0.5;
    y1[6] = 0.5;
    CHECK((*isolated.point - y1).inf_norm() < 1e-10);
    CHECK(isolated.residual < 1e-10);

    const SlicePoly x2m1(cl3, {Element::scalar(cl3, -1.0), Element::zero(cl3),
                               Element::scalar(cl3, 1.0)});
    const ZeroRecord real_rec = classify_sphere(x2m1, {1.0, 0.0});
    CHECK(real_rec.kind == ZeroKind::real);
    CHECK(real_rec.alpha == doctest::Approx(1.0));

    CHECK_THROWS_AS(classify_sphere(x2p1, {0.5, 0.3}), NotARoot);
}

TEST_CASE("multiplicity through the normal polynomial") {
    const auto quat = make_builtin(Builtin::quaternions);
    const SlicePoly x2p1(quat, {Element::scalar(quat, 1.0), Element::zero(quat),
                                Element::scalar(quat, 1.0)});
    const ZeroRecord rec = classify_sphere(x2p1, {0.0, 1.0});
    CHECK(multiplicity(x2p1, rec) == 2);

    // x - 5: real zero of multiplicity 1 (normal polynomial (x-5)^2)
    const SlicePoly lin(quat, {Element::scalar(quat, -5.0), Element::scalar(quat, 1.0)});
    const ZeroRecord r5 = classify_sphere(lin, {5.0, 0.0});
    CHECK(multiplicity(lin, r5) == 1);

    // bivector product example: isolated zero e12 of multiplicity 2
    const auto cl3 = make_clifford(3);
    const SlicePoly f(cl3, {bas(cl3, 1), bas(cl3, 2)});
    const SlicePoly g(cl3, {bas(cl3, 2), bas(cl3, 3)});
    const SlicePoly fg = sprod(SliceFunction(f), SliceFunction(g)).poly();
    const ZeroRecord riso = classify_sphere(fg, {0.0, 1.0});
    CHECK(riso.kind == ZeroKind::isolated);
    REQUIRE(riso.point.has_value());
    CHECK((*riso.point - bas(cl3, 4)).inf_norm() < 1e-10);
    CHECK(multiplicity(fg, riso) == 2);
}

TEST_CASE("division by a real linear factor") {
    const auto quat = make_builtin(Builtin::quaternions);
    // x^2 - 1 divided by (x - 1) -> x + 1
    const SlicePoly p(quat, {Element::scalar(quat, -1.0), Element::zero(quat),
                             Element::scalar(quat, 1.0)});
    const SlicePoly q = divide_linear_real(p, 1.0);
    CHECK(q.degree() == 1);
    CHECK(q.coeff(0)[0] == doctest::Approx(1.0));
    CHECK(q.coeff(1)[0] == doctest::Approx(1.0));

    // (x-2)(x-3) divided by 2 -> x - 3
    const SlicePoly p2(quat, {Element::scalar(quat, 6.0), Element::scalar(quat, -5.0),
                              Element::scalar(quat, 1.0)});
    const SlicePoly q2 = divide_linear_real(p2, 2.0);
    CHECK(q2.coeff(0)[0] == doctest::Approx(-3.0));

    CHECK_THROWS_AS(divide_linear_real(p2, 1.0), NonZeroRemainder);

    // round-trip: (x - y) * h recovers h, for random right-coefficient h
    Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        const SlicePoly h = random_poly(quat, rng, 3);
        const double y = rng.uniform(-2.0, 2.0);
        const SlicePoly shift(quat, {Element::scalar(quat, -y), Element::scalar(quat, 1.0)});
        const SlicePoly prod = sprod(SliceFunction(shift), SliceFunction(h)).poly();
        const SlicePoly back = divide_linear_real(prod, y);
        for (int k = 0; k <= h.degree(); ++k)
            CHECK((back.coeff(k) - h.coeff(k)).inf_norm() < 1e-9 * (1.0 + h.coeff(k).inf_norm()));
    }
}

TEST_CASE("division by a characteristic polynomial") {
    const auto cl3 = make_clifford(3);
    const SlicePoly f(cl3, {bas(cl3, 1), bas(cl3, 2)});
    const SlicePoly g(cl3, {bas(cl3, 2), bas(cl3, 3)});
    const SlicePoly fg = sprod(SliceFunction(f), SliceFunction(g)).poly();

    const DivisionResult div = divide_char(fg, bas(cl3, 4));  // Delta_{e12} = x^2 + 1
    CHECK(div.quotient.degree() == 0);
    CHECK((div.quotient.coeff(0) - bas(cl3, 6)).inf_norm() < 1e-14);        // e23
    CHECK((div.a - (bas(cl3, 5) - Element::scalar(cl3, 1.0))).inf_norm() < 1e-14);
    CHECK((div.b - (bas(cl3, 4) - bas(cl3, 6))).inf_norm() < 1e-14);

    // p = x^2 + 1 divided by its own characteristic polynomial: h = 1, a = b = 0
    const SlicePoly x2p1(cl3, {Element::scalar(cl3, 1.0), Element::zero(cl3),
                               Element::scalar(cl3, 1.0)});
    const DivisionResult div2 = divide_char(x2p1, bas(cl3, 2));
    CHECK(div2.quotient.coeff(0)[0] == doctest::Approx(1.0));
    CHECK(div2.a.inf_norm() < 1e-14);
    CHECK(div2.b.inf_norm() < 1e-14);

    // reconstruction round-trip on random data
    Rng rng(29);
    SphereSampler sph(cl3);
    for (int t = 0; t < 50; ++t) {
        const SlicePoly p = random_paravector_poly(cl3, rng, 2 + t % 3);
        const Element y = sph.cone_point(rng, -1.5, 1.5, 1.5) + sph.sample(rng) * 0.1;
        if (slice_coords(y).beta < 0.1) continue;
        const DivisionResult d = divide_char(p, y);
        const CharPoly cp = char_poly(y);
        const SlicePoly delta(cl3, {Element::scalar(cl3, cp.n_y), Element::scalar(cl3, -cp.t_y),
                                    Element::scalar(cl3, 1.0)});
        SlicePoly rebuilt = sprod(SliceFunction(delta), SliceFunction(d.quotient)).poly();
        std::vector<Element> rem = {d.b, d.a};
        rebuilt = sprod(SliceFunction(SlicePoly::constant(Element::scalar(cl3, 1.0))),
                        SliceFunction(rebuilt))
                      .poly();
        for (int k = 0; k <= p.degree(); ++k) {
            Element want = p.coeff(k);
            Element got = rebuilt.coeff(k);
            if (k < 2) got += rem[static_cast<size_t>(k)];
            CHECK((want - got).inf_norm() < 1e-9 * (1.0 + want.inf_norm()));
        }
    }

    CHECK_THROWS_AS(divide_char(fg, Element::scalar(cl3, 1.0)), Error);
}

TEST_CASE("full zero pipeline") {
    const auto cl3 = make_clifford(3);
    // two isolated simple zeros
    const SlicePoly p(cl3, {bas(cl3, 2), bas(cl3, 3), Element::scalar(cl3, 1.0)});
    const auto recs = all_zeros(p);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].kind == ZeroKind::isolated);
    CHECK(recs[0].multiplicity == 1);
    CHECK(recs[1].multiplicity == 1);

    // x^2 - 1: two real zeros, e123 roots correctly absent
    const SlicePoly x2m1(cl3, {Element::scalar(cl3, -1.0), Element::zero(cl3),
                               Element::scalar(cl3, 1.0)});
    const auto recs2 = all_zeros(x2m1);
    REQUIRE(recs2.size() == 2);
    CHECK(recs2[0].alpha == doctest::Approx(-1.0));
    CHECK(recs2[1].alpha == doctest::Approx(1.0));
    CHECK(recs2[0].kind == ZeroKind::real);

    // real-coefficient polynomials have paravector witnesses on every sphere
    const SlicePoly realp(cl3, {Element::scalar(cl3, 2.0), Element::scalar(cl3, 0.0),
                                Element::scalar(cl3, 3.0), Element::scalar(cl3, 1.0)});
    for (const auto& r : all_zeros(realp)) {
        REQUIRE(r.point.has_value());
        for (int k = 4; k < 8; ++k) CHECK((*r.point)[k] == 0.0);  // paravector witness
    }

    // a real double zero: (x-1)^2 over the quaternions
    const auto quat = make_builtin(Builtin::quaternions);
    const SlicePoly dbl(quat, {Element::scalar(quat, 1.0), Element::scalar(quat, -2.0),
                               Element::scalar(quat, 1.0)});
    const auto recs3 = all_zeros(dbl);
    REQUIRE(recs3.size() == 1);
    CHECK(recs3[0].kind == ZeroKind::real);
    CHECK(recs3[0].multiplicity == 2);

    // degree-8 paravector polynomials still account for every zero
    Rng rng8(37);
    for (int t = 0; t < 10; ++t) {
        const SlicePoly p8 = random_paravector_poly(cl3, rng8, 8);
        int total = 0, r = 0, iso = 0, sph = 0;
        for (const auto& rec : all_zeros(p8)) {
            total += rec.multiplicity;
            if (rec.kind == ZeroKind::real) ++r;
            if (rec.kind == ZeroKind::isolated) ++iso;
            if (rec.kind == ZeroKind::spherical) ++sph;
        }
        CHECK(total == 8);
        CHECK(r + iso + 2 * sph <= 8);
    }

    // a repeated quadratic factor: (x^2+1)^2 has one spherical record, mult 2...
    // over the quaternions the sphere is S^2 and the multiplicity doubles.
    const SlicePoly x2p1(quat, {Element::scalar(quat, 1.0), Element::zero(quat),
                                Element::scalar(quat, 1.0)});
    const SlicePoly sq = sprod(SliceFunction(x2p1), SliceFunction(x2p1)).poly();
    const auto recs4 = all_zeros(sq);
    REQUIRE(recs4.size() == 1);
    CHECK(recs4[0].kind == ZeroKind::spherical);
    CHECK(recs4[0].multiplicity == 4);

    // errors
    CHECK_THROWS_AS(all_zeros(SlicePoly(cl3, {bas(cl3, 1), bas(cl3, 6)})), NotAdmissible);
    CHECK_THROWS_AS(all_zeros(SlicePoly::constant(Element::scalar(cl3, 1.0))), Error);
}

TEST_CASE("zeros of products") {
    const auto cl3 = make_clifford(3);
    const SlicePoly f(cl3, {bas(cl3, 1), bas(cl3, 2)});
    const SlicePoly g(cl3, {bas(cl3, 2), bas(cl3, 3)});
    const auto rep = zeros_of_product_check(f, g);
    CHECK(rep.equal);
    REQUIRE(rep.product_spheres.size() == 1);
    CHECK(rep.product_spheres[0].alpha == doctest::Approx(0.0));
    CHECK(rep.product_spheres[0].beta == doctest::Approx(1.0));

    // a real factor's zeros survive in the product
    const auto quat = make_builtin(Builtin::quaternions);
    Rng rng(31);
    const SlicePoly fr(quat, {Element::scalar(quat, -1.0), Element::scalar(quat, 1.0)});
    const SlicePoly garb = random_poly(quat, rng, 2);
    const auto rep2 = zeros_of_product_check(fr, garb);
    CHECK(rep2.equal);
    bool found = false;
    for (const auto& s : rep2.product_spheres)
        if (std::abs(s.alpha - 1.0) < 1e-8 && s.beta < 1e-8) found = true;
    CHECK(found);
}
