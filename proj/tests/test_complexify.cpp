#include <doctest.h>

#include <cmath>
#include <complex>

#include "slicealg/complexify.hpp"
#include "slicealg/sampling.hpp"

using namespace slicealg;

TEST_CASE("cmul basics") {
    const auto quat = make_builtin(Builtin::quaternions);
    // (0 + i*1)^2 = -1
    const CElement i_unit{Element::zero(quat), Element::scalar(quat, 1.0)};
    const CElement sq = cmul(i_unit, i_unit);
    CHECK(sq.re[0] == -1.0);
    CHECK(sq.im.inf_norm() == 0.0);

    // unity acts trivially
    Rng rng(1);
    const CElement w{random_element(quat, rng), random_element(quat, rng)};
    const CElement one = CElement::from_real(Element::scalar(quat, 1.0));
    const CElement wu = cmul(w, one);
    CHECK((wu.re - w.re).inf_norm() == 0.0);
    CHECK((wu.im - w.im).inf_norm() == 0.0);
}

TEST_CASE("conjugations") {
    const auto cl3 = make_clifford(3);
    const CElement w{Element::basis(cl3, 4), Element::basis(cl3, 5)};  // e12 + i e13
    const CElement wc = c_antiinvolution(w);
    CHECK(wc.re[4] == -1.0);
    CHECK(wc.im[5] == -1.0);

    const CElement wb = bar_conj(w);
    CHECK(wb.re[4] == 1.0);
    CHECK(wb.im[5] == -1.0);

    Rng rng(2);
    for (int t = 0; t < 50; ++t) {
        const CElement v{random_element(cl3, rng), random_element(cl3, rng)};
        const CElement vcc = c_antiinvolution(c_antiinvolution(v));
        CHECK((vcc.re - v.re).inf_norm() < 1e-14);
        CHECK((vcc.im - v.im).inf_norm() < 1e-14);
    }

    const CElement real_only = bar_conj(CElement::from_real(Element::basis(cl3, 1)));
    CHECK(real_only.re[1] == 1.0);
    CHECK(real_only.im.inf_norm() == 0.0);
}

TEST_CASE("cn agrees with its expansion and detects zero divisors") {
    const auto quat = make_builtin(Builtin::quaternions);
    // cn(e1 + i e2) = 0 over the quaternions
    const CElement w{Element::basis(quat, 1), Element::basis(quat, 2)};
    const CElement n = cn(w);
    CHECK(n.re.inf_norm() < 1e-14);
    CHECK(n.im.inf_norm() < 1e-14);

    // real w: cn = n(x)
    Rng rng(3);
    const Element x = random_element(quat, rng);
    const CElement nx = cn(CElement::from_real(x));
    CHECK((nx.re - norm_elem(x)).inf_norm() < 1e-12);
    CHECK(nx.im.inf_norm() < 1e-12);
}

TEST_CASE("cn of a polynomial stem at a root of its normal polynomial") {
    // P(z) = z^2 + z e3 + e2 over clifford(3); z^4 + z^2 + 1 vanishes at
    // zeta = exp(i pi/3), so P(zeta) is a zero divisor.
    const auto cl3 = make_clifford(3);
    const std::complex<double> zeta = std::polar(1.0, M_PI / 3.0);
    const std::complex<double> z2 = zeta * zeta;
    CElement w{Element::zero(cl3), Element::zero(cl3)};
    w.re[0] = z2.real();
    w.im[0] = z2.imag();
    w.re[3] = zeta.real();
    w.im[3] = zeta.imag();
    w.re[2] += 1.0;
    const CElement n = cn(w);
    CHECK(n.re.inf_norm() < 1e-12);
    CHECK(n.im.inf_norm() < 1e-12);

    // solve_K recovers the isolated zero parameter: y1 = (1 - e2 - e3 + e23)/2
    // via y = Re(zeta) + Im(zeta) K.
    const Element k = solve_K(w);
    Element y = Element::scalar(cl3, zeta.real()) + k * zeta.imag();
    Element want = Element::zero(cl3);
    want[0] = 0.5;
    want[2] = -0.5;
    want[3] = -0.5;
    want[6] = 0.5;
    CHECK((y - want).inf_norm() < 1e-12);
}

TEST_CASE("solve_K examples and error paths") {
    const auto quat = make_builtin(Builtin::quaternions);
    const CElement w{Element::basis(quat, 1), Element::basis(quat, 2)};
    const Element k = solve_K(w);
    CHECK(k[3] == doctest::Approx(1.0));  // K = i j = k
    CHECK((w.re + mul(k, w.im)).inf_norm() < 1e-12);

    // 1 + i e1 IS a zero divisor (cn = 0); 2 + i e1 is not.
    const CElement edge{Element::scalar(quat, 1.0), Element::basis(quat, 1)};
    CHECK(cn(edge).inf_norm() < 1e-14);
    const CElement not_divisor{Element::scalar(quat, 2.0), Element::basis(quat, 1)};
    CHECK_THROWS_AS(solve_K(not_divisor), NotAZeroDivisor);

    // cn vanishes but the imaginary part lies outside the normal cone:
    // x = e3 + e12 and y = e1 + e23 have equal (non-real) norms and t(x y^c) = 0.
    const auto cl3 = make_clifford(3);
    const Element bad_x = Element::basis(cl3, 3) + Element::basis(cl3, 4);
    const Element bad_y = Element::basis(cl3, 1) + Element::basis(cl3, 6);
    const CElement degenerate{bad_x, bad_y};
    CHECK_THROWS_AS(solve_K(degenerate), DegenerateY);
}

TEST_CASE("is_complex_valued") {
    const auto cl3 = make_clifford(3);
    CHECK(is_complex_valued(CElement::from_complex(cl3, {2.0, 3.0})));
    CHECK_FALSE(is_complex_valued(CElement::from_real(Element::basis(cl3, 1))));
}
