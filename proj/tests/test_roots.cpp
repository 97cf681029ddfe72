#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "slicealg/errors.hpp"
#include "slicealg/roots.hpp"

using namespace slicealg;
using cdouble = std::complex<double>;

namespace {

const RootCluster* find_root(const std::vector<RootCluster>& rs, cdouble z, double tol = 1e-8) {
    for (const auto& r : rs)
        if (std::abs(r.root - z) <= tol) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("simple roots") {
    const auto rs = complex_roots(std::vector<double>{1, 0, 1});  // z^2 + 1
    REQUIRE(rs.size() == 2);
    CHECK(find_root(rs, {0, 1}));
    CHECK(find_root(rs, {0, -1}));
    CHECK(rs[0].multiplicity == 1);

    // z^4 + z^2 + 1 = (z^2+z+1)(z^2-z+1): sixth roots of unity off the axis
    const auto r4 = complex_roots(std::vector<double>{1, 0, 1, 0, 1});
    REQUIRE(r4.size() == 4);
    for (double sa : {-0.5, 0.5})
        for (double sb : {-1.0, 1.0}) CHECK(find_root(r4, {sa, sb * std::sqrt(3.0) / 2.0}, 1e-10));
}

TEST_CASE("multiple roots via clustering") {
    // (z^2+1)^2
    const auto rs = complex_roots(std::vector<double>{1, 0, 2, 0, 1});
    REQUIRE(rs.size() == 2);
    const auto* up = find_root(rs, {0, 1});
    REQUIRE(up);
    CHECK(up->multiplicity == 2);

    // (z-1)^4: quadruple real root
    const auto r1 = complex_roots(std::vector<double>{1, -4, 6, -4, 1});
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].multiplicity == 4);
    CHECK(r1[0].root.imag() == 0.0);
    CHECK(std::abs(r1[0].root.real() - 1.0) < 1e-10);

    // (z-1)^2 (z+2)
    const auto r2 = complex_roots(std::vector<double>{2, -3, 0, 1});
    REQUIRE(r2.size() == 2);
    const auto* one = find_root(r2, {1, 0});
    const auto* minus2 = find_root(r2, {-2, 0});
    REQUIRE(one);
    REQUIRE(minus2);
    CHECK(one->multiplicity == 2);
    CHECK(minus2->multiplicity == 1);

    // (z^2+1)^3: conjugate triple roots
    const auto r3 = complex_roots(std::vector<double>{1, 0, 3, 0, 3, 0, 1});
    REQUIRE(r3.size() == 2);
    CHECK(r3[0].multiplicity == 3);
    CHECK(std::abs(r3[0].root.imag() + 1.0) < 1e-9);
}

TEST_CASE("real input gives exactly conjugation-symmetric output") {
    const std::vector<double> c{0.3, -1.2, 0.0, 2.0, -0.7, 1.0};
    const auto rs = complex_roots(c);
    int total = 0;
    for (const auto& r : rs) {
        total += r.multiplicity;
        if (r.root.imag() != 0.0) {
            const auto* partner = find_root(rs, std::conj(r.root), 1e-15);
            REQUIRE(partner);
            CHECK(partner->multiplicity == r.multiplicity);
        }
    }
    CHECK(total == 5);
}

TEST_CASE("zero roots and degenerate inputs") {
    // z^3 + z = z (z^2 + 1)
    const auto rs = complex_roots(std::vector<double>{0, 1, 0, 1});
    REQUIRE(rs.size() == 3);
    CHECK(find_root(rs, {0, 0}, 1e-300));

    CHECK_THROWS_AS(complex_roots(std::vector<double>{1.0}), Error);    // constant
    CHECK_THROWS_AS(complex_roots(std::vector<double>{0.0, 0.0}), Error);  // zero leading

    // trailing zero coefficients are stripped, not treated as a higher degree
    const auto r1 = complex_roots(std::vector<double>{-1, 1, 0, 0});
    REQUIRE(r1.size() == 1);
    CHECK(std::abs(r1[0].root.real() - 1.0) < 1e-12);
}

TEST_CASE("complex coefficient input") {
    // (z - i)(z - 2) with complex coefficients: no symmetry enforced
    const std::vector<cdouble> c{cdouble(0, 2), cdouble(-2, -1), cdouble(1, 0)};
    const auto rs = complex_roots(c);
    REQUIRE(rs.size() == 2);
    CHECK(find_root(rs, {0, 1}, 1e-10));
    CHECK(find_root(rs, {2, 0}, 1e-10));
}

TEST_CASE("moderate-degree accuracy") {
    // prod_{k=1..8} (z - k/4): well separated real roots
    std::vector<double> c{1.0};
    for (int k = 1; k <= 8; ++k) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= c[i] * (k / 4.0);
        }
        c = next;
    }
    const auto rs = complex_roots(c);
    REQUIRE(rs.size() == 8);
    for (int k = 1; k <= 8; ++k) CHECK(find_root(rs, {k / 4.0, 0.0}, 1e-9));
}
