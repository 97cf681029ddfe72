#include <doctest.h>

#include "slicealg/sampling.hpp"
#include "slicealg/serialization.hpp"

using namespace slicealg;

TEST_CASE("builtin algebras round-trip bit-exactly through JSON") {
    for (const auto& alg : {make_builtin(Builtin::quaternions), make_builtin(Builtin::octonions),
                            make_clifford(3)}) {
        const json doc = algebra_to_json(*alg);
        const AlgebraPtr back = algebra_from_json(doc);
        CHECK(back->name() == alg->name());
        CHECK(back->dim() == alg->dim());
        CHECK(back->mul_table() == alg->mul_table());
        CHECK(back->conj_matrix() == alg->conj_matrix());
        CHECK(back->basis_labels() == alg->basis_labels());
        // and the serialized text itself is stable
        CHECK(algebra_to_json(*back).dump() == doc.dump());
    }
}

TEST_CASE("algebra documents are validated on load") {
    const auto quat = make_builtin(Builtin::quaternions);
    json doc = algebra_to_json(*quat);
    doc["mul_table"][0][1][1] = 2.0;  // break the unity
    CHECK_THROWS_AS(algebra_from_json(doc), ValidationFailure);

    json missing = {{"name", "x"}, {"dim", 2}};
    CHECK_THROWS_AS(algebra_from_json(missing), SchemaError);

    json bad_dim = algebra_to_json(*quat);
    bad_dim["dim"] = 3;
    CHECK_THROWS_AS(algebra_from_json(bad_dim), SchemaError);
}

TEST_CASE("polynomials and elements round-trip") {
    const auto cl3 = make_clifford(3);
    Rng rng(71);
    const SlicePoly p = random_paravector_poly(cl3, rng, 4);
    const SlicePoly back = poly_from_json(cl3, poly_to_json(p));
    REQUIRE(back.degree() == p.degree());
    for (int k = 0; k <= p.degree(); ++k)
        CHECK((back.coeff(k) - p.coeff(k)).inf_norm() == 0.0);

    CHECK_THROWS_AS(element_from_json(cl3, json::array({1, 2})), SchemaError);
    CHECK_THROWS_AS(poly_from_json(cl3, json::object()), SchemaError);
}

TEST_CASE("zero records serialize with all fields") {
    const auto cl3 = make_clifford(3);
    const SlicePoly p(cl3, {Element::basis(cl3, 2), Element::basis(cl3, 3),
                            Element::scalar(cl3, 1.0)});
    const json arr = zero_records_to_json(all_zeros(p));
    REQUIRE(arr.size() == 2);
    for (const auto& rec : arr) {
        CHECK(rec.contains("kind"));
        CHECK(rec.contains("alpha"));
        CHECK(rec.contains("beta"));
        CHECK(rec.contains("point"));
        CHECK(rec.contains("multiplicity"));
        CHECK(rec.contains("residual"));
        CHECK(rec["kind"] == "isolated");
    }
}

TEST_CASE("contours parse from JSON") {
    const auto quat = make_builtin(Builtin::quaternions);
    const json doc = {{"J", {0, 1, 0, 0}},    {"kind", "disk"}, {"center", 0.5},
                      {"radius", 2.0},        {"n_boundary", 64}};
    const ContourSpec c = contour_from_json(quat, doc);
    CHECK(c.domain.kind == DomainDescriptor::Kind::disk);
    CHECK(c.domain.center.real() == 0.5);
    CHECK(c.n_boundary == 64);
    CHECK(c.n_radial == 64);  // default preserved

    const json pair_doc = {{"J", {0, 1, 0, 0}},
                           {"kind", "conj_pair_disks"},
                           {"center", {0.0, 1.0}},
                           {"radius", 0.5}};
    CHECK(contour_from_json(quat, pair_doc).domain.kind ==
          DomainDescriptor::Kind::conj_pair_disks);

    json bad = doc;
    bad["kind"] = "triangle";
    CHECK_THROWS_AS(contour_from_json(quat, bad), SchemaError);

    // round trip
    const json again = contour_to_json(c);
    CHECK(again["kind"] == "disk");
    CHECK(again["radius"] == 2.0);
}
