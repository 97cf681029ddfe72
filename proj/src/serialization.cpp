#include "slicealg/serialization.hpp"

namespace slicealg {

namespace {

void expect(bool cond, const std::string& msg) {
    if (!cond) throw SchemaError(msg);
}

}  // namespace

json algebra_to_json(const AlgebraSpec& spec) {
    const int d = spec.dim();
    json mul = json::array();
    for (int i = 0; i < d; ++i) {
        json row = json::array();
        for (int j = 0; j < d; ++j) {
            json cell = json::array();
            for (int k = 0; k < d; ++k) cell.push_back(spec.mul_coeff(i, j, k));
            row.push_back(std::move(cell));
        }
        mul.push_back(std::move(row));
    }
    json cj = json::array();
    for (int k = 0; k < d; ++k) {
        json row = json::array();
        for (int j = 0; j < d; ++j) row.push_back(spec.conj_coeff(k, j));
        cj.push_back(std::move(row));
    }
    return json{{"name", spec.name()},
                {"dim", d},
                {"basis", spec.basis_labels()},
                {"mul_table", std::move(mul)},
                {"conj", std::move(cj)}};
}

AlgebraPtr algebra_from_json(const json& j) {
    expect(j.is_object(), "algebra document must be an object");
    for (const char* key : {"name", "dim", "basis", "mul_table", "conj"})
        expect(j.contains(key), std::string("algebra document missing '") + key + "'");
    const int d = j.at("dim").get<int>();
    expect(d >= 1, "dim must be >= 1");
    auto basis = j.at("basis").get<std::vector<std::string>>();
    expect(static_cast<int>(basis.size()) == d, "basis length != dim");

    const json& mul = j.at("mul_table");
    expect(mul.is_array() && static_cast<int>(mul.size()) == d, "mul_table must be d x d x d");
    std::vector<double> table;
    table.reserve(static_cast<size_t>(d) * d * d);
    for (const auto& row : mul) {
        expect(row.is_array() && static_cast<int>(row.size()) == d, "mul_table must be d x d x d");
        for (const auto& cell : row) {
            expect(cell.is_array() && static_cast<int>(cell.size()) == d,
                   "mul_table must be d x d x d");
            for (const auto& v : cell) table.push_back(v.get<double>());
        }
    }
    const json& cj = j.at("conj");
    expect(cj.is_array() && static_cast<int>(cj.size()) == d, "conj must be d x d");
    std::vector<double> conj_m;
    conj_m.reserve(static_cast<size_t>(d) * d);
    for (const auto& row : cj) {
        expect(row.is_array() && static_cast<int>(row.size()) == d, "conj must be d x d");
        for (const auto& v : row) conj_m.push_back(v.get<double>());
    }
    return make_custom(j.at("name").get<std::string>(), d, std::move(basis), std::move(table),
                       std::move(conj_m));
}

json element_to_json(const Element& x) { return json(x.coords()); }

Element element_from_json(const AlgebraPtr& a, const json& j) {
    expect(j.is_array(), "element must be a coordinate array");
    auto coords = j.get<std::vector<double>>();
    expect(static_cast<int>(coords.size()) == a->dim(),
           "element has " + std::to_string(coords.size()) + " coordinates, algebra dimension is " +
               std::to_string(a->dim()));
    return Element(a, std::move(coords));
}

json poly_to_json(const SlicePoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(element_to_json(c));
    return out;
}

SlicePoly poly_from_json(const AlgebraPtr& a, const json& j) {
    expect(j.is_array() && !j.empty(), "polynomial must be a non-empty array of coefficients");
    std::vector<Element> coeffs;
    for (const auto& c : j) coeffs.push_back(element_from_json(a, c));
    return SlicePoly(a, std::move(coeffs));
}

json zero_record_to_json(const ZeroRecord& r) {
    static const char* names[] = {"real", "spherical", "isolated"};
    json j{{"kind", names[static_cast<int>(r.kind)]},
           {"alpha", r.alpha},
           {"beta", r.beta},
           {"point", nullptr},
           {"multiplicity", r.multiplicity},
           {"residual", r.residual}};
    if (r.point) j["point"] = element_to_json(*r.point);
    return j;
}

json zero_records_to_json(const std::vector<ZeroRecord>& records) {
    json out = json::array();
    for (const auto& r : records) out.push_back(zero_record_to_json(r));
    return out;
}

json contour_to_json(const ContourSpec& c) {
    json j{{"J", element_to_json(c.J)},
           {"kind", c.domain.kind == DomainDescriptor::Kind::disk ? "disk" : "conj_pair_disks"},
           {"center", nullptr},
           {"radius", c.domain.radius},
           {"n_boundary", c.n_boundary},
           {"n_radial", c.n_radial},
           {"n_angular", c.n_angular}};
    if (c.domain.kind == DomainDescriptor::Kind::disk)
        j["center"] = c.domain.center.real();
    else
        j["center"] = json::array({c.domain.center.real(), c.domain.center.imag()});
    return j;
}

ContourSpec contour_from_json(const AlgebraPtr& a, const json& j) {
    expect(j.is_object(), "contour must be an object");
    for (const char* key : {"J", "kind", "center", "radius"})
        expect(j.contains(key), std::string("contour missing '") + key + "'");
    ContourSpec c{element_from_json(a, j.at("J")), DomainDescriptor::whole_plane()};
    const std::string kind = j.at("kind").get<std::string>();
    const double radius = j.at("radius").get<double>();
    if (kind == "disk") {
        c.domain = DomainDescriptor::disk(j.at("center").get<double>(), radius);
    } else if (kind == "conj_pair_disks") {
        const json& ctr = j.at("center");
        expect(ctr.is_array() && ctr.size() == 2, "conj_pair_disks center must be [re, im]");
        c.domain = DomainDescriptor::conj_pair({ctr[0].get<double>(), ctr[1].get<double>()}, radius);
    } else {
        throw SchemaError("contour kind must be 'disk' or 'conj_pair_disks'");
    }
    if (j.contains("n_boundary")) c.n_boundary = j.at("n_boundary").get<int>();
    if (j.contains("n_radial")) c.n_radial = j.at("n_radial").get<int>();
    if (j.contains("n_angular")) c.n_angular = j.at("n_angular").get<int>();
    return c;
}

}  // namespace slicealg
