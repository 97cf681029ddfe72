#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "slicealg/sampling.hpp"
#include "slicealg/serialization.hpp"
#include "slicealg/verify.hpp"

namespace {

using slicealg::json;

struct OutputOptions {
    bool pretty = false;
    std::string out_path;
};

void emit(const json& j, const OutputOptions& opt) {
    const std::string text = j.dump(opt.pretty ? 2 : -1) + "\n";
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out_path);
        if (!f) throw slicealg::Error("cannot open output file '" + opt.out_path + "'");
        f << text;
    }
}

json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw slicealg::SchemaError("cannot open '" + path + "'");
    json j;
    f >> j;
    return j;
}

// Inline JSON text, or a file path (prefixed with @ or just a readable file).
json load_json_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') return load_json_file(arg.substr(1));
    if (!arg.empty() && (arg.front() == '[' || arg.front() == '{')) return json::parse(arg);
    return load_json_file(arg);
}

slicealg::AlgebraPtr load_algebra(const std::string& spec) {
    if (spec.find('.') != std::string::npos || spec.find('/') != std::string::npos ||
        spec.front() == '@')
        return slicealg::algebra_from_json(load_json_arg(spec));
    try {
        return slicealg::make_builtin_named(spec);
    } catch (const slicealg::Error& e) {
        throw slicealg::SchemaError(e.what());  // unknown name is a usage error
    }
}

json suite_to_json(const slicealg::verify::Suite& suite) {
    json arr = json::array();
    for (const auto& r : suite) {
        json item{{"property", r.name},
                  {"checked", r.checked},
                  {"failures", r.failures},
                  {"max_err", r.max_err},
                  {"pass", r.ok()}};
        if (!r.note.empty()) item["note"] = r.note;
        arr.push_back(std::move(item));
    }
    return arr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Slice functions on finite-dimensional real alternative algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string algebra_arg = "quaternions";
    double tol = slicealg::kDefaultTol;
    OutputOptions out;
    app.add_option("--algebra,-a", algebra_arg,
                   "builtin name (reals, complexes, quaternions, octonions, clifford<N>) or a "
                   "JSON algebra file");
    app.add_option("--tol", tol, "numerical tolerance (default 1e-9)");
    app.add_flag("--pretty", out.pretty, "indent JSON output");
    app.add_option("--out", out.out_path, "write output to a file instead of stdout");

    // algebra info
    auto* algebra_cmd = app.add_subcommand("algebra", "algebra-level queries");
    algebra_cmd->fallthrough();
    auto* info = algebra_cmd->add_subcommand("info", "table validation and sampled cone facts");
    info->fallthrough();
    std::string builtin_alias, export_path;
    size_t info_samples = 2000;
    info->add_option("--builtin", builtin_alias, "alias for --algebra");
    info->add_option("--samples", info_samples, "sample count for the cone statistics");
    info->add_option("--export", export_path, "also write the full algebra table as JSON");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a polynomial at a point");
    eval_cmd->fallthrough();
    std::string poly_arg, point_arg;
    eval_cmd->add_option("--poly", poly_arg, "polynomial JSON (file or inline)")->required();
    eval_cmd->add_option("--point", point_arg, "point coordinates JSON")->required();

    // product
    auto* product_cmd = app.add_subcommand("product", "slice (star) product of two polynomials");
    product_cmd->fallthrough();
    std::string rhs_arg;
    product_cmd->add_option("--poly", poly_arg, "left factor")->required();
    product_cmd->add_option("--rhs", rhs_arg, "right factor")->required();

    // normal
    auto* normal_cmd = app.add_subcommand("normal", "normal function of a polynomial");
    normal_cmd->fallthrough();
    normal_cmd->add_option("--poly", poly_arg, "polynomial JSON")->required();

    // admissible
    auto* adm_cmd = app.add_subcommand("admissible", "admissibility tests");
    adm_cmd->fallthrough();
    int grid_n = 32;
    adm_cmd->add_option("--poly", poly_arg, "polynomial JSON")->required();
    adm_cmd->add_option("--grid", grid_n, "sample grid size for the falsifier");

    // roots
    auto* roots_cmd = app.add_subcommand("roots", "classified zeros with multiplicities");
    roots_cmd->fallthrough();
    bool force_admissible = false;
    roots_cmd->add_option("--poly", poly_arg, "polynomial JSON")->required();
    roots_cmd->add_flag("--force-admissible", force_admissible,
                        "skip the admissibility gate (at your own risk)");

    // cauchy
    auto* cauchy_cmd = app.add_subcommand("cauchy", "Cauchy reconstruction versus direct value");
    cauchy_cmd->fallthrough();
    std::string contour_arg;
    int quad_n = 0;
    bool use_pompeiu = false;
    cauchy_cmd->add_option("--poly", poly_arg, "polynomial JSON")->required();
    cauchy_cmd->add_option("--contour", contour_arg, "contour JSON")->required();
    cauchy_cmd->add_option("--point", point_arg, "evaluation point JSON")->required();
    cauchy_cmd->add_option("--quad-n", quad_n, "override boundary node count");
    cauchy_cmd->add_flag("--pompeiu", use_pompeiu, "include the area term");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a named property suite");
    verify_cmd->fallthrough();
    std::string suite_name = "all";
    slicealg::verify::Options vopts;
    int max_degree = vopts.fta_max_degree;
    verify_cmd->add_option("--suite", suite_name, "one of: worked, cones, alternativity, "
                                                  "complexify, slice, product, normal-mult, fta, "
                                                  "kernel, cauchy, all");
    verify_cmd->add_option("--max-degree", max_degree, "maximum polynomial degree (fta suite)");
    verify_cmd->add_option("--samples", vopts.samples, "sample count per property");
    verify_cmd->add_option("--pairs", vopts.pair_count, "random function pairs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    try {
        const slicealg::AlgebraPtr alg =
            load_algebra(builtin_alias.empty() ? algebra_arg : builtin_alias);

        if (*info) {
            slicealg::ValidationReport report = slicealg::validate_algebra(*alg);
            slicealg::Rng rng(417);
            slicealg::SphereSampler sphere(alg);
            size_t in_q = 0, in_n = 0;
            for (size_t t = 0; t < info_samples; ++t) {
                const slicealg::Element x = slicealg::random_element(alg, rng);
                if (slicealg::in_quadratic_cone(x, tol)) ++in_q;
                if (slicealg::in_normal_cone(x, tol)) ++in_n;
            }
            const auto hyp = slicealg::check_real_norm_symmetric(alg, info_samples, tol);
            json j;
            j["name"] = alg->name();
            j["dim"] = alg->dim();
            j["basis"] = alg->basis_labels();
            j["valid"] = report.ok();
            j["validation_failures"] = report.failures;
            j["associative"] = alg->is_associative();
            j["sphere_family_dim"] = sphere.span_dim();
            j["sampled"] = json{{"count", info_samples},
                                {"in_quadratic_cone", in_q},
                                {"in_normal_cone", in_n}};
            j["real_norm_symmetric"] = json{{"samples", hyp.samples},
                                            {"real_norm_cases", hyp.real_norm_cases},
                                            {"violations", hyp.violations}};
            if (!export_path.empty()) {
                std::ofstream f(export_path);
                if (!f) throw slicealg::Error("cannot open '" + export_path + "'");
                f << slicealg::algebra_to_json(*alg).dump() << "\n";
            }
            emit(j, out);
            return report.ok() ? 0 : 3;
        }

        if (*eval_cmd) {
            const auto p = slicealg::poly_from_json(alg, load_json_arg(poly_arg));
            const auto x = slicealg::element_from_json(alg, load_json_arg(point_arg));
            const auto value = slicealg::slice_eval(slicealg::SliceFunction(p), x, tol);
            emit(json{{"value", slicealg::element_to_json(value)}}, out);
            return 0;
        }

        if (*product_cmd) {
            const auto f = slicealg::poly_from_json(alg, load_json_arg(poly_arg));
            const auto g = slicealg::poly_from_json(alg, load_json_arg(rhs_arg));
            const auto prod =
                slicealg::sprod(slicealg::SliceFunction(f), slicealg::SliceFunction(g)).poly();
            emit(json{{"coeffs", slicealg::poly_to_json(prod)}}, out);
            return 0;
        }

        if (*normal_cmd) {
            const auto p = slicealg::poly_from_json(alg, load_json_arg(poly_arg));
            const auto n = slicealg::normal(slicealg::SliceFunction(p)).poly();
            json j{{"coeffs", slicealg::poly_to_json(n)}, {"real_coeffs", nullptr}};
            if (auto rc = slicealg::detail::try_real_normal_coeffs(p, tol)) j["real_coeffs"] = *rc;
            emit(j, out);
            return 0;
        }

        if (*adm_cmd) {
            const auto p = slicealg::poly_from_json(alg, load_json_arg(poly_arg));
            const bool span = slicealg::is_admissible_span(p, tol);
            const bool sampled =
                span || slicealg::is_admissible_sampled(slicealg::SliceFunction(p), grid_n, tol);
            json j{{"span_test", span},
                   {"sampled_test", sampled},
                   {"admissible", span || sampled},
                   {"verdict_by", span ? "span" : "sampled"}};
            emit(j, out);
            return 0;
        }

        if (*roots_cmd) {
            const auto p = slicealg::poly_from_json(alg, load_json_arg(poly_arg));
            const auto records = slicealg::all_zeros(p, tol, force_admissible);
            int total = 0;
            for (const auto& r : records) total += r.multiplicity;
            json j{{"degree", p.degree()},
                   {"zeros", slicealg::zero_records_to_json(records)},
                   {"multiplicity_sum", total}};
            emit(j, out);
            return total == p.degree() ? 0 : 3;
        }

        if (*cauchy_cmd) {
            const auto p = slicealg::poly_from_json(alg, load_json_arg(poly_arg));
            auto contour = slicealg::contour_from_json(alg, load_json_arg(contour_arg));
            if (quad_n > 0) contour.n_boundary = quad_n;
            const auto x = slicealg::element_from_json(alg, load_json_arg(point_arg));
            const slicealg::SliceFunction f{p};
            const auto direct = slicealg::slice_eval(f, x, tol);
            const auto rebuilt = use_pompeiu ? slicealg::cauchy_pompeiu(f, contour, x, tol)
                                             : slicealg::cauchy_boundary(f, contour, x, tol);
            json j{{"reconstructed", slicealg::element_to_json(rebuilt)},
                   {"direct", slicealg::element_to_json(direct)},
                   {"error", (rebuilt - direct).inf_norm()}};
            emit(j, out);
            return 0;
        }

        if (*verify_cmd) {
            vopts.tol = tol;
            vopts.fta_max_degree = max_degree;
            const auto suite = slicealg::verify::run_suite(suite_name, vopts);
            size_t failures = 0;
            for (const auto& r : suite) failures += r.failures;
            json j{{"suite", suite_name},
                   {"results", suite_to_json(suite)},
                   {"total_failures", failures}};
            emit(j, out);
            return failures == 0 ? 0 : 3;
        }
    } catch (const slicealg::NotAdmissible& e) {
        std::cerr << "not admissible: " << e.what() << "\n";
        return 2;
    } catch (const slicealg::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 1;
    } catch (const slicealg::ValidationFailure& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const slicealg::AlgebraMismatch& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const slicealg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
