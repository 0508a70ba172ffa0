// polygeo command-line tool: polynomial zero sets, their convex geometry,
// operator classification/refutation, and extremal-constant estimation.
//
// One JSON document goes to standard output (or --out); prose goes to
// standard error. Exit codes: 0 success, 1 domain error (reported in JSON),
// 2 I/O or parse error.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polygeo/errors.hpp"
#include "polygeo/json_io.hpp"
#include "polygeo/suites.hpp"
#include "polygeo/svg.hpp"

namespace {

using polygeo::Json;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw polygeo::IoError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw polygeo::IoError("cannot open output file: " + path);
    out << content;
    if (!out.good()) throw polygeo::IoError("failed while writing: " + path);
}

/// Accepts either a file path or inline JSON (detected by a leading brace),
/// so suite repro commands can embed their inputs directly.
nlohmann::json load_json_arg(const std::string& arg) {
    std::string text = arg;
    if (arg.empty() || (arg[0] != '{' && arg[0] != '[')) text = read_text_file(arg);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw polygeo::ParseError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polygeo: zero-set geometry of complex polynomials"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    double tol = 1e-7;
    std::string out_path, svg_path, csv_path;
    app.add_option("--seed", seed, "seed for every randomized component")->capture_default_str();
    app.add_option("--tol", tol, "geometric tolerance")->capture_default_str();
    app.add_option("--out", out_path, "write the JSON document here instead of stdout");
    app.add_option("--svg", svg_path, "also emit an SVG scatter (roots, critical points, hull)");

    polygeo::RootConfig rootcfg = polygeo::multiplicity_config();  // adaptive clustering
    std::string poly_arg, op_arg, suite_name;
    long trials = 10000;
    int dnk_n = 3, dnk_k = 1, dnk_nmax = 4;
    polygeo::EstimateBudget budget;

    auto add_root_flags = [&](CLI::App* cmd) {
        cmd->add_option("--max-iter", rootcfg.max_iter, "iteration cap")->capture_default_str();
        cmd->add_option("--residual-tol", rootcfg.residual_tol, "relative residual tolerance")
            ->capture_default_str();
        cmd->add_option("--cluster-radius", rootcfg.cluster_radius,
                        "cluster merge radius (0 = adaptive)")
            ->capture_default_str();
    };

    std::function<Json()> action;

    auto* roots_cmd = app.add_subcommand("roots", "compute Z(P) with multiplicities");
    roots_cmd->fallthrough();
    roots_cmd->add_option("--poly", poly_arg, "polynomial JSON (path or inline)")->required();
    add_root_flags(roots_cmd);
    roots_cmd->callback([&] {
        action = [&]() -> Json {
            const auto p = polygeo::polynomial_from_json(load_json_arg(poly_arg));
            rootcfg.seed = seed;
            return polygeo::zeroset_to_json(polygeo::find_roots(p, rootcfg));
        };
    });

    auto* diam_cmd = app.add_subcommand("diam", "diameter of Z(P)");
    diam_cmd->fallthrough();
    diam_cmd->add_option("--poly", poly_arg, "polynomial JSON (path or inline)")->required();
    add_root_flags(diam_cmd);
    diam_cmd->callback([&] {
        action = [&]() -> Json {
            const auto p = polygeo::polynomial_from_json(load_json_arg(poly_arg));
            rootcfg.seed = seed;
            const auto zs = polygeo::find_roots(p, rootcfg);
            if (!svg_path.empty()) {
                polygeo::write_zero_scatter_svg(svg_path, zs.locations(), {}, std::nullopt);
            }
            return Json{{"diameter", polygeo::diameter(zs)},
                        {"roots", polygeo::zeroset_to_json(zs)}};
        };
    });

    auto* hull_cmd = app.add_subcommand("hull", "convex hull of Z(P)");
    hull_cmd->fallthrough();
    hull_cmd->add_option("--poly", poly_arg, "polynomial JSON (path or inline)")->required();
    add_root_flags(hull_cmd);
    hull_cmd->callback([&] {
        action = [&]() -> Json {
            const auto p = polygeo::polynomial_from_json(load_json_arg(poly_arg));
            rootcfg.seed = seed;
            const auto zs = polygeo::find_roots(p, rootcfg);
            const auto hull = polygeo::convex_hull(zs.locations());
            if (!svg_path.empty()) {
                polygeo::write_zero_scatter_svg(svg_path, zs.locations(), {}, hull);
            }
            return Json{{"hull", polygeo::hull_to_json(hull)},
                        {"roots", polygeo::zeroset_to_json(zs)}};
        };
    });

    auto* gl_cmd = app.add_subcommand("gauss-lucas",
                                      "check hull(Z(P)) contains Z(P') at the tolerance");
    gl_cmd->fallthrough();
    gl_cmd->add_option("--poly", poly_arg, "polynomial JSON (path or inline)")->required();
    add_root_flags(gl_cmd);
    gl_cmd->callback([&] {
        action = [&]() -> Json {
            const auto p = polygeo::polynomial_from_json(load_json_arg(poly_arg));
            rootcfg.seed = seed;
            const auto report = polygeo::gauss_lucas_check(p, tol, rootcfg);
            if (!svg_path.empty()) {
                polygeo::write_zero_scatter_svg(svg_path, report.roots.locations(),
                                                report.critical_points.locations(), report.hull);
            }
            return polygeo::gauss_lucas_to_json(report);
        };
    });

    auto* classify_cmd =
        app.add_subcommand("classify", "match an operator against the canonical forms");
    classify_cmd->fallthrough();
    classify_cmd->add_option("--op", op_arg, "operator JSON (path or inline)")->required();
    classify_cmd->add_option("--dnk-starts", budget.starts,
                             "search starts when d_{n,k} must be estimated")
        ->default_val(64);
    classify_cmd->callback([&] {
        action = [&]() -> Json {
            const auto op = polygeo::operator_from_json(load_json_arg(op_arg));
            const polygeo::DnkSource dnk(polygeo::EstimateBudget{budget.starts, 100}, seed);
            return polygeo::form_report_to_json(polygeo::classify(op, tol, dnk));
        };
    });

    auto* refute_cmd =
        app.add_subcommand("refute", "search for a diameter-expanding counterexample");
    refute_cmd->fallthrough();
    refute_cmd->add_option("--op", op_arg, "operator JSON (path or inline)")->required();
    refute_cmd->add_option("--trials", trials, "random trials after the adversarial batch")
        ->default_val(1000);
    add_root_flags(refute_cmd);
    refute_cmd->callback([&] {
        action = [&]() -> Json {
            const auto op = polygeo::operator_from_json(load_json_arg(op_arg));
            polygeo::RefuteConfig cfg;
            cfg.trials = trials;
            cfg.tol = tol;
            cfg.seed = seed;
            rootcfg.seed = seed;
            cfg.roots = rootcfg;
            return polygeo::refutation_to_json(polygeo::test_nonexpansive(op, cfg));
        };
    });

    auto* probe_cmd = app.add_subcommand(
        "probe", "flag images of (z+a)^s with two or more distinct zeros");
    probe_cmd->fallthrough();
    probe_cmd->add_option("--op", op_arg, "operator JSON (path or inline)")->required();
    add_root_flags(probe_cmd);
    probe_cmd->callback([&] {
        action = [&]() -> Json {
            const auto op = polygeo::operator_from_json(load_json_arg(op_arg));
            const auto grid = polygeo::default_alpha_grid();
            auto cfg = polygeo::multiplicity_config();
            cfg.seed = seed;
            return polygeo::probe_to_json(polygeo::single_zero_probe(op, grid, cfg));
        };
    });

    auto* dnk_cmd = app.add_subcommand("dnk", "estimate d_{n,k} with a witness");
    dnk_cmd->fallthrough();
    dnk_cmd->add_option("--n", dnk_n, "degree bound")->required();
    dnk_cmd->add_option("--k", dnk_k, "derivative order")->required();
    dnk_cmd->add_option("--starts", budget.starts, "random starts per degree")
        ->capture_default_str();
    dnk_cmd->add_option("--iters", budget.local_iters, "simplex iterations per start")
        ->capture_default_str();
    dnk_cmd->add_option("--csv", csv_path, "also write the row as CSV");
    dnk_cmd->callback([&] {
        action = [&]() -> Json {
            const auto est = polygeo::estimate_dnk(dnk_n, dnk_k, budget, seed);
            const auto exact = polygeo::dnk_exact(dnk_n, dnk_k);
            if (!csv_path.empty()) {
                std::string csv =
                    "n,k,best_ratio,exactness_flag,degree_used,witness_roots,starts,seed\n";
                csv += polygeo::estimate_to_csv(est, exact.has_value(), exact.value_or(0.0));
                csv += "\n";
                write_text_file(csv_path, csv);
            }
            Json out = polygeo::estimate_to_json(est);
            out["exactness"] = exact ? "EXACT" : "ESTIMATE";
            out["exact_value"] = exact ? Json(*exact) : Json(nullptr);
            return out;
        };
    });

    auto* table_cmd = app.add_subcommand("dnk-table", "estimate d_{n,k} for every n <= n-max");
    table_cmd->fallthrough();
    table_cmd->add_option("--n-max", dnk_nmax, "largest degree bound")->required();
    table_cmd->add_option("--starts", budget.starts, "random starts per degree")
        ->capture_default_str();
    table_cmd->add_option("--iters", budget.local_iters, "simplex iterations per start")
        ->capture_default_str();
    table_cmd->add_option("--csv", csv_path, "also write the table as CSV");
    table_cmd->callback([&] {
        action = [&]() -> Json {
            const auto rows = polygeo::dnk_table(dnk_nmax, budget, seed);
            if (!csv_path.empty()) write_text_file(csv_path, polygeo::dnk_table_to_csv(rows));
            return polygeo::dnk_table_to_json(rows);
        };
    });

    auto* suite_cmd = app.add_subcommand("suite", "run a named property suite");
    suite_cmd->fallthrough();
    suite_cmd
        ->add_option("name", suite_name,
                     "gauss-lucas | roundtrip | claim | dnk-dichotomy | adversarial")
        ->required();
    suite_cmd->callback([&] {
        action = [&]() -> Json {
            const auto result = polygeo::run_suite(suite_name, seed);
            return result.summary;
        };
    });

    CLI11_PARSE(app, argc, argv);

    int exit_code = 0;
    Json document;
    try {
        document = action();
    } catch (const polygeo::ParseError& e) {
        document = Json{{"error", "parse"}, {"message", e.what()}};
        exit_code = 2;
    } catch (const polygeo::IoError& e) {
        document = Json{{"error", "io"}, {"message", e.what()}};
        exit_code = 2;
    } catch (const polygeo::DomainError& e) {
        document = Json{{"error", "domain"}, {"message", e.what()}};
        exit_code = 1;
    }

    const std::string text = document.dump(2) + "\n";
    if (!out_path.empty() && exit_code == 0) {
        try {
            write_text_file(out_path, text);
        } catch (const polygeo::IoError& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    } else {
        std::cout << text;
    }
    if (exit_code != 0) std::cerr << document["message"].get<std::string>() << "\n";
    return exit_code;
}
