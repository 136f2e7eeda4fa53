// fqgeom: batch front-end for the finite-field geometry engine.
//
//   fqgeom verify    run the verification suites (exit 0 iff all pass)
//   fqgeom count     class counts for a point-set file
//   fqgeom scan      seeded random-set scans over a size schedule
//   fqgeom construct build an extremal set and report its measurements
//
// Exit codes: 0 success, 1 verification failure, 2 configuration error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqgeom/constructions.hpp"
#include "fqgeom/scan.hpp"
#include "fqgeom/suites.hpp"

namespace {

using namespace fqgeom;

std::vector<uint32_t> parse_u32_list(const std::string& csv) {
    std::vector<uint32_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(static_cast<uint32_t>(std::stoul(item)));
    }
    if (out.empty()) throw ConfigError("empty list: " + csv);
    return out;
}

std::vector<uint64_t> parse_u64_list(const std::string& csv) {
    std::vector<uint64_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoull(item));
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw ConfigError("cannot write " + out_path);
        out << text;
    }
}

int cmd_verify(const std::string& q_csv, uint32_t d, uint32_t k, uint32_t trials, uint64_t seed,
               const std::string& suite, const std::string& out_path) {
    SuiteParams p;
    p.q_list = parse_u32_list(q_csv);
    for (uint32_t q : p.q_list) PrimeField check(q);  // config validation up front
    p.d_list = {d};
    if (k > 0) p.k_list = {k};
    p.trials = trials;
    p.seed = seed;
    std::vector<std::string> names = suite.empty() ? suite_names() : std::vector<std::string>{suite};
    nlohmann::json failures = nlohmann::json::array();
    bool all_pass = true;
    for (const std::string& name : names) {
        CheckList cl = run_suite(name, p);
        std::cout << "suite " << cl.name << ": " << (cl.pass() ? "pass" : "FAIL") << " ("
                  << cl.checks << " checks)\n";
        for (const std::string& line : cl.lines) std::cout << "  " << line << '\n';
        if (!cl.pass()) {
            all_pass = false;
            for (const std::string& line : cl.lines)
                if (line.rfind("FAIL ", 0) == 0)
                    failures.push_back({{"suite", cl.name}, {"check", line.substr(5)}});
        }
    }
    if (!all_pass) {
        nlohmann::json report = {{"status", "failed"}, {"failures", failures}};
        emit(report.dump(2) + "\n", out_path);
        return 1;
    }
    if (!out_path.empty()) emit("{\"status\": \"passed\"}\n", out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-field geometry engine"};
    app.require_subcommand(1);

    std::string q_csv = "3,5,7";
    uint32_t d = 2, k = 2, trials = 0;
    uint64_t seed = 1;
    std::string suite, out_path, sizes_csv, mode = "fast", format = "csv";
    std::string set_file, inventory_path, variant, xs_csv, ys_csv;
    double eps = 0.05, big_c = 1.0;
    uint32_t interval_len = 0;
    bool timing = false;

    uint32_t verify_k = 0;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--q", q_csv, "comma-separated prime moduli");
    verify->add_option("--d", d, "dimension");
    verify->add_option("--k", verify_k, "restrict suites to one simplex order");
    verify->add_option("--trials", trials, "seeded trials per suite cell");
    verify->add_option("--seed", seed, "PRNG seed");
    verify->add_option("--suite", suite, "run a single suite by name");
    verify->add_option("--out", out_path, "write the machine-readable report here");

    auto* count = app.add_subcommand("count", "count classes for a point-set file");
    count->add_option("file", set_file, "point-set file (text or .json)")->required();
    count->add_option("--k", k, "simplex order k");
    count->add_option("--mode", mode, "fast|exact")->check(CLI::IsMember({"fast", "exact"}));
    count->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    count->add_option("--out", out_path, "output path (default stdout)");
    count->add_option("--inventory", inventory_path, "also write the exact class inventory CSV");

    auto* scan = app.add_subcommand("scan", "seeded random-set scans");
    scan->add_option("--q", q_csv, "comma-separated prime moduli");
    scan->add_option("--d", d, "dimension");
    scan->add_option("--k", k, "simplex order k");
    scan->add_option("--sizes", sizes_csv, "comma-separated |E| schedule")->required();
    scan->add_option("--trials", trials, "trials per (q, size)");
    scan->add_option("--seed", seed, "PRNG seed");
    scan->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    scan->add_option("--out", out_path, "output path (default stdout)");
    scan->add_flag("--timing", timing, "fill elapsed_ms with wall-clock timings");

    auto* construct = app.add_subcommand("construct", "build an extremal set");
    construct->add_option("--variant", variant, "odd|even|simplex|nullprod|minkowski|ratio")
        ->required()
        ->check(CLI::IsMember({"odd", "even", "simplex", "nullprod", "minkowski", "ratio"}));
    construct->add_option("--q", q_csv, "prime modulus (single value)");
    construct->add_option("--d", d, "dimension");
    construct->add_option("--k", k, "simplex order k");
    construct->add_option("--eps", eps, "strip exponent offset");
    construct->add_option("--C", big_c, "grid density constant");
    construct->add_option("--len", interval_len, "interval length");
    construct->add_option("--x", xs_csv, "comma-separated X values");
    construct->add_option("--y", ys_csv, "comma-separated Y values");
    construct->add_option("--seed", seed, "PRNG seed");
    construct->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            return cmd_verify(q_csv, d, verify_k, trials ? trials : 20, seed, suite, out_path);
        }
        if (*count) {
            RunConfig cfg;
            cfg.k = k;
            cfg.exact_mode = mode == "exact";
            CountRow row = run_count(cfg, set_file);
            if (row.exact_downgraded)
                std::cerr << "warning: exact mode over budget, reporting fast counts only\n";
            emit(format == "json" ? render_count_json(row) : render_count_csv(row), out_path);
            if (!inventory_path.empty()) {
                PointSet e = PointSet::load(set_file);
                QuadraticForm dot = QuadraticForm::dot(e.field(), e.dim());
                auto rows = class_inventory(e, k, dot);
                std::ofstream inv(inventory_path);
                if (!inv) throw ConfigError("cannot write " + inventory_path);
                write_inventory_csv(inv, rows);
            }
            return 0;
        }
        if (*scan) {
            RunConfig cfg;
            cfg.q_list = parse_u32_list(q_csv);
            cfg.d = d;
            cfg.k = k;
            cfg.trials = trials ? trials : 1;
            cfg.seed = seed;
            cfg.sizes = parse_u64_list(sizes_csv);
            cfg.timing = timing;
            auto rows = run_scan(cfg);
            emit(format == "json" ? render_scan_json(rows) : render_scan_csv(rows), out_path);
            std::cerr << scan_summary(rows, cfg.k);
            return 0;
        }
        if (*construct) {
            auto qs = parse_u32_list(q_csv);
            PrimeField f(qs[0]);
            auto xs = xs_csv.empty() ? std::vector<uint32_t>{0, 1} : parse_u32_list(xs_csv);
            auto ys = ys_csv.empty() ? std::vector<uint32_t>{0, 1} : parse_u32_list(ys_csv);
            ConstructionReport rep;
            if (variant == "odd") {
                rep = sharpness_odd(f, d % 2 == 1 && d >= 3 ? d : 3,
                                    interval_len ? interval_len : 2);
            } else if (variant == "even") {
                rep = sharpness_even(f, d % 2 == 0 ? d : 2, big_c);
            } else if (variant == "simplex") {
                rep = sharpness_simplex(f, d, k <= d ? k : d, eps);
            } else if (variant == "nullprod") {
                rep = null_product_set(f, xs, ys);
            } else if (variant == "minkowski") {
                rep = minkowski_distance_set(f, xs, ys);
            } else {
                rep = ratio_map_census(f,
                                       interval_len ? std::optional<uint32_t>(interval_len)
                                                    : std::nullopt,
                                       seed);
            }
            emit(rep.to_json().dump(2) + "\n", out_path);
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const NotPrimeError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const EvenCharacteristicError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
