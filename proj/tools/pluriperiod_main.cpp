#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <omp.h>

#include "CLI11.hpp"
#include "pluriperiod/errors.hpp"
#include "pluriperiod/fuchsian.hpp"
#include "pluriperiod/octagon_export.hpp"
#include "pluriperiod/suites.hpp"

namespace {

int cmd_run(const pluriperiod::RunConfig& cfg, const std::string& out_path,
            int threads) {
    if (threads > 0) omp_set_num_threads(threads);
    const auto t0 = std::chrono::steady_clock::now();
    pluriperiod::Json payload = pluriperiod::run_suites(cfg);
    const auto t1 = std::chrono::steady_clock::now();
    const bool ok = payload.at("all_pass").get<bool>();

    pluriperiod::Json doc = std::move(payload);
    doc["wall_clock_seconds"] =
        std::chrono::duration<double>(t1 - t0).count();

    if (out_path.empty() || out_path == "-") {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream os(out_path);
        if (!os) {
            std::cerr << "error: cannot open " << out_path << " for writing\n";
            return 2;
        }
        os << doc.dump(2) << "\n";
    }

    for (const auto& rep : doc.at("reports")) {
        std::fprintf(stderr, "%-16s %3zu/%3zu checks passed\n",
                     rep.at("suite").get<std::string>().c_str(),
                     rep.at("num_passed").get<std::size_t>(),
                     rep.at("num_checks").get<std::size_t>());
    }
    std::fprintf(stderr, "overall: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}

int cmd_export(const std::string& svg_path, const std::string& csv_path) {
    const pluriperiod::OctagonGroup og = pluriperiod::octagon_group();
    if (!svg_path.empty()) {
        std::ofstream os(svg_path);
        if (!os) {
            std::cerr << "error: cannot open " << svg_path << "\n";
            return 2;
        }
        os << pluriperiod::octagon_svg(og);
        std::cerr << "wrote " << svg_path << "\n";
    }
    if (!csv_path.empty()) {
        std::ofstream os(csv_path);
        if (!os) {
            std::cerr << "error: cannot open " << csv_path << "\n";
            return 2;
        }
        os << pluriperiod::generators_csv(*og.group);
        std::cerr << "wrote " << csv_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pluriperiod: numerical checks for period cocycles of "
                 "negative-weight automorphic forms"};
    app.require_subcommand(1);

    pluriperiod::RunConfig cfg;
    std::string out_path;
    int threads = 0;
    bool serial = false;

    CLI::App* run = app.add_subcommand("run", "run one suite or all of them");
    run->add_option("--suite", cfg.suite,
                    "suite name or 'all' (see --list for names)")
        ->default_val("all");
    run->add_option("--out", out_path, "write the JSON report here ('-' = stdout)");
    run->add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");
    run->add_option("--radius", cfg.radius, "group ball radius for truncated series");
    run->add_option("--m", cfg.m, "primary weight parameter (weight 2m, m <= 0)");
    run->add_option("--n", cfg.n, "secondary weight parameter for cross-weight checks");
    run->add_option("--tol", cfg.tol, "quadrature tolerance");
    run->add_option("--cap", cfg.cap, "group ball element cap");
    run->add_option("--seed", cfg.seed, "seed for randomized checks");
    run->add_flag("--serial", serial, "force the serial orbit-sum kernel");

    bool list = false;
    run->add_flag("--list", list, "list suite names and exit");

    CLI::App* exp = app.add_subcommand("export-octagon",
                                       "export the fundamental octagon");
    std::string svg_path, csv_path;
    exp->add_option("--svg", svg_path, "SVG rendering of the tessellation cell");
    exp->add_option("--csv", csv_path, "generator matrices as CSV");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            if (list) {
                for (const std::string& s : pluriperiod::suite_names())
                    std::cout << s << "\n";
                return 0;
            }
            cfg.parallel = !serial;
            return cmd_run(cfg, out_path, threads);
        }
        if (exp->parsed()) {
            if (svg_path.empty() && csv_path.empty()) {
                std::cerr << "error: export-octagon needs --svg and/or --csv\n";
                return 2;
            }
            return cmd_export(svg_path, csv_path);
        }
    } catch (const pluriperiod::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
