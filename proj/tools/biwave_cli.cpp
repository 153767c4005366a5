// Command-line front end: algebra constants (info), solution synthesis to
// CSV (synth), residual verification (verify) and the property battery
// (selftest).
//
// Exit codes: 0 success / verification pass, 1 verification or selftest
// failure and I/O errors, 2 invalid input.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "biwave/biwave.hpp"

namespace {

int run_info(double c) {
    std::cout << biwave::info_report(c);
    return 0;
}

int run_synth(const std::string& config_path, const std::string& output_path) {
    const biwave::RunConfig cfg = biwave::load_run_config(config_path);
    const biwave::ScalarGrid grid = biwave::synth_grid(cfg);
    std::ofstream os(output_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open '" << output_path << "' for writing\n";
        return 1;
    }
    biwave::write_csv(grid, os);
    os.flush();
    if (!os) {
        std::cerr << "error: write to '" << output_path << "' failed\n";
        return 1;
    }
    double lo = grid.values.front(), hi = grid.values.front();
    for (double v : grid.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    std::cout << "wrote " << output_path << ": " << grid.nx << "x" << grid.ny << " grid, "
              << grid.values.size() << " points, u in [" << biwave::fmt_g(lo) << ", "
              << biwave::fmt_g(hi) << "]\n";
    return 0;
}

int run_verify(const std::string& config_path, const std::string& input_path, double c_flag,
               bool have_c, double tol_flag, bool have_tol, int refine_flag, bool have_refine) {
    biwave::RunConfig cfg;
    bool have_cfg = false;
    if (!config_path.empty()) {
        cfg = biwave::load_run_config(config_path);
        have_cfg = true;
    }
    if (!have_cfg && input_path.empty())
        throw biwave::ConfigError("verify needs --config and/or --input");
    if (!have_cfg && !have_c)
        throw biwave::ConfigError("verifying a bare CSV needs --c to fix the equation parameter");

    const double c = have_c ? c_flag : cfg.c;
    biwave::make_params(c);  // validate, rejects c <= 0 and c == 1
    const double tolerance = have_tol ? tol_flag : (have_cfg ? cfg.verify.tolerance : 1e-6);
    const int refine = have_refine ? refine_flag : (have_cfg ? cfg.verify.refine : 1);
    if (tolerance <= 0.0) throw biwave::InvalidParameter("tolerance must be positive");
    if (refine < 1 || refine > 6) throw biwave::InvalidParameter("refine must be in 1..6");

    biwave::ScalarGrid base;
    if (!input_path.empty()) {
        std::ifstream is(input_path, std::ios::binary);
        if (!is) throw biwave::ConfigError("cannot open grid file '" + input_path + "'");
        base = biwave::read_csv(is);
        std::cout << "verifying " << input_path << " against c = " << biwave::fmt_g(c) << "\n";
    } else {
        base = biwave::synth_grid(cfg);
        std::cout << "verifying synthesized grid against c = " << biwave::fmt_g(c) << "\n";
    }
    const biwave::VerifyOutcome out =
        biwave::verify_run(base, c, tolerance, refine, have_cfg ? &cfg : nullptr);
    std::cout << out.text;
    return out.pass ? 0 : 1;
}

int run_selftest(std::uint64_t seed, const std::string& inject) {
    if (inject == "cayley") {
        biwave::fault::cayley_perturbation = 1e-3;
        std::cout << "fault injection: cayley constant perturbed by 1e-3\n";
    } else if (!inject.empty()) {
        throw biwave::InvalidParameter("unknown fault '" + inject + "' (supported: cayley)");
    }
    std::cout << "selftest seed " << seed << "\n";
    const auto results = biwave::run_selftest(seed);
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "selftest: all suites passed" : "selftest: FAILURES present") << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"c-biwave toolkit: hypercomplex algebra constants, solution synthesis and "
                 "residual verification"};
    app.require_subcommand(1);

    double info_c = 0.0;
    auto* info = app.add_subcommand("info", "print algebra constants for a value of c");
    info->add_option("c", info_c, "equation parameter c (c > 0, c != 1)")->required();

    std::string synth_config, synth_output;
    auto* synth = app.add_subcommand("synth", "synthesize a solution grid and write CSV");
    synth->add_option("--config", synth_config, "JSON run configuration")->required();
    synth->add_option("--output", synth_output, "output CSV path")->required();

    std::string verify_config, verify_input;
    double verify_c = 0.0, verify_tol = 0.0;
    int verify_refine = 0;
    auto* verify = app.add_subcommand("verify", "check a grid against the biwave operator");
    verify->add_option("--config", verify_config, "JSON run configuration");
    verify->add_option("--input", verify_input, "CSV grid to verify");
    auto* ocv = verify->add_option("--c", verify_c, "equation parameter (overrides config)");
    auto* ot = verify->add_option("--tolerance", verify_tol, "scaled residual tolerance");
    auto* orf = verify->add_option("--refine", verify_refine,
                                   "number of h-refinement levels (>= 2 adds an order check)");

    std::uint64_t seed = 42;
    std::string inject;
    auto* selftest = app.add_subcommand("selftest", "run the property suites");
    selftest->add_option("--seed", seed, "seed for the randomized suites (default 42)");
    selftest->add_option("--inject-fault", inject,
                         "corrupt an internal constant to demonstrate failure detection");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (info->parsed()) return run_info(info_c);
        if (synth->parsed()) return run_synth(synth_config, synth_output);
        if (verify->parsed())
            return run_verify(verify_config, verify_input, verify_c, ocv->count() > 0, verify_tol,
                              ot->count() > 0, verify_refine, orf->count() > 0);
        if (selftest->parsed()) return run_selftest(seed, inject);
    } catch (const biwave::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
