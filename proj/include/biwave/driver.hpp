#pragma once

// Engine behind the CLI subcommands, kept here so the behaviors stay
// testable in-process.

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "biwave/algebra.hpp"
#include "biwave/config.hpp"
#include "biwave/fd.hpp"
#include "biwave/grid.hpp"
#include "biwave/synthesis.hpp"

namespace biwave {

inline std::string fmt_g(double v, int digits = 9) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

inline std::string fmt_cplx(const cplx& z, int digits = 9) {
    std::string s = fmt_g(z.real(), digits);
    s += z.imag() < 0.0 ? " - " : " + ";
    s += fmt_g(std::abs(z.imag()), digits);
    s += "i";
    return s;
}

inline std::string info_report(double c) {
    const AlgebraParams p = make_params(c);
    std::ostringstream os;
    os << "c = " << fmt_g(c) << "\n";
    if (p.near_degenerate)
        os << "warning: c is within 1e-3 of the degenerate value 1; "
              "the synthesis coefficient is ill-conditioned\n";
    const auto roots = characteristic_roots(p);
    if (p.regime == Regime::Hyperbolic) {
        os << "regime: hyperbolic\n";
        os << "m  = " << fmt_g(p.m) << "\n";
        os << "k1 = " << fmt_g(p.k1r()) << "\n";
        os << "k2 = " << fmt_g(p.k2r()) << "\n";
        os << "kappa = " << fmt_g(hyper_kappa(p)) << "\n";
        const auto [i1, i2] = hyper_idempotents(p);
        os << "idempotent i1 = " << fmt_g(i1.cu) << " u " << (i1.cfe < 0 ? "- " : "+ ")
           << fmt_g(std::abs(i1.cfe)) << " fe\n";
        os << "idempotent i2 = " << fmt_g(i2.cu) << " u " << (i2.cfe < 0 ? "- " : "+ ")
           << fmt_g(std::abs(i2.cfe)) << " fe\n";
        os << "characteristic roots: +-" << fmt_g(roots[0].real()) << ", +-"
           << fmt_g(roots[2].real()) << "\n";
    } else {
        os << "regime: elliptic\n";
        os << "mu = " << fmt_g(p.mu) << "\n";
        os << "k1 = " << fmt_cplx(p.k1) << "\n";
        os << "k2 = " << fmt_cplx(p.k2) << "\n";
        const auto [im, ip] = elliptic_idempotents(p);
        os << "idempotent I- = (" << fmt_cplx(im.cu) << ") u + (" << fmt_cplx(im.ce) << ") e\n";
        os << "idempotent I+ = (" << fmt_cplx(ip.cu) << ") u + (" << fmt_cplx(ip.ce) << ") e\n";
        os << "characteristic roots: +-(" << fmt_cplx(roots[0]) << "), +-(" << fmt_cplx(roots[2])
           << ")\n";
        os << "trace-form det = " << fmt_g(trace_form_det(p).real()) << "\n";
    }
    os << "generator residual max = " << fmt_g(generator_residual_max(p), 3) << "\n";
    return os.str();
}

inline FieldSampler config_sampler(const RunConfig& cfg) {
    if (std::holds_alternative<HyperbolicSolutionSpec>(cfg.solution))
        return synth_hyperbolic(std::get<HyperbolicSolutionSpec>(cfg.solution), cfg.c);
    return synth_elliptic(std::get<EllipticSolutionSpec>(cfg.solution), cfg.c);
}

inline ScalarGrid synth_grid(const RunConfig& cfg, int halvings = 0) {
    GridSpec g = cfg.grid;
    for (int i = 0; i < halvings; ++i) {
        g.nx = 2 * (g.nx - 1) + 1;
        g.ny = 2 * (g.ny - 1) + 1;
    }
    return ScalarGrid::sample(config_sampler(cfg), g.rect(), g.nx, g.ny);
}

struct VerifyOutcome {
    bool pass = false;
    ResidualReport base;
    std::vector<ResidualReport> levels;  // refinement levels, base first
    std::vector<double> orders;          // log2 residual ratios between levels
    std::string text;
};

inline VerifyOutcome verify_run(const ScalarGrid& base, double c, double tolerance, int refine,
                                const RunConfig* refine_source) {
    VerifyOutcome out;
    out.base = biwave_verify_report(base, c);
    std::ostringstream os;
    os << "grid " << base.nx << "x" << base.ny << ", h = (" << fmt_g(base.hx) << ", "
       << fmt_g(base.hy) << ")\n";
    os << "max residual (raw)    = " << fmt_g(out.base.max_raw) << "\n";
    os << "scale estimate        = " << fmt_g(out.base.denom) << "\n";
    os << "max residual (scaled) = " << fmt_g(out.base.scaled) << "\n";
    os << "tolerance             = " << fmt_g(tolerance) << "\n";
    bool pass = out.base.scaled <= tolerance;

    if (c > 1.0 && base.nx >= 9 && base.ny >= 9) {
        const double rel = std::max(
            wave_factorization_residual(base, c, FactorOrder::FirstThenSecond).max_abs(),
            wave_factorization_residual(base, c, FactorOrder::SecondThenFirst).max_abs());
        os << "factorization residual (both orders, relative) = "
           << fmt_g(rel / out.base.denom, 3) << "\n";
    }

    if (refine >= 2) {
        if (refine_source == nullptr)
            throw ConfigError("refinement requires a config with a solution block");
        std::vector<double> floors;
        for (int lvl = 0; lvl < refine; ++lvl) {
            const ScalarGrid g = synth_grid(*refine_source, lvl);
            floors.push_back(4.0 * fd_noise_floor(g, c));
            out.levels.push_back(biwave_verify_report(g, c));
        }
        for (std::size_t i = 0; i + 1 < out.levels.size(); ++i) {
            const double r0 = out.levels[i].max_raw;
            const double r1 = out.levels[i + 1].max_raw;
            if (r1 <= floors[i + 1]) {
                os << "refinement level " << i + 1
                   << ": residual at stencil rounding noise, order check skipped\n";
                continue;
            }
            const double order = std::log2(r0 / r1);
            out.orders.push_back(order);
            os << "refinement level " << i + 1 << ": raw " << fmt_g(r1) << ", order "
               << fmt_g(order, 3) << "\n";
            if (!(order >= 1.3 && order <= 2.7)) {
                pass = false;
                os << "refinement level " << i + 1 << ": order outside [1.3, 2.7]\n";
            }
        }
    }
    os << (pass ? "PASS" : "FAIL") << "\n";
    out.pass = pass;
    out.text = os.str();
    return out;
}

}  // namespace biwave
