#pragma once

// Run configuration: a JSON document with top-level keys c, grid, solution
// and verify. Parse errors carry the offending field path.

#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "biwave/analytic.hpp"
#include "biwave/errors.hpp"
#include "biwave/grid.hpp"
#include "biwave/profile.hpp"
#include "biwave/synthesis.hpp"

namespace biwave {

struct GridSpec {
    double x0 = -1.0, x1 = 1.0;
    double y0 = -1.0, y1 = 1.0;
    int nx = 65, ny = 65;

    Rect rect() const { return {x0, x1, y0, y1}; }
};

struct VerifyOptions {
    double tolerance = 1e-6;
    int refine = 1;  // >= 2 adds halved-step levels and an order check
};

struct RunConfig {
    double c = 0.0;
    GridSpec grid;
    std::variant<HyperbolicSolutionSpec, EllipticSolutionSpec> solution;
    VerifyOptions verify;
};

namespace detail {

using json = nlohmann::json;

inline const json& require_field(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw ConfigError(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ConfigError(path + "." + key + ": missing required field");
    return *it;
}

inline double get_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw ConfigError(path + ": expected a number");
    return j.get<double>();
}

inline double field_number(const json& j, const std::string& key, const std::string& path) {
    return get_number(require_field(j, key, path), path + "." + key);
}

inline double field_number_or(const json& j, const std::string& key, const std::string& path,
                              double fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    return get_number(j.at(key), path + "." + key);
}

inline int field_int(const json& j, const std::string& key, const std::string& path) {
    const json& v = require_field(j, key, path);
    if (!v.is_number_integer()) throw ConfigError(path + "." + key + ": expected an integer");
    return v.get<int>();
}

inline int field_int_or(const json& j, const std::string& key, const std::string& path,
                        int fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    if (!j.at(key).is_number_integer())
        throw ConfigError(path + "." + key + ": expected an integer");
    return j.at(key).get<int>();
}

inline cplx get_complex(const json& j, const std::string& path) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return cplx(j[0].get<double>(), j[1].get<double>());
    throw ConfigError(path + ": expected a number or [re, im] pair");
}

}  // namespace detail

inline Profile1D parse_profile(const nlohmann::json& j, const std::string& path) {
    using detail::field_number;
    using detail::field_number_or;
    if (!j.is_object()) throw ConfigError(path + ": expected an object");
    const auto& kj = detail::require_field(j, "kind", path);
    if (!kj.is_string()) throw ConfigError(path + ".kind: expected a string");
    const std::string kind = kj.get<std::string>();
    if (kind == "zero") return Profile1D::zero();
    if (kind == "polynomial") {
        const auto& c = detail::require_field(j, "coeffs", path);
        if (!c.is_array()) throw ConfigError(path + ".coeffs: expected an array");
        std::vector<double> coeffs;
        for (std::size_t i = 0; i < c.size(); ++i)
            coeffs.push_back(detail::get_number(c[i], path + ".coeffs[" + std::to_string(i) + "]"));
        return Profile1D::polynomial(std::move(coeffs));
    }
    if (kind == "sine")
        return Profile1D::sine(field_number(j, "amplitude", path), field_number(j, "frequency", path),
                               field_number_or(j, "phase", path, 0.0));
    if (kind == "exponential")
        return Profile1D::exponential(field_number(j, "amplitude", path),
                                      field_number(j, "rate", path));
    if (kind == "gaussian")
        return Profile1D::gaussian(field_number(j, "amplitude", path),
                                   field_number(j, "center", path), field_number(j, "width", path));
    throw ConfigError(path + ".kind: unknown profile kind '" + kind + "'");
}

inline ComplexAnalytic parse_complex_analytic(const nlohmann::json& j, const std::string& path) {
    if (!j.is_object()) throw ConfigError(path + ": expected an object");
    const auto& kj = detail::require_field(j, "kind", path);
    if (!kj.is_string()) throw ConfigError(path + ".kind: expected a string");
    const std::string kind = kj.get<std::string>();
    if (kind == "zero") return ComplexAnalytic::zero();
    if (kind == "polynomial") {
        const auto& c = detail::require_field(j, "coeffs", path);
        if (!c.is_array()) throw ConfigError(path + ".coeffs: expected an array");
        std::vector<cplx> coeffs;
        for (std::size_t i = 0; i < c.size(); ++i)
            coeffs.push_back(
                detail::get_complex(c[i], path + ".coeffs[" + std::to_string(i) + "]"));
        return ComplexAnalytic::polynomial(std::move(coeffs));
    }
    if (kind == "exp")
        return ComplexAnalytic::scaled_exp(detail::get_complex(detail::require_field(j, "a", path),
                                                               path + ".a"));
    if (kind == "sine")
        return ComplexAnalytic::scaled_sine(detail::get_complex(detail::require_field(j, "a", path),
                                                                path + ".a"));
    throw ConfigError(path + ".kind: unknown analytic kind '" + kind + "'");
}

inline RunConfig parse_run_config(const nlohmann::json& j) {
    RunConfig cfg;
    cfg.c = detail::field_number(j, "c", "config");

    const auto& gj = detail::require_field(j, "grid", "config");
    cfg.grid.x0 = detail::field_number(gj, "x0", "config.grid");
    cfg.grid.x1 = detail::field_number(gj, "x1", "config.grid");
    cfg.grid.y0 = detail::field_number(gj, "y0", "config.grid");
    cfg.grid.y1 = detail::field_number(gj, "y1", "config.grid");
    cfg.grid.nx = detail::field_int(gj, "nx", "config.grid");
    cfg.grid.ny = detail::field_int(gj, "ny", "config.grid");
    if (!(cfg.grid.x0 < cfg.grid.x1) || !(cfg.grid.y0 < cfg.grid.y1))
        throw ConfigError("config.grid: bounds must satisfy x0 < x1 and y0 < y1");
    if (cfg.grid.nx < 5 || cfg.grid.ny < 5)
        throw ConfigError("config.grid: nx and ny must be at least 5");

    const auto& sj = detail::require_field(j, "solution", "config");
    const auto& tj = detail::require_field(sj, "type", "config.solution");
    if (!tj.is_string()) throw ConfigError("config.solution.type: expected a string");
    const std::string type = tj.get<std::string>();
    if (type == "hyperbolic") {
        if (!(cfg.c > 1.0))
            throw ConfigError("config.solution.type: hyperbolic solutions require c > 1");
        HyperbolicSolutionSpec spec;
        if (sj.contains("g1")) spec.g1 = parse_profile(sj.at("g1"), "config.solution.g1");
        if (sj.contains("g2")) spec.g2 = parse_profile(sj.at("g2"), "config.solution.g2");
        if (sj.contains("F1")) spec.F1 = parse_profile(sj.at("F1"), "config.solution.F1");
        if (sj.contains("F2")) spec.F2 = parse_profile(sj.at("F2"), "config.solution.F2");
        cfg.solution = std::move(spec);
    } else if (type == "elliptic") {
        if (!(cfg.c > 0.0 && cfg.c < 1.0))
            throw ConfigError("config.solution.type: elliptic solutions require 0 < c < 1");
        EllipticSolutionSpec spec;
        if (sj.contains("alpha"))
            spec.alpha = parse_complex_analytic(sj.at("alpha"), "config.solution.alpha");
        if (sj.contains("beta"))
            spec.beta = parse_complex_analytic(sj.at("beta"), "config.solution.beta");
        spec.comp_alpha = detail::field_int_or(sj, "i", "config.solution", 1);
        spec.comp_beta = detail::field_int_or(sj, "j", "config.solution", 1);
        if (spec.comp_alpha < 1 || spec.comp_alpha > 2)
            throw ConfigError("config.solution.i: component selector must be 1 or 2");
        if (spec.comp_beta < 1 || spec.comp_beta > 2)
            throw ConfigError("config.solution.j: component selector must be 1 or 2");
        cfg.solution = std::move(spec);
    } else {
        throw ConfigError("config.solution.type: expected 'hyperbolic' or 'elliptic', got '" +
                          type + "'");
    }

    if (j.contains("verify")) {
        const auto& vj = j.at("verify");
        if (!vj.is_object()) throw ConfigError("config.verify: expected an object");
        cfg.verify.tolerance = detail::field_number_or(vj, "tolerance", "config.verify", 1e-6);
        cfg.verify.refine = detail::field_int_or(vj, "refine", "config.verify", 1);
        if (cfg.verify.tolerance <= 0.0)
            throw ConfigError("config.verify.tolerance: must be positive");
        if (cfg.verify.refine < 1 || cfg.verify.refine > 6)
            throw ConfigError("config.verify.refine: must be in 1..6");
    }
    return cfg;
}

inline RunConfig load_run_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config '" + path + "': " + e.what());
    }
    return parse_run_config(j);
}

}  // namespace biwave
