#pragma once

// Uniform scalar grids and their CSV serialization. The CSV contract:
// header line "x,y,u", one data row per node, x-major with y varying
// fastest, 17 significant digits (doubles round-trip exactly), LF endings.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "biwave/errors.hpp"

namespace biwave {

struct Rect {
    double x0 = -1.0, x1 = 1.0;
    double y0 = -1.0, y1 = 1.0;
};

using FieldSampler = std::function<double(double, double)>;

struct ScalarGrid {
    double x0 = 0.0, y0 = 0.0;
    double hx = 1.0, hy = 1.0;
    int nx = 0, ny = 0;
    std::vector<double> values;  // index i*ny + j, y fastest

    double& at(int i, int j) { return values[static_cast<std::size_t>(i) * ny + j]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * ny + j]; }
    double x(int i) const { return x0 + hx * i; }
    double y(int j) const { return y0 + hy * j; }

    double max_abs() const {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }

    static ScalarGrid sample(const FieldSampler& f, const Rect& r, int nx, int ny) {
        if (nx < 2 || ny < 2) throw GridTooSmall("grid needs at least 2 points per axis");
        ScalarGrid g;
        g.x0 = r.x0;
        g.y0 = r.y0;
        g.hx = (r.x1 - r.x0) / (nx - 1);
        g.hy = (r.y1 - r.y0) / (ny - 1);
        g.nx = nx;
        g.ny = ny;
        g.values.resize(static_cast<std::size_t>(nx) * ny);
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j) g.at(i, j) = f(g.x(i), g.y(j));
        return g;
    }

    // Sample with (approximately) equal spacing h on both axes.
    static ScalarGrid sample_step(const FieldSampler& f, const Rect& r, double h) {
        if (h <= 0.0) throw InvalidParameter("grid step must be positive");
        const int nx = static_cast<int>(std::floor((r.x1 - r.x0) / h + 1e-9)) + 1;
        const int ny = static_cast<int>(std::floor((r.y1 - r.y0) / h + 1e-9)) + 1;
        return sample(f, r, nx, ny);
    }
};

inline void write_csv(const ScalarGrid& g, std::ostream& os) {
    os << "x,y,u\n";
    char buf[96];
    for (int i = 0; i < g.nx; ++i) {
        for (int j = 0; j < g.ny; ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", g.x(i), g.y(j), g.at(i, j));
            os << buf;
        }
    }
}

inline ScalarGrid read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ConfigError("csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x,y,u") throw ConfigError("csv: expected header 'x,y,u', got '" + line + "'");

    std::vector<double> xs, ys, vs;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const char* s = line.c_str();
        char* end = nullptr;
        double vals[3];
        for (int k = 0; k < 3; ++k) {
            vals[k] = std::strtod(s, &end);
            if (end == s)
                throw ConfigError("csv: malformed number at line " + std::to_string(lineno));
            s = end;
            if (k < 2) {
                if (*s != ',')
                    throw ConfigError("csv: expected ',' at line " + std::to_string(lineno));
                ++s;
            }
        }
        xs.push_back(vals[0]);
        ys.push_back(vals[1]);
        vs.push_back(vals[2]);
    }
    if (vs.size() < 4) throw ConfigError("csv: fewer than 4 data rows");

    // y varies fastest; the first block of equal x values fixes ny.
    std::size_t ny = 1;
    while (ny < xs.size() && xs[ny] == xs[0]) ++ny;
    if (ny < 2 || vs.size() % ny != 0)
        throw ConfigError("csv: rows do not form a rectangular x-major grid");
    const std::size_t nx = vs.size() / ny;
    if (nx < 2) throw ConfigError("csv: fewer than 2 distinct x values");

    ScalarGrid g;
    g.nx = static_cast<int>(nx);
    g.ny = static_cast<int>(ny);
    g.x0 = xs[0];
    g.y0 = ys[0];
    g.hx = (xs[(nx - 1) * ny] - xs[0]) / static_cast<double>(nx - 1);
    g.hy = (ys[ny - 1] - ys[0]) / static_cast<double>(ny - 1);
    if (g.hx <= 0.0 || g.hy <= 0.0) throw ConfigError("csv: grid coordinates must increase");
    const double xtol = 1e-9 * std::max(1.0, std::abs(g.hx) * nx);
    const double ytol = 1e-9 * std::max(1.0, std::abs(g.hy) * ny);
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            const std::size_t r = i * ny + j;
            if (std::abs(xs[r] - (g.x0 + g.hx * static_cast<double>(i))) > xtol ||
                std::abs(ys[r] - (g.y0 + g.hy * static_cast<double>(j))) > ytol)
                throw ConfigError("csv: non-uniform grid near data row " + std::to_string(r + 1));
        }
    }
    g.values = std::move(vs);
    return g;
}

}  // namespace biwave
