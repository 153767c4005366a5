#pragma once

// Finite-difference application of the biwave operator and of its wave-factor
// factorization, plus the characteristic roots of the operator symbol.
//
// Stencils: fourth derivatives use the 5-point central stencil
// (1, -4, 6, -4, 1)/h^4, the mixed term the tensor product of two 3-point
// second-difference stencils. Both are O(h^2) and exact on quartics.

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "biwave/algebra.hpp"
#include "biwave/grid.hpp"

namespace biwave {

namespace detail {

// Symmetric pairing keeps constant fields at exactly zero.
inline double d4x(const ScalarGrid& g, int i, int j) {
    const double h4 = g.hx * g.hx * g.hx * g.hx;
    return ((g.at(i - 2, j) + g.at(i + 2, j)) - 4.0 * (g.at(i - 1, j) + g.at(i + 1, j)) +
            6.0 * g.at(i, j)) /
           h4;
}

inline double d4y(const ScalarGrid& g, int i, int j) {
    const double h4 = g.hy * g.hy * g.hy * g.hy;
    return ((g.at(i, j - 2) + g.at(i, j + 2)) - 4.0 * (g.at(i, j - 1) + g.at(i, j + 1)) +
            6.0 * g.at(i, j)) /
           h4;
}

inline double d2x_d2y(const ScalarGrid& g, int i, int j) {
    auto row2 = [&](int ii) { return g.at(ii, j - 1) - 2.0 * g.at(ii, j) + g.at(ii, j + 1); };
    return (row2(i - 1) - 2.0 * row2(i) + row2(i + 1)) / (g.hx * g.hx * g.hy * g.hy);
}

}  // namespace detail

// Residual of the biwave operator on the margin-2 interior. Boundary nodes
// are not representable by the central stencils and are omitted from the
// returned grid (its origin is shifted by two spacings).
inline ScalarGrid biwave_residual_fd(const ScalarGrid& g, double c) {
    if (g.nx < 5 || g.ny < 5)
        throw GridTooSmall("grid too small: the biwave stencil needs at least 5 points per axis, "
                           "got " +
                           std::to_string(g.nx) + "x" + std::to_string(g.ny));
    ScalarGrid r;
    r.x0 = g.x0 + 2.0 * g.hx;
    r.y0 = g.y0 + 2.0 * g.hy;
    r.hx = g.hx;
    r.hy = g.hy;
    r.nx = g.nx - 4;
    r.ny = g.ny - 4;
    r.values.resize(static_cast<std::size_t>(r.nx) * r.ny);
    for (int i = 2; i < g.nx - 2; ++i)
        for (int j = 2; j < g.ny - 2; ++j)
            r.at(i - 2, j - 2) =
                detail::d4x(g, i, j) - 2.0 * c * detail::d2x_d2y(g, i, j) + detail::d4y(g, i, j);
    return r;
}

// Max over the interior of |d4x| + 2c |d2x d2y| + |d4y|; the natural scale
// against which a residual should be judged.
inline double fourth_derivative_scale(const ScalarGrid& g, double c) {
    if (g.nx < 5 || g.ny < 5)
        throw GridTooSmall("fourth-derivative scale needs at least 5 points per axis");
    double m = 0.0;
    for (int i = 2; i < g.nx - 2; ++i)
        for (int j = 2; j < g.ny - 2; ++j)
            m = std::max(m, std::abs(detail::d4x(g, i, j)) +
                                2.0 * c * std::abs(detail::d2x_d2y(g, i, j)) +
                                std::abs(detail::d4y(g, i, j)));
    return m;
}

struct ResidualReport {
    double max_raw = 0.0;  // max |residual| over the interior
    double scale = 0.0;    // fourth-derivative magnitude estimate
    double denom = 1.0;    // max(1, max |u|, scale)
    double scaled = 0.0;   // max_raw / denom
};

// Rounding-noise level of the combined stencil: each fourth-difference sums
// coefficients of total magnitude 16, amplified by h^-4 and the field
// magnitude. Residuals at or below this are indistinguishable from zero.
inline double fd_noise_floor(const ScalarGrid& g, double c) {
    const double eps = 2.3e-16;
    const double amp = 16.0 / (g.hx * g.hx * g.hx * g.hx) +
                       2.0 * c * 16.0 / (g.hx * g.hx * g.hy * g.hy) +
                       16.0 / (g.hy * g.hy * g.hy * g.hy);
    return eps * amp * g.max_abs();
}

inline ResidualReport biwave_verify_report(const ScalarGrid& g, double c) {
    ResidualReport rep;
    rep.max_raw = biwave_residual_fd(g, c).max_abs();
    rep.scale = fourth_derivative_scale(g, c);
    rep.denom = std::max({1.0, g.max_abs(), rep.scale});
    rep.scaled = rep.max_raw / rep.denom;
    return rep;
}

// One rescaled wave factor d2/dx2 - coef * d2/dy2 on the margin-1 interior.
inline ScalarGrid apply_wave_factor(const ScalarGrid& g, double coef) {
    if (g.nx < 3 || g.ny < 3)
        throw GridTooSmall("wave factor needs at least 3 points per axis");
    ScalarGrid r;
    r.x0 = g.x0 + g.hx;
    r.y0 = g.y0 + g.hy;
    r.hx = g.hx;
    r.hy = g.hy;
    r.nx = g.nx - 2;
    r.ny = g.ny - 2;
    r.values.resize(static_cast<std::size_t>(r.nx) * r.ny);
    for (int i = 1; i < g.nx - 1; ++i)
        for (int j = 1; j < g.ny - 1; ++j) {
            const double dxx =
                (g.at(i - 1, j) - 2.0 * g.at(i, j) + g.at(i + 1, j)) / (g.hx * g.hx);
            const double dyy =
                (g.at(i, j - 1) - 2.0 * g.at(i, j) + g.at(i, j + 1)) / (g.hy * g.hy);
            r.at(i - 1, j - 1) = dxx - coef * dyy;
        }
    return r;
}

enum class FactorOrder { FirstThenSecond, SecondThenFirst };

// Applies the two rescaled wave factors (d2/dx2 - (2/k2^2) d2/dy2) and
// (d2/dx2 - (2/k1^2) d2/dy2) sequentially in the requested order, on the
// margin-2 interior. Real factor speeds exist only for c > 1.
inline ScalarGrid apply_wave_factors(const ScalarGrid& g, double c, FactorOrder order) {
    if (c <= 1.0)
        throw WrongRegime("wave factorization with real speeds requires c > 1, got c = " +
                          std::to_string(c));
    if (g.nx < 9 || g.ny < 9)
        throw GridTooSmall("wave factorization needs at least 9 points per axis, got " +
                           std::to_string(g.nx) + "x" + std::to_string(g.ny));
    const AlgebraParams p = make_params(c);
    const double coef_y1 = 2.0 / (p.k2r() * p.k2r());
    const double coef_y2 = 2.0 / (p.k1r() * p.k1r());
    const double first = order == FactorOrder::FirstThenSecond ? coef_y1 : coef_y2;
    const double second = order == FactorOrder::FirstThenSecond ? coef_y2 : coef_y1;
    return apply_wave_factor(apply_wave_factor(g, first), second);
}

// Difference between the factorized application and the direct biwave
// stencil on the common interior. The expansion identities
// 2/k1^2 + 2/k2^2 = 2c and 4/(k1^2 k2^2) = 1 make the two routes agree.
inline ScalarGrid wave_factorization_residual(const ScalarGrid& g, double c, FactorOrder order) {
    const ScalarGrid composed = apply_wave_factors(g, c, order);
    const ScalarGrid direct = biwave_residual_fd(g, c);
    ScalarGrid r = composed;
    for (std::size_t k = 0; k < r.values.size(); ++k) r.values[k] -= direct.values[k];
    return r;
}

// The four scalars lambda with lambda^4 - 2c lambda^2 + 1 = 0; plane waves
// phi(x + lambda y) solve the PDE. Real for c > 1, complex for 0 < c < 1.
inline std::array<cplx, 4> characteristic_roots(const AlgebraParams& p) {
    const double r2 = std::sqrt(2.0);
    const cplx l1 = p.k1 / r2;
    const cplx l2 = p.k2 / r2;
    return {l1, -l1, l2, -l2};
}

}  // namespace biwave
