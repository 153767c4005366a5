#pragma once

// Split-analytic and complex-analytic building blocks, the monogenic
// construction on B_c, and numerical Cauchy-Riemann residuals.
//
// Hyperbolic side: a split-analytic alpha(w1) = alpha1 + f alpha2 is
// parametrized by a d'Alembert pair (p, q):
//
//     alpha1 = (p(x + y1) + q(x - y1)) / 2
//     alpha2 = (p(x + y1) - q(x - y1)) / 2
//
// which satisfies d(alpha)/dy1 = f d(alpha)/dx by construction. Every
// split-analytic function with C^1 components has this form.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "biwave/algebra.hpp"
#include "biwave/grid.hpp"
#include "biwave/profile.hpp"

namespace biwave {

struct SplitAnalytic {
    Profile1D p;
    Profile1D q;
};

inline SplitComplex eval_split(const SplitAnalytic& sa, double x, double y1) {
    const double pv = sa.p(x + y1);
    const double qv = sa.q(x - y1);
    return {0.5 * (pv + qv), 0.5 * (pv - qv)};
}

// ---------------------------------------------------------------------------
// Complex analytic functions (elliptic side).

struct ComplexPolynomial {
    std::vector<cplx> coeffs;  // coeffs[n] multiplies w^n
};

struct ScaledExp {
    cplx a{1.0, 0.0};  // w -> exp(a w)
};

struct ScaledSine {
    cplx a{1.0, 0.0};  // w -> sin(a w)
};

class ComplexAnalytic {
public:
    using Kind = std::variant<ComplexPolynomial, ScaledExp, ScaledSine>;

    ComplexAnalytic() : kind_(ComplexPolynomial{}) {}  // identically zero
    explicit ComplexAnalytic(Kind kind) : kind_(std::move(kind)) {}

    static ComplexAnalytic zero() { return ComplexAnalytic(); }
    static ComplexAnalytic polynomial(std::vector<cplx> coeffs) {
        return ComplexAnalytic(ComplexPolynomial{std::move(coeffs)});
    }
    static ComplexAnalytic scaled_exp(cplx a) { return ComplexAnalytic(ScaledExp{a}); }
    static ComplexAnalytic scaled_sine(cplx a) { return ComplexAnalytic(ScaledSine{a}); }

    cplx operator()(cplx w) const {
        return std::visit(
            [&](const auto& k) -> cplx {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, ComplexPolynomial>) {
                    cplx acc(0.0, 0.0);
                    for (auto it = k.coeffs.rbegin(); it != k.coeffs.rend(); ++it)
                        acc = acc * w + *it;
                    return acc;
                } else if constexpr (std::is_same_v<K, ScaledExp>) {
                    return std::exp(k.a * w);
                } else {
                    return std::sin(k.a * w);
                }
            },
            kind_);
    }

    bool is_polynomial() const { return std::holds_alternative<ComplexPolynomial>(kind_); }
    const std::vector<cplx>* poly_coeffs() const {
        const auto* p = std::get_if<ComplexPolynomial>(&kind_);
        return p ? &p->coeffs : nullptr;
    }
    const Kind& kind() const { return kind_; }

private:
    Kind kind_;
};

// ---------------------------------------------------------------------------
// Components of algebra-valued function values.

struct ComponentVector {
    double u1 = 0.0, u2 = 0.0, u3 = 0.0, u4 = 0.0;
};

inline ComponentVector components_of(const HyperElement& g) {
    return {g.cu, g.cf, g.ce, g.cfe};
}

// cu = u1 + i u2, ce = u3 + i u4.
inline ComponentVector components_of(const EllipticElement& g) {
    return {g.cu.real(), g.cu.imag(), g.ce.real(), g.ce.imag()};
}

// g(w) = alpha(w1) i1 + beta(w2) i2 with w1 = x + f y1, w2 = x + f y2,
// evaluated through the algebra product.
inline ComponentVector monogenic_components_hyper(const SplitAnalytic& alpha,
                                                  const SplitAnalytic& beta,
                                                  const AlgebraParams& p, double x, double y) {
    require_hyperbolic(p);
    const HyperSpectral w = decompose_w_hyper(x, y, p);
    const SplitComplex av = eval_split(alpha, w.w1.a, w.w1.b);
    const SplitComplex bv = eval_split(beta, w.w2.a, w.w2.b);
    const auto [i1, i2] = hyper_idempotents(p);
    const HyperElement g = hyper_mul(HyperElement{av.a, av.b, 0.0, 0.0}, i1, p) +
                           hyper_mul(HyperElement{bv.a, bv.b, 0.0, 0.0}, i2, p);
    return components_of(g);
}

// f(w) = alpha(w1) I- + beta(w2) I+ with w1 = x + (k2/sqrt2) y,
// w2 = x - (k1/sqrt2) y.
inline ComponentVector monogenic_components_elliptic(const ComplexAnalytic& alpha,
                                                     const ComplexAnalytic& beta,
                                                     const AlgebraParams& p, double x, double y) {
    require_elliptic(p);
    const EllipticSpectral w = decompose_w_elliptic(x, y, p);
    const cplx av = alpha(w.w1);
    const cplx bv = beta(w.w2);
    const auto [im, ip] = elliptic_idempotents(p);
    const EllipticElement g = elliptic_mul(EllipticElement{av, cplx()}, im, p) +
                              elliptic_mul(EllipticElement{bv, cplx()}, ip, p);
    return components_of(g);
}

// ---------------------------------------------------------------------------
// Cauchy-Riemann residuals by second-order central differences.
//
// Hyperbolic system (coefficient m), elliptic system (coefficient mu, note
// the sign flip in the fourth equation):
//
//   r1 = du1/dy - du3/dx
//   r2 = du2/dy - du4/dx
//   r3 = du3/dy - du1/dx + m du4/dx          (mu in the elliptic case)
//   r4 = du4/dy - du2/dx + m du3/dx          (- mu du3/dx in the elliptic case)

using ComponentSampler = std::function<ComponentVector(double, double)>;

inline std::array<ScalarGrid, 4> cr_residual(const ComponentSampler& sampler,
                                             const AlgebraParams& p, const Rect& region,
                                             double h) {
    if (h <= 0.0) throw InvalidParameter("cr_residual: step must be positive");
    const int nx = static_cast<int>(std::floor((region.x1 - region.x0) / h + 1e-9)) + 1;
    const int ny = static_cast<int>(std::floor((region.y1 - region.y0) / h + 1e-9)) + 1;
    if (nx < 3 || ny < 3)
        throw GridTooSmall("cr_residual: need at least 3 points per axis, got " +
                           std::to_string(nx) + "x" + std::to_string(ny));

    // Sample all four components once.
    std::array<std::vector<double>, 4> u;
    for (auto& v : u) v.resize(static_cast<std::size_t>(nx) * ny);
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            const ComponentVector cv = sampler(region.x0 + h * i, region.y0 + h * j);
            const std::size_t idx = static_cast<std::size_t>(i) * ny + j;
            u[0][idx] = cv.u1;
            u[1][idx] = cv.u2;
            u[2][idx] = cv.u3;
            u[3][idx] = cv.u4;
        }
    }
    auto dx = [&](int comp, int i, int j) {
        const std::size_t a = static_cast<std::size_t>(i + 1) * ny + j;
        const std::size_t b = static_cast<std::size_t>(i - 1) * ny + j;
        return (u[comp][a] - u[comp][b]) / (2.0 * h);
    };
    auto dy = [&](int comp, int i, int j) {
        const std::size_t a = static_cast<std::size_t>(i) * ny + (j + 1);
        const std::size_t b = static_cast<std::size_t>(i) * ny + (j - 1);
        return (u[comp][a] - u[comp][b]) / (2.0 * h);
    };

    const double mm = p.regime == Regime::Hyperbolic ? p.m : p.mu;
    const double s4 = p.regime == Regime::Hyperbolic ? 1.0 : -1.0;

    std::array<ScalarGrid, 4> res;
    for (auto& g : res) {
        g.x0 = region.x0 + h;
        g.y0 = region.y0 + h;
        g.hx = g.hy = h;
        g.nx = nx - 2;
        g.ny = ny - 2;
        g.values.assign(static_cast<std::size_t>(g.nx) * g.ny, 0.0);
    }
    for (int i = 1; i < nx - 1; ++i) {
        for (int j = 1; j < ny - 1; ++j) {
            res[0].at(i - 1, j - 1) = dy(0, i, j) - dx(2, i, j);
            res[1].at(i - 1, j - 1) = dy(1, i, j) - dx(3, i, j);
            res[2].at(i - 1, j - 1) = dy(2, i, j) - dx(0, i, j) + mm * dx(3, i, j);
            res[3].at(i - 1, j - 1) = dy(3, i, j) - dx(1, i, j) + s4 * mm * dx(2, i, j);
        }
    }
    return res;
}

}  // namespace biwave
