#pragma once

// Constructive solution generators. Every sampler produced here satisfies
// the biwave equation: the pieces ride the characteristic directions
// x + lambda y with lambda a root of lambda^4 - 2c lambda^2 + 1 = 0.

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>

#include "biwave/algebra.hpp"
#include "biwave/analytic.hpp"
#include "biwave/fd.hpp"
#include "biwave/grid.hpp"
#include "biwave/poly2d.hpp"
#include "biwave/profile.hpp"

namespace biwave {

// g1, g2 ride the y2 characteristics x +- (k1/sqrt2) y, F1, F2 the y1
// characteristics x -+ (k2/sqrt2) y.
struct HyperbolicSolutionSpec {
    Profile1D g1, g2, F1, F2;
};

struct EllipticSolutionSpec {
    ComplexAnalytic alpha, beta;
    int comp_alpha = 1;  // 1 = real part, 2 = imaginary part
    int comp_beta = 1;
};

// k1^2/(k1^2 - k2^2), written as -k1^2/(4 sqrt(c^2-1)) which has no
// cancellation for large c. Singular as c -> 1.
inline double hyper_kappa(const AlgebraParams& p) {
    require_hyperbolic(p);
    return -(p.k1r() * p.k1r()) / (4.0 * std::sqrt(p.c * p.c - 1.0));
}

inline double complex_component(const cplx& z, int selector) {
    if (selector == 1) return z.real();
    if (selector == 2) return z.imag();
    throw InvalidParameter("component selector must be 1 or 2, got " + std::to_string(selector));
}

// u(x,y) = g1(x+y2) + g2(x-y2) + kappa (F1(x+y1) + F2(x-y1)) with
// y1 = -(k2/sqrt2) y, y2 = (k1/sqrt2) y.
inline FieldSampler synth_hyperbolic(const HyperbolicSolutionSpec& spec, double c) {
    const AlgebraParams p = make_params(c);
    require_hyperbolic(p);
    const double r2 = std::sqrt(2.0);
    const double l1 = p.k2r() / r2;
    const double l2 = p.k1r() / r2;
    const double kappa = hyper_kappa(p);
    return [spec, l1, l2, kappa](double x, double y) {
        return spec.g1(x + l2 * y) + spec.g2(x - l2 * y) +
               kappa * (spec.F1(x - l1 * y) + spec.F2(x + l1 * y));
    };
}

// Exact expansion of the same field; empty unless all profiles are
// polynomial.
inline std::optional<Poly2Dd> synth_hyperbolic_poly(const HyperbolicSolutionSpec& spec, double c) {
    const AlgebraParams p = make_params(c);
    require_hyperbolic(p);
    if (!spec.g1.is_polynomial() || !spec.g2.is_polynomial() || !spec.F1.is_polynomial() ||
        !spec.F2.is_polynomial())
        return std::nullopt;
    const double r2 = std::sqrt(2.0);
    const double l1 = p.k2r() / r2;
    const double l2 = p.k1r() / r2;
    const double kappa = hyper_kappa(p);
    return compose_linear(*spec.g1.poly_coeffs(), +l2) + compose_linear(*spec.g2.poly_coeffs(), -l2) +
           (compose_linear(*spec.F1.poly_coeffs(), -l1) + compose_linear(*spec.F2.poly_coeffs(), +l1)) *
               kappa;
}

// u(x,y) = component_i(alpha(w1)) + component_j(beta(w2)) with
// w1 = x + (k2/sqrt2) y, w2 = x - (k1/sqrt2) y.
inline FieldSampler synth_elliptic(const EllipticSolutionSpec& spec, double c) {
    const AlgebraParams p = make_params(c);
    require_elliptic(p);
    complex_component(cplx(), spec.comp_alpha);  // validate selectors up front
    complex_component(cplx(), spec.comp_beta);
    const double r2 = std::sqrt(2.0);
    const cplx l1 = p.k2 / r2;
    const cplx l2 = p.k1 / r2;
    return [spec, l1, l2](double x, double y) {
        const cplx w1 = cplx(x, 0.0) + l1 * y;
        const cplx w2 = cplx(x, 0.0) - l2 * y;
        return complex_component(spec.alpha(w1), spec.comp_alpha) +
               complex_component(spec.beta(w2), spec.comp_beta);
    };
}

inline std::optional<Poly2Dd> synth_elliptic_poly(const EllipticSolutionSpec& spec, double c) {
    const AlgebraParams p = make_params(c);
    require_elliptic(p);
    complex_component(cplx(), spec.comp_alpha);
    complex_component(cplx(), spec.comp_beta);
    if (!spec.alpha.is_polynomial() || !spec.beta.is_polynomial()) return std::nullopt;
    const double r2 = std::sqrt(2.0);
    const Poly2Dc pa = compose_linear(*spec.alpha.poly_coeffs(), p.k2 / r2);
    const Poly2Dc pb = compose_linear(*spec.beta.poly_coeffs(), -p.k1 / r2);
    const Poly2Dd ua = spec.comp_alpha == 1 ? real_part(pa) : imag_part(pa);
    const Poly2Dd ub = spec.comp_beta == 1 ? real_part(pb) : imag_part(pb);
    return ua + ub;
}

// ---------------------------------------------------------------------------
// The inhomogeneous single-factor identity behind the hyperbolic general
// solution: with U = kappa (F1(x+y1) + F2(x-y1)),
//
//     (d2/dx2 - (2/k1^2) d2/dy2) U = F1''(x+y1) + F2''(x-y1).
//
// The factor is applied by finite differences, the right-hand side uses the
// exact profile second derivatives; the returned margin-1 residual vanishes
// at O(h^2).
inline ScalarGrid partial_solution_residual(const Profile1D& F1, const Profile1D& F2, double c,
                                            const Rect& region, double h) {
    const AlgebraParams p = make_params(c);
    require_hyperbolic(p);
    const double r2 = std::sqrt(2.0);
    const double l1 = p.k2r() / r2;
    const double kappa = hyper_kappa(p);
    const ScalarGrid u = ScalarGrid::sample_step(
        [&](double x, double y) { return kappa * (F1(x - l1 * y) + F2(x + l1 * y)); }, region, h);
    if (u.nx < 3 || u.ny < 3)
        throw GridTooSmall("partial-solution residual needs at least 3 points per axis");
    ScalarGrid r = apply_wave_factor(u, 2.0 / (p.k1r() * p.k1r()));
    for (int i = 0; i < r.nx; ++i)
        for (int j = 0; j < r.ny; ++j) {
            const double x = r.x(i), y = r.y(j);
            r.at(i, j) -= F1.derivative(x - l1 * y, 2) + F2.derivative(x + l1 * y, 2);
        }
    return r;
}

// ---------------------------------------------------------------------------
// Component fields of monogenic functions; each solves the biwave equation.

inline double pick_component(const ComponentVector& cv, int component) {
    switch (component) {
        case 1: return cv.u1;
        case 2: return cv.u2;
        case 3: return cv.u3;
        case 4: return cv.u4;
        default:
            throw InvalidParameter("component index must be in 1..4, got " +
                                   std::to_string(component));
    }
}

inline FieldSampler monogenic_component_field(const AlgebraParams& p, const SplitAnalytic& alpha,
                                              const SplitAnalytic& beta, int component) {
    require_hyperbolic(p);
    pick_component(ComponentVector{}, component);
    return [p, alpha, beta, component](double x, double y) {
        return pick_component(monogenic_components_hyper(alpha, beta, p, x, y), component);
    };
}

inline FieldSampler monogenic_component_field(const AlgebraParams& p, const ComplexAnalytic& alpha,
                                              const ComplexAnalytic& beta, int component) {
    require_elliptic(p);
    pick_component(ComponentVector{}, component);
    return [p, alpha, beta, component](double x, double y) {
        return pick_component(monogenic_components_elliptic(alpha, beta, p, x, y), component);
    };
}

// Exact polynomial expansions of the monogenic component fields; empty when
// any ingredient is not polynomial.
inline std::optional<Poly2Dd> monogenic_component_poly(const AlgebraParams& p,
                                                       const SplitAnalytic& alpha,
                                                       const SplitAnalytic& beta, int component) {
    require_hyperbolic(p);
    pick_component(ComponentVector{}, component);
    if (!alpha.p.is_polynomial() || !alpha.q.is_polynomial() || !beta.p.is_polynomial() ||
        !beta.q.is_polynomial())
        return std::nullopt;
    const double r2 = std::sqrt(2.0);
    const double l1 = p.k2r() / r2;
    const double l2 = p.k1r() / r2;
    // alpha1 = (p(x+y1) + q(x-y1))/2 with x+y1 = x - l1 y; beta rides x +- l2 y.
    const Poly2Dd ap = compose_linear(*alpha.p.poly_coeffs(), -l1);
    const Poly2Dd aq = compose_linear(*alpha.q.poly_coeffs(), +l1);
    const Poly2Dd bp = compose_linear(*beta.p.poly_coeffs(), +l2);
    const Poly2Dd bq = compose_linear(*beta.q.poly_coeffs(), -l2);
    const Poly2Dd a1 = (ap + aq) * 0.5, a2 = (ap - aq) * 0.5;
    const Poly2Dd b1 = (bp + bq) * 0.5, b2 = (bp - bq) * 0.5;
    const auto [i1, i2] = hyper_idempotents(p);
    switch (component) {
        case 1: return a1 * i1.cu + b1 * i2.cu;
        case 2: return a2 * i1.cu + b2 * i2.cu;
        case 3: return a2 * i1.cfe + b2 * i2.cfe;
        default: return a1 * i1.cfe + b1 * i2.cfe;
    }
}

inline std::optional<Poly2Dd> monogenic_component_poly(const AlgebraParams& p,
                                                       const ComplexAnalytic& alpha,
                                                       const ComplexAnalytic& beta,
                                                       int component) {
    require_elliptic(p);
    pick_component(ComponentVector{}, component);
    if (!alpha.is_polynomial() || !beta.is_polynomial()) return std::nullopt;
    const double r2 = std::sqrt(2.0);
    const Poly2Dc pa = compose_linear(*alpha.poly_coeffs(), p.k2 / r2);
    const Poly2Dc pb = compose_linear(*beta.poly_coeffs(), -p.k1 / r2);
    const auto [im, ip] = elliptic_idempotents(p);
    const Poly2Dc pcu = pa * im.cu + pb * ip.cu;
    const Poly2Dc pce = pa * im.ce + pb * ip.ce;
    switch (component) {
        case 1: return real_part(pcu);
        case 2: return imag_part(pcu);
        case 3: return real_part(pce);
        default: return imag_part(pce);
    }
}

}  // namespace biwave
