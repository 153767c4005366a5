#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "biwave/synthesis.hpp"

using namespace biwave;

namespace {
const Rect kBox{-1.0, 1.0, -1.0, 1.0};

double field_max_residual(const FieldSampler& u, double c, double h) {
    return biwave_residual_fd(ScalarGrid::sample_step(u, kBox, h), c).max_abs();
}
}  // namespace

TEST_CASE("synth_hyperbolic: zero spec and characteristic monomials", "[synthesis]") {
    const HyperbolicSolutionSpec zero;
    const FieldSampler z = synth_hyperbolic(zero, 5.0);
    REQUIRE(z(0.3, -0.8) == 0.0);

    HyperbolicSolutionSpec quad;
    quad.g1 = Profile1D::polynomial({0.0, 0.0, 1.0});
    const FieldSampler u = synth_hyperbolic(quad, 5.0);
    REQUIRE(std::abs(u(1.0, 0.0) - 1.0) < 1e-14);

    const auto poly = synth_hyperbolic_poly(quad, 5.0);
    REQUIRE(poly.has_value());
    const AlgebraParams p = make_params(5.0);
    const double l2 = p.k1r() / std::sqrt(2.0);
    REQUIRE(std::abs(poly->coeff(2, 0) - 1.0) < 1e-14);
    REQUIRE(std::abs(poly->coeff(1, 1) - 2.0 * l2) < 1e-14);
    REQUIRE(std::abs(poly->coeff(0, 2) - l2 * l2) < 1e-14);
    REQUIRE(biwave_apply_poly(*poly, 5.0).max_abs_coeff() <=
            1e-9 * std::max(1.0, poly->max_abs_coeff()));
}

TEST_CASE("synth_hyperbolic: the F channel carries the kappa weight", "[synthesis]") {
    HyperbolicSolutionSpec spec;
    spec.F1 = Profile1D::polynomial({0.0, 0.0, 0.0, 0.0, 1.0});
    const auto poly = synth_hyperbolic_poly(spec, 5.0);
    REQUIRE(poly.has_value());
    // u = kappa (x - (k2/sqrt2) y)^4 with kappa frozen from the radical
    // formulas at 40 digits.
    const double kappa = -0.010310363079828770;
    REQUIRE(std::abs(hyper_kappa(make_params(5.0)) - kappa) < 1e-15);
    const double l1 = 3.1462643699419723;
    REQUIRE(std::abs(poly->coeff(4, 0) - kappa) < 1e-15);
    REQUIRE(std::abs(poly->coeff(3, 1) + 4.0 * kappa * l1) < 1e-13);
    REQUIRE(std::abs(poly->coeff(0, 4) - kappa * l1 * l1 * l1 * l1) < 1e-12);
    REQUIRE(biwave_apply_poly(*poly, 5.0).max_abs_coeff() <=
            1e-9 * std::max(1.0, poly->max_abs_coeff()));

    // Sampler and expansion are the same field.
    const FieldSampler u = synth_hyperbolic(spec, 5.0);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int t = 0; t < 50; ++t) {
        const double x = d(rng), y = d(rng);
        REQUIRE(std::abs(u(x, y) - poly->eval(x, y)) < 1e-12);
    }
}

TEST_CASE("synthesis rejects the wrong regime", "[synthesis]") {
    REQUIRE_THROWS_AS(synth_hyperbolic(HyperbolicSolutionSpec{}, 0.5), WrongRegime);
    REQUIRE_THROWS_AS(synth_hyperbolic(HyperbolicSolutionSpec{}, 1.0), DegenerateParameter);
    REQUIRE_THROWS_AS(synth_hyperbolic(HyperbolicSolutionSpec{}, -2.0), InvalidParameter);
    REQUIRE_THROWS_AS(synth_elliptic(EllipticSolutionSpec{}, 5.0), WrongRegime);
    EllipticSolutionSpec bad;
    bad.comp_alpha = 3;
    REQUIRE_THROWS_AS(synth_elliptic(bad, 0.5), InvalidParameter);
    const AlgebraParams p5 = make_params(5.0);
    REQUIRE_THROWS_AS(monogenic_component_field(p5, SplitAnalytic{}, SplitAnalytic{}, 0),
                      InvalidParameter);
}

TEST_CASE("partial solution identity holds at second order", "[synthesis]") {
    {
        // Quartic profile: the residual is a constant times h^2, so halving
        // the step divides it by four exactly.
        const Profile1D F1 = Profile1D::polynomial({0.0, 0.0, 0.0, 0.0, 1.0});
        const double r1 =
            partial_solution_residual(F1, Profile1D::zero(), 5.0, kBox, 0.04).max_abs();
        const double r2 =
            partial_solution_residual(F1, Profile1D::zero(), 5.0, kBox, 0.02).max_abs();
        REQUIRE(r1 / r2 > 3.9);
        REQUIRE(r1 / r2 < 4.1);
    }
    {
        const ScalarGrid r = partial_solution_residual(Profile1D::zero(), Profile1D::zero(), 5.0,
                                                       kBox, 0.05);
        REQUIRE(r.max_abs() == 0.0);
    }
    {
        const Profile1D F1 = Profile1D::sine(1.0, 1.0, 0.0);
        const double r1 =
            partial_solution_residual(F1, Profile1D::zero(), 2.0, kBox, 0.04).max_abs();
        const double r2 =
            partial_solution_residual(F1, Profile1D::zero(), 2.0, kBox, 0.02).max_abs();
        REQUIRE(r1 / r2 > 2.5);
        REQUIRE(r1 / r2 < 6.0);
    }
    REQUIRE_THROWS_AS(
        partial_solution_residual(Profile1D::zero(), Profile1D::zero(), 0.5, kBox, 0.05),
        WrongRegime);
}

TEST_CASE("synth_elliptic: components of analytic images solve the equation", "[synthesis]") {
    {
        const FieldSampler z = synth_elliptic(EllipticSolutionSpec{}, 0.5);
        REQUIRE(z(0.4, 0.9) == 0.0);
    }
    {
        EllipticSolutionSpec spec;
        spec.alpha = ComplexAnalytic::polynomial(
            {cplx(0, 0), cplx(0, 0), cplx(0, 0), cplx(0, 0), cplx(1.0, 0.0)});  // w^4
        const auto poly = synth_elliptic_poly(spec, 0.5);
        REQUIRE(poly.has_value());
        REQUIRE(biwave_apply_poly(*poly, 0.5).max_abs_coeff() <=
                1e-9 * std::max(1.0, poly->max_abs_coeff()));

        const FieldSampler u = synth_elliptic(spec, 0.5);
        const cplx lambda(0.8660254037844387, 0.5);  // k2/sqrt2 at c = 0.5
        std::mt19937_64 rng(8);
        std::uniform_real_distribution<double> d(-1.0, 1.0);
        for (int t = 0; t < 50; ++t) {
            const double x = d(rng), y = d(rng);
            const cplx w = cplx(x, 0.0) + lambda * y;
            REQUIRE(std::abs(u(x, y) - (w * w * w * w).real()) < 1e-12);
            REQUIRE(std::abs(poly->eval(x, y) - u(x, y)) < 1e-12);
        }
    }
    {
        EllipticSolutionSpec spec;
        spec.beta = ComplexAnalytic::scaled_exp(cplx(1.0, 0.0));
        spec.comp_beta = 2;
        const FieldSampler u = synth_elliptic(spec, 0.5);
        const double r1 = field_max_residual(u, 0.5, 0.04);
        const double r2 = field_max_residual(u, 0.5, 0.02);
        REQUIRE(r1 / r2 > 2.5);
        REQUIRE(r1 / r2 < 6.0);
    }
}

TEST_CASE("monogenic component fields solve the equation", "[synthesis]") {
    {
        const AlgebraParams p = make_params(5.0);
        const SplitAnalytic constant{Profile1D::polynomial({0.7}), Profile1D::polynomial({0.7})};
        const FieldSampler u = monogenic_component_field(p, constant, constant, 1);
        REQUIRE(field_max_residual(u, 5.0, 0.1) < 1e-12);
    }
    {
        const AlgebraParams p = make_params(5.0);
        const SplitAnalytic alpha{Profile1D::polynomial({0, 0, 0, 0, 1.0}), Profile1D::zero()};
        const FieldSampler u = monogenic_component_field(p, alpha, SplitAnalytic{}, 1);
        // Quartic characteristic field: the stencil is exact, only rounding
        // noise remains.
        REQUIRE(field_max_residual(u, 5.0, 0.05) < 1e-7);
    }
    {
        const AlgebraParams p = make_params(0.5);
        const ComplexAnalytic alpha =
            ComplexAnalytic::polynomial({cplx(), cplx(), cplx(), cplx(1.0, 0.0)});  // w^3
        const ComplexAnalytic beta =
            ComplexAnalytic::polynomial({cplx(), cplx(), cplx(1.0, 0.0)});  // w^2
        for (int k = 1; k <= 4; ++k) {
            const auto poly = monogenic_component_poly(p, alpha, beta, k);
            REQUIRE(poly.has_value());
            REQUIRE(biwave_apply_poly(*poly, 0.5).max_abs_coeff() <=
                    1e-9 * std::max(1.0, poly->max_abs_coeff()));
        }
    }
}

TEST_CASE("monogenic pathway matches the direct d'Alembert combination", "[synthesis]") {
    const AlgebraParams p = make_params(5.0);
    const SplitAnalytic alpha{Profile1D::polynomial({0.1, 0.5, 0.0, 1.2}),
                              Profile1D::polynomial({-0.4, 0.0, 0.9})};
    const SplitAnalytic beta{Profile1D::polynomial({0.3, -0.2, 0.4, 0.0, 0.6}),
                             Profile1D::polynomial({0.8})};
    const auto [i1, i2] = hyper_idempotents(p);
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> d(-1.0, 1.0);

    const auto poly1 = monogenic_component_poly(p, alpha, beta, 1);
    const auto poly4 = monogenic_component_poly(p, alpha, beta, 4);
    REQUIRE(poly1.has_value());
    REQUIRE(poly4.has_value());
    const FieldSampler f1 = monogenic_component_field(p, alpha, beta, 1);
    const FieldSampler f4 = monogenic_component_field(p, alpha, beta, 4);

    for (int t = 0; t < 60; ++t) {
        const double x = d(rng), y = d(rng);
        const HyperSpectral w = decompose_w_hyper(x, y, p);
        const SplitComplex av = eval_split(alpha, w.w1.a, w.w1.b);
        const SplitComplex bv = eval_split(beta, w.w2.a, w.w2.b);
        // u1 = a1 alpha1 + a2 beta1, u4 = b1 alpha1 + b2 beta1.
        REQUIRE(std::abs(f1(x, y) - (i1.cu * av.a + i2.cu * bv.a)) < 1e-12);
        REQUIRE(std::abs(f4(x, y) - (i1.cfe * av.a + i2.cfe * bv.a)) < 1e-12);
        REQUIRE(std::abs(f1(x, y) - poly1->eval(x, y)) < 1e-10);
        REQUIRE(std::abs(f4(x, y) - poly4->eval(x, y)) < 1e-10);
    }

    const AlgebraParams pe = make_params(0.5);
    const ComplexAnalytic ea = ComplexAnalytic::polynomial({cplx(0.2, 0.1), cplx(1.0, -0.5)});
    const ComplexAnalytic eb = ComplexAnalytic::polynomial({cplx(-0.3, 0.4), cplx(0.0, 1.0)});
    for (int k = 1; k <= 4; ++k) {
        const auto poly = monogenic_component_poly(pe, ea, eb, k);
        const FieldSampler f = monogenic_component_field(pe, ea, eb, k);
        REQUIRE(poly.has_value());
        for (int t = 0; t < 30; ++t) {
            const double x = d(rng), y = d(rng);
            REQUIRE(std::abs(f(x, y) - poly->eval(x, y)) < 1e-10);
        }
    }
}

TEST_CASE("superposition across spec slots", "[synthesis]") {
    HyperbolicSolutionSpec a, b, both;
    a.g1 = Profile1D::sine(0.8, 1.4, 0.2);
    a.g2 = Profile1D::polynomial({0.0, 0.3, 0.0, -0.5});
    b.F1 = Profile1D::gaussian(1.1, 0.0, 1.0);
    b.F2 = Profile1D::exponential(0.4, 0.7);
    both.g1 = a.g1;
    both.g2 = a.g2;
    both.F1 = b.F1;
    both.F2 = b.F2;
    const FieldSampler ua = synth_hyperbolic(a, 2.0);
    const FieldSampler ub = synth_hyperbolic(b, 2.0);
    const FieldSampler us = synth_hyperbolic(both, 2.0);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        const double x = d(rng), y = d(rng);
        REQUIRE(std::abs(ua(x, y) + ub(x, y) - us(x, y)) < 1e-12);
    }
}

TEST_CASE("each channel annihilates its own wave factor", "[synthesis]") {
    const AlgebraParams p = make_params(5.0);
    const double coef_y1 = 2.0 / (p.k2r() * p.k2r());
    const double coef_y2 = 2.0 / (p.k1r() * p.k1r());

    // Cubic profiles make the 3-point second differences exact, so the
    // matching factor yields zero to rounding while the other factor does not.
    HyperbolicSolutionSpec gpart;
    gpart.g1 = Profile1D::polynomial({0.0, 0.0, 0.0, 1.0});
    const ScalarGrid gg = ScalarGrid::sample_step(synth_hyperbolic(gpart, 5.0), kBox, 0.05);
    REQUIRE(apply_wave_factor(gg, coef_y2).max_abs() < 1e-9);
    REQUIRE(apply_wave_factor(gg, coef_y1).max_abs() > 1e-2);

    HyperbolicSolutionSpec fpart;
    fpart.F1 = Profile1D::polynomial({0.0, 0.0, 0.0, 1.0});
    const ScalarGrid fg = ScalarGrid::sample_step(synth_hyperbolic(fpart, 5.0), kBox, 0.05);
    REQUIRE(apply_wave_factor(fg, coef_y1).max_abs() < 1e-9);
    REQUIRE(apply_wave_factor(fg, coef_y2).max_abs() > 1e-4);
}
