#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "biwave/fd.hpp"
#include "biwave/poly2d.hpp"
#include "biwave/selftest.hpp"

using namespace biwave;

namespace {
const Rect kBox{-1.0, 1.0, -1.0, 1.0};
}

TEST_CASE("biwave stencil is exact on low-degree fields", "[fd]") {
    // x^3 y: cubic per variable, annihilated by every term of the stencil.
    const ScalarGrid g = ScalarGrid::sample_step(
        [](double x, double y) { return x * x * x * y; }, kBox, 0.125);
    const ScalarGrid r = biwave_residual_fd(g, 5.0);
    REQUIRE(r.max_abs() <= 1e-9 * std::max(1.0, g.max_abs()));
}

TEST_CASE("biwave stencil reports 24 on the x^4 negative control", "[fd]") {
    const ScalarGrid g =
        ScalarGrid::sample_step([](double x, double) { return x * x * x * x; }, kBox, 0.05);
    const ScalarGrid r = biwave_residual_fd(g, 5.0);
    double lo = 1e300, hi = -1e300;
    for (double v : r.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    REQUIRE(std::abs(lo - 24.0) < 1e-6);
    REQUIRE(std::abs(hi - 24.0) < 1e-6);
    REQUIRE(std::abs(fourth_derivative_scale(g, 5.0) - 24.0) < 1e-6);

    const ResidualReport rep = biwave_verify_report(g, 5.0);
    REQUIRE(std::abs(rep.max_raw - 24.0) < 1e-6);
    REQUIRE(rep.scaled > 0.5);  // decisively fails any sane tolerance
}

TEST_CASE("characteristic plane waves are stencil-exact solutions", "[fd]") {
    const AlgebraParams p = make_params(5.0);
    const double l = p.k2r() / std::sqrt(2.0);
    const ScalarGrid g = ScalarGrid::sample_step(
        [&](double x, double y) {
            const double t = x - l * y;
            return t * t * t * t;
        },
        kBox, 0.03125);
    const ResidualReport rep = biwave_verify_report(g, 5.0);
    REQUIRE(rep.max_raw <= 1e-6 * rep.scale);
}

TEST_CASE("grid size preconditions", "[fd]") {
    const ScalarGrid tiny = ScalarGrid::sample([](double, double) { return 0.0; },
                                               Rect{0, 1, 0, 1}, 4, 4);
    REQUIRE_THROWS_AS(biwave_residual_fd(tiny, 5.0), GridTooSmall);
    const ScalarGrid thin = ScalarGrid::sample([](double, double) { return 0.0; },
                                               Rect{0, 1, 0, 1}, 12, 4);
    REQUIRE_THROWS_AS(biwave_residual_fd(thin, 5.0), GridTooSmall);
    const ScalarGrid eight = ScalarGrid::sample([](double, double) { return 0.0; },
                                                Rect{0, 1, 0, 1}, 8, 12);
    REQUIRE_THROWS_AS(apply_wave_factors(eight, 5.0, FactorOrder::FirstThenSecond), GridTooSmall);
}

TEST_CASE("FD residual converges to the polynomial oracle", "[fd]") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double c : {2.0, 5.0, 0.5}) {
        Poly2Dd poly;
        for (int i = 0; i <= 6; ++i)
            for (int j = 0; i + j <= 6; ++j) poly.set_coeff(i, j, u(rng));
        poly.set_coeff(6, 0, 0.7);
        poly.set_coeff(0, 6, -0.6);
        poly.set_coeff(3, 3, 0.8);
        const Poly2Dd image = biwave_apply_poly(poly, c);
        auto err = [&](double h) {
            const ScalarGrid g = ScalarGrid::sample_step(
                [&](double x, double y) { return poly.eval(x, y); }, kBox, h);
            const ScalarGrid r = biwave_residual_fd(g, c);
            double worst = 0.0;
            for (int i = 0; i < r.nx; ++i)
                for (int j = 0; j < r.ny; ++j)
                    worst = std::max(worst, std::abs(r.at(i, j) - image.eval(r.x(i), r.y(j))));
            return worst;
        };
        const double e1 = err(0.1), e2 = err(0.05);
        REQUIRE(e1 / e2 > 2.5);
        REQUIRE(e1 / e2 < 6.0);
    }
}

TEST_CASE("FD residual is exact to rounding on degree <= 4 fields", "[fd]") {
    std::mt19937_64 rng(515);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double c : {0.5, 5.0}) {
        Poly2Dd poly;
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; i + j <= 4; ++j) poly.set_coeff(i, j, u(rng));
        const Poly2Dd image = biwave_apply_poly(poly, c);
        const ScalarGrid g = ScalarGrid::sample_step(
            [&](double x, double y) { return poly.eval(x, y); }, kBox, 0.125);
        const ScalarGrid r = biwave_residual_fd(g, c);
        double worst = 0.0;
        for (int i = 0; i < r.nx; ++i)
            for (int j = 0; j < r.ny; ++j)
                worst = std::max(worst, std::abs(r.at(i, j) - image.eval(r.x(i), r.y(j))));
        REQUIRE(worst <= 1e-8 * std::max(1.0, image.max_abs_coeff()));
    }
}

TEST_CASE("wave factor composition reproduces the direct operator", "[fd]") {
    {
        const ScalarGrid g = ScalarGrid::sample_step(
            [](double x, double) { return x * x * x * x; }, kBox, 0.05);
        for (FactorOrder ord : {FactorOrder::FirstThenSecond, FactorOrder::SecondThenFirst}) {
            const ScalarGrid composed = apply_wave_factors(g, 5.0, ord);
            double lo = 1e300, hi = -1e300;
            for (double v : composed.values) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            REQUIRE(std::abs(lo - 24.0) < 1e-6);  // only d4/dx4 survives on x^4
            REQUIRE(std::abs(hi - 24.0) < 1e-6);
        }
    }
    {
        const ScalarGrid zero = ScalarGrid::sample([](double, double) { return 0.0; }, kBox, 33, 33);
        REQUIRE(wave_factorization_residual(zero, 5.0, FactorOrder::FirstThenSecond).max_abs() ==
                0.0);
    }
    std::mt19937_64 rng(606);
    for (double c : {1.5, 5.0}) {
        const auto f = selftest_detail::TrigField::random(rng, 3);
        const ScalarGrid g = ScalarGrid::sample_step(
            [&](double x, double y) { return f(x, y); }, kBox, 0.02);
        const double dscale = biwave_residual_fd(g, c).max_abs();
        REQUIRE(dscale > 0.1);  // generic trig fields are far from solutions
        const ScalarGrid r1 = wave_factorization_residual(g, c, FactorOrder::FirstThenSecond);
        const ScalarGrid r2 = wave_factorization_residual(g, c, FactorOrder::SecondThenFirst);
        REQUIRE(r1.max_abs() <= 1e-2 * dscale);
        REQUIRE(r2.max_abs() <= 1e-2 * dscale);
        // The two orders commute; check at a step where h^-4 rounding noise
        // sits well below the 1e-8 agreement tolerance.
        const ScalarGrid gc = ScalarGrid::sample_step(
            [&](double x, double y) { return f(x, y); }, kBox, 0.04);
        const double cscale = biwave_residual_fd(gc, c).max_abs();
        const ScalarGrid c1 = apply_wave_factors(gc, c, FactorOrder::FirstThenSecond);
        const ScalarGrid c2 = apply_wave_factors(gc, c, FactorOrder::SecondThenFirst);
        double diff = 0.0;
        for (std::size_t k = 0; k < c1.values.size(); ++k)
            diff = std::max(diff, std::abs(c1.values[k] - c2.values[k]));
        REQUIRE(diff <= 1e-8 * cscale);
    }
    REQUIRE_THROWS_AS(wave_factorization_residual(
                          ScalarGrid::sample([](double, double) { return 0.0; }, kBox, 16, 16),
                          0.5, FactorOrder::FirstThenSecond),
                      WrongRegime);
}

TEST_CASE("factorized operator converges at second order to the symbol image", "[fd]") {
    std::mt19937_64 rng(607);
    for (double c : {1.5, 5.0}) {
        const auto f = selftest_detail::TrigField::random(rng, 3);
        auto err = [&](double h, FactorOrder ord) {
            const ScalarGrid g = ScalarGrid::sample_step(
                [&](double x, double y) { return f(x, y); }, kBox, h);
            const ScalarGrid r = apply_wave_factors(g, c, ord);
            double worst = 0.0;
            for (int i = 0; i < r.nx; ++i)
                for (int j = 0; j < r.ny; ++j)
                    worst = std::max(worst,
                                     std::abs(r.at(i, j) - f.biwave_exact(r.x(i), r.y(j), c)));
            return worst;
        };
        for (FactorOrder ord : {FactorOrder::FirstThenSecond, FactorOrder::SecondThenFirst}) {
            const double e1 = err(0.02, ord), e2 = err(0.01, ord);
            REQUIRE(e1 / e2 > 2.5);
            REQUIRE(e1 / e2 < 5.5);
        }
    }
}

TEST_CASE("factor composition matches the operator symbolically", "[fd]") {
    // Expanding (d2x - (2/k2^2) d2y)(d2x - (2/k1^2) d2y) in exact polynomial
    // arithmetic reproduces the (1, -2c, 1) coefficients of the operator.
    std::mt19937_64 rng(808);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double c : {2.0, 5.0}) {
        const AlgebraParams p = make_params(c);
        const double a = 2.0 / (p.k2r() * p.k2r());
        const double b = 2.0 / (p.k1r() * p.k1r());
        Poly2Dd poly;
        for (int i = 0; i <= 6; ++i)
            for (int j = 0; i + j <= 6; ++j) poly.set_coeff(i, j, u(rng));
        auto factor = [](const Poly2Dd& q, double coef) {
            return q.dx().dx() - q.dy().dy() * coef;
        };
        const Poly2Dd via_factors = factor(factor(poly, a), b);
        const Poly2Dd direct = biwave_apply_poly(poly, c);
        const Poly2Dd diff = via_factors - direct;
        REQUIRE(diff.max_abs_coeff() <= 1e-12 * std::max(1.0, direct.max_abs_coeff()));
    }
}

TEST_CASE("characteristic roots solve the quartic", "[fd]") {
    {
        const auto roots = characteristic_roots(make_params(5.0));
        REQUIRE(std::abs(roots[0] - cplx(0.31783724519578224, 0.0)) < 1e-13);
        REQUIRE(std::abs(roots[1] + cplx(0.31783724519578224, 0.0)) < 1e-13);
        REQUIRE(std::abs(roots[2] - cplx(3.1462643699419723, 0.0)) < 1e-13);
        REQUIRE(std::abs(roots[3] + cplx(3.1462643699419723, 0.0)) < 1e-13);
    }
    {
        const auto roots = characteristic_roots(make_params(0.5));
        REQUIRE(std::abs(roots[0] - cplx(0.8660254037844387, -0.5)) < 1e-13);
        REQUIRE(std::abs(roots[2] - cplx(0.8660254037844387, 0.5)) < 1e-13);
    }
    for (double c : {1.5, 2.0, 5.0, 10.0, 0.1, 0.5, 0.9}) {
        const AlgebraParams p = make_params(c);
        cplx prod(1.0, 0.0);
        for (const cplx& l : characteristic_roots(p)) {
            const cplx l2 = l * l;
            REQUIRE(std::abs(l2 * l2 - 2.0 * c * l2 + 1.0) < 1e-10);
            prod *= l;
        }
        REQUIRE(std::abs(prod - 1.0) < 1e-12);
    }
}
