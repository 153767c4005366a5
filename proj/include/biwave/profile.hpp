#pragma once

// One-dimensional profile functions with exact derivatives. These are the
// building blocks every characteristic-direction construction rides on; all
// supported kinds are smooth, so fourth-order differentiability is automatic.

#include <cmath>
#include <utility>
#include <variant>
#include <vector>

#include "biwave/errors.hpp"

namespace biwave {

struct PolynomialProfile {
    std::vector<double> coeffs;  // coeffs[n] multiplies t^n
};

struct SineProfile {
    double amplitude = 1.0;
    double frequency = 1.0;
    double phase = 0.0;
};

struct ExponentialProfile {
    double amplitude = 1.0;
    double rate = 1.0;
};

struct GaussianProfile {
    double amplitude = 1.0;
    double center = 0.0;
    double width = 1.0;
};

class Profile1D {
public:
    using Kind = std::variant<PolynomialProfile, SineProfile, ExponentialProfile, GaussianProfile>;

    Profile1D() : kind_(PolynomialProfile{}) {}  // identically zero
    explicit Profile1D(Kind kind) : kind_(std::move(kind)) {}

    static Profile1D zero() { return Profile1D(); }
    static Profile1D polynomial(std::vector<double> coeffs) {
        return Profile1D(PolynomialProfile{std::move(coeffs)});
    }
    static Profile1D sine(double amplitude, double frequency, double phase = 0.0) {
        return Profile1D(SineProfile{amplitude, frequency, phase});
    }
    static Profile1D exponential(double amplitude, double rate) {
        return Profile1D(ExponentialProfile{amplitude, rate});
    }
    static Profile1D gaussian(double amplitude, double center, double width) {
        if (width <= 0.0) throw InvalidParameter("gaussian width must be positive");
        return Profile1D(GaussianProfile{amplitude, center, width});
    }

    double operator()(double t) const { return derivative(t, 0); }

    // Exact k-th derivative. Any nonnegative order works for every kind.
    double derivative(double t, int order) const {
        if (order < 0) throw InvalidParameter("derivative order must be nonnegative");
        return std::visit([&](const auto& k) { return eval_impl(k, t, order); }, kind_);
    }

    bool is_polynomial() const { return std::holds_alternative<PolynomialProfile>(kind_); }

    // Coefficients when polynomial, nullptr otherwise.
    const std::vector<double>* poly_coeffs() const {
        const auto* p = std::get_if<PolynomialProfile>(&kind_);
        return p ? &p->coeffs : nullptr;
    }

    bool is_zero() const {
        const auto* p = std::get_if<PolynomialProfile>(&kind_);
        if (!p) return false;
        for (double c : p->coeffs)
            if (c != 0.0) return false;
        return true;
    }

    const Kind& kind() const { return kind_; }

private:
    static double eval_impl(const PolynomialProfile& p, double t, int order) {
        // Horner on the order-th derivative's coefficients, formed on the fly.
        const auto& a = p.coeffs;
        const int n = static_cast<int>(a.size());
        double acc = 0.0;
        for (int i = n - 1; i >= order; --i) {
            double fall = 1.0;
            for (int j = 0; j < order; ++j) fall *= static_cast<double>(i - j);
            acc = acc * t + a[static_cast<std::size_t>(i)] * fall;
        }
        return acc;
    }

    static double eval_impl(const SineProfile& s, double t, int order) {
        const double arg = s.frequency * t + s.phase + 0.5 * M_PI * order;
        return s.amplitude * std::pow(s.frequency, order) * std::sin(arg);
    }

    static double eval_impl(const ExponentialProfile& e, double t, int order) {
        return e.amplitude * std::pow(e.rate, order) * std::exp(e.rate * t);
    }

    static double eval_impl(const GaussianProfile& g, double t, int order) {
        // d^k/dt^k exp(-z^2/2) = (-1)^k He_k(z) exp(-z^2/2) / width^k with
        // He_k the probabilists' Hermite polynomials.
        const double z = (t - g.center) / g.width;
        double he_prev = 1.0, he = z;
        if (order == 0) he = 1.0;
        for (int k = 1; k < order; ++k) {
            const double next = z * he - static_cast<double>(k) * he_prev;
            he_prev = he;
            he = next;
        }
        const double sign = (order % 2 == 0) ? 1.0 : -1.0;
        return g.amplitude * sign * he * std::exp(-0.5 * z * z) / std::pow(g.width, order);
    }

    Kind kind_;
};

}  // namespace biwave
