#pragma once

// Dense bivariate polynomials with exact differentiation. This is the exact
// verification route for polynomial fields; the finite-difference route in
// fd.hpp is the independent counterpart.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "biwave/errors.hpp"

namespace biwave {

template <class T>
class Poly2D {
public:
    // All verification inputs stay at degree <= 8; the cap leaves headroom
    // while still catching runaway compositions.
    static constexpr int kMaxDegree = 32;

    Poly2D() = default;

    T coeff(int i, int j) const {
        if (i < 0 || j < 0 || i >= nx_ || j >= ny_) return T{};
        return c_[static_cast<std::size_t>(i) * ny_ + j];
    }

    void set_coeff(int i, int j, T v) {
        if (i < 0 || j < 0) throw InvalidParameter("polynomial exponents must be nonnegative");
        if (i > kMaxDegree || j > kMaxDegree)
            throw DegreeOverflow("polynomial degree cap " + std::to_string(kMaxDegree) +
                                 " exceeded");
        grow(i + 1, j + 1);
        c_[static_cast<std::size_t>(i) * ny_ + j] = v;
    }

    int max_i() const { return nx_ - 1; }  // -1 when empty
    int max_j() const { return ny_ - 1; }

    bool is_zero(double tol = 0.0) const {
        for (const T& v : c_)
            if (std::abs(v) > tol) return false;
        return true;
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const T& v : c_) m = std::max(m, static_cast<double>(std::abs(v)));
        return m;
    }

    T eval(double x, double y) const {
        T acc{};
        for (int i = nx_ - 1; i >= 0; --i) {
            T row{};
            for (int j = ny_ - 1; j >= 0; --j)
                row = row * y + c_[static_cast<std::size_t>(i) * ny_ + j];
            acc = acc * x + row;
        }
        return acc;
    }

    Poly2D dx() const {
        Poly2D r;
        for (int i = 1; i < nx_; ++i)
            for (int j = 0; j < ny_; ++j) {
                const T v = coeff(i, j);
                if (v != T{}) r.set_coeff(i - 1, j, v * static_cast<double>(i));
            }
        return r;
    }

    Poly2D dy() const {
        Poly2D r;
        for (int i = 0; i < nx_; ++i)
            for (int j = 1; j < ny_; ++j) {
                const T v = coeff(i, j);
                if (v != T{}) r.set_coeff(i, j - 1, v * static_cast<double>(j));
            }
        return r;
    }

    friend Poly2D operator+(const Poly2D& a, const Poly2D& b) {
        Poly2D r = a;
        for (int i = 0; i < b.nx_; ++i)
            for (int j = 0; j < b.ny_; ++j) {
                const T v = b.coeff(i, j);
                if (v != T{}) r.set_coeff(i, j, r.coeff(i, j) + v);
            }
        return r;
    }

    friend Poly2D operator-(const Poly2D& a, const Poly2D& b) { return a + b * T{-1.0}; }

    friend Poly2D operator*(const Poly2D& a, const T& s) {
        Poly2D r = a;
        for (T& v : r.c_) v = v * s;
        return r;
    }

    friend Poly2D operator*(const Poly2D& a, const Poly2D& b) {
        Poly2D r;
        if (a.nx_ == 0 || b.nx_ == 0) return r;
        if (a.max_i() + b.max_i() > kMaxDegree || a.max_j() + b.max_j() > kMaxDegree)
            throw DegreeOverflow("polynomial product exceeds degree cap");
        r.grow(a.nx_ + b.nx_ - 1, a.ny_ + b.ny_ - 1);
        for (int ia = 0; ia < a.nx_; ++ia)
            for (int ja = 0; ja < a.ny_; ++ja) {
                const T va = a.coeff(ia, ja);
                if (va == T{}) continue;
                for (int ib = 0; ib < b.nx_; ++ib)
                    for (int jb = 0; jb < b.ny_; ++jb) {
                        const T vb = b.coeff(ib, jb);
                        if (vb == T{}) continue;
                        r.c_[static_cast<std::size_t>(ia + ib) * r.ny_ + (ja + jb)] += va * vb;
                    }
            }
        return r;
    }

private:
    void grow(int nx, int ny) {
        if (nx <= nx_ && ny <= ny_) return;
        const int gx = std::max(nx, nx_), gy = std::max(ny, ny_);
        std::vector<T> grown(static_cast<std::size_t>(gx) * gy, T{});
        for (int i = 0; i < nx_; ++i)
            for (int j = 0; j < ny_; ++j)
                grown[static_cast<std::size_t>(i) * gy + j] =
                    c_[static_cast<std::size_t>(i) * ny_ + j];
        c_ = std::move(grown);
        nx_ = gx;
        ny_ = gy;
    }

    int nx_ = 0, ny_ = 0;
    std::vector<T> c_;
};

using Poly2Dd = Poly2D<double>;
using Poly2Dc = Poly2D<std::complex<double>>;

// d4/dx4 u - 2c d4/dx2dy2 u + d4/dy4 u, exactly.
template <class T>
Poly2D<T> biwave_apply_poly(const Poly2D<T>& u, double c) {
    const Poly2D<T> dxx = u.dx().dx();
    const Poly2D<T> dyy = u.dy().dy();
    return dxx.dx().dx() - dxx.dy().dy() * (2.0 * c) + dyy.dy().dy();
}

// Substitute t = x + lambda y into sum coeffs[n] t^n.
template <class T>
Poly2D<T> compose_linear(const std::vector<T>& coeffs, const T& lambda) {
    Poly2D<T> result;
    Poly2D<T> base;
    base.set_coeff(1, 0, T{1.0});
    base.set_coeff(0, 1, lambda);
    Poly2D<T> power;
    power.set_coeff(0, 0, T{1.0});
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (n > 0) power = power * base;
        if (coeffs[n] != T{}) result = result + power * coeffs[n];
    }
    return result;
}

inline Poly2Dd real_part(const Poly2Dc& p) {
    Poly2Dd r;
    for (int i = 0; i <= p.max_i(); ++i)
        for (int j = 0; j <= p.max_j(); ++j)
            if (p.coeff(i, j).real() != 0.0) r.set_coeff(i, j, p.coeff(i, j).real());
    return r;
}

inline Poly2Dd imag_part(const Poly2Dc& p) {
    Poly2Dd r;
    for (int i = 0; i <= p.max_i(); ++i)
        for (int j = 0; j <= p.max_j(); ++j)
            if (p.coeff(i, j).imag() != 0.0) r.set_coeff(i, j, p.coeff(i, j).imag());
    return r;
}

}  // namespace biwave
