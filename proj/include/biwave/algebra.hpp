#pragma once

// Arithmetic of the two commutative algebras attached to the c-biwave
// operator d4/dx4 - 2c d4/dx2dy2 + d4/dy4.
//
// For c > 1 the algebra is four-dimensional over R with basis (u, f, e, fe),
// u the identity, and Cayley table
//
//     f*f  = u,   e*e = u - m*fe,   fe = ef,   m = sqrt(2(c-1)).
//
// For 0 < c < 1 it is two-dimensional over C with basis (u, e) and
//
//     e*e = u + i*mu*e,   mu = sqrt(2(1-c)).
//
// Both split along a pair of orthogonal idempotents, which is what makes the
// constructive solution theory work.

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "biwave/errors.hpp"

namespace biwave {

using cplx = std::complex<double>;

enum class Regime { Hyperbolic, Elliptic };

namespace fault {
// Test hook: added to the e*e -> fe structure constant of the hyperbolic
// Cayley table. Nonzero values deliberately break the algebra so that the
// selftest suites can demonstrate they detect corruption. Leave at zero.
inline double cayley_perturbation = 0.0;
}  // namespace fault

// Constants of one algebra instance.
//
// Hyperbolic (c > 1):  m = sqrt(2(c-1)), k1 = sqrt(c+1) - sqrt(c-1),
//                      k2 = sqrt(c+1) + sqrt(c-1); k1, k2 real positive.
// Elliptic (0 < c < 1): mu = sqrt(2(1-c)), k1 = sqrt(c+1) - i sqrt(1-c),
//                       k2 = conj(k1).
// In both regimes k1*k2 = 2.
struct AlgebraParams {
    double c = 0.0;
    Regime regime = Regime::Hyperbolic;
    double m = 0.0;   // hyperbolic only
    double mu = 0.0;  // elliptic only
    cplx k1{};
    cplx k2{};
    // |c-1| < 1e-3: constants are fine but the hyperbolic synthesis
    // coefficient k1^2/(k1^2-k2^2) is poorly conditioned.
    bool near_degenerate = false;

    double k1r() const { return k1.real(); }
    double k2r() const { return k2.real(); }
};

inline void require_hyperbolic(const AlgebraParams& p) {
    if (p.regime != Regime::Hyperbolic)
        throw WrongRegime("operation requires the hyperbolic algebra (c > 1), got c = " +
                          std::to_string(p.c));
}

inline void require_elliptic(const AlgebraParams& p) {
    if (p.regime != Regime::Elliptic)
        throw WrongRegime("operation requires the elliptic algebra (0 < c < 1), got c = " +
                          std::to_string(p.c));
}

inline AlgebraParams make_params(double c) {
    if (!std::isfinite(c) || c <= 0.0)
        throw InvalidParameter("c must be a finite positive real, got " + std::to_string(c));
    if (std::abs(c - 1.0) < 1e-9)
        throw DegenerateParameter("degenerate parameter: c = 1 (plain biwave) is not supported");
    AlgebraParams p;
    p.c = c;
    p.near_degenerate = std::abs(c - 1.0) < 1e-3;
    if (c > 1.0) {
        p.regime = Regime::Hyperbolic;
        p.m = std::sqrt(2.0 * (c - 1.0));
        p.k1 = cplx(std::sqrt(c + 1.0) - std::sqrt(c - 1.0), 0.0);
        p.k2 = cplx(std::sqrt(c + 1.0) + std::sqrt(c - 1.0), 0.0);
    } else {
        p.regime = Regime::Elliptic;
        p.mu = std::sqrt(2.0 * (1.0 - c));
        p.k1 = cplx(std::sqrt(c + 1.0), -std::sqrt(1.0 - c));
        p.k2 = cplx(std::sqrt(c + 1.0), std::sqrt(1.0 - c));
    }
    return p;
}

// ---------------------------------------------------------------------------
// Hyperbolic elements: coordinates on the basis (u, f, e, fe).

struct HyperElement {
    double cu = 0.0, cf = 0.0, ce = 0.0, cfe = 0.0;

    friend HyperElement operator+(const HyperElement& a, const HyperElement& b) {
        return {a.cu + b.cu, a.cf + b.cf, a.ce + b.ce, a.cfe + b.cfe};
    }
    friend HyperElement operator-(const HyperElement& a, const HyperElement& b) {
        return {a.cu - b.cu, a.cf - b.cf, a.ce - b.ce, a.cfe - b.cfe};
    }
    friend HyperElement operator*(const HyperElement& a, double s) {
        return {a.cu * s, a.cf * s, a.ce * s, a.cfe * s};
    }
    friend HyperElement operator*(double s, const HyperElement& a) { return a * s; }
    friend HyperElement operator-(const HyperElement& a) { return a * -1.0; }
};

inline constexpr HyperElement hyper_u{1.0, 0.0, 0.0, 0.0};
inline constexpr HyperElement hyper_f{0.0, 1.0, 0.0, 0.0};
inline constexpr HyperElement hyper_e{0.0, 0.0, 1.0, 0.0};
inline constexpr HyperElement hyper_fe{0.0, 0.0, 0.0, 1.0};

inline double max_abs(const HyperElement& a) {
    return std::max(std::max(std::abs(a.cu), std::abs(a.cf)),
                    std::max(std::abs(a.ce), std::abs(a.cfe)));
}

// Coordinate-wise comparison at absolute tolerance tol scaled by
// max(1, largest coordinate magnitude of either side).
inline bool approx_equal(const HyperElement& a, const HyperElement& b, double tol = 1e-12) {
    const double scale = std::max(1.0, std::max(max_abs(a), max_abs(b)));
    return max_abs(a - b) <= tol * scale;
}

namespace detail {

// Structure constants on the basis order (u, f, e, fe). The paper-style
// table gives u*x = x, f*f = u, e*e = u - m*fe; the remaining products
// follow from commutativity and associativity:
//
//     f*fe  = f*(f*e)   = (f*f)*e = e
//     e*fe  = f*(e*e)   = f - m*(f*fe) = f - m*e
//     fe*fe = (f*f)*(e*e) = e*e = u - m*fe
//
// A brute-force consistency test over all basis triples guards these.
inline std::array<std::array<std::array<double, 4>, 4>, 4> hyper_structure_tensor(double m) {
    std::array<std::array<std::array<double, 4>, 4>, 4> s{};
    auto set = [&s](int i, int j, std::array<double, 4> prod) {
        s[i][j] = prod;
        s[j][i] = prod;
    };
    const double me = m + fault::cayley_perturbation;
    set(0, 0, {1, 0, 0, 0});
    set(0, 1, {0, 1, 0, 0});
    set(0, 2, {0, 0, 1, 0});
    set(0, 3, {0, 0, 0, 1});
    set(1, 1, {1, 0, 0, 0});
    set(1, 2, {0, 0, 0, 1});
    set(1, 3, {0, 0, 1, 0});
    set(2, 2, {1, 0, 0, -me});
    set(2, 3, {0, 1, -m, 0});
    set(3, 3, {1, 0, 0, -m});
    return s;
}

}  // namespace detail

// Product in the hyperbolic algebra. Accumulation runs in extended
// precision so that identities checked at 1e-12 absolute survive the
// cancellations that show up for large c.
inline HyperElement hyper_mul(const HyperElement& a, const HyperElement& b,
                              const AlgebraParams& p) {
    require_hyperbolic(p);
    const auto s = detail::hyper_structure_tensor(p.m);
    const std::array<double, 4> av{a.cu, a.cf, a.ce, a.cfe};
    const std::array<double, 4> bv{b.cu, b.cf, b.ce, b.cfe};
    std::array<long double, 4> out{};
    for (int i = 0; i < 4; ++i) {
        if (av[i] == 0.0) continue;
        for (int j = 0; j < 4; ++j) {
            if (bv[j] == 0.0) continue;
            const long double ab = static_cast<long double>(av[i]) * bv[j];
            for (int k = 0; k < 4; ++k) {
                if (s[i][j][k] != 0.0) out[k] += ab * s[i][j][k];
            }
        }
    }
    return {static_cast<double>(out[0]), static_cast<double>(out[1]),
            static_cast<double>(out[2]), static_cast<double>(out[3])};
}

// ---------------------------------------------------------------------------
// Elliptic elements: complex coordinates on the basis (u, e). The four real
// components satisfy cu = u1 + i u2, ce = u3 + i u4.

struct EllipticElement {
    cplx cu{};
    cplx ce{};

    friend EllipticElement operator+(const EllipticElement& a, const EllipticElement& b) {
        return {a.cu + b.cu, a.ce + b.ce};
    }
    friend EllipticElement operator-(const EllipticElement& a, const EllipticElement& b) {
        return {a.cu - b.cu, a.ce - b.ce};
    }
    friend EllipticElement operator*(const EllipticElement& a, const cplx& s) {
        return {a.cu * s, a.ce * s};
    }
    friend EllipticElement operator*(const cplx& s, const EllipticElement& a) { return a * s; }
};

inline const EllipticElement elliptic_u{cplx(1.0, 0.0), cplx(0.0, 0.0)};
inline const EllipticElement elliptic_e{cplx(0.0, 0.0), cplx(1.0, 0.0)};

inline double max_abs(const EllipticElement& a) {
    return std::max(std::max(std::abs(a.cu.real()), std::abs(a.cu.imag())),
                    std::max(std::abs(a.ce.real()), std::abs(a.ce.imag())));
}

inline bool approx_equal(const EllipticElement& a, const EllipticElement& b, double tol = 1e-12) {
    const double scale = std::max(1.0, std::max(max_abs(a), max_abs(b)));
    return max_abs(a - b) <= tol * scale;
}

// (s1 u + t1 e)(s2 u + t2 e) = (s1 s2 + t1 t2) u + (s1 t2 + s2 t1 + i mu t1 t2) e.
inline EllipticElement elliptic_mul(const EllipticElement& a, const EllipticElement& b,
                                    const AlgebraParams& p) {
    require_elliptic(p);
    using cld = std::complex<long double>;
    const cld s1(a.cu.real(), a.cu.imag()), t1(a.ce.real(), a.ce.imag());
    const cld s2(b.cu.real(), b.cu.imag()), t2(b.ce.real(), b.ce.imag());
    const cld tt = t1 * t2;
    const cld cu = s1 * s2 + tt;
    const cld ce = s1 * t2 + s2 * t1 + cld(0.0L, static_cast<long double>(p.mu)) * tt;
    return {cplx(static_cast<double>(cu.real()), static_cast<double>(cu.imag())),
            cplx(static_cast<double>(ce.real()), static_cast<double>(ce.imag()))};
}

// ---------------------------------------------------------------------------
// Idempotent pairs. Each squares to itself, the pair sums to u, and the
// product of the two is zero.

// i1 = k1/(k1+k2) u - sqrt(2)/(k1+k2) fe,  i2 = k2/(k1+k2) u + sqrt(2)/(k1+k2) fe.
inline std::pair<HyperElement, HyperElement> hyper_idempotents(const AlgebraParams& p) {
    require_hyperbolic(p);
    const double denom = p.k1r() + p.k2r();
    const double r2 = std::sqrt(2.0);
    return {HyperElement{p.k1r() / denom, 0.0, 0.0, -r2 / denom},
            HyperElement{p.k2r() / denom, 0.0, 0.0, r2 / denom}};
}

// I- = k1/(k1+k2) u + sqrt(2)/(k1+k2) e,  I+ = k2/(k1+k2) u - sqrt(2)/(k1+k2) e.
inline std::pair<EllipticElement, EllipticElement> elliptic_idempotents(const AlgebraParams& p) {
    require_elliptic(p);
    const cplx denom = p.k1 + p.k2;
    const cplx r2(std::sqrt(2.0), 0.0);
    return {EllipticElement{p.k1 / denom, r2 / denom},
            EllipticElement{p.k2 / denom, -r2 / denom}};
}

// Reconstruction of the basis element e from the idempotents, evaluated with
// algebra multiplication. Returns coordinates (0,0,1,0) resp. (0,1) up to
// rounding.
inline HyperElement hyper_e_from_idempotents(const AlgebraParams& p) {
    const auto [i1, i2] = hyper_idempotents(p);
    const double r2 = std::sqrt(2.0);
    return hyper_mul(hyper_f, i2, p) * (p.k1r() / r2) - hyper_mul(hyper_f, i1, p) * (p.k2r() / r2);
}

inline EllipticElement elliptic_e_from_idempotents(const AlgebraParams& p) {
    const auto [im, ip] = elliptic_idempotents(p);
    const double r2 = std::sqrt(2.0);
    return im * (p.k2 / r2) - ip * (p.k1 / r2);
}

// ---------------------------------------------------------------------------
// Generator identity u^4 - 2c u^2 e^2 + e^4 = 0, evaluated in the algebra.
// The returned element is the residual; all coordinates should vanish.

inline HyperElement hyper_generator_residual(const AlgebraParams& p) {
    require_hyperbolic(p);
    const HyperElement e2 = hyper_mul(hyper_e, hyper_e, p);
    const HyperElement e4 = hyper_mul(e2, e2, p);
    // u^4 = u and u^2 e^2 = e^2; combine per coordinate in extended precision.
    const long double c2 = 2.0L * static_cast<long double>(p.c);
    auto comb = [&](double uc, double e2c, double e4c) {
        return static_cast<double>(static_cast<long double>(uc) - c2 * e2c + e4c);
    };
    return {comb(1.0, e2.cu, e4.cu), comb(0.0, e2.cf, e4.cf), comb(0.0, e2.ce, e4.ce),
            comb(0.0, e2.cfe, e4.cfe)};
}

inline EllipticElement elliptic_generator_residual(const AlgebraParams& p) {
    require_elliptic(p);
    const EllipticElement e2 = elliptic_mul(elliptic_e, elliptic_e, p);
    const EllipticElement e4 = elliptic_mul(e2, e2, p);
    using cld = std::complex<long double>;
    const cld c2(2.0L * static_cast<long double>(p.c), 0.0L);
    auto comb = [&](cplx uc, cplx e2c, cplx e4c) {
        const cld r = cld(uc.real(), uc.imag()) - c2 * cld(e2c.real(), e2c.imag()) +
                      cld(e4c.real(), e4c.imag());
        return cplx(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    };
    return {comb(cplx(1.0, 0.0), e2.cu, e4.cu), comb(cplx(0.0, 0.0), e2.ce, e4.ce)};
}

inline double generator_residual_max(const AlgebraParams& p) {
    return p.regime == Regime::Hyperbolic ? max_abs(hyper_generator_residual(p))
                                          : max_abs(elliptic_generator_residual(p));
}

// ---------------------------------------------------------------------------
// Inversion in the subspace B_c = {s u + t e} of the elliptic algebra.

// Determinant of the 2x2 system (s u + t e)(x u + y e) = u.
inline cplx bc_determinant(double s, double t, const AlgebraParams& p) {
    require_elliptic(p);
    return cplx(s * s - t * t, p.mu * t * s);
}

// Solves s x + t y = 1, t x + (s + i mu t) y = 0. The inverse exists for
// every nonzero (s, t).
inline EllipticElement invert_in_bc(double s, double t, const AlgebraParams& p) {
    require_elliptic(p);
    if (s == 0.0 && t == 0.0) throw NotInvertible("zero element of B_c is not invertible");
    const cplx delta = bc_determinant(s, t, p);
    const cplx x = (cplx(s, 0.0) + cplx(0.0, p.mu) * t) / delta;
    const cplx y = cplx(-t, 0.0) / delta;
    return {x, y};
}

// ---------------------------------------------------------------------------
// Matrix representation of the elliptic algebra and its trace form.

struct Mat2c {
    cplx a11{}, a12{}, a21{}, a22{};

    friend Mat2c operator*(const Mat2c& a, const Mat2c& b) {
        return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
                a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
    }
    cplx trace() const { return a11 + a22; }
};

inline double max_abs(const Mat2c& a) {
    auto c = [](const cplx& z) { return std::max(std::abs(z.real()), std::abs(z.imag())); };
    return std::max(std::max(c(a.a11), c(a.a12)), std::max(c(a.a21), c(a.a22)));
}

// Linear extension of u -> identity, e -> [[0, 1], [1, i mu]].
inline Mat2c matrix_rep(const EllipticElement& v, const AlgebraParams& p) {
    require_elliptic(p);
    const cplx imu(0.0, p.mu);
    return {v.cu, v.ce, v.ce, v.cu + imu * v.ce};
}

// det [[tr(uu), tr(ue)], [tr(ue), tr(ee)]]; equals 2(1+c), hence nonzero,
// which certifies semisimplicity.
inline cplx trace_form_det(const AlgebraParams& p) {
    require_elliptic(p);
    const Mat2c ru = matrix_rep(elliptic_u, p);
    const Mat2c re = matrix_rep(elliptic_e, p);
    const cplx tuu = (ru * ru).trace();
    const cplx tue = (ru * re).trace();
    const cplx tee = (re * re).trace();
    return tuu * tee - tue * tue;
}

// ---------------------------------------------------------------------------
// Spectral coordinates: the coefficients of w = x u + y e on the idempotent
// basis. Hyperbolic coordinates are split-complex scalars a + f b (f^2 = 1);
// elliptic ones are ordinary complex numbers.

struct SplitComplex {
    double a = 0.0;  // u part
    double b = 0.0;  // f part
};

struct HyperSpectral {
    SplitComplex w1;  // x + f y1,  y1 = -(k2/sqrt2) y
    SplitComplex w2;  // x + f y2,  y2 = +(k1/sqrt2) y
};

struct EllipticSpectral {
    cplx w1;  // x + (k2/sqrt2) y
    cplx w2;  // x - (k1/sqrt2) y
};

inline HyperSpectral decompose_w_hyper(double x, double y, const AlgebraParams& p) {
    require_hyperbolic(p);
    const double r2 = std::sqrt(2.0);
    return {SplitComplex{x, -(p.k2r() / r2) * y}, SplitComplex{x, (p.k1r() / r2) * y}};
}

inline EllipticSpectral decompose_w_elliptic(double x, double y, const AlgebraParams& p) {
    require_elliptic(p);
    const double r2 = std::sqrt(2.0);
    return {cplx(x, 0.0) + (p.k2 / r2) * y, cplx(x, 0.0) - (p.k1 / r2) * y};
}

// Inverse of decompose_w_*: w1 i1 + w2 i2 evaluated in the algebra.
inline HyperElement recombine_hyper(const HyperSpectral& s, const AlgebraParams& p) {
    const auto [i1, i2] = hyper_idempotents(p);
    return hyper_mul(HyperElement{s.w1.a, s.w1.b, 0.0, 0.0}, i1, p) +
           hyper_mul(HyperElement{s.w2.a, s.w2.b, 0.0, 0.0}, i2, p);
}

inline EllipticElement recombine_elliptic(const EllipticSpectral& s, const AlgebraParams& p) {
    const auto [im, ip] = elliptic_idempotents(p);
    return elliptic_mul(EllipticElement{s.w1, cplx()}, im, p) +
           elliptic_mul(EllipticElement{s.w2, cplx()}, ip, p);
}

}  // namespace biwave
