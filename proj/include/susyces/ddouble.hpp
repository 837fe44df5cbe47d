#pragma once

// Double-double arithmetic: an unevaluated sum hi + lo of two binary64
// numbers with |lo| <= ulp(hi)/2, giving roughly 106 bits of significand.
// Only the operations needed by the series summations are provided.

#include <cmath>
#include <complex>

namespace susyces {

struct DDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DDouble() = default;
    constexpr DDouble(double h) : hi(h), lo(0.0) {}  // NOLINT: implicit on purpose
    constexpr DDouble(double h, double l) : hi(h), lo(l) {}

    [[nodiscard]] double to_double() const { return hi + lo; }
};

namespace dd_detail {

inline DDouble two_sum(double a, double b)
{
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DDouble quick_two_sum(double a, double b)
{
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DDouble two_prod(double a, double b)
{
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

}  // namespace dd_detail

inline DDouble operator-(const DDouble& a) { return {-a.hi, -a.lo}; }

inline DDouble operator+(const DDouble& a, const DDouble& b)
{
    DDouble s = dd_detail::two_sum(a.hi, b.hi);
    DDouble t = dd_detail::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = dd_detail::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return dd_detail::quick_two_sum(s.hi, s.lo);
}

inline DDouble operator-(const DDouble& a, const DDouble& b) { return a + (-b); }

inline DDouble operator*(const DDouble& a, const DDouble& b)
{
    DDouble p = dd_detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return dd_detail::quick_two_sum(p.hi, p.lo);
}

inline DDouble operator/(const DDouble& a, const DDouble& b)
{
    // Two Newton-style correction steps on the quotient.
    const double q1 = a.hi / b.hi;
    DDouble r = a - b * DDouble(q1);
    const double q2 = r.hi / b.hi;
    r = r - b * DDouble(q2);
    const double q3 = r.hi / b.hi;
    return dd_detail::quick_two_sum(q1, q2) + DDouble(q3);
}

inline DDouble& operator+=(DDouble& a, const DDouble& b) { return a = a + b; }
inline DDouble& operator-=(DDouble& a, const DDouble& b) { return a = a - b; }
inline DDouble& operator*=(DDouble& a, const DDouble& b) { return a = a * b; }

inline double abs(const DDouble& a) { return std::abs(a.hi + a.lo); }

/// Complex number with double-double components.
struct DDComplex {
    DDouble re;
    DDouble im;

    constexpr DDComplex() = default;
    constexpr DDComplex(DDouble r, DDouble i = DDouble()) : re(r), im(i) {}
    DDComplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}  // NOLINT

    [[nodiscard]] std::complex<double> to_complex() const
    {
        return {re.to_double(), im.to_double()};
    }
};

inline DDComplex operator+(const DDComplex& a, const DDComplex& b) { return {a.re + b.re, a.im + b.im}; }
inline DDComplex operator-(const DDComplex& a, const DDComplex& b) { return {a.re - b.re, a.im - b.im}; }
inline DDComplex operator-(const DDComplex& a) { return {-a.re, -a.im}; }

inline DDComplex operator*(const DDComplex& a, const DDComplex& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline DDComplex operator*(const DDComplex& a, const DDouble& s) { return {a.re * s, a.im * s}; }
inline DDComplex operator/(const DDComplex& a, const DDouble& s) { return {a.re / s, a.im / s}; }

inline DDComplex& operator+=(DDComplex& a, const DDComplex& b) { return a = a + b; }

/// Magnitude rounded to double; adequate for convergence tests.
inline double abs(const DDComplex& z) { return std::hypot(z.re.to_double(), z.im.to_double()); }

}  // namespace susyces
