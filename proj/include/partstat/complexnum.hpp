#pragma once

#include <string>
#include <utility>

#include "partstat/real.hpp"

namespace partstat {

// Complex number over Real. Branch cuts follow the principal convention
// (arguments in (-pi, pi]); callers sitting near a cut assert on the sign of
// the real part at the call site rather than relying on luck.
struct Complex {
    Real re;
    Real im;

    Complex() = default;
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(Real r) : re(std::move(r)), im(0L, re.prec()) {}
    Complex(long r, mpfr_prec_t bits) : re(r, bits), im(0L, bits) {}
    static Complex i(mpfr_prec_t bits) { return Complex(Real(0L, bits), Real(1L, bits)); }

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return Complex(a.re + b.re, a.im + b.im);
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return Complex(a.re - b.re, a.im - b.im);
    }
    friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Complex operator*(const Complex& a, const Real& b) {
        return Complex(a.re * b, a.im * b);
    }
    friend Complex operator*(const Real& a, const Complex& b) { return b * a; }
    friend Complex operator*(const Complex& a, long b) {
        return Complex(a.re * b, a.im * b);
    }
    friend Complex operator*(long a, const Complex& b) { return b * a; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = sqr(b.re) + sqr(b.im);
        return Complex((a.re * b.re + a.im * b.im) / d,
                       (a.im * b.re - a.re * b.im) / d);
    }
    friend Complex operator/(const Complex& a, const Real& b) {
        return Complex(a.re / b, a.im / b);
    }
    friend Complex operator/(const Complex& a, long b) {
        return Complex(a.re / b, a.im / b);
    }
    friend Complex operator/(const Real& a, const Complex& b) {
        return Complex(a) / b;
    }
    friend Complex operator/(long a, const Complex& b) {
        Real d = sqr(b.re) + sqr(b.im);
        return Complex((a * b.re) / d, (-a * b.im) / d);
    }
    friend Complex operator+(const Complex& a, const Real& b) {
        return Complex(a.re + b, a.im);
    }
    friend Complex operator+(const Real& a, const Complex& b) { return b + a; }
    friend Complex operator+(const Complex& a, long b) { return Complex(a.re + b, a.im); }
    friend Complex operator+(long a, const Complex& b) { return b + a; }
    friend Complex operator-(const Complex& a, long b) { return Complex(a.re - b, a.im); }
    friend Complex operator-(long a, const Complex& b) { return Complex(a - b.re, -b.im); }
    friend Complex operator-(const Complex& a, const Real& b) {
        return Complex(a.re - b, a.im);
    }
    friend Complex operator-(const Real& a, const Complex& b) {
        return Complex(a - b.re, -b.im);
    }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
    Complex& operator/=(const Complex& o) { return *this = *this / o; }

    friend Complex conj(const Complex& a) { return Complex(a.re, -a.im); }
    friend Complex times_i(const Complex& a) { return Complex(-a.im, a.re); }
    friend Real abs(const Complex& a) { return hypot(a.re, a.im); }
    friend Real norm_sq(const Complex& a) { return sqr(a.re) + sqr(a.im); }
    friend Real arg(const Complex& a) { return atan2r(a.im, a.re); }

    friend Complex exp(const Complex& a) {
        Real m = exp(a.re);
        Real s(a.prec()), c(a.prec());
        sin_cos(s, c, a.im);
        return Complex(m * c, m * s);
    }
    friend Complex log(const Complex& a) { return Complex(log(abs(a)), arg(a)); }
    friend Complex sqrt(const Complex& a) { return pow_half_int(a, 1); }
    // a^(p/2) on the principal branch, for the half-integer powers that the
    // transformation laws use (p = +-1, +-3, ...). Exact for p even as well.
    friend Complex pow_half_int(const Complex& a, long p) {
        Complex l = log(a);
        return exp(Complex(l.re * p / 2, l.im * p / 2));
    }
    friend Complex pow_int(const Complex& a, long p) {
        mpfr_prec_t bits = a.prec();
        if (p == 0) return Complex(1, bits);
        Complex base = (p > 0) ? a : (1L / a);
        unsigned long e = static_cast<unsigned long>(p > 0 ? p : -p);
        Complex acc(1, bits);
        while (e != 0) {
            if (e & 1UL) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }
    friend Complex sinh(const Complex& a) {
        Complex e = exp(a);
        return (e - 1L / e) / 2L;
    }
    friend Complex cosh(const Complex& a) {
        Complex e = exp(a);
        return (e + 1L / e) / 2L;
    }

    std::string to_string(long decimal_digits = 0) const {
        return "(" + re.to_string(decimal_digits) + ", " +
               im.to_string(decimal_digits) + ")";
    }
};

// exp(i*t) for real t.
inline Complex expi(const Real& t) {
    Real s(t.prec()), c(t.prec());
    sin_cos(s, c, t);
    return Complex(c, s);
}

}  // namespace partstat
