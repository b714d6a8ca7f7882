#pragma once

#include <gmp.h>

#include <cassert>
#include <cstdlib>
#include <string>
#include <utility>

#include "partstat/errors.hpp"

namespace partstat {

// Arbitrary-precision integer, RAII wrapper over mpz_t.
class Int {
  public:
    Int() { mpz_init(v_); }
    Int(long x) { mpz_init_set_si(v_, x); }  // NOLINT: implicit by design
    explicit Int(const std::string& decimal) {
        if (mpz_init_set_str(v_, decimal.c_str(), 10) != 0) {
            mpz_clear(v_);
            throw Error("Int: invalid decimal string '" + decimal + "'");
        }
    }
    Int(const Int& o) { mpz_init_set(v_, o.v_); }
    Int(Int&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~Int() { mpz_clear(v_); }

    const mpz_t& raw() const { return v_; }
    mpz_t& raw() { return v_; }

    bool is_zero() const { return mpz_sgn(v_) == 0; }
    int sgn() const { return mpz_sgn(v_); }
    bool fits_long() const { return mpz_fits_slong_p(v_) != 0; }
    long to_long() const {
        assert(fits_long());
        return mpz_get_si(v_);
    }
    double to_double() const { return mpz_get_d(v_); }
    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, v_);
        std::string out(s);
        std::free(s);
        return out;
    }

    Int& operator+=(const Int& o) {
        mpz_add(v_, v_, o.v_);
        return *this;
    }
    Int& operator-=(const Int& o) {
        mpz_sub(v_, v_, o.v_);
        return *this;
    }
    Int& operator*=(const Int& o) {
        mpz_mul(v_, v_, o.v_);
        return *this;
    }
    Int& operator+=(long x) {
        if (x >= 0)
            mpz_add_ui(v_, v_, static_cast<unsigned long>(x));
        else
            mpz_sub_ui(v_, v_, static_cast<unsigned long>(-x));
        return *this;
    }
    Int& operator-=(long x) { return *this += -x; }
    Int& operator*=(long x) {
        mpz_mul_si(v_, v_, x);
        return *this;
    }

    friend Int operator+(Int a, const Int& b) { return a += b; }
    friend Int operator-(Int a, const Int& b) { return a -= b; }
    friend Int operator*(Int a, const Int& b) { return a *= b; }
    friend Int operator+(Int a, long b) { return a += b; }
    friend Int operator-(Int a, long b) { return a -= b; }
    friend Int operator*(Int a, long b) { return a *= b; }
    friend Int operator*(long a, Int b) { return b *= a; }
    friend Int operator-(Int a) {
        mpz_neg(a.v_, a.v_);
        return a;
    }

    // Floor division and nonnegative remainder.
    friend Int fdiv_q(const Int& a, const Int& b) {
        Int q;
        mpz_fdiv_q(q.v_, a.v_, b.v_);
        return q;
    }
    friend Int mod_nonneg(const Int& a, const Int& b) {
        Int r;
        mpz_mod(r.v_, a.v_, b.v_);
        return r;
    }
    // Exact division, asserting divisibility.
    friend Int divexact(const Int& a, const Int& b) {
        assert(!b.is_zero());
        assert(mpz_divisible_p(a.raw(), b.raw()));
        Int q;
        mpz_divexact(q.v_, a.v_, b.v_);
        return q;
    }
    bool divisible_by(const Int& b) const { return mpz_divisible_p(v_, b.v_) != 0; }
    bool divisible_by(long b) const {
        return mpz_divisible_ui_p(v_, static_cast<unsigned long>(b)) != 0;
    }

    friend Int abs(Int a) {
        mpz_abs(a.v_, a.v_);
        return a;
    }
    friend Int gcd(const Int& a, const Int& b) {
        Int g;
        mpz_gcd(g.v_, a.v_, b.v_);
        return g;
    }
    friend Int pow_ui(const Int& a, unsigned long e) {
        Int r;
        mpz_pow_ui(r.v_, a.v_, e);
        return r;
    }

    friend int cmp(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_); }
    friend bool operator==(const Int& a, const Int& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Int& a, const Int& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Int& a, const Int& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Int& a, const Int& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const Int& a, long b) { return mpz_cmp_si(a.v_, b) == 0; }
    friend bool operator!=(const Int& a, long b) { return mpz_cmp_si(a.v_, b) != 0; }

  private:
    mpz_t v_;
};

// gcd on machine integers (GMP not needed for the small modular arithmetic).
inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Modular inverse of a mod m (m >= 1), throws NoSolutionError when gcd(a,m) != 1.
inline long inv_mod_long(long a, long m) {
    assert(m >= 1);
    if (m == 1) return 0;
    long r0 = m, r1 = ((a % m) + m) % m;
    long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        long t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw NoSolutionError("inv_mod_long: arguments not coprime");
    return ((t0 % m) + m) % m;
}

// Exact rational, RAII wrapper over mpq_t, always canonical.
class Rat {
  public:
    Rat() { mpq_init(v_); }
    Rat(long num, long den = 1) {
        assert(den != 0);
        mpq_init(v_);
        mpq_set_si(v_, num, 1);
        Rat d;
        mpq_set_si(d.v_, den, 1);
        mpq_div(v_, v_, d.v_);
    }
    Rat(const Int& num, const Int& den) {
        assert(!den.is_zero());
        mpq_init(v_);
        mpz_set(mpq_numref(v_), num.raw());
        mpz_set(mpq_denref(v_), den.raw());
        mpq_canonicalize(v_);
    }
    Rat(const Rat& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rat(Rat&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rat() { mpq_clear(v_); }

    const mpq_t& raw() const { return v_; }

    Int num() const {
        Int n;
        mpz_set(n.raw(), mpq_numref(v_));
        return n;
    }
    Int den() const {
        Int d;
        mpz_set(d.raw(), mpq_denref(v_));
        return d;
    }
    bool is_zero() const { return mpq_sgn(v_) == 0; }
    int sgn() const { return mpq_sgn(v_); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }
    double to_double() const { return mpq_get_d(v_); }
    std::string to_string() const {
        char* s = mpq_get_str(nullptr, 10, v_);
        std::string out(s);
        std::free(s);
        return out;
    }

    Int floor() const {
        Int q;
        mpz_fdiv_q(q.raw(), mpq_numref(v_), mpq_denref(v_));
        return q;
    }

    Rat& operator+=(const Rat& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        assert(!o.is_zero());
        mpq_div(v_, v_, o.v_);
        return *this;
    }
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(Rat a) {
        mpq_neg(a.v_, a.v_);
        return a;
    }
    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend int cmp(const Rat& a, const Rat& b) { return mpq_cmp(a.v_, b.v_); }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a, b) > 0; }

  private:
    mpq_t v_;
};

}  // namespace partstat
