#pragma once

#include <mpfr.h>

#include <cassert>
#include <string>
#include <utility>

#include "partstat/bigint.hpp"

namespace partstat {

// Arbitrary-precision real, RAII wrapper over mpfr_t. Every value carries its
// own binary precision; binary operations allocate the result at the larger of
// the two operand precisions, so precision is decided at construction sites and
// then flows through expressions.
class Real {
  public:
    explicit Real(mpfr_prec_t bits) { mpfr_init2(v_, bits); }  // NaN
    Real(long x, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    Real(double x, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    Real(const Int& x, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_z(v_, x.raw(), MPFR_RNDN);
    }
    Real(const Rat& x, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_q(v_, x.raw(), MPFR_RNDN);
    }
    static Real from_str(const std::string& s, mpfr_prec_t bits) {
        Real r(bits);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
            throw Error("Real: invalid decimal string '" + s + "'");
        }
        return r;
    }
    // Default-constructed Reals are loud NaNs at minimal precision; containers
    // may default-construct but any arithmetic on one propagates NaN.
    Real() { mpfr_init2(v_, MPFR_PREC_MIN); }

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    const mpfr_t& raw() const { return v_; }
    mpfr_t& raw() { return v_; }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sgn() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // Nearest integer as an exact Int.
    Int round_to_int() const {
        Int z;
        mpfr_get_z(z.raw(), v_, MPFR_RNDN);
        return z;
    }
    Int floor_to_int() const {
        Int z;
        mpfr_get_z(z.raw(), v_, MPFR_RNDD);
        return z;
    }

    std::string to_string(long decimal_digits = 0) const {
        if (decimal_digits <= 0) {
            decimal_digits = static_cast<long>(prec() / 3.3219280948873626) + 2;
        }
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Re", static_cast<int>(decimal_digits - 1), v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    static Real pi(mpfr_prec_t bits) {
        Real r(bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static Real ln(long x, mpfr_prec_t bits) {
        Real r(bits);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        mpfr_log(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    // 10^e for integer e, handy for tolerances.
    static Real pow10(long e, mpfr_prec_t bits) {
        Real r(bits);
        mpfr_set_si(r.v_, 10, MPFR_RNDN);
        mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

#define PARTSTAT_REAL_BINOP(op, fn)                                   \
    friend Real operator op(const Real& a, const Real& b) {           \
        Real r(std::max(a.prec(), b.prec()));                         \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                              \
        return r;                                                     \
    }
    PARTSTAT_REAL_BINOP(+, mpfr_add)
    PARTSTAT_REAL_BINOP(-, mpfr_sub)
    PARTSTAT_REAL_BINOP(*, mpfr_mul)
    PARTSTAT_REAL_BINOP(/, mpfr_div)
#undef PARTSTAT_REAL_BINOP

    friend Real operator+(const Real& a, long b) {
        Real r(a.prec());
        mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator-(const Real& a, long b) {
        Real r(a.prec());
        mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator-(long a, const Real& b) {
        Real r(b.prec());
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, long b) {
        Real r(a.prec());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b) {
        Real r(a.prec());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator/(long a, const Real& b) {
        Real r(b.prec());
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a) {
        Real r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) { return *this = *this + o; }
    Real& operator-=(const Real& o) { return *this = *this - o; }
    Real& operator*=(const Real& o) { return *this = *this * o; }
    Real& operator/=(const Real& o) { return *this = *this / o; }

#define PARTSTAT_REAL_UNARY(name, fn)        \
    friend Real name(const Real& a) {        \
        Real r(a.prec());                    \
        fn(r.v_, a.v_, MPFR_RNDN);           \
        return r;                            \
    }
    PARTSTAT_REAL_UNARY(sqrt, mpfr_sqrt)
    PARTSTAT_REAL_UNARY(exp, mpfr_exp)
    PARTSTAT_REAL_UNARY(log, mpfr_log)
    PARTSTAT_REAL_UNARY(sin, mpfr_sin)
    PARTSTAT_REAL_UNARY(cos, mpfr_cos)
    PARTSTAT_REAL_UNARY(sinh, mpfr_sinh)
    PARTSTAT_REAL_UNARY(cosh, mpfr_cosh)
    PARTSTAT_REAL_UNARY(tanh, mpfr_tanh)
    PARTSTAT_REAL_UNARY(abs, mpfr_abs)
    PARTSTAT_REAL_UNARY(erfc, mpfr_erfc)
    PARTSTAT_REAL_UNARY(gamma, mpfr_gamma)
#undef PARTSTAT_REAL_UNARY

    friend Real floor_r(const Real& a) {
        Real r(a.prec());
        mpfr_floor(r.v_, a.v_);
        return r;
    }
    friend void sin_cos(Real& s, Real& c, const Real& a) {
        mpfr_prec_t p = a.prec();
        mpfr_set_prec(s.v_, p);
        mpfr_set_prec(c.v_, p);
        mpfr_sin_cos(s.v_, c.v_, a.v_, MPFR_RNDN);
    }
    friend Real atan2r(const Real& y, const Real& x) {
        Real r(std::max(y.prec(), x.prec()));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend Real hypot(const Real& x, const Real& y) {
        Real r(std::max(y.prec(), x.prec()));
        mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend Real pow(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real pow_si(const Real& a, long e) {
        Real r(a.prec());
        mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    friend Real sqr(const Real& a) {
        Real r(a.prec());
        mpfr_sqr(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real mul_2si(const Real& a, long e) {
        Real r(a.prec());
        mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    // Round to the given (smaller) precision; used to re-express results at the
    // caller's claimed precision.
    friend Real round_prec(const Real& a, mpfr_prec_t bits) {
        Real r(bits);
        mpfr_set(r.raw(), a.v_, MPFR_RNDN);
        return r;
    }

    friend int cmp(const Real& a, const Real& b) {
        assert(!a.is_nan() && !b.is_nan());
        return mpfr_cmp(a.v_, b.v_);
    }
    friend bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return cmp(a, b) == 0; }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }

    friend const Real& max(const Real& a, const Real& b) { return (a < b) ? b : a; }
    friend const Real& min(const Real& a, const Real& b) { return (a < b) ? a : b; }

  private:
    mpfr_t v_;
};

}  // namespace partstat
