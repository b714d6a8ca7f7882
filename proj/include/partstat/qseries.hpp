#pragma once

#include <cassert>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "partstat/bigint.hpp"
#include "partstat/errors.hpp"

namespace partstat {

// Sparse Laurent polynomial in one variable w with Int coefficients, keyed by
// (possibly negative) exponent. Zero coefficients are never stored.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(long constant) {
        if (constant != 0) c_[0] = Int(constant);
    }
    static LaurentPoly monomial(long exponent, Int coeff) {
        LaurentPoly p;
        if (!coeff.is_zero()) p.c_[exponent] = std::move(coeff);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<long, Int>& terms() const { return c_; }
    Int at(long e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Int() : it->second;
    }
    long min_exponent() const {
        assert(!c_.empty());
        return c_.begin()->first;
    }
    long max_exponent() const {
        assert(!c_.empty());
        return c_.rbegin()->first;
    }
    // Sum of coefficients, i.e. the w = 1 specialization.
    Int eval_one() const {
        Int s;
        for (const auto& [e, v] : c_) s += v;
        return s;
    }

    void add_term(long e, const Int& v) {
        if (v.is_zero()) return;
        Int& slot = c_[e];
        slot += v;
        if (slot.is_zero()) c_.erase(e);
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, v);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, -v);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [e, v] : a.c_) r.c_[e] = -v;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, va] : a.c_) {
            for (const auto& [eb, vb] : b.c_) {
                r.add_term(ea + eb, va * vb);
            }
        }
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const Int& s) {
        LaurentPoly r;
        if (s.is_zero()) return r;
        for (const auto& [e, v] : a.c_) r.c_[e] = v * s;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, long s) { return a * Int(s); }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.c_ == b.c_;
    }

    // w -> w^factor (exponents scaled).
    LaurentPoly scaled_exponents(long factor) const {
        LaurentPoly r;
        for (const auto& [e, v] : c_) r.add_term(e * factor, v);
        return r;
    }
    // multiply by w^s.
    LaurentPoly shifted(long s) const {
        LaurentPoly r;
        for (const auto& [e, v] : c_) r.c_[e + s] = v;
        return r;
    }
    // image in Z[w]/(w^t - 1): exponents reduced to [0,t).
    LaurentPoly reduced_mod(long t) const {
        assert(t >= 1);
        LaurentPoly r;
        for (const auto& [e, v] : c_) r.add_term(((e % t) + t) % t, v);
        return r;
    }

    std::string to_string() const;  // for diagnostics

  private:
    std::map<long, Int> c_;
};

// Exact Laurent division. The divisor's leading coefficient must be a unit;
// a nonzero remainder aborts with the offending series index attached.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den,
                         long order_index);

// Formal power series in q truncated at `order` (exclusive), coefficients in
// an exact ring R (Int, Rat, or LaurentPoly). Arithmetic never leaves R.
template <typename R>
struct TruncatedSeries {
    long order;
    std::vector<R> c;

    explicit TruncatedSeries(long order_) : order(order_) {
        if (order < 1) throw Error("series order must be at least 1");
        c.resize(static_cast<size_t>(order));
    }
    static TruncatedSeries one(long order) {
        TruncatedSeries s(order);
        s.c[0] = R(1L);
        return s;
    }

    R& operator[](long i) { return c[static_cast<size_t>(i)]; }
    const R& operator[](long i) const { return c[static_cast<size_t>(i)]; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        assert(a.order == b.order);
        TruncatedSeries r(a.order);
        for (long i = 0; i < a.order; ++i) r[i] = a[i] + b[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        assert(a.order == b.order);
        TruncatedSeries r(a.order);
        for (long i = 0; i < a.order; ++i) r[i] = a[i] - b[i];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        assert(a.order == b.order);
        TruncatedSeries r(a.order);
        for (long i = 0; i < a.order; ++i) {
            if (a[i].is_zero()) continue;
            for (long j = 0; i + j < a.order; ++j) {
                if (b[j].is_zero()) continue;
                r[i + j] += a[i] * b[j];
            }
        }
        return r;
    }

    // Multiplicative inverse; the constant term must be the ring's one.
    TruncatedSeries inverse() const {
        if (!(c[0] == R(1L))) {
            throw Error("series inverse requires constant term 1");
        }
        TruncatedSeries b(order);
        b[0] = R(1L);
        for (long n = 1; n < order; ++n) {
            R s{};
            for (long k = 1; k <= n; ++k) {
                if (c[static_cast<size_t>(k)].is_zero()) continue;
                s += c[static_cast<size_t>(k)] * b[n - k];
            }
            b[n] = -s;
        }
        return b;
    }

    TruncatedSeries truncated(long new_order) const {
        assert(new_order <= order);
        TruncatedSeries r(new_order);
        for (long i = 0; i < new_order; ++i) r[i] = c[static_cast<size_t>(i)];
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order == b.order && a.c == b.c;
    }
};

// (q^j; q)_infinity as an exact integer series.
TruncatedSeries<Int> pochhammer(long a_exponent, long order);

// (q^2; q^2)_infinity, the even-variable counterpart.
TruncatedSeries<Int> pochhammer_even(long order);

// 1 - 24 sum sigma_1(n) q^n.
TruncatedSeries<Int> e2_series(long order);

// Bilateral theta-like numerator of the second-moment function: the series
// whose product with 1/(q;q)_inf is r2_series. Exposed for ring-closure tests.
TruncatedSeries<Int> r2_numerator_series(long order);

// Generating function of the second symmetrized rank moments eta2(n).
TruncatedSeries<Int> r2_series(long order);

// Odd counterparts: numerator and the eta2_odd(n) generating function.
TruncatedSeries<Int> r2_odd_numerator_series(long order);
TruncatedSeries<Int> r2_odd_series(long order);

// Rank generating function R(w;q): coefficient of q^n is sum_m N(m,n) w^m.
// Computed from the Eulerian q^{n^2} / ((wq;q)_n (w^{-1}q;q)_n) form. With
// t_root = (j,t) the computation runs in the group ring Z[w]/(w^t - 1) after
// the substitution w -> w^j (exponents j*e reduced mod t).
TruncatedSeries<LaurentPoly> rank_series(
    long order, std::optional<std::pair<long, long>> t_root = std::nullopt);

// Same function from the bilateral Appell-type representation; cheap at large
// order and an independent cross-check of the Eulerian form.
TruncatedSeries<LaurentPoly> rank_series_appell(long order);

// Full-rank generating function: per q^n, the Laurent polynomial
// w^2 ([q^n](R(w;q) - R(w^2;q))) / ((1-w)(w^3-1)), divided exactly.
// Coefficient of w^m in [q^n] is NF2(m,n).
TruncatedSeries<LaurentPoly> r2_full_rank_series(long order);

// q^{1/24} prod (1-q^n) split into the fractional prefactor and an integer
// series; numeric evaluation is covered by the transform tests.
struct EtaObject {
    Rat prefactor_exponent;
    TruncatedSeries<Int> series;
};
EtaObject eta_object(long order);

// JSON form {order, ring, coeffs}; Laurent coefficients serialize as maps
// from exponent to decimal string.
std::string series_to_json(const TruncatedSeries<Int>& s);
std::string series_to_json(const TruncatedSeries<Rat>& s);
std::string series_to_json(const TruncatedSeries<LaurentPoly>& s);

}  // namespace partstat
