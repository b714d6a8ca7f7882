#include "partstat/qseries.hpp"

#include <sstream>

#include "partstat/partitions.hpp"

namespace partstat {

std::string LaurentPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : c_) {
        if (!first) os << " + ";
        os << v.to_string() << "*w^" << e;
        first = false;
    }
    return os.str();
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den,
                         long order_index) {
    assert(!den.is_zero());
    if (num.is_zero()) return LaurentPoly();
    Int lead = den.at(den.max_exponent());
    if (!(lead == Int(1L)) && !(lead == Int(-1L))) {
        throw Error("laurent division requires a unit leading coefficient");
    }
    // lowest exponent any exact quotient could reach
    long min_q_exp = num.min_exponent() - den.min_exponent();
    long den_top = den.max_exponent();
    LaurentPoly quot;
    LaurentPoly cur = num;
    while (!cur.is_zero()) {
        long le = cur.max_exponent();
        long qe = le - den_top;
        if (qe < min_q_exp) {
            throw NonzeroRemainderError(
                "full-rank division left a nonzero remainder", order_index);
        }
        Int f = (lead == Int(1L)) ? cur.at(le) : -cur.at(le);
        quot.add_term(qe, f);
        cur -= den.shifted(qe) * f;
    }
    return quot;
}

TruncatedSeries<Int> pochhammer(long a_exponent, long order) {
    if (order < 1) throw Error("pochhammer: order must be at least 1");
    if (a_exponent < 1) throw Error("pochhammer: exponent must be at least 1");
    auto s = TruncatedSeries<Int>::one(order);
    for (long e = a_exponent; e < order; ++e) {
        for (long i = order - 1; i >= e; --i) s[i] -= s[i - e];
    }
    return s;
}

TruncatedSeries<Int> pochhammer_even(long order) {
    if (order < 1) throw Error("pochhammer_even: order must be at least 1");
    auto s = TruncatedSeries<Int>::one(order);
    for (long e = 2; e < order; e += 2) {
        for (long i = order - 1; i >= e; --i) s[i] -= s[i - e];
    }
    return s;
}

TruncatedSeries<Int> e2_series(long order) {
    TruncatedSeries<Int> s(order);
    s[0] = Int(1L);
    std::vector<long> sigma(static_cast<size_t>(order), 0);
    for (long d = 1; d < order; ++d) {
        for (long m = d; m < order; m += d) sigma[static_cast<size_t>(m)] += d;
    }
    for (long n = 1; n < order; ++n) s[n] = Int(-24 * sigma[static_cast<size_t>(n)]);
    return s;
}

TruncatedSeries<Int> r2_numerator_series(long order) {
    // Bilateral sum over n != 0 of (-1)^{n+1} q^{3n(n+1)/2} / (1-q^n)^2, with
    // the negative half folded onto positive m via exponent m(3m+1)/2 and the
    // square expanded as sum (j+1) q^{jm}.
    TruncatedSeries<Int> s(order);
    for (long m = 1; m * (3 * m + 1) / 2 < order; ++m) {
        long sign = (m % 2 == 1) ? 1 : -1;
        for (long base : {3 * m * (m + 1) / 2, m * (3 * m + 1) / 2}) {
            for (long j = 0; base + j * m < order; ++j) {
                s[base + j * m] += Int(sign * (j + 1));
            }
        }
    }
    return s;
}

TruncatedSeries<Int> r2_series(long order) {
    return r2_numerator_series(order) * pochhammer(1, order).inverse();
}

TruncatedSeries<Int> r2_odd_numerator_series(long order) {
    // Bilateral sum over n of (-1)^n q^{3n^2+5n+2} / (1-q^{2n+1})^3, negative
    // indices folded via exponent 3j^2+7j+3; cubes expanded with the exact
    // weights (t+1)(t+2)/2.
    TruncatedSeries<Int> s(order);
    for (long j = 0; 3 * j * j + 5 * j + 2 < order; ++j) {
        long sign = (j % 2 == 0) ? 1 : -1;
        long step = 2 * j + 1;
        for (long base : {3 * j * j + 5 * j + 2, 3 * j * j + 7 * j + 3}) {
            for (long t = 0; base + t * step < order; ++t) {
                s[base + t * step] += Int(sign) * Int((t + 1) * (t + 2) / 2);
            }
        }
    }
    return s;
}

TruncatedSeries<Int> r2_odd_series(long order) {
    return r2_odd_numerator_series(order) * pochhammer_even(order).inverse();
}

namespace {

// One bilateral Appell term sign * w^{we} q^{qe} (before the 1-w prefactor
// and the 1/(q;q)_inf factor; the n = 0 term is handled by the caller).
struct RankMonomial {
    int sign;
    long we;
    long qe;
};

std::vector<RankMonomial> rank_appell_monomials(long order) {
    std::vector<RankMonomial> out;
    for (long n = 1; n * (3 * n + 1) / 2 < order; ++n) {
        int sign = (n % 2 == 0) ? 1 : -1;
        long base = n * (3 * n + 1) / 2;
        for (long j = 0; base + j * n < order; ++j) {
            out.push_back({sign, j, base + j * n});
        }
    }
    for (long m = 1; m * (3 * m - 1) / 2 + m < order; ++m) {
        int sign = (m % 2 == 0) ? -1 : 1;
        long base = m * (3 * m - 1) / 2;
        for (long j = 1; base + j * m < order; ++j) {
            out.push_back({sign, -j, base + j * m});
        }
    }
    return out;
}

// Coefficients of R(w^pow; q) assembled from the Appell monomials: the
// bracket (1-w^pow) * bilateral-sum has n = 0 term exactly 1, and the final
// multiplication by 1/(q;q)_inf only involves the scalar coefficients p(i).
std::vector<LaurentPoly> rank_coeffs_appell(long pow, long order) {
    auto p = partition_table(order - 1);
    std::vector<LaurentPoly> out(static_cast<size_t>(order));
    for (long n = 0; n < order; ++n) out[n].add_term(0, p[n]);
    for (const auto& mono : rank_appell_monomials(order)) {
        for (long n = mono.qe; n < order; ++n) {
            const Int& scale = p[n - mono.qe];
            Int signed_scale = (mono.sign > 0) ? scale : -scale;
            out[n].add_term(pow * mono.we, signed_scale);
            out[n].add_term(pow * mono.we + pow, -signed_scale);
        }
    }
    return out;
}

}  // namespace

TruncatedSeries<LaurentPoly> rank_series_appell(long order) {
    TruncatedSeries<LaurentPoly> s(order);
    auto coeffs = rank_coeffs_appell(1, order);
    for (long n = 0; n < order; ++n) s[n] = std::move(coeffs[static_cast<size_t>(n)]);
    return s;
}

TruncatedSeries<LaurentPoly> rank_series(
    long order, std::optional<std::pair<long, long>> t_root) {
    if (order < 1) throw Error("rank_series: order must be at least 1");
    long sub = 1, mod = 0;
    if (t_root) {
        sub = t_root->first;
        mod = t_root->second;
        if (mod < 1) throw Error("rank_series: modulus must be at least 1");
    }
    auto reduce = [&](LaurentPoly& p) {
        if (mod) p = p.reduced_mod(mod);
    };

    auto acc = TruncatedSeries<LaurentPoly>::one(order);
    auto den = TruncatedSeries<LaurentPoly>::one(order);
    for (long n = 1; n * n < order; ++n) {
        // multiply den by (1 - w^{sub} q^n) and (1 - w^{-sub} q^n) in place
        for (long e : {sub, -sub}) {
            LaurentPoly w = LaurentPoly::monomial(e, Int(1L));
            reduce(w);
            for (long i = order - 1; i >= n; --i) {
                den[i] -= w * den[i - n];
                reduce(den[i]);
            }
        }
        // invert den and add q^{n^2} * inverse
        TruncatedSeries<LaurentPoly> inv(order);
        inv[0] = LaurentPoly(1);
        for (long i = 1; i < order - n * n; ++i) {
            LaurentPoly s;
            for (long k = 1; k <= i; ++k) {
                if (den[k].is_zero()) continue;
                s += den[k] * inv[i - k];
            }
            inv[i] = -s;
            reduce(inv[i]);
        }
        for (long i = n * n; i < order; ++i) {
            acc[i] += inv[i - n * n];
            reduce(acc[i]);
        }
    }
    return acc;
}

TruncatedSeries<LaurentPoly> r2_full_rank_series(long order) {
    if (order < 1) throw Error("r2_full_rank_series: order must be at least 1");
    auto r1 = rank_coeffs_appell(1, order);
    auto r2 = rank_coeffs_appell(2, order);
    // (1-w)(w^3-1) = -w^4 + w^3 + w - 1
    LaurentPoly den;
    den.add_term(4, Int(-1L));
    den.add_term(3, Int(1L));
    den.add_term(1, Int(1L));
    den.add_term(0, Int(-1L));

    TruncatedSeries<LaurentPoly> out(order);
    for (long n = 0; n < order; ++n) {
        LaurentPoly num = (r1[static_cast<size_t>(n)] - r2[static_cast<size_t>(n)]).shifted(2);
        out[n] = divide_exact(num, den, n);
    }
    return out;
}

EtaObject eta_object(long order) {
    return EtaObject{Rat(1, 24), pochhammer(1, order)};
}

}  // namespace partstat
