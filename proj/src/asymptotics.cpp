#include "partstat/asymptotics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "partstat/complexnum.hpp"
#include "partstat/errors.hpp"
#include "partstat/modular.hpp"
#include "partstat/partitions.hpp"
#include "partstat/qseries.hpp"

#include <nlohmann/json.hpp>

namespace partstat {

namespace {

using nlohmann::json;

// Past this point the quadratic-cost exact oracles stop being negligible;
// reports for larger n simply omit the comparison.
constexpr long kMomentOracleCap = 5000;
constexpr long kPartitionOracleCap = 100000;

long floor_sqrt(long n) {
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while ((r + 1) * (r + 1) <= n) ++r;
    while (r * r > n) --r;
    return r;
}

// Enough decimal digits that the exponentially large main term leaves the
// requested accuracy intact.
long auto_digits(long n) {
    double lead = M_PI * std::sqrt(24.0 * static_cast<double>(n)) /
                  (6.0 * std::log(10.0));
    return static_cast<long>(std::ceil(lead)) + 15;
}

// Modified Bessel functions of half-integer order in closed form.
Real bessel_i_half(const Real& x, const Real& pi) {
    return sqrt(2L / (pi * x)) * sinh(x);
}
Real bessel_i_minus_half(const Real& x, const Real& pi) {
    return sqrt(2L / (pi * x)) * cosh(x);
}
Real bessel_i_three_half(const Real& x, const Real& pi) {
    return sqrt(2L / (pi * x)) * (cosh(x) - sinh(x) / x);
}
Real bessel_i_minus_three_half(const Real& x, const Real& pi) {
    return sqrt(2L / (pi * x)) * (sinh(x) - cosh(x) / x);
}

// Runs fill(0..count-1) on up to `threads` workers. Each index writes only
// its own slot, so scheduling order cannot affect the result.
template <typename F>
void parallel_terms(long count, long threads, const F& fill) {
    long nt = std::max(1L, std::min(threads, count));
    if (nt == 1) {
        for (long i = 0; i < count; ++i) fill(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nt));
    for (long t = 0; t < nt; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                long i = next.fetch_add(1);
                if (i >= count) break;
                fill(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

void attach_error_diagnostics(AsymptoticReport& rep, Int exact, long bits) {
    Real ex(exact, bits);
    rep.exact = std::move(exact);
    rep.abs_error = abs(rep.truncated_sum - ex);
    // fall back to the absolute error when the reference vanishes
    rep.rel_error = rep.exact->is_zero() ? rep.abs_error : rep.abs_error / abs(ex);
}

void sum_terms(AsymptoticReport& rep, long bits) {
    Real acc(0L, bits);
    for (const auto& [k, v] : rep.terms) acc = acc + v;
    rep.truncated_sum = acc;
}

// Shared assembly for the odd-moment series; the calibration entry point
// needs the same terms truncated at k = 1.
AsymptoticReport odd_series_impl(long n, const PrecisionContext& ctx,
                                 OddNormalization normalization, long threads,
                                 long k_cap, bool with_exact) {
    if (n < 1) throw Error("eta2_odd_series: n must be positive");
    PrecisionContext eff = ctx.with_min_digits(auto_digits(n));
    long wb = eff.bits();

    AsymptoticReport rep;
    rep.n = n;
    rep.digits = eff.digits;
    rep.k_max = std::min(std::max(floor_sqrt(n), 1L), k_cap);

    Real pi = Real::pi(wb);
    Real r(3 * n - 1, wb);
    Real r14 = sqrt(sqrt(r));
    Real r34 = sqrt(r * sqrt(r));
    Real a(Rat(-3, 4), wb);
    long ck_denom = normalization == OddNormalization::kQuarter ? 4 : 16;

    std::vector<long> ks;
    for (long k = 1; k <= rep.k_max; k += 2) ks.push_back(k);
    std::vector<Complex> vals(ks.size(), Complex(0L, wb));
    parallel_terms(static_cast<long>(ks.size()), threads, [&](long i) {
        long k = ks[static_cast<size_t>(i)];
        Real x = pi * sqrt(r) / (3 * k);
        Real ck = pi / (ck_denom * k);
        Real bracket = a * r14 * bessel_i_minus_half(x, pi) +
                       ck * r34 * bessel_i_minus_three_half(x, pi);
        vals[static_cast<size_t>(i)] = kloosterman_A_odd(k, n, eff) * bracket;
    });

    // prefactor -i/sqrt(2); the total must come out real
    Complex pref = times_i(Complex(Real(-1L, wb) / sqrt(Real(2L, wb))));
    Complex total(0L, wb);
    rep.terms.reserve(ks.size());
    for (size_t i = 0; i < ks.size(); ++i) {
        Complex t = pref * vals[i];
        total += t;
        rep.terms.emplace_back(ks[i], t.re);
    }
    Real imag_tol =
        Real::pow10(-(eff.digits - 5), wb) * max(Real(1L, wb), abs(total.re));
    if (!(abs(total.im) < imag_tol))
        throw PrecisionLossError(
            "eta2_odd_series: residual imaginary part exceeds tolerance");
    sum_terms(rep, wb);
    if (with_exact && n <= kMomentOracleCap)
        attach_error_diagnostics(rep, r2_odd_series(n + 1)[n], wb);
    return rep;
}

}  // namespace

AsymptoticReport rademacher_p(long n, long k_max, const PrecisionContext& ctx,
                              long threads) {
    if (n < 1) throw Error("rademacher_p: n must be positive");
    if (k_max < 1) throw Error("rademacher_p: k_max must be positive");
    PrecisionContext eff = ctx.with_min_digits(auto_digits(n));
    long wb = eff.bits();

    AsymptoticReport rep;
    rep.n = n;
    rep.k_max = k_max;
    rep.digits = eff.digits;

    Real pi = Real::pi(wb);
    Real r(24 * n - 1, wb);
    Real pref = pi * 2L / sqrt(r * sqrt(r));
    std::vector<Real> vals(static_cast<size_t>(k_max), Real(0L, wb));
    parallel_terms(k_max, threads, [&](long i) {
        long k = i + 1;
        Real x = pi * sqrt(r) / (6 * k);
        Real ak = kloosterman_A(k, n, eff).re;
        vals[static_cast<size_t>(i)] =
            pref * (ak / k) * bessel_i_three_half(x, pi);
    });
    rep.terms.reserve(static_cast<size_t>(k_max));
    for (long k = 1; k <= k_max; ++k)
        rep.terms.emplace_back(k, vals[static_cast<size_t>(k - 1)]);
    sum_terms(rep, wb);
    if (n <= kPartitionOracleCap)
        attach_error_diagnostics(rep, count_partitions(n), wb);
    return rep;
}

AsymptoticReport eta2_series(long n, const PrecisionContext& ctx,
                             long k_multiplier, long threads) {
    if (n < 1) throw Error("eta2_series: n must be positive");
    if (k_multiplier < 1) throw Error("eta2_series: k_multiplier must be positive");
    PrecisionContext eff = ctx.with_min_digits(auto_digits(n));
    long wb = eff.bits();

    AsymptoticReport rep;
    rep.n = n;
    rep.k_max = std::max(floor_sqrt(n), 1L) * k_multiplier;
    rep.digits = eff.digits;

    Real pi = Real::pi(wb);
    Real r(24 * n - 1, wb);
    Real r14 = sqrt(sqrt(r));
    Real r34 = sqrt(r * sqrt(r));
    std::vector<Real> vals(static_cast<size_t>(rep.k_max), Real(0L, wb));
    parallel_terms(rep.k_max, threads, [&](long i) {
        long k = i + 1;
        Real x = pi * sqrt(r) / (6 * k);
        Real bracket = (Real(-3L, wb) / (r14 * 2L)) * bessel_i_half(x, pi) +
                       (pi * r14 / (12 * k)) * bessel_i_minus_half(x, pi) +
                       (pi / (r34 * (12 * k))) * bessel_i_three_half(x, pi);
        vals[static_cast<size_t>(i)] = kloosterman_A(k, n, eff).re * bracket;
    });
    rep.terms.reserve(static_cast<size_t>(rep.k_max));
    for (long k = 1; k <= rep.k_max; ++k)
        rep.terms.emplace_back(k, vals[static_cast<size_t>(k - 1)]);
    sum_terms(rep, wb);
    if (n <= kMomentOracleCap)
        attach_error_diagnostics(rep, r2_series(n + 1)[n], wb);
    return rep;
}

Real eta2_main_term(long n, const PrecisionContext& ctx) {
    if (n < 1) throw Error("eta2_main_term: n must be positive");
    PrecisionContext eff = ctx.with_min_digits(auto_digits(n));
    long wb = eff.bits();
    Real pi = Real::pi(wb);
    return exp(pi * sqrt(Real(24 * n - 1, wb)) / 6L) /
           (sqrt(Real(3L, wb)) * 4L);
}

AsymptoticReport eta2_odd_series(long n, const PrecisionContext& ctx,
                                 OddNormalization normalization, long threads) {
    return odd_series_impl(n, ctx, normalization, threads,
                           std::numeric_limits<long>::max(), true);
}

OddCalibration calibrate_odd_normalization(const PrecisionContext& ctx) {
    // worst-case relative error of the k=1-truncated series over the window
    const long kLo = 50, kHi = 120, kStep = 10;
    TruncatedSeries<Int> exact = r2_odd_series(kHi + 1);
    long wb = ctx.bits();
    Real worst[2] = {Real(0L, wb), Real(0L, wb)};
    const OddNormalization cands[2] = {OddNormalization::kQuarter,
                                       OddNormalization::kSixteenth};
    for (int c = 0; c < 2; ++c) {
        for (long n = kLo; n <= kHi; n += kStep) {
            AsymptoticReport rep =
                odd_series_impl(n, ctx, cands[c], 1, 1, false);
            Real ex(exact[n], rep.truncated_sum.prec());
            Real rel = abs(rep.truncated_sum - ex) / abs(ex);
            worst[c] = max(worst[c], round_prec(rel, wb));
        }
    }
    Real window(Rat(1, 50), wb);  // 2%
    bool ok0 = worst[0] < window;
    bool ok1 = worst[1] < window;
    if (ok0 == ok1)
        throw NormalizationUnresolvedError(
            "calibrate_odd_normalization: calibration window selects " +
            std::string(ok0 ? "both candidates" : "neither candidate"));
    OddCalibration out;
    out.winner = ok0 ? cands[0] : cands[1];
    out.winner_worst_rel = ok0 ? worst[0] : worst[1];
    out.loser_worst_rel = ok0 ? worst[1] : worst[0];
    return out;
}

std::string asymptotic_report_to_json(const AsymptoticReport& r) {
    json j;
    j["n"] = r.n;
    j["k_max"] = r.k_max;
    j["digits"] = r.digits;
    j["terms"] = json::array();
    for (const auto& [k, v] : r.terms)
        j["terms"].push_back({{"k", k}, {"value", v.to_string(r.digits)}});
    j["truncated_sum"] = r.truncated_sum.to_string(r.digits);
    if (r.exact) {
        j["exact"] = r.exact->to_string();
        j["abs_error"] = r.abs_error.to_string(20);
        j["rel_error"] = r.rel_error.to_string(20);
    } else {
        j["exact"] = nullptr;
    }
    return j.dump();
}

}  // namespace partstat
