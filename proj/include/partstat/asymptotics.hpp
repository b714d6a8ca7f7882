#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "partstat/bigint.hpp"
#include "partstat/precision.hpp"
#include "partstat/real.hpp"

namespace partstat {

// One circle-method evaluation: the per-k terms that were summed, the
// truncated total, and error diagnostics against the exact oracle when it
// was consulted. `digits` is the effective decimal precision after the
// automatic raise (at least pi*sqrt(24n)/(6 ln 10) + 15, so the target is
// not swamped by the exponentially large main term).
struct AsymptoticReport {
    long n = 0;
    long k_max = 0;
    long digits = 0;
    std::vector<std::pair<long, Real>> terms;  // (k, term value), k ascending
    Real truncated_sum;                        // sum of terms, in k order
    std::optional<Int> exact;
    Real abs_error;  // |truncated_sum - exact|, set iff exact is present
    Real rel_error;  // abs_error/exact; falls back to abs_error when exact=0
};

// Exact convergent series for p(n), truncated at k_max terms. With
// k_max = 3*ceil(sqrt(n)) the nearest integer to truncated_sum is p(n).
// Per-k terms can be computed on `threads` workers; the reduction order is
// fixed, so results are bit-identical for any thread count.
AsymptoticReport rademacher_p(long n, long k_max, const PrecisionContext& ctx,
                              long threads = 1);

// Expansion of the second rank moment eta2(n), truncated at
// k <= k_multiplier*floor(sqrt(n)). Multipliers above 1 extend the tail for
// diagnostics only; the default matches the defining truncation.
AsymptoticReport eta2_series(long n, const PrecisionContext& ctx,
                             long k_multiplier = 1, long threads = 1);

// Leading exponential e^{pi sqrt(24n-1)/6}/(4 sqrt 3).
Real eta2_main_term(long n, const PrecisionContext& ctx);

// Which constant multiplies the I_{-3/2} Bessel term in the odd-moment
// expansion: pi/(4k) or pi/(16k). Both candidates are in circulation;
// calibrate_odd_normalization settles the choice numerically against the
// exact odd moments rather than hard-coding either.
enum class OddNormalization { kQuarter, kSixteenth };

struct OddCalibration {
    OddNormalization winner;
    Real winner_worst_rel;  // worst relative error over the window
    Real loser_worst_rel;
};

// Expansion of the second odd rank moment eta2_odd(n), summed over odd
// k <= floor(sqrt(n)). The total is real up to rounding; a residual
// imaginary part above 10^{-(digits-5)} relative to the total raises
// PrecisionLossError.
AsymptoticReport eta2_odd_series(long n, const PrecisionContext& ctx,
                                 OddNormalization normalization,
                                 long threads = 1);

// Scores both normalization candidates with the k=1-truncated series against
// exact eta2_odd(n) for n in {50,60,...,120}. Exactly one candidate must stay
// within 2% everywhere; otherwise NormalizationUnresolvedError.
OddCalibration calibrate_odd_normalization(const PrecisionContext& ctx);

std::string asymptotic_report_to_json(const AsymptoticReport& r);

}  // namespace partstat
