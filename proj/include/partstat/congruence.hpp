#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partstat/bigint.hpp"

namespace partstat {

// Outcome of testing statistic(A*n + B) == 0 (mod modulus) for 0 <= n <= n_max
// against exact values. `t` and `r` are set only for the "nf2" statistic,
// which counts full ranks congruent to r modulo t.
struct ProgressionCandidate {
    std::string statistic;
    long A = 0;
    long B = 0;
    long modulus = 0;
    std::optional<long> t;
    std::optional<long> r;
    long n_max_tested = 0;
    bool verified = false;
    std::optional<long> refuted_at;  // progression index of the first failure
};

// Statistics: "p", "eta2", "eta2_odd", "spt", "nf2". Values come from the
// canonical exact routes (pentagonal recurrence for p, generating functions
// for the moments, the smallest-parts table for spt). Requested indices past
// the documented feasibility caps raise OracleRangeExceededError.
ProgressionCandidate verify_progression(const std::string& statistic, long A,
                                        long B, long modulus, long n_max,
                                        std::optional<long> t = std::nullopt,
                                        std::optional<long> r = std::nullopt);

// Brute-force sweep over all pairs (A <= A_max, 0 <= B < A). Candidate
// testing uses a value table built by a route independent of
// verify_progression where one exists; every survivor is then re-verified
// through verify_progression before it is returned. Candidates are ordered
// by (A, B). `threads` parallelizes over A without affecting the result.
std::vector<ProgressionCandidate> scan(const std::string& statistic,
                                       long modulus, long A_max, long n_max,
                                       std::optional<long> t = std::nullopt,
                                       std::optional<long> r = std::nullopt,
                                       long threads = 1);

// counts[n][r] = number of 2-marked symbols of n whose full rank is
// congruent to r modulo t; rows 0..n_max, classes 0..t-1.
struct Nf2ResidueTable {
    long t = 0;
    long n_max = 0;
    std::vector<std::vector<Int>> counts;
};

// kEnumeration walks the symbols directly (n_max <= 40); kSeries reduces the
// full-rank generating function (n_max <= 200); kAuto picks by n_max.
enum class Nf2Route { kAuto, kEnumeration, kSeries };

Nf2ResidueTable nf2_residue_table(long t, long n_max,
                                  Nf2Route route = Nf2Route::kAuto);

std::string candidate_to_json(const ProgressionCandidate& c);
std::string candidates_to_csv(const std::vector<ProgressionCandidate>& cs);
std::string nf2_table_to_json(const Nf2ResidueTable& tbl);

}  // namespace partstat
