#include "partstat/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "partstat/durfee.hpp"
#include "partstat/errors.hpp"
#include "partstat/partitions.hpp"
#include "partstat/qseries.hpp"

#include <nlohmann/json.hpp>

namespace partstat {

namespace {

using nlohmann::json;

// Largest statistic index the exact tables will be asked for. The partition
// recurrence is nearly linear; the moment generating functions are quadratic;
// the full-rank series carries a Laurent polynomial per coefficient.
constexpr long kPartitionIndexCap = 500000;
constexpr long kMomentIndexCap = 5000;
constexpr long kNf2SeriesIndexCap = 200;
constexpr long kNf2EnumIndexCap = 40;

bool known_statistic(const std::string& s) {
    return s == "p" || s == "eta2" || s == "eta2_odd" || s == "spt" ||
           s == "nf2";
}

long index_cap(const std::string& stat) {
    if (stat == "p") return kPartitionIndexCap;
    if (stat == "nf2") return kNf2SeriesIndexCap;
    return kMomentIndexCap;
}

void validate_request(const std::string& stat, long A, long B, long modulus,
                      long n_max, const std::optional<long>& t,
                      const std::optional<long>& r) {
    if (!known_statistic(stat))
        throw Error("unknown statistic: " + stat);
    if (A < 1) throw Error("progression step A must be positive");
    if (B < 0 || B >= A) throw Error("offset B must satisfy 0 <= B < A");
    if (modulus < 1) throw Error("modulus must be positive");
    if (n_max < 0) throw Error("n_max must be nonnegative");
    if (stat == "nf2") {
        if (!t || !r) throw Error("nf2 requires residue-class parameters t and r");
        if (*t < 2) throw Error("nf2 modulus t must be at least 2");
        if (*r < 0 || *r >= *t) throw Error("nf2 class r must satisfy 0 <= r < t");
    }
    long need = A * n_max + B;
    if (need > index_cap(stat))
        throw OracleRangeExceededError(
            "exact values for " + stat + " are not feasible up to index " +
            std::to_string(need));
}

std::vector<Int> series_values(TruncatedSeries<Int> s) {
    std::vector<Int> v(static_cast<size_t>(s.order));
    for (long i = 0; i < s.order; ++i) v[static_cast<size_t>(i)] = s[i];
    return v;
}

std::vector<Int> nf2_series_values(long n_top, long t, long r) {
    TruncatedSeries<LaurentPoly> full = r2_full_rank_series(n_top + 1);
    std::vector<Int> v(static_cast<size_t>(n_top) + 1);
    for (long n = 0; n <= n_top; ++n)
        v[static_cast<size_t>(n)] = full[n].reduced_mod(t).at(r);
    return v;
}

// Exact values 0..n_top along the canonical route for each statistic.
std::vector<Int> canonical_values(const std::string& stat, long n_top,
                                  const std::optional<long>& t,
                                  const std::optional<long>& r) {
    if (stat == "p") return partition_table(n_top);
    if (stat == "eta2") return series_values(r2_series(n_top + 1));
    if (stat == "eta2_odd") return series_values(r2_odd_series(n_top + 1));
    if (stat == "spt") {
        std::vector<Int> v = spt_table(std::max(n_top, 1L));
        v.resize(static_cast<size_t>(n_top) + 1);
        return v;
    }
    return nf2_series_values(n_top, *t, *r);
}

// Same values along a different route, for the scanner's first pass. For
// eta2_odd the generating function is the only route that reaches scanning
// scale, so that statistic is rechecked rather than cross-checked; the
// enumeration cross-check lives in the durfee tests on its overlap range.
std::vector<Int> scanner_values(const std::string& stat, long n_top,
                                const std::optional<long>& t,
                                const std::optional<long>& r) {
    if (stat == "p") {
        // partitions counted by largest allowed part, no recurrence involved
        std::vector<Int> dp(static_cast<size_t>(n_top) + 1);
        dp[0] = Int(1L);
        for (long part = 1; part <= n_top; ++part)
            for (long s = part; s <= n_top; ++s)
                dp[static_cast<size_t>(s)] += dp[static_cast<size_t>(s - part)];
        return dp;
    }
    if (stat == "eta2") return eta2_moment_table(n_top);
    if (stat == "eta2_odd") return series_values(r2_odd_series(n_top + 1));
    if (stat == "spt") {
        // the defining identity, built from two routes unrelated to spt_table
        std::vector<Int> p = partition_table(n_top);
        std::vector<Int> e2 = series_values(r2_series(n_top + 1));
        std::vector<Int> v(static_cast<size_t>(n_top) + 1);
        for (long n = 0; n <= n_top; ++n)
            v[static_cast<size_t>(n)] = p[static_cast<size_t>(n)] * n -
                                        e2[static_cast<size_t>(n)];
        return v;
    }
    if (n_top <= kNf2EnumIndexCap) {
        std::vector<Int> v(static_cast<size_t>(n_top) + 1);
        for (long n = 0; n <= n_top; ++n) v[static_cast<size_t>(n)] = nf2_mod(n, *t)[static_cast<size_t>(*r)];
        return v;
    }
    return nf2_series_values(n_top, *t, *r);
}

// First progression index whose value breaks the divisibility, if any.
std::optional<long> first_failure(const std::vector<Int>& values, long A,
                                  long B, long modulus, long n_max) {
    for (long n = 0; n <= n_max; ++n) {
        if (!values[static_cast<size_t>(A * n + B)].divisible_by(modulus))
            return n;
    }
    return std::nullopt;
}

ProgressionCandidate make_candidate(const std::string& stat, long A, long B,
                                    long modulus, long n_max,
                                    const std::optional<long>& t,
                                    const std::optional<long>& r,
                                    std::optional<long> failure) {
    ProgressionCandidate c;
    c.statistic = stat;
    c.A = A;
    c.B = B;
    c.modulus = modulus;
    c.t = t;
    c.r = r;
    c.n_max_tested = n_max;
    c.refuted_at = failure;
    c.verified = !failure.has_value();
    return c;
}

std::string status_string(const ProgressionCandidate& c) {
    if (c.verified) return "verified-up-to-" + std::to_string(c.n_max_tested);
    return "refuted-at-" + std::to_string(*c.refuted_at);
}

}  // namespace

ProgressionCandidate verify_progression(const std::string& statistic, long A,
                                        long B, long modulus, long n_max,
                                        std::optional<long> t,
                                        std::optional<long> r) {
    validate_request(statistic, A, B, modulus, n_max, t, r);
    std::vector<Int> values = canonical_values(statistic, A * n_max + B, t, r);
    return make_candidate(statistic, A, B, modulus, n_max, t, r,
                          first_failure(values, A, B, modulus, n_max));
}

std::vector<ProgressionCandidate> scan(const std::string& statistic,
                                       long modulus, long A_max, long n_max,
                                       std::optional<long> t,
                                       std::optional<long> r, long threads) {
    if (A_max < 1) throw Error("A_max must be positive");
    validate_request(statistic, A_max, A_max - 1, modulus, n_max, t, r);
    long n_top = A_max * n_max + (A_max - 1);
    const std::vector<Int> values = scanner_values(statistic, n_top, t, r);

    // exhaustive over (A, B); per-A slots keep the output order fixed
    std::vector<std::vector<ProgressionCandidate>> by_a(
        static_cast<size_t>(A_max));
    auto sweep_a = [&](long A) {
        for (long B = 0; B < A; ++B) {
            std::optional<long> failure =
                first_failure(values, A, B, modulus, n_max);
            if (!failure)
                by_a[static_cast<size_t>(A - 1)].push_back(make_candidate(
                    statistic, A, B, modulus, n_max, t, r, failure));
        }
    };
    long nt = std::max(1L, std::min(threads, A_max));
    if (nt == 1) {
        for (long A = 1; A <= A_max; ++A) sweep_a(A);
    } else {
        std::atomic<long> next{1};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nt));
        for (long i = 0; i < nt; ++i)
            pool.emplace_back([&]() {
                for (;;) {
                    long A = next.fetch_add(1);
                    if (A > A_max) break;
                    sweep_a(A);
                }
            });
        for (auto& th : pool) th.join();
    }

    std::vector<ProgressionCandidate> out;
    for (auto& group : by_a)
        for (auto& c : group) out.push_back(std::move(c));

    // every survivor must also pass along the canonical route
    for (const ProgressionCandidate& c : out) {
        ProgressionCandidate check = verify_progression(
            statistic, c.A, c.B, modulus, n_max, t, r);
        if (!check.verified)
            throw Error("scan: value routes disagree on (" +
                        std::to_string(c.A) + "," + std::to_string(c.B) +
                        "); exact oracles are inconsistent");
    }
    return out;
}

Nf2ResidueTable nf2_residue_table(long t, long n_max, Nf2Route route) {
    if (t < 2) throw Error("nf2 residue table needs t >= 2");
    if (n_max < 0) throw Error("n_max must be nonnegative");
    if (route == Nf2Route::kAuto)
        route = n_max <= kNf2EnumIndexCap ? Nf2Route::kEnumeration
                                          : Nf2Route::kSeries;
    long cap = route == Nf2Route::kEnumeration ? kNf2EnumIndexCap
                                               : kNf2SeriesIndexCap;
    if (n_max > cap)
        throw OracleRangeExceededError(
            "nf2 residue table infeasible up to n = " + std::to_string(n_max));

    Nf2ResidueTable tbl;
    tbl.t = t;
    tbl.n_max = n_max;
    tbl.counts.resize(static_cast<size_t>(n_max) + 1);
    if (route == Nf2Route::kEnumeration) {
        for (long n = 0; n <= n_max; ++n)
            tbl.counts[static_cast<size_t>(n)] = nf2_mod(n, t);
    } else {
        TruncatedSeries<LaurentPoly> full = r2_full_rank_series(n_max + 1);
        for (long n = 0; n <= n_max; ++n) {
            LaurentPoly red = full[n].reduced_mod(t);
            std::vector<Int>& row = tbl.counts[static_cast<size_t>(n)];
            row.resize(static_cast<size_t>(t));
            for (long cls = 0; cls < t; ++cls)
                row[static_cast<size_t>(cls)] = red.at(cls);
        }
    }
    return tbl;
}

std::string candidate_to_json(const ProgressionCandidate& c) {
    json j;
    j["statistic"] = c.statistic;
    j["A"] = c.A;
    j["B"] = c.B;
    j["modulus"] = c.modulus;
    if (c.t) j["t"] = *c.t; else j["t"] = nullptr;
    if (c.r) j["r"] = *c.r; else j["r"] = nullptr;
    j["n_max_tested"] = c.n_max_tested;
    j["status"] = status_string(c);
    if (c.refuted_at) j["refuted_at"] = *c.refuted_at;
    else j["refuted_at"] = nullptr;
    return j.dump();
}

std::string candidates_to_csv(const std::vector<ProgressionCandidate>& cs) {
    std::ostringstream out;
    out << "statistic,A,B,modulus,t,r,n_max_tested,status\n";
    for (const ProgressionCandidate& c : cs) {
        out << c.statistic << ',' << c.A << ',' << c.B << ',' << c.modulus
            << ',';
        if (c.t) out << *c.t;
        out << ',';
        if (c.r) out << *c.r;
        out << ',' << c.n_max_tested << ',' << status_string(c) << '\n';
    }
    return out.str();
}

std::string nf2_table_to_json(const Nf2ResidueTable& tbl) {
    json j;
    j["t"] = tbl.t;
    j["n_max"] = tbl.n_max;
    j["rows"] = json::array();
    for (const auto& row : tbl.counts) {
        json r = json::array();
        for (const Int& v : row) r.push_back(v.to_string());
        j["rows"].push_back(std::move(r));
    }
    return j.dump();
}

}  // namespace partstat
