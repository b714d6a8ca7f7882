#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "partstat/congruence.hpp"
#include "partstat/errors.hpp"
#include "partstat/partitions.hpp"
#include "partstat/qseries.hpp"

using namespace partstat;

namespace {

bool contains_pair(const std::vector<ProgressionCandidate>& cs, long A, long B) {
    for (const auto& c : cs)
        if (c.A == A && c.B == B) return true;
    return false;
}

}  // namespace

TEST_CASE("classical partition congruences verify exactly") {
    ProgressionCandidate five = verify_progression("p", 5, 4, 5, 200);
    CHECK(five.verified);
    CHECK(five.n_max_tested == 200);
    CHECK_FALSE(five.refuted_at.has_value());
    CHECK(verify_progression("p", 7, 5, 7, 200).verified);
    CHECK(verify_progression("p", 11, 6, 11, 200).verified);
}

TEST_CASE("a wrong offset is refuted at the first failing index") {
    ProgressionCandidate c = verify_progression("p", 5, 3, 5, 200);
    CHECK_FALSE(c.verified);
    REQUIRE(c.refuted_at.has_value());
    CHECK(*c.refuted_at <= c.n_max_tested);
    // the reported index really fails: p(3) = 3 is not divisible by 5
    CHECK(*c.refuted_at == 0);
    CHECK_FALSE(count_partitions(5 * *c.refuted_at + 3).divisible_by(5L));
}

TEST_CASE("derived congruences of the moment statistics") {
    // eta2 = n p(n) - spt(n) and both pieces vanish mod 5 on 5n+4
    CHECK(verify_progression("spt", 5, 4, 5, 100).verified);
    CHECK(verify_progression("eta2", 5, 4, 5, 100).verified);
    // odd moments at odd arguments are even
    CHECK(verify_progression("eta2_odd", 2, 1, 2, 40).verified);
}

TEST_CASE("scanner rediscovers the classical progressions") {
    auto five = scan("p", 5, 7, 100);
    REQUIRE(five.size() == 1);
    CHECK(contains_pair(five, 5, 4));

    auto eleven = scan("p", 11, 12, 100);
    REQUIRE(eleven.size() == 1);
    CHECK(contains_pair(eleven, 11, 6));

    // soundness: each emitted candidate passes the canonical verifier
    for (const auto& c : eleven)
        CHECK(verify_progression("p", c.A, c.B, 11, 100).verified);
}

TEST_CASE("scanner output matches the per-pair verifier exhaustively") {
    // completeness at a small horizon where several accidents survive
    auto found = scan("p", 5, 7, 3);
    for (long A = 1; A <= 7; ++A) {
        for (long B = 0; B < A; ++B) {
            bool expect = verify_progression("p", A, B, 5, 3).verified;
            CHECK(contains_pair(found, A, B) == expect);
        }
    }
}

TEST_CASE("empty scan results are a valid outcome") {
    CHECK(scan("p", 13, 6, 30).empty());
}

TEST_CASE("scan is deterministic and thread-count independent") {
    auto a = scan("eta2", 5, 6, 60);
    auto b = scan("eta2", 5, 6, 60, std::nullopt, std::nullopt, 4);
    CHECK(candidates_to_csv(a) == candidates_to_csv(b));
    // both surviving offsets are genuine, confirmed by the moment identity
    CHECK(contains_pair(a, 5, 1));
    CHECK(contains_pair(a, 5, 4));
}

TEST_CASE("residue table rows partition the moment") {
    TruncatedSeries<Int> e2 = r2_series(31);
    Nf2ResidueTable tbl = nf2_residue_table(2, 30, Nf2Route::kSeries);
    for (long n = 0; n <= 30; ++n) {
        Int sum;
        for (const Int& v : tbl.counts[static_cast<size_t>(n)]) sum += v;
        CHECK(sum == e2[n]);
    }
    Int row3 = tbl.counts[3][0] + tbl.counts[3][1];
    CHECK(row3 == Int(4L));
}

TEST_CASE("residue table routes agree where both can run") {
    for (long t : {2L, 3L, 5L}) {
        Nf2ResidueTable enu = nf2_residue_table(t, 18, Nf2Route::kEnumeration);
        Nf2ResidueTable ser = nf2_residue_table(t, 18, Nf2Route::kSeries);
        CHECK(nf2_table_to_json(enu) == nf2_table_to_json(ser));
    }
}

TEST_CASE("nf2 progressions run through the verifier") {
    ProgressionCandidate ok = verify_progression("nf2", 1, 0, 1, 20, 3, 1);
    CHECK(ok.verified);
    ProgressionCandidate bad = verify_progression("nf2", 1, 0, 2, 10, 2, 0);
    CHECK_FALSE(bad.verified);
    CHECK(*bad.refuted_at == 2);
}

TEST_CASE("usage and range errors") {
    CHECK_THROWS_AS(verify_progression("rank2", 5, 4, 5, 10), Error);
    CHECK_THROWS_AS(verify_progression("p", 0, 0, 5, 10), Error);
    CHECK_THROWS_AS(verify_progression("p", 5, 5, 5, 10), Error);
    CHECK_THROWS_AS(verify_progression("p", 5, 4, 0, 10), Error);
    CHECK_THROWS_AS(verify_progression("nf2", 5, 4, 5, 10), Error);
    CHECK_THROWS_AS(verify_progression("nf2", 5, 4, 5, 10, 1, 0), Error);
    CHECK_THROWS_AS(verify_progression("nf2", 5, 4, 5, 10, 3, 3), Error);

    CHECK_THROWS_AS(verify_progression("eta2", 100, 0, 5, 100),
                    OracleRangeExceededError);
    CHECK_THROWS_AS(verify_progression("p", 10000, 0, 5, 100),
                    OracleRangeExceededError);
    CHECK_THROWS_AS(verify_progression("nf2", 30, 0, 5, 100, 3, 0),
                    OracleRangeExceededError);
    CHECK_THROWS_AS(nf2_residue_table(1, 10), Error);
    CHECK_THROWS_AS(nf2_residue_table(2, 300), OracleRangeExceededError);
    CHECK_THROWS_AS(nf2_residue_table(2, 100, Nf2Route::kEnumeration),
                    OracleRangeExceededError);
}

TEST_CASE("candidate serialization") {
    ProgressionCandidate c = verify_progression("p", 5, 4, 5, 50);
    std::string j = candidate_to_json(c);
    CHECK(j.find("\"statistic\":\"p\"") != std::string::npos);
    CHECK(j.find("\"A\":5") != std::string::npos);
    CHECK(j.find("\"status\":\"verified-up-to-50\"") != std::string::npos);
    CHECK(j.find("\"refuted_at\":null") != std::string::npos);

    ProgressionCandidate bad = verify_progression("p", 5, 3, 5, 50);
    CHECK(candidate_to_json(bad).find("\"status\":\"refuted-at-0\"") !=
          std::string::npos);

    std::string csv = candidates_to_csv({c, bad});
    CHECK(csv.find("statistic,A,B,modulus,t,r,n_max_tested,status\n") == 0);
    CHECK(csv.find("p,5,4,5,,,50,verified-up-to-50\n") != std::string::npos);
    CHECK(csv.find("p,5,3,5,,,50,refuted-at-0\n") != std::string::npos);
}
