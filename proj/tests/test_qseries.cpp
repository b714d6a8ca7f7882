#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <random>

#include "partstat/durfee.hpp"
#include "partstat/partitions.hpp"
#include "partstat/qseries.hpp"

using namespace partstat;

TEST_CASE("pochhammer expansion and reciprocal") {
    auto s = pochhammer(1, 6);
    static const long expected[] = {1, -1, -1, 0, 0, 1};
    for (long i = 0; i < 6; ++i) CHECK(s[i].to_long() == expected[i]);
    CHECK_THROWS_AS(pochhammer(1, 0), Error);
    CHECK_THROWS_AS(pochhammer(0, 5), Error);

    // 1/(q;q)_inf counts partitions
    auto inv = pochhammer(1, 200).inverse();
    auto p = partition_table(199);
    for (long n = 0; n < 200; ++n) CHECK(inv[n] == p[n]);

    // (q^j;q)_inf * (q;q)_{j-1 factors} telescopes to (q;q)_inf
    auto a = pochhammer(3, 40);
    auto binoms = TruncatedSeries<Int>::one(40);
    for (long e = 1; e <= 2; ++e) {
        for (long i = 39; i >= e; --i) binoms[i] -= binoms[i - e];
    }
    CHECK(a * binoms == pochhammer(1, 40));
}

TEST_CASE("series ring laws on random integer series") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> dist(-9, 9);
    auto random_series = [&](long order) {
        TruncatedSeries<Int> s(order);
        for (long i = 0; i < order; ++i) s[i] = Int(dist(rng));
        return s;
    };
    for (int trial = 0; trial < 5; ++trial) {
        auto a = random_series(25), b = random_series(25), c = random_series(25);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
    // inverse is a two-sided inverse
    auto u = random_series(30);
    u[0] = Int(1L);
    CHECK(u * u.inverse() == TruncatedSeries<Int>::one(30));
}

TEST_CASE("e2 series coefficients") {
    auto s = e2_series(10);
    CHECK(s[0].to_long() == 1);
    CHECK(s[1].to_long() == -24);
    CHECK(s[2].to_long() == -72);
    CHECK(s[3].to_long() == -96);
    CHECK(s[4].to_long() == -168);
}

TEST_CASE("second moment series matches the counting recurrence to 200") {
    long order = 200;
    auto s = r2_series(order);
    auto eta2 = eta2_moment_table(order - 1);
    CHECK(s[1].is_zero());
    CHECK(s[2].to_long() == 1);
    for (long n = 0; n < order; ++n) CHECK(s[n] == eta2[n]);

    // ring closure: multiplying back by (q;q)_inf recovers the numerator
    CHECK(s * pochhammer(1, order) == r2_numerator_series(order));
}

TEST_CASE("odd moment series matches enumeration and frozen values") {
    auto s = r2_odd_series(101);
    CHECK(s[1].is_zero());
    CHECK(s[2].to_long() == 1);
    auto table = eta2_odd_moment_table(30);
    for (long n = 1; n <= 30; ++n) CHECK(s[n] == table[n]);
    CHECK(s[60].to_long() == 3017988);
    CHECK(s[100].to_long() == 243537156);
    CHECK(s * pochhammer_even(101) == r2_odd_numerator_series(101));
}

TEST_CASE("rank series coefficients are the rank distributions") {
    auto s = rank_series(30);
    // q^2 coefficient is w + w^{-1}
    CHECK(s[2].at(1).to_long() == 1);
    CHECK(s[2].at(-1).to_long() == 1);
    CHECK(s[2].terms().size() == 2);

    auto p = partition_table(29);
    for (long n = 0; n < 30; ++n) {
        CHECK(s[n].eval_one() == p[n]);  // w = 1 collapses to the partition count
        auto d = rank_distribution(n);
        size_t nonzero = 0;
        for (const auto& [m, cnt] : d.counts) {
            CHECK(s[n].at(m) == cnt);
            ++nonzero;
        }
        CHECK(s[n].terms().size() == nonzero);
    }
}

TEST_CASE("Eulerian and Appell forms of the rank series agree to order 30") {
    CHECK(rank_series(30) == rank_series_appell(30));
}

TEST_CASE("rank series in the group ring matches reduced full computation") {
    for (auto [j, t] : {std::pair<long, long>{1, 5}, {2, 7}, {3, 3}}) {
        auto reduced = rank_series(25, std::make_pair(j, t));
        auto full = rank_series(25);
        for (long n = 0; n < 25; ++n) {
            CHECK(reduced[n] == full[n].scaled_exponents(j).reduced_mod(t));
        }
    }
}

TEST_CASE("full-rank series: exact division, oracle match, specialization") {
    long order = 31;
    auto fr = r2_full_rank_series(order);  // throws on nonzero remainder
    auto eta2 = eta2_moment_table(order - 1);
    for (long n = 0; n < order; ++n) {
        CHECK(fr[n].eval_one() == eta2[n]);
    }
    for (long n = 1; n <= 25; ++n) {
        auto d = nf2_distribution(n);
        size_t nonzero = 0;
        for (const auto& [m, cnt] : d) {
            CHECK(fr[n].at(m) == cnt);
            ++nonzero;
        }
        CHECK(fr[n].terms().size() == nonzero);
    }
}

TEST_CASE("laurent division guards") {
    LaurentPoly den;
    den.add_term(1, Int(1L));
    den.add_term(0, Int(-1L));  // w - 1
    LaurentPoly exact = den * den;
    CHECK(divide_exact(exact, den, 0) == den);

    LaurentPoly bad(1);  // constant 1 is not divisible by w - 1
    CHECK_THROWS_AS(divide_exact(bad, den, 7), NonzeroRemainderError);
    try {
        divide_exact(bad, den, 7);
    } catch (const NonzeroRemainderError& e) {
        CHECK(e.order_index == 7);
    }

    LaurentPoly nonunit;
    nonunit.add_term(2, Int(3L));
    CHECK_THROWS_AS(divide_exact(exact, nonunit, 0), Error);
}

TEST_CASE("eta object carries the 1/24 prefactor") {
    auto eta = eta_object(12);
    CHECK(eta.prefactor_exponent == Rat(1, 24));
    CHECK(eta.series == pochhammer(1, 12));
}

TEST_CASE("series serialize to JSON with exact coefficients") {
    auto j = nlohmann::json::parse(series_to_json(r2_series(5)));
    CHECK(j["order"] == 5);
    CHECK(j["ring"] == "integer");
    CHECK(j["coeffs"][2] == "1");

    auto fr = r2_full_rank_series(4);
    auto jl = nlohmann::json::parse(series_to_json(fr));
    CHECK(jl["ring"] == "laurent");
    CHECK(jl["coeffs"][2]["0"] == "1");  // NF2(0,2) = 1

    TruncatedSeries<Rat> rs(2);
    rs[0] = Rat(1, 24);
    auto jr = nlohmann::json::parse(series_to_json(rs));
    CHECK(jr["ring"] == "rational");
    CHECK(jr["coeffs"][0] == "1/24");
}
