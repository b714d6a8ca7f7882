#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "partstat/partitions.hpp"

using namespace partstat;

TEST_CASE("count_partitions known values") {
    CHECK(count_partitions(0).to_long() == 1);
    CHECK(count_partitions(1).to_long() == 1);
    CHECK(count_partitions(4).to_long() == 5);
    CHECK(count_partitions(60).to_long() == 966467);
    CHECK(count_partitions(200).to_string() == "3972999029388");
}

TEST_CASE("pentagonal recurrence agrees with direct enumeration up to 40") {
    auto table = partition_table(40);
    for (long n = 0; n <= 40; ++n) {
        long count = 0;
        for_each_partition(n, [&](const std::vector<long>&) { ++count; });
        CHECK(table[n].to_long() == count);
    }
}

TEST_CASE("enumeration order is descending lexicographic") {
    std::vector<std::vector<long>> seen;
    for_each_partition(4, [&](const std::vector<long>& p) { seen.push_back(p); });
    std::vector<std::vector<long>> expected = {
        {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(seen == expected);
    // parts are positive and non-increasing, and sum to n
    for_each_partition(9, [&](const std::vector<long>& p) {
        long sum = 0;
        for (size_t i = 0; i < p.size(); ++i) {
            REQUIRE(p[i] >= 1);
            if (i > 0) REQUIRE(p[i] <= p[i - 1]);
            sum += p[i];
        }
        REQUIRE(sum == 9);
    });
}

TEST_CASE("rank distribution small cases") {
    auto d0 = rank_distribution(0);
    CHECK(d0.counts.size() == 1);
    CHECK(d0.counts.at(0).to_long() == 1);

    auto d1 = rank_distribution(1);
    CHECK(d1.counts.size() == 1);
    CHECK(d1.counts.at(0).to_long() == 1);

    auto d2 = rank_distribution(2);
    CHECK(d2.counts.size() == 2);
    CHECK(d2.counts.at(1).to_long() == 1);
    CHECK(d2.counts.at(-1).to_long() == 1);
}

TEST_CASE("rank distribution totals and symmetry up to 60") {
    auto p = partition_table(60);
    for (long n = 0; n <= 60; ++n) {
        auto d = rank_distribution(n);
        CHECK(d.total() == p[n]);
        for (const auto& [m, c] : d.counts) {
            REQUIRE(d.counts.count(-m) == 1);
            REQUIRE(d.counts.at(-m) == c);
        }
    }
}

TEST_CASE("eta2 moment known values") {
    static const long first_twelve[] = {0, 1, 4, 10, 21, 40, 70, 119, 190, 301, 455, 686};
    auto table = eta2_moment_table(12);
    CHECK(eta2_moment(0).is_zero());
    for (long n = 1; n <= 12; ++n) {
        CHECK(table[n].to_long() == first_twelve[n - 1]);
    }
    CHECK(eta2_moment(60).to_long() == 51843459);
}

TEST_CASE("eta2 moment equals enumerated second symmetrized moment up to 40") {
    auto table = eta2_moment_table(40);
    for (long n = 1; n <= 40; ++n) {
        Int direct;
        for (const auto& [m, c] : rank_distribution(n).counts) {
            direct += choose2(m) * c;
        }
        CHECK(table[n] == direct);
    }
}

TEST_CASE("choose2 is the polynomial m(m-1)/2 on all integers") {
    CHECK(choose2(0).is_zero());
    CHECK(choose2(1).is_zero());
    CHECK(choose2(2).to_long() == 1);
    CHECK(choose2(-1).to_long() == 1);
    CHECK(choose2(-2).to_long() == 3);
}

TEST_CASE("spt known values and smallest-part identity up to 200") {
    auto spt = spt_table(200);
    CHECK(spt[1].to_long() == 1);
    CHECK(spt[2].to_long() == 3);
    CHECK(spt[3].to_long() == 5);

    // direct smallest-part count for small n
    for (long n = 1; n <= 25; ++n) {
        long direct = 0;
        for_each_partition(n, [&](const std::vector<long>& p) {
            long smallest = p.back();
            for (auto it = p.rbegin(); it != p.rend() && *it == smallest; ++it) ++direct;
        });
        CHECK(spt[n].to_long() == direct);
    }

    auto p = partition_table(200);
    auto eta2 = eta2_moment_table(200);
    for (long n = 1; n <= 200; ++n) {
        CHECK(spt[n] == p[n] * n - eta2[n]);
    }
}
