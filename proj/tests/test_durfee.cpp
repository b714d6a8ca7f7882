#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "partstat/durfee.hpp"
#include "partstat/partitions.hpp"

using namespace partstat;

namespace {

std::string serialize(const MarkedDurfeeSymbol& s) {
    std::ostringstream os;
    os << s.side << "|";
    for (const auto& e : s.top) os << e.value << "_" << e.subscript << ",";
    os << "|";
    for (const auto& e : s.bottom) os << e.value << "_" << e.subscript << ",";
    return os.str();
}

}  // namespace

TEST_CASE("marked symbol counts for tiny n") {
    CHECK(enumerate_marked(1).empty());
    CHECK(enumerate_marked(2).size() == 1);
    CHECK(enumerate_marked(3).size() == 4);

    auto symbols2 = enumerate_marked(2);
    const auto& only = symbols2.front();
    CHECK(only.side == 1);
    CHECK(only.top.size() == 1);
    CHECK(only.top.front().value == 1);
    CHECK(only.top.front().subscript == 1);
    CHECK(only.bottom.empty());
}

TEST_CASE("enumerated symbols are valid, on target, and duplicate-free") {
    for (long n = 1; n <= 14; ++n) {
        std::set<std::string> seen;
        for_each_marked(n, [&](const MarkedDurfeeSymbol& s) {
            REQUIRE(is_valid_marked(s));
            REQUIRE(s.represented() == n);
            REQUIRE(seen.insert(serialize(s)).second);
        });
    }
}

TEST_CASE("symbol count equals the second rank moment") {
    auto eta2 = eta2_moment_table(28);
    for (long n = 1; n <= 28; ++n) {
        CHECK(count_marked(n) == eta2[n]);
    }
}

TEST_CASE("full rank block arithmetic") {
    MarkedDurfeeSymbol a;
    a.side = 1;
    a.top = {{1, 1}};
    CHECK(full_rank(a) == 0);

    MarkedDurfeeSymbol b;
    b.side = 3;
    b.top = {{3, 2}, {2, 1}, {1, 1}};  // tau2=1, tau1=2
    CHECK(full_rank(b) == 3);          // rho1 = 2-0-1 = 1, rho2 = 1-0 = 1

    MarkedDurfeeSymbol c;
    c.side = 3;
    c.top = {{2, 1}};
    c.bottom = {{3, 2}, {2, 2}, {1, 1}};  // beta2=2, beta1=1
    CHECK(full_rank(c) == (1 - 1 - 1) + 2 * (0 - 2));
}

TEST_CASE("full rank distribution totals, symmetry, residues") {
    CHECK(nf2_distribution(1).empty());
    auto d2 = nf2_distribution(2);
    CHECK(d2.size() == 1);
    CHECK(d2.at(0).to_long() == 1);

    auto eta2 = eta2_moment_table(22);
    for (long n = 1; n <= 22; ++n) {
        auto d = nf2_distribution(n);
        Int total;
        for (const auto& [m, c] : d) total += c;
        CHECK(total == eta2[n]);
        for (const auto& [m, c] : d) {
            REQUIRE(d.count(-m) == 1);
            REQUIRE(d.at(-m) == c);
        }
    }

    // residue classes partition the distribution
    for (long t : {3L, 5L, 7L}) {
        auto res = nf2_mod(20, t);
        Int total;
        for (const auto& c : res) total += c;
        CHECK(total == eta2[20]);
        auto d = nf2_distribution(20);
        for (long r = 0; r < t; ++r) {
            Int direct;
            for (const auto& [m, c] : d) {
                if (((m % t) + t) % t == r) direct += c;
            }
            CHECK(res[r] == direct);
        }
    }
}

TEST_CASE("odd symbols are valid and the rank distribution is symmetric") {
    for (long n = 1; n <= 20; ++n) {
        for_each_odd(n, [&](const OddDurfeeSymbol& s) {
            REQUIRE(s.represented() == n);
            for (long v : s.top) {
                REQUIRE(v % 2 == 1);
                REQUIRE(v <= 2 * s.side + 1);
            }
            for (long v : s.bottom) {
                REQUIRE(v % 2 == 1);
                REQUIRE(v <= 2 * s.side + 1);
            }
        });
        auto d = odd_rank_distribution(n);
        for (const auto& [m, c] : d) {
            REQUIRE(d.count(-m) == 1);
            REQUIRE(d.at(-m) == c);
        }
    }
    // n=2: side 0 admits top=(1) or bottom=(1)
    auto d2 = odd_rank_distribution(2);
    CHECK(d2.size() == 2);
    CHECK(d2.at(1).to_long() == 1);
    CHECK(d2.at(-1).to_long() == 1);
}

TEST_CASE("second odd moment known values") {
    static const long first_ten[] = {0, 1, 4, 10, 20, 36, 60, 95, 144, 211};
    for (long n = 1; n <= 10; ++n) {
        CHECK(eta2_odd_moment(n).to_long() == first_ten[n - 1]);
    }
    CHECK(eta2_odd_moment(60).to_long() == 3017988);
}

TEST_CASE("odd marked symbols are valid and counted by the odd moment") {
    for (long n = 1; n <= 16; ++n) {
        for_each_odd_marked(n, [&](const MarkedOddDurfeeSymbol& s) {
            REQUIRE(is_valid_odd_marked(s));
            REQUIRE(s.represented() == n);
        });
    }
    for (long n = 1; n <= 22; ++n) {
        CHECK(count_odd_marked(n) == eta2_odd_moment(n));
    }
}
