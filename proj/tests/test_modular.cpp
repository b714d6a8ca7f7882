#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "partstat/modular.hpp"
#include "partstat/errors.hpp"

using namespace partstat;

namespace {

const PrecisionContext kCtx(50);

Real tol_digits(long d) { return Real::pow10(-d, kCtx.bits()); }

}  // namespace

TEST_CASE("sawtooth values and parity") {
    CHECK(sawtooth(Rat(1, 2)).is_zero());
    CHECK(sawtooth(Rat(1, 4)) == Rat(-1, 4));
    CHECK(sawtooth(Rat(3, 1)).is_zero());
    CHECK(sawtooth(Rat(-7, 1)).is_zero());
    CHECK(sawtooth(Rat(5, 3)) == sawtooth(Rat(2, 3)));  // period 1
    for (long num = -9; num <= 9; ++num) {
        for (long den : {2L, 3L, 5L, 7L}) {
            CHECK((sawtooth(Rat(num, den)) + sawtooth(Rat(-num, den))).is_zero());
        }
    }
}

TEST_CASE("dedekind sum values, periodicity, reciprocity") {
    CHECK(dedekind_sum(0, 1).is_zero());
    CHECK(dedekind_sum(1, 2).is_zero());
    CHECK(dedekind_sum(1, 3) == Rat(1, 18));
    CHECK_THROWS_AS(dedekind_sum(2, 4), NotCoprimeError);
    CHECK(dedekind_sum(5, 3) == dedekind_sum(2, 3));
    CHECK(dedekind_sum(-1, 3) == dedekind_sum(2, 3));

    for (long k = 1; k <= 50; ++k) {
        for (long h = 1; h < k; ++h) {
            if (gcd_long(h, k) != 1) continue;
            Rat lhs = dedekind_sum(h, k) + dedekind_sum(k, h);
            Rat rhs = Rat(-1, 4) +
                      (Rat(h, k) + Rat(k, h) + Rat(1, h * k)) * Rat(1, 12);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("omega is the unit-modulus multiplier") {
    auto one = omega(0, 1, kCtx);
    CHECK(abs(one.re - Real(1L, kCtx.bits())) < tol_digits(45));
    CHECK(abs(one.im) < tol_digits(45));
    auto w12 = omega(1, 2, kCtx);
    CHECK(abs(w12.re - Real(1L, kCtx.bits())) < tol_digits(45));
    for (auto [h, k] : {std::pair<long, long>{1, 3}, {2, 5}, {4, 9}, {7, 24}}) {
        CHECK(abs(abs(omega(h, k, kCtx)) - Real(1L, kCtx.bits())) < tol_digits(45));
    }
    CHECK_THROWS_AS(omega(3, 6, kCtx), NotCoprimeError);
}

TEST_CASE("Kloosterman sum A_k") {
    CHECK(abs(kloosterman_A(1, 5, kCtx).re - Real(1L, kCtx.bits())) < tol_digits(45));
    auto a21 = kloosterman_A(2, 1, kCtx);
    CHECK(abs(a21.re + Real(1L, kCtx.bits())) < tol_digits(45));
    CHECK(abs(a21.im) < tol_digits(45));

    for (long k = 1; k <= 50; ++k) {
        auto a = kloosterman_A(k, 7, kCtx);
        // real to working precision, bounded by the term count
        CHECK(abs(a.im) < tol_digits(45));
        CHECK(abs(a) < Real(static_cast<double>(k) + 0.5, kCtx.bits()));
    }
    // dependence on n only through n mod k
    for (long k : {3L, 5L, 12L}) {
        for (long n : {0L, 1L, 4L}) {
            auto d = kloosterman_A(k, n, kCtx) - kloosterman_A(k, n + k, kCtx);
            CHECK(abs(d) < tol_digits(45));
        }
    }
}

TEST_CASE("odd Kloosterman sum") {
    auto a1 = kloosterman_A_odd(1, 3, kCtx);
    CHECK(abs(a1.re) < tol_digits(45));
    CHECK(abs(a1.im - Real(1L, kCtx.bits())) < tol_digits(45));
    CHECK_THROWS_AS(kloosterman_A_odd(2, 1, kCtx), KEvenError);

    for (long k : {3L, 5L, 7L, 9L}) {
        CHECK(abs(kloosterman_A_odd(k, 4, kCtx)) <
              Real(static_cast<double>(k) + 0.5, kCtx.bits()));
    }

    // independent direct summation for k=3, n=2 (fresh code path, no shared
    // angle folding: raw phases multiplied as separate complex factors)
    long k = 3, n = 2;
    mpfr_prec_t bits = kCtx.bits();
    Real pi = Real::pi(bits);
    Complex direct(0, bits);
    for (long h = 0; h < k; ++h) {
        if (gcd_long(h, k) != 1) continue;
        Complex term = omega((2 * h) % k, k, kCtx);
        term *= expi(pi * Real(Rat(3 * h * k, 2), bits));
        term *= expi(pi * Real(Rat(h * (1 - 4 * n), 2 * k), bits));
        direct += term;
    }
    direct = expi(pi * Real(Rat(k, 2), bits)) * direct;
    CHECK(abs(kloosterman_A_odd(k, n, kCtx) - direct) < tol_digits(45));
}

TEST_CASE("hprime conventions") {
    CHECK(solve_hprime(1, 3, HprimeConvention::evenModK) == 2);
    CHECK(solve_hprime(1, 2, HprimeConvention::mod2K) == 3);
    CHECK(solve_hprime(0, 1, HprimeConvention::evenModK) == 0);

    // evenModK needs odd k; mod2K needs h invertible mod 2k
    CHECK_THROWS_AS(solve_hprime(1, 2, HprimeConvention::evenModK), NoSolutionError);
    CHECK_THROWS_AS(solve_hprime(2, 5, HprimeConvention::mod2K), NoSolutionError);
    CHECK(solve_hprime(3, 4, HprimeConvention::mod2K) == 5);  // 3*5 = 15 = -1 mod 8
}

TEST_CASE("hprime congruences hold for random coprime pairs") {
    for (long k = 1; k <= 25; ++k) {
        for (long h = 0; h < std::max(1L, k); ++h) {
            if (gcd_long(h, k) != 1) continue;
            if (k % 2 == 1) {
                long hp = solve_hprime(h, k, HprimeConvention::evenModK);
                CHECK(hp % 2 == 0);
                CHECK(hp >= 0);
                CHECK(((h * hp + 1) % k + k) % k == 0);
                CHECK(hp < 2 * k);  // smallest nonnegative even representative

                long hp4 = solve_hprime_mult4(h, k);
                CHECK(hp4 % 4 == 0);
                CHECK(((h * hp4 + 1) % k + k) % k == 0);
            } else {
                long hp = solve_hprime(h, k, HprimeConvention::mod2K);
                CHECK(((h * hp + 1) % (2 * k)) == 0);
                long hp4 = solve_hprime(h, k, HprimeConvention::mod4K);
                CHECK(((h * hp4 + 1) % (4 * k)) == 0);
            }
        }
    }
    CHECK_THROWS_AS(solve_hprime_mult4(1, 2), NoSolutionError);
    CHECK(solve_hprime_mult4(1, 3) == 8);
    CHECK(solve_hprime_mult4(0, 1) == 0);
}

TEST_CASE("farey frame for 1/2 at order 3") {
    auto f = farey_frame(1, 2, 3, 10, Rat(1, 100), kCtx);
    CHECK(f.h1 == 1);
    CHECK(f.k1 == 3);
    CHECK(f.h2 == 2);
    CHECK(f.k2 == 3);
    CHECK(f.theta_left == Rat(1, 10));
    CHECK(f.theta_right == Rat(1, 10));
    CHECK(f.hprime == 3);  // mod2K default for even k
    CHECK(f.z.re > 0L);
    CHECK(abs(f.z.re - Real(Rat(2, 10), kCtx.bits())) < tol_digits(45));
    CHECK(abs(f.z.im + Real(Rat(2, 100), kCtx.bits())) < tol_digits(45));
}

TEST_CASE("farey neighbors match the brute-force sequence") {
    for (long N = 1; N <= 12; ++N) {
        // all reduced fractions h/k in [0,1) with k <= N, sorted
        std::vector<Rat> seq;
        for (long k = 1; k <= N; ++k) {
            for (long h = 0; h < k; ++h) {
                if (gcd_long(h, k) == 1) seq.push_back(Rat(h, k));
            }
        }
        std::sort(seq.begin(), seq.end(), [](const Rat& a, const Rat& b) {
            return a < b;
        });
        for (long k = 1; k <= N; ++k) {
            for (long h = 0; h < k; ++h) {
                if (gcd_long(h, k) != 1) continue;
                auto f = farey_frame(h, k, N, 5, Rat(1, 50), kCtx);
                REQUIRE(f.h * f.k1 - f.h1 * f.k == 1);
                REQUIRE(f.h2 * f.k - f.h * f.k2 == 1);
                REQUIRE(f.k1 > N - k);
                REQUIRE(f.k1 <= N);
                REQUIRE(f.k2 > N - k);
                REQUIRE(f.k2 <= N);
                auto it = std::find(seq.begin(), seq.end(), Rat(h, k));
                REQUIRE(it != seq.end());
                if (it != seq.begin()) {
                    REQUIRE(Rat(f.h1, f.k1) == *(it - 1));
                } else {
                    // 0/1 wraps: left neighbor is -1/N
                    REQUIRE(f.h1 == -1);
                    REQUIRE(f.k1 == N);
                }
                if (it + 1 != seq.end()) {
                    REQUIRE(Rat(f.h2, f.k2) == *(it + 1));
                } else {
                    REQUIRE(Rat(f.h2, f.k2) == Rat(1, 1));
                }
            }
        }
    }
    CHECK_THROWS_AS(farey_frame(2, 4, 5, 3, Rat(1, 10), kCtx), Error);
    CHECK_THROWS_AS(farey_frame(1, 6, 5, 3, Rat(1, 10), kCtx), Error);
}
