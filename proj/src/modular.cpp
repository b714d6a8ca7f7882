#include "partstat/modular.hpp"

#include <cassert>

#include "partstat/errors.hpp"

namespace partstat {

Rat sawtooth(const Rat& x) {
    if (x.is_integer()) return Rat();
    return x - Rat(x.floor(), Int(1L)) - Rat(1, 2);
}

Rat dedekind_sum(long h, long k) {
    assert(k >= 1);
    if (gcd_long(h, k) != 1) {
        throw NotCoprimeError("dedekind_sum: h and k must be coprime");
    }
    long hm = ((h % k) + k) % k;
    Rat s;
    for (long mu = 1; mu < k; ++mu) {
        s += sawtooth(Rat(mu, k)) * sawtooth(Rat(hm * mu, k));
    }
    return s;
}

Complex exp_pi_i(const Rat& r, const PrecisionContext& ctx) {
    Rat reduced = r - Rat(Int(2L) * (r / Rat(2, 1)).floor(), Int(1L));
    mpfr_prec_t bits = ctx.bits();
    return expi(Real::pi(bits) * Real(reduced, bits));
}

Complex omega(long h, long k, const PrecisionContext& ctx) {
    return exp_pi_i(dedekind_sum(h, k), ctx);
}

Complex kloosterman_A(long k, long n, const PrecisionContext& ctx) {
    assert(k >= 1);
    mpfr_prec_t bits = ctx.bits();
    Complex acc(0, bits);
    for (long h = 0; h < k; ++h) {
        if (gcd_long(h, k) != 1) continue;
        // omega_{h,k} e^{-2 pi i h n / k}; the exponent is -2 h n / k mod 2
        Rat angle = dedekind_sum(h, k) - Rat(2 * (((h * (n % k)) % k + k) % k), k);
        acc += exp_pi_i(angle, ctx);
    }
    return acc;
}

Complex kloosterman_A_odd(long k, long n, const PrecisionContext& ctx) {
    assert(k >= 1);
    if (k % 2 == 0) {
        throw KEvenError("kloosterman_A_odd: k must be odd");
    }
    mpfr_prec_t bits = ctx.bits();
    Complex acc(0, bits);
    for (long h = 0; h < k; ++h) {
        if (gcd_long(h, k) != 1) continue;
        Rat angle = dedekind_sum((2 * h) % k, k) + Rat(3 * h * k, 2) +
                    Rat(h, 2 * k) - Rat(Int(4) * Int(h) * Int(n), Int(2 * k));
        acc += exp_pi_i(angle, ctx);
    }
    return exp_pi_i(Rat(k, 2), ctx) * acc;
}

long solve_hprime(long h, long k, HprimeConvention convention) {
    assert(k >= 1);
    if (gcd_long(h, k) != 1) {
        throw NotCoprimeError("solve_hprime: h and k must be coprime");
    }
    switch (convention) {
        case HprimeConvention::evenModK: {
            if (k % 2 == 0) {
                throw NoSolutionError(
                    "solve_hprime: evenModK needs odd k (h h' = -1 forces odd h' "
                    "when k is even)");
            }
            if (k == 1) return 0;
            long base = (k - inv_mod_long(h, k)) % k;  // -h^{-1} mod k
            return (base % 2 == 0) ? base : base + k;
        }
        case HprimeConvention::mod2K: {
            long m = 2 * k;
            if (gcd_long(h, m) != 1) {
                throw NoSolutionError("solve_hprime: h must be odd for mod2K");
            }
            return (m - inv_mod_long(h, m)) % m;
        }
        case HprimeConvention::mod4K: {
            long m = 4 * k;
            if (gcd_long(h, m) != 1) {
                throw NoSolutionError("solve_hprime: h must be odd for mod4K");
            }
            return (m - inv_mod_long(h, m)) % m;
        }
    }
    throw Error("solve_hprime: unknown convention");
}

long solve_hprime_mult4(long h, long k) {
    assert(k >= 1);
    if (k % 2 == 0) {
        throw NoSolutionError("solve_hprime_mult4: k must be odd");
    }
    if (gcd_long(h, k) != 1) {
        throw NotCoprimeError("solve_hprime_mult4: h and k must be coprime");
    }
    long base = (k == 1) ? 0 : (k - inv_mod_long(h, k)) % k;
    for (long j = 0; j < 4; ++j) {
        long cand = base + j * k;
        if (cand % 4 == 0) return cand;
    }
    throw NoSolutionError("solve_hprime_mult4: no residue divisible by 4");
}

FareyFrame farey_frame(long h, long k, long N, long n, const Rat& phi,
                       const PrecisionContext& ctx, HprimeConvention convention) {
    if (k < 1 || k > N || h < 0 || h >= k || gcd_long(h, k) != 1) {
        throw Error("farey_frame: need 1 <= k <= N, 0 <= h < k, gcd(h,k) = 1");
    }
    assert(n >= 1);
    FareyFrame f;
    f.h = h;
    f.k = k;
    f.N = N;
    f.convention = convention;
    f.hprime = solve_hprime(h, k, convention);

    // neighbors: k1 = h^{-1}, k2 = -h^{-1} (mod k), both pulled into (N-k, N]
    long hinv = (k == 1) ? 0 : inv_mod_long(h, k);
    auto pull = [&](long target) {
        long t = ((target % k) + k) % k;
        return N - ((N - t) % k + k) % k;
    };
    f.k1 = pull(hinv);
    f.k2 = pull(k - hinv);
    f.h1 = (h * f.k1 - 1) / k;
    f.h2 = (h * f.k2 + 1) / k;
    assert(h * f.k1 - f.h1 * k == 1);
    assert(f.h2 * k - h * f.k2 == 1);

    f.theta_left = Rat(1, k * (f.k1 + k));
    f.theta_right = Rat(1, k * (f.k2 + k));

    mpfr_prec_t bits = ctx.bits();
    f.z = Complex(Real(Rat(k, n), bits), Real(-(phi * Rat(k, 1)), bits));
    assert(f.z.re > 0L);
    return f;
}

FareyFrame farey_frame(long h, long k, long N, long n, const Rat& phi,
                       const PrecisionContext& ctx) {
    return farey_frame(h, k, N, n, phi, ctx,
                       k % 2 == 1 ? HprimeConvention::evenModK
                                  : HprimeConvention::mod2K);
}

}  // namespace partstat
