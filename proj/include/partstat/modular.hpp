#pragma once

#include "partstat/bigint.hpp"
#include "partstat/complexnum.hpp"
#include "partstat/precision.hpp"

namespace partstat {

// ((x)): x - floor(x) - 1/2 for non-integer x, 0 on integers. Exact.
Rat sawtooth(const Rat& x);

// s(h,k) = sum over mu mod k of ((mu/k))((h mu/k)). Exact rational; depends on
// h only modulo k. Throws NotCoprimeError unless gcd(h,k)=1.
Rat dedekind_sum(long h, long k);

// exp(pi i r) for exact rational r, reduced mod 2 before evaluation so huge
// multiples of pi never eat precision.
Complex exp_pi_i(const Rat& r, const PrecisionContext& ctx);

// omega_{h,k} = exp(pi i s(h,k)).
Complex omega(long h, long k, const PrecisionContext& ctx);

// A_k(n) = sum over h mod k, gcd(h,k)=1, of omega_{h,k} e^{-2 pi i h n / k}.
// Real-valued in exact arithmetic; the imaginary part is kept as a diagnostic.
Complex kloosterman_A(long k, long n, const PrecisionContext& ctx);

// Odd-moment analogue, defined for odd k only:
// e^{pi i k/2} sum over h of omega_{2h mod k, k} e^{3 pi i h k/2}
//                                               e^{pi i h (1-4n)/(2k)}.
Complex kloosterman_A_odd(long k, long n, const PrecisionContext& ctx);

// Conventions for the auxiliary solution h' of h h' = -1 (mod ...):
//   evenModK: k odd, smallest nonnegative even h' with h h' = -1 (mod k);
//   mod2K:    h h' = -1 (mod 2k), representative in [0, 2k);
//   mod4K:    h h' = -1 (mod 4k), representative in [0, 4k), needs h odd.
enum class HprimeConvention { evenModK, mod2K, mod4K };

long solve_hprime(long h, long k, HprimeConvention convention);

// k odd: smallest nonnegative h' with h h' = -1 (mod k) and 4 | h', found by
// stepping the base residue by k (at most four steps since gcd(k,4)=1).
long solve_hprime_mult4(long h, long k);

// Farey-dissection frame around h/k in the order-N sequence: the adjacent
// fractions h1/k1 < h/k < h2/k2, the arc bounds, an h' under the stated
// convention, and the point z = k/n - k*phi*i on the integration contour.
struct FareyFrame {
    long h = 0, k = 1;
    long N = 1;
    long h1 = 0, k1 = 1;
    long h2 = 0, k2 = 1;
    long hprime = 0;
    HprimeConvention convention = HprimeConvention::evenModK;
    Rat theta_left;   // 1/(k(k1+k))
    Rat theta_right;  // 1/(k(k2+k))
    Complex z;
};

// Convention defaults to evenModK for odd k and mod2K for even k.
FareyFrame farey_frame(long h, long k, long N, long n, const Rat& phi,
                       const PrecisionContext& ctx);
FareyFrame farey_frame(long h, long k, long N, long n, const Rat& phi,
                       const PrecisionContext& ctx, HprimeConvention convention);

}  // namespace partstat
