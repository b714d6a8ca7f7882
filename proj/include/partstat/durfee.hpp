#pragma once

#include <functional>
#include <map>
#include <vector>

#include "partstat/bigint.hpp"

namespace partstat {

// One cell of a marked symbol row: a positive value with subscript 1 or 2.
struct MarkedEntry {
    long value;
    int subscript;
    friend bool operator==(const MarkedEntry&, const MarkedEntry&) = default;
};

// 2-marked Durfee symbol. Rows are stored left to right, which by the row
// conditions means the subscript-2 block first, then the subscript-1 block,
// values non-increasing across the whole row.
struct MarkedDurfeeSymbol {
    std::vector<MarkedEntry> top;
    std::vector<MarkedEntry> bottom;
    long side = 0;

    long represented() const;  // side^2 + sum of all values
    friend bool operator==(const MarkedDurfeeSymbol&, const MarkedDurfeeSymbol&) = default;
};

// Row conditions checked directly on the representation:
//  (1) values and subscripts both non-increasing along each row;
//  (2) the top row contains at least one subscript-1 entry;
//  (3) with M1 the largest subscript-1 top value, bottom subscript-1 values
//      lie in [1,M1] and bottom subscript-2 values lie in [M1,side];
//  and every value is in [1,side].
bool is_valid_marked(const MarkedDurfeeSymbol& s);

// Visit every 2-marked Durfee symbol representing n, duplicate-free. The
// symbol reference is reused between calls.
void for_each_marked(long n, const std::function<void(const MarkedDurfeeSymbol&)>& visit);

std::vector<MarkedDurfeeSymbol> enumerate_marked(long n);

// Full rank rho1 + 2*rho2 with rho1 = tau1 - beta1 - 1, rho2 = tau2 - beta2,
// where tau_i / beta_i count subscript-i entries in the top / bottom row.
long full_rank(const MarkedDurfeeSymbol& s);

// NF2(m,n): number of 2-marked symbols of n with full rank m.
std::map<long, Int> nf2_distribution(long n);

// Residue classes of the full rank: entry r holds NF2(r,t;n), the count of
// symbols whose full rank is congruent to r modulo t.
std::vector<Int> nf2_mod(long n, long t);

// Odd Durfee symbol: odd entries at most 2*side+1, representing
// 2*side^2 + 2*side + 1 + (sum of entries).
struct OddDurfeeSymbol {
    std::vector<long> top;
    std::vector<long> bottom;
    long side = 0;

    long represented() const;
    friend bool operator==(const OddDurfeeSymbol&, const OddDurfeeSymbol&) = default;
};

void for_each_odd(long n, const std::function<void(const OddDurfeeSymbol&)>& visit);
std::vector<OddDurfeeSymbol> enumerate_odd(long n);

// Odd rank: number of top entries minus number of bottom entries.
long odd_rank(const OddDurfeeSymbol& s);

// N^o(m,n): odd-rank counts over odd Durfee symbols of n.
std::map<long, Int> odd_rank_distribution(long n);

// Second odd moment: sum over m of (m+1)m/2 * N^o(m,n).
Int eta2_odd_moment(long n);
std::vector<Int> eta2_odd_moment_table(long n_max);

// Odd 2-marked Durfee symbol: the marked row conditions verbatim, with all
// values odd and bounded by 2*side+1 instead of side.
struct MarkedOddDurfeeSymbol {
    std::vector<MarkedEntry> top;
    std::vector<MarkedEntry> bottom;
    long side = 0;  // side may be 0; the largest allowed entry is 2*side+1

    long represented() const;  // 2 side^2 + 2 side + 1 + sum of values
};

bool is_valid_odd_marked(const MarkedOddDurfeeSymbol& s);

void for_each_odd_marked(long n,
                         const std::function<void(const MarkedOddDurfeeSymbol&)>& visit);

// D2(n) and D2^o(n): symbol counts, the enumerative side of the moment
// identities (D2 matches eta2, D2^o matches eta2_odd).
Int count_marked(long n);
Int count_odd_marked(long n);

}  // namespace partstat
