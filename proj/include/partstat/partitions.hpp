#pragma once

#include <functional>
#include <map>
#include <vector>

#include "partstat/bigint.hpp"

namespace partstat {

// Number of partitions p(n) by the Euler pentagonal-number recurrence.
Int count_partitions(long n);

// p(0..n_max) as a table; the recurrence needs all earlier values anyway.
std::vector<Int> partition_table(long n_max);

// Visit every partition of n as a non-increasing parts vector, in descending
// lexicographic order. The reference passed to the visitor is reused between
// calls; copy it if you need to keep it.
void for_each_partition(long n,
                        const std::function<void(const std::vector<long>&)>& visit);

// Rank of a partition: largest part minus number of parts.
struct RankDistribution {
    long n = 0;
    std::map<long, Int> counts;  // m -> N(m,n); absent keys mean 0

    Int total() const;
};

// N(m,n) for all m, by direct enumeration. n = 0 yields {0 -> 1} so that the
// constant term of the rank generating function is reproduced.
RankDistribution rank_distribution(long n);

// m(m-1)/2 as a polynomial in m, valid for any integer (negative included).
inline Int choose2(long m) { return divexact(Int(m) * Int(m - 1), Int(2L)); }

// Second symmetrized rank moment: sum over m of m(m-1)/2 * N(m,n). Computed by
// a counting recurrence, not enumeration, so large n stay cheap.
Int eta2_moment(long n);
std::vector<Int> eta2_moment_table(long n_max);

// Total number of appearances of smallest parts across all partitions of n,
// from its generating function. Independent of the moment computation; the
// identity spt(n) = n*p(n) - eta2(n) is asserted in tests, never assumed here.
Int spt_oracle(long n);
std::vector<Int> spt_table(long n_max);

}  // namespace partstat
