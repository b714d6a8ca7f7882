#include "partstat/partitions.hpp"

#include <cassert>

#include "partstat/errors.hpp"

namespace partstat {

std::vector<Int> partition_table(long n_max) {
    assert(n_max >= 0);
    std::vector<Int> p(static_cast<size_t>(n_max) + 1);
    p[0] = Int(1L);
    for (long n = 1; n <= n_max; ++n) {
        Int acc;
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2;
            long g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            bool plus = (k % 2) == 1;
            if (plus) {
                acc += p[n - g1];
                if (g2 <= n) acc += p[n - g2];
            } else {
                acc -= p[n - g1];
                if (g2 <= n) acc -= p[n - g2];
            }
        }
        p[n] = std::move(acc);
    }
    return p;
}

Int count_partitions(long n) {
    assert(n >= 0);
    return partition_table(n).back();
}

namespace {

void enumerate_rec(long remaining, long max_part, std::vector<long>& parts,
                   const std::function<void(const std::vector<long>&)>& visit) {
    if (remaining == 0) {
        visit(parts);
        return;
    }
    for (long k = std::min(remaining, max_part); k >= 1; --k) {
        parts.push_back(k);
        enumerate_rec(remaining - k, k, parts, visit);
        parts.pop_back();
    }
}

}  // namespace

void for_each_partition(long n,
                        const std::function<void(const std::vector<long>&)>& visit) {
    assert(n >= 0);
    std::vector<long> parts;
    enumerate_rec(n, n, parts, visit);
}

Int RankDistribution::total() const {
    Int t;
    for (const auto& [m, c] : counts) t += c;
    return t;
}

RankDistribution rank_distribution(long n) {
    RankDistribution d;
    d.n = n;
    if (n == 0) {
        d.counts[0] = Int(1L);
        return d;
    }
    for_each_partition(n, [&](const std::vector<long>& parts) {
        long rank = parts.front() - static_cast<long>(parts.size());
        d.counts[rank] += Int(1L);
    });
    return d;
}

std::vector<Int> eta2_moment_table(long n_max) {
    assert(n_max >= 0);
    // Group partitions of n by largest part L; the remainder is a partition of
    // n-L into parts <= L with, say, k parts, and the rank is (L-1)-k. So with
    //   A(r,j) = #{partitions of r, parts <= j}
    //   B(r,j) = sum of k over them,  C(r,j) = sum of k^2,
    // the sum of rank^2 over all partitions of n is
    //   sum_L [ (L-1)^2 A(n-L,L) - 2(L-1) B(n-L,L) + C(n-L,L) ],
    // and eta2(n) = (1/2) sum rank^2 because the first moment vanishes by
    // conjugation symmetry. A, B, C satisfy in-place recurrences in j.
    size_t sz = static_cast<size_t>(n_max) + 1;
    std::vector<Int> A(sz), B(sz), C(sz), acc(sz);
    A[0] = Int(1L);
    for (long j = 1; j <= n_max; ++j) {
        for (long i = j; i <= n_max; ++i) {
            // entries at i-j already hold their parts<=j values
            C[i] += C[i - j] + B[i - j] * 2L + A[i - j];
            B[i] += B[i - j] + A[i - j];
            A[i] += A[i - j];
        }
        // contributions of partitions whose largest part is exactly j
        for (long n = j; n <= n_max; ++n) {
            long r = n - j;
            acc[n] += A[r] * ((j - 1) * (j - 1)) - B[r] * (2 * (j - 1)) + C[r];
        }
    }
    for (long n = 0; n <= n_max; ++n) {
        acc[n] = divexact(acc[n], Int(2L));
    }
    return acc;
}

Int eta2_moment(long n) {
    assert(n >= 0);
    return eta2_moment_table(n).back();
}

std::vector<Int> spt_table(long n_max) {
    assert(n_max >= 1);
    // Sort partitions by smallest part s. Those with smallest part s and its
    // multiplicity counted are generated by
    //   q^s / (1-q^s)^2 * prod_{j>s} 1/(1-q^j),
    // since q^s/(1-q^s)^2 = sum_{c>=1} c q^{cs} weights multiplicity c. Walk s
    // downward keeping the tail product, which gains one factor per step.
    size_t sz = static_cast<size_t>(n_max) + 1;
    std::vector<Int> tail(sz), acc(sz);
    tail[0] = Int(1L);
    for (long s = n_max; s >= 1; --s) {
        // head * tail, head has coefficient c at exponent c*s
        for (long c = 1; c * s <= n_max; ++c) {
            long base = c * s;
            for (long i = base; i <= n_max; ++i) {
                acc[i] += tail[i - base] * c;
            }
        }
        // extend tail product by 1/(1-q^s) for the next (smaller) s
        for (long i = s; i <= n_max; ++i) tail[i] += tail[i - s];
    }
    return acc;
}

Int spt_oracle(long n) {
    assert(n >= 1);
    return spt_table(n).back();
}

}  // namespace partstat
