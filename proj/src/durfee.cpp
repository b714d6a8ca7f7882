#include "partstat/durfee.hpp"

#include <algorithm>
#include <cassert>

namespace partstat {

long MarkedDurfeeSymbol::represented() const {
    long s = side * side;
    for (const auto& e : top) s += e.value;
    for (const auto& e : bottom) s += e.value;
    return s;
}

long OddDurfeeSymbol::represented() const {
    long s = 2 * side * side + 2 * side + 1;
    for (long v : top) s += v;
    for (long v : bottom) s += v;
    return s;
}

long MarkedOddDurfeeSymbol::represented() const {
    long s = 2 * side * side + 2 * side + 1;
    for (const auto& e : top) s += e.value;
    for (const auto& e : bottom) s += e.value;
    return s;
}

namespace {

bool row_conditions_hold(const std::vector<MarkedEntry>& row, long cap) {
    for (size_t i = 0; i < row.size(); ++i) {
        if (row[i].value < 1 || row[i].value > cap) return false;
        if (row[i].subscript != 1 && row[i].subscript != 2) return false;
        if (i > 0) {
            if (row[i].value > row[i - 1].value) return false;
            if (row[i].subscript > row[i - 1].subscript) return false;
        }
    }
    return true;
}

bool marked_conditions_hold(const std::vector<MarkedEntry>& top,
                            const std::vector<MarkedEntry>& bottom, long cap) {
    if (!row_conditions_hold(top, cap) || !row_conditions_hold(bottom, cap)) {
        return false;
    }
    long m1 = 0;
    for (const auto& e : top) m1 = std::max(m1, e.subscript == 1 ? e.value : 0L);
    if (m1 == 0) return false;  // top row needs a subscript-1 entry
    for (const auto& e : bottom) {
        if (e.subscript == 1 && e.value > m1) return false;
        if (e.subscript == 2 && e.value < m1) return false;
    }
    return true;
}

// Shared enumeration for plain and odd 2-marked symbols. A symbol of n with
// square side S (cap = S, or cap = 2S+1 with the odd offset) decomposes
// uniquely by M1, the largest subscript-1 top value: top subscript-2 block
// with parts in [M1,cap], then the mandatory leading M1, then a subscript-1
// tail with parts <= M1; bottom subscript-2 block in [M1,cap] and subscript-1
// block in [1,M1]. Row monotonicity is automatic in this order. The remaining
// budget flows through the four blocks.
class MarkedEnumerator {
  public:
    using Emit = std::function<void(const std::vector<MarkedEntry>&,
                                    const std::vector<MarkedEntry>&, long side)>;

    MarkedEnumerator(bool odd_variant, Emit emit)
        : odd_(odd_variant), emit_(std::move(emit)) {}

    void run(long n) {
        assert(n >= 1);
        for (long side = odd_ ? 0 : 1;; ++side) {
            long offset = odd_ ? 2 * side * side + 2 * side + 1 : side * side;
            if (offset > n) break;
            side_ = side;
            cap_ = odd_ ? 2 * side + 1 : side;
            for (long m1 = 1; m1 <= std::min(cap_, n - offset); m1 += odd_ ? 2 : 1) {
                m1_ = m1;
                top_.clear();
                bottom_.clear();
                top2(n - offset - m1, cap_);
            }
        }
    }

  private:
    long step() const { return odd_ ? 2 : 1; }
    long odd_adjust(long v) const { return (odd_ && v % 2 == 0) ? v - 1 : v; }

    void top2(long budget, long maxv) {
        top_.push_back({m1_, 1});
        top1(budget, m1_);
        top_.pop_back();
        for (long v = odd_adjust(std::min(budget, maxv)); v >= m1_; v -= step()) {
            top_.push_back({v, 2});
            top2(budget - v, v);
            top_.pop_back();
        }
    }

    void top1(long budget, long maxv) {
        bottom2(budget, cap_);
        for (long v = odd_adjust(std::min(budget, maxv)); v >= 1; v -= step()) {
            top_.push_back({v, 1});
            top1(budget - v, v);
            top_.pop_back();
        }
    }

    void bottom2(long budget, long maxv) {
        bottom1(budget, m1_);
        for (long v = odd_adjust(std::min(budget, maxv)); v >= m1_; v -= step()) {
            bottom_.push_back({v, 2});
            bottom2(budget - v, v);
            bottom_.pop_back();
        }
    }

    void bottom1(long budget, long maxv) {
        if (budget == 0) {
            emit_(top_, bottom_, side_);
            return;
        }
        for (long v = odd_adjust(std::min(budget, maxv)); v >= 1; v -= step()) {
            bottom_.push_back({v, 1});
            bottom1(budget - v, v);
            bottom_.pop_back();
        }
    }

    bool odd_;
    Emit emit_;
    long side_ = 0, cap_ = 0, m1_ = 0;
    std::vector<MarkedEntry> top_, bottom_;
};

}  // namespace

bool is_valid_marked(const MarkedDurfeeSymbol& s) {
    if (s.side < 1) return false;
    return marked_conditions_hold(s.top, s.bottom, s.side);
}

bool is_valid_odd_marked(const MarkedOddDurfeeSymbol& s) {
    if (s.side < 0) return false;
    for (const auto& e : s.top) {
        if (e.value % 2 == 0) return false;
    }
    for (const auto& e : s.bottom) {
        if (e.value % 2 == 0) return false;
    }
    return marked_conditions_hold(s.top, s.bottom, 2 * s.side + 1);
}

void for_each_marked(long n,
                     const std::function<void(const MarkedDurfeeSymbol&)>& visit) {
    MarkedDurfeeSymbol sym;
    MarkedEnumerator e(false, [&](const std::vector<MarkedEntry>& top,
                                  const std::vector<MarkedEntry>& bottom, long side) {
        sym.top = top;
        sym.bottom = bottom;
        sym.side = side;
        visit(sym);
    });
    e.run(n);
}

std::vector<MarkedDurfeeSymbol> enumerate_marked(long n) {
    std::vector<MarkedDurfeeSymbol> out;
    for_each_marked(n, [&](const MarkedDurfeeSymbol& s) { out.push_back(s); });
    return out;
}

long full_rank(const MarkedDurfeeSymbol& s) {
    long tau1 = 0, tau2 = 0, beta1 = 0, beta2 = 0;
    for (const auto& e : s.top) (e.subscript == 1 ? tau1 : tau2)++;
    for (const auto& e : s.bottom) (e.subscript == 1 ? beta1 : beta2)++;
    return (tau1 - beta1 - 1) + 2 * (tau2 - beta2);
}

std::map<long, Int> nf2_distribution(long n) {
    std::map<long, Int> counts;
    // only the block sizes matter for the rank, so skip materializing symbols
    MarkedEnumerator e(false, [&](const std::vector<MarkedEntry>& top,
                                  const std::vector<MarkedEntry>& bottom, long) {
        long tau1 = 0, tau2 = 0, beta1 = 0, beta2 = 0;
        for (const auto& en : top) (en.subscript == 1 ? tau1 : tau2)++;
        for (const auto& en : bottom) (en.subscript == 1 ? beta1 : beta2)++;
        counts[(tau1 - beta1 - 1) + 2 * (tau2 - beta2)] += Int(1L);
    });
    e.run(n);
    return counts;
}

std::vector<Int> nf2_mod(long n, long t) {
    assert(t >= 1);
    std::vector<Int> res(static_cast<size_t>(t));
    for (const auto& [m, c] : nf2_distribution(n)) {
        res[static_cast<size_t>(((m % t) + t) % t)] += c;
    }
    return res;
}

Int count_marked(long n) {
    Int c;
    MarkedEnumerator e(false, [&](const std::vector<MarkedEntry>&,
                                  const std::vector<MarkedEntry>&, long) { c += Int(1L); });
    e.run(n);
    return c;
}

Int count_odd_marked(long n) {
    Int c;
    MarkedEnumerator e(true, [&](const std::vector<MarkedEntry>&,
                                 const std::vector<MarkedEntry>&, long) { c += Int(1L); });
    e.run(n);
    return c;
}

void for_each_odd_marked(long n,
                         const std::function<void(const MarkedOddDurfeeSymbol&)>& visit) {
    MarkedOddDurfeeSymbol sym;
    MarkedEnumerator e(true, [&](const std::vector<MarkedEntry>& top,
                                 const std::vector<MarkedEntry>& bottom, long side) {
        sym.top = top;
        sym.bottom = bottom;
        sym.side = side;
        visit(sym);
    });
    e.run(n);
}

namespace {

// Enumerate odd Durfee symbols: two rows of odd parts bounded by 2*side+1.
class OddEnumerator {
  public:
    using Emit = std::function<void(const OddDurfeeSymbol&)>;

    explicit OddEnumerator(Emit emit) : emit_(std::move(emit)) {}

    void run(long n) {
        assert(n >= 1);
        for (long side = 0;; ++side) {
            long offset = 2 * side * side + 2 * side + 1;
            if (offset > n) break;
            sym_.side = side;
            sym_.top.clear();
            sym_.bottom.clear();
            cap_ = 2 * side + 1;
            top(n - offset, cap_);
        }
    }

  private:
    void top(long budget, long maxv) {
        bottom(budget, cap_);
        long start = std::min(budget, maxv);
        if (start % 2 == 0) --start;
        for (long v = start; v >= 1; v -= 2) {
            sym_.top.push_back(v);
            top(budget - v, v);
            sym_.top.pop_back();
        }
    }

    void bottom(long budget, long maxv) {
        if (budget == 0) {
            emit_(sym_);
            return;
        }
        long start = std::min(budget, maxv);
        if (start % 2 == 0) --start;
        for (long v = start; v >= 1; v -= 2) {
            sym_.bottom.push_back(v);
            bottom(budget - v, v);
            sym_.bottom.pop_back();
        }
    }

    Emit emit_;
    OddDurfeeSymbol sym_;
    long cap_ = 0;
};

}  // namespace

void for_each_odd(long n, const std::function<void(const OddDurfeeSymbol&)>& visit) {
    OddEnumerator e(visit);
    e.run(n);
}

std::vector<OddDurfeeSymbol> enumerate_odd(long n) {
    std::vector<OddDurfeeSymbol> out;
    for_each_odd(n, [&](const OddDurfeeSymbol& s) { out.push_back(s); });
    return out;
}

long odd_rank(const OddDurfeeSymbol& s) {
    return static_cast<long>(s.top.size()) - static_cast<long>(s.bottom.size());
}

std::map<long, Int> odd_rank_distribution(long n) {
    std::map<long, Int> counts;
    for_each_odd(n, [&](const OddDurfeeSymbol& s) { counts[odd_rank(s)] += Int(1L); });
    return counts;
}

Int eta2_odd_moment(long n) {
    Int acc;
    for_each_odd(n, [&](const OddDurfeeSymbol& s) {
        long m = odd_rank(s);
        acc += divexact(Int(m + 1) * Int(m), Int(2L));
    });
    return acc;
}

std::vector<Int> eta2_odd_moment_table(long n_max) {
    std::vector<Int> out(static_cast<size_t>(n_max) + 1);
    for (long n = 1; n <= n_max; ++n) out[n] = eta2_odd_moment(n);
    return out;
}

}  // namespace partstat
