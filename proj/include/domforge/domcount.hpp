#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "domforge/enumerate.hpp"

namespace domforge {

// Exact D(1) and D'(1) in native width. For n <= 8 the extremes are
// d1 <= 2^8 and dp1 <= 8*2^8, so uint64 cross-multiplied comparisons stay
// exact with enormous headroom; this is what makes million-graph labeled
// sweeps cheap.
struct DomCount {
    std::uint64_t d1 = 0;
    std::uint64_t dp1 = 0;
};

// subset-union walk over all 2^n vertex subsets; scratch avoids reallocating
// the union table across the millions of calls a sweep makes
class DomCounter {
public:
    explicit DomCounter(int n) : n_(n), uni_(std::size_t{1} << n) {
        if (n < 0 || n > 24) throw std::invalid_argument("DomCounter: order out of range");
    }

    // closed_nb[v] = closed neighborhood bitmask of v
    DomCount count(const std::uint64_t* closed_nb) {
        const std::uint64_t full = (std::uint64_t{1} << n_) - 1;
        DomCount out;
        uni_[0] = 0;
        if (n_ == 0) {
            out.d1 = 1;
            return out;
        }
        for (std::uint64_t s = 1; s <= full; ++s) {
            uni_[s] = uni_[s & (s - 1)] | closed_nb[std::countr_zero(s)];
            if (uni_[s] == full) {
                ++out.d1;
                out.dp1 += static_cast<std::uint64_t>(std::popcount(s));
            }
        }
        return out;
    }

    // decode an edge mask into closed neighborhoods, then count
    DomCount count_edge_mask(std::uint64_t edge_mask) {
        for (int v = 0; v < n_; ++v) nb_[v] = std::uint64_t{1} << v;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i)
                if ((edge_mask >> edge_bit_index(i, j)) & 1) {
                    nb_[i] |= std::uint64_t{1} << j;
                    nb_[j] |= std::uint64_t{1} << i;
                }
        return count(nb_);
    }

    const std::uint64_t* closed_neighborhoods() const { return nb_; }

private:
    int n_;
    std::vector<std::uint64_t> uni_;
    std::uint64_t nb_[24];
};

// d1/dp1 for every edge mask at order n, indexed by mask; lets edge-removal
// sweeps answer avd(G\e) by a table lookup
struct LabeledCountTable {
    int n = 0;
    std::vector<std::uint32_t> d1;
    std::vector<std::uint32_t> dp1;

    DomCount at(std::uint64_t mask) const { return {d1[mask], dp1[mask]}; }
};

inline void fill_labeled_counts(LabeledCountTable& table, std::uint64_t lo, std::uint64_t hi) {
    DomCounter counter(table.n);
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        DomCount c = counter.count_edge_mask(mask);
        table.d1[mask] = static_cast<std::uint32_t>(c.d1);
        table.dp1[mask] = static_cast<std::uint32_t>(c.dp1);
    }
}

}  // namespace domforge
