#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <list>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "domforge/bigint.hpp"
#include "domforge/canonical.hpp"
#include "domforge/graph.hpp"
#include "domforge/rational.hpp"

namespace domforge {

// Dense polynomial with BigInt coefficients; coeffs[k] counts dominating
// sets of cardinality k when the value is a domination polynomial. Trailing
// zeros are trimmed, so a graph of order n always yields size n+1 (the top
// coefficient is 1: the full vertex set dominates).
struct DomPolynomial {
    std::vector<BigInt> coeffs;

    DomPolynomial() = default;
    explicit DomPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) { trim(); }

    static DomPolynomial zero() { return DomPolynomial{}; }
    static DomPolynomial one() { return DomPolynomial{{BigInt(1)}}; }

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    const BigInt& coeff(std::size_t k) const {
        static const BigInt kZero{};
        return k < coeffs.size() ? coeffs[k] : kZero;
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    }

    friend DomPolynomial operator+(const DomPolynomial& a, const DomPolynomial& b) {
        DomPolynomial r;
        r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }

    friend DomPolynomial operator-(const DomPolynomial& a, const DomPolynomial& b) {
        DomPolynomial r;
        r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = a.coeff(i) - b.coeff(i);
        r.trim();
        return r;
    }

    friend DomPolynomial operator*(const DomPolynomial& a, const DomPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        DomPolynomial r;
        r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, BigInt{});
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs.size(); ++j)
                r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
        return r;
    }

    // multiply by x^k
    DomPolynomial shifted(int k) const {
        if (is_zero()) return zero();
        DomPolynomial r;
        r.coeffs.assign(coeffs.size() + k, BigInt{});
        std::copy(coeffs.begin(), coeffs.end(), r.coeffs.begin() + k);
        return r;
    }

    friend bool operator==(const DomPolynomial& a, const DomPolynomial& b) {
        return a.coeffs == b.coeffs;
    }
};

// (1+x)^k expanded via a Pascal row
inline DomPolynomial one_plus_x_pow(int k) {
    std::vector<BigInt> row{BigInt(1)};
    for (int i = 0; i < k; ++i) {
        std::vector<BigInt> next(row.size() + 1, BigInt{});
        for (std::size_t j = 0; j < row.size(); ++j) {
            next[j] += row[j];
            next[j + 1] += row[j];
        }
        row = std::move(next);
    }
    return DomPolynomial{std::move(row)};
}

// D(1) and D'(1): the count of dominating sets and the sum of their sizes
struct EvalPair {
    BigInt d1;
    BigInt dp1;
};

inline EvalPair eval_pair(const DomPolynomial& p) {
    EvalPair r;
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
        r.d1 += p.coeffs[k];
        r.dp1 += BigInt(k) * p.coeffs[k];
    }
    return r;
}

inline constexpr int kDefaultBruteGuard = 25;

namespace detail {

// per-cardinality dominating-set counts by exhaustive subset enumeration;
// subsets restricted to submasks of `allowed`
inline std::vector<std::uint64_t> dominating_counts(const Graph& g, std::uint64_t allowed) {
    int n = g.order();
    std::vector<std::uint64_t> cnt(n + 1, 0);
    if (n == 0) {
        cnt[0] = 1;  // the empty set dominates the empty graph
        return cnt;
    }
    std::vector<std::uint64_t> cn(n);
    for (int v = 0; v < n; ++v) cn[v] = g.closed_neighbor_mask(v);
    const std::uint64_t full = n == 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    if (allowed == full && n <= 20) {
        // incremental closed-neighborhood unions over all subsets
        std::vector<std::uint64_t> uni(std::uint64_t{1} << n);
        uni[0] = 0;
        for (std::uint64_t s = 1; s < uni.size(); ++s) {
            uni[s] = uni[s & (s - 1)] | cn[std::countr_zero(s)];
            if (uni[s] == full) ++cnt[std::popcount(s)];
        }
        return cnt;
    }
    if (allowed == full) {
        // split the subset into a low 16-bit half (tabulated) and a high half
        const int lo_bits = 16;
        const std::uint64_t lo_size = std::uint64_t{1} << lo_bits;
        std::vector<std::uint64_t> lo_uni(lo_size);
        lo_uni[0] = 0;
        for (std::uint64_t s = 1; s < lo_size; ++s)
            lo_uni[s] = lo_uni[s & (s - 1)] | cn[std::countr_zero(s)];
        const std::uint64_t hi_size = std::uint64_t{1} << (n - lo_bits);
        std::vector<std::uint64_t> hi_uni(hi_size);
        hi_uni[0] = 0;
        for (std::uint64_t h = 0; h < hi_size; ++h) {
            if (h) hi_uni[h] = hi_uni[h & (h - 1)] | cn[lo_bits + std::countr_zero(h)];
            int hk = std::popcount(h);
            for (std::uint64_t s = 0; s < lo_size; ++s)
                if ((hi_uni[h] | lo_uni[s]) == full) ++cnt[hk + std::popcount(s)];
        }
        return cnt;
    }
    // submask walk over the allowed vertices only
    std::uint64_t s = allowed;
    while (true) {
        std::uint64_t uni = 0;
        for (std::uint64_t rest = s; rest; rest &= rest - 1) uni |= cn[std::countr_zero(rest)];
        if (uni == full) ++cnt[std::popcount(s)];
        if (s == 0) break;
        s = (s - 1) & allowed;
    }
    return cnt;
}

inline void check_brute_guard(const Graph& g, int guard, const char* who) {
    if (g.order() > guard)
        throw std::invalid_argument(std::string(who) + ": order " + std::to_string(g.order()) +
                                    " exceeds the brute-force guard " + std::to_string(guard) +
                                    "; use compute for large graphs");
    if (g.order() > 63)
        throw std::invalid_argument(std::string(who) + ": bitmask enumeration needs order <= 63");
}

}  // namespace detail

// exhaustive-oracle domination polynomial: enumerates all 2^n subsets
inline DomPolynomial brute_force(const Graph& g, int guard = kDefaultBruteGuard) {
    detail::check_brute_guard(g, guard, "brute_force");
    std::uint64_t full =
        g.order() >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    if (g.order() == 0) full = 0;
    std::vector<std::uint64_t> cnt = detail::dominating_counts(g, full);
    std::vector<BigInt> coeffs(cnt.size());
    for (std::size_t k = 0; k < cnt.size(); ++k) coeffs[k] = BigInt(cnt[k]);
    return DomPolynomial{std::move(coeffs)};
}

// D_{K_{1,k}}(x) = x(1+x)^k + x^k for k >= 1; x for k = 0 (a lone vertex)
inline DomPolynomial star_poly(int k) {
    if (k < 0) throw std::invalid_argument("star_poly: negative leaf count");
    if (k == 0) return DomPolynomial{{BigInt(0), BigInt(1)}};
    DomPolynomial p = one_plus_x_pow(k).shifted(1);
    std::vector<BigInt> xk(k + 1, BigInt{});
    xk[k] = BigInt(1);
    return p + DomPolynomial{std::move(xk)};
}

// Isomorphism-keyed LRU cache for the reduction engine. Not synchronized:
// share one per worker, or rely on the thread-local default inside compute.
class DomPolyCache {
public:
    explicit DomPolyCache(std::size_t capacity = 1'000'000) : capacity_(capacity) {}

    const DomPolynomial* find(const std::string& key) {
        auto it = index_.find(key);
        if (it == index_.end()) return nullptr;
        entries_.splice(entries_.begin(), entries_, it->second);
        return &entries_.front().second;
    }

    void insert(const std::string& key, DomPolynomial value) {
        if (capacity_ == 0) return;
        auto it = index_.find(key);
        if (it != index_.end()) {
            it->second->second = std::move(value);
            entries_.splice(entries_.begin(), entries_, it->second);
            return;
        }
        if (entries_.size() >= capacity_) {
            index_.erase(entries_.back().first);
            entries_.pop_back();
        }
        entries_.emplace_front(key, std::move(value));
        index_[key] = entries_.begin();
    }

    std::size_t size() const { return entries_.size(); }

private:
    std::size_t capacity_;
    std::list<std::pair<std::string, DomPolynomial>> entries_;
    std::unordered_map<std::string, std::list<std::pair<std::string, DomPolynomial>>::iterator>
        index_;
};

struct ComputeOptions {
    int brute_guard = kDefaultBruteGuard;
    DomPolyCache* cache = nullptr;  // nullptr selects a thread-local cache
};

namespace detail {

// rooted three-state dynamic program over a connected tree:
// in-set / out-and-dominated / out-and-needing-parent
inline DomPolynomial tree_dompoly(const Graph& g) {
    const int n = g.order();
    if (n == 1) return DomPolynomial{{BigInt(0), BigInt(1)}};
    std::vector<int> parent(n, -2), bfs_order;
    bfs_order.reserve(n);
    bfs_order.push_back(0);
    parent[0] = -1;
    for (std::size_t i = 0; i < bfs_order.size(); ++i) {
        int v = bfs_order[i];
        for (int w : g.neighbors(v))
            if (parent[w] == -2) {
                parent[w] = v;
                bfs_order.push_back(w);
            }
    }
    std::vector<DomPolynomial> in_set(n), out_dom(n), out_need(n);
    const DomPolynomial x{{BigInt(0), BigInt(1)}};
    for (std::size_t i = bfs_order.size(); i-- > 0;) {
        int v = bfs_order[i];
        DomPolynomial any_child = DomPolynomial::one();   // child in any valid state
        DomPolynomial some_in = DomPolynomial::zero();    // >=1 child in-set
        DomPolynomial none_in = DomPolynomial::one();     // no child in-set
        for (int w : g.neighbors(v)) {
            if (w == parent[v]) continue;
            DomPolynomial settled = in_set[w] + out_dom[w];
            any_child = any_child * (settled + out_need[w]);
            some_in = some_in * settled + none_in * in_set[w];
            none_in = none_in * out_dom[w];
        }
        in_set[v] = x * any_child;
        out_dom[v] = some_in;
        out_need[v] = none_in;
    }
    return in_set[0] + out_dom[0];
}

// first vertex u (smallest id) having some v with N[v] subseteq N[u]
inline int find_nested_pair_vertex(const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
        std::vector<int> cu = g.closed_neighborhood(u);
        for (int v : g.neighbors(u)) {
            std::vector<int> cv = g.closed_neighborhood(v);
            if (std::includes(cu.begin(), cu.end(), cv.begin(), cv.end())) return u;
        }
    }
    return -1;
}

inline DomPolynomial compute_impl(const Graph& g, const ComputeOptions& opt, DomPolyCache& cache);

// largest component order the reduction memo keys; above this the canonical
// key costs more than the recursion it would save
inline constexpr int kMemoOrderCap = 8;

inline DomPolynomial compute_component(const Graph& c, const ComputeOptions& opt,
                                       DomPolyCache& cache) {
    if (c.order() == 0) return DomPolynomial::one();
    if (is_tree(c)) return tree_dompoly(c);
    // Under the guard, exhaustive bitmask counting beats the reduction
    // recursion by orders of magnitude; the nested-neighborhood route is the
    // escape hatch for components the guard excludes.
    if (c.order() <= opt.brute_guard) return brute_force(c, opt.brute_guard);
    int u = find_nested_pair_vertex(c);
    if (u < 0)
        throw std::invalid_argument(
            "compute: connected component of order " + std::to_string(c.order()) +
            " is not a tree, has no nested closed neighborhoods, and exceeds the "
            "brute-force guard " + std::to_string(opt.brute_guard));
    const bool cacheable = c.order() <= kMemoOrderCap;
    std::string key;
    if (cacheable) {
        key = canonical_code(c);
        if (const DomPolynomial* hit = cache.find(key)) return *hit;
    }
    // D_G = x D_{G/u} + D_{G\u} + x D_{G\N[u]}
    DomPolynomial a = compute_impl(contract(c, u), opt, cache);
    DomPolynomial b = compute_impl(delete_vertices(c, {u}).graph, opt, cache);
    DomPolynomial d = compute_impl(delete_vertices(c, c.closed_neighborhood(u)).graph, opt, cache);
    DomPolynomial result = a.shifted(1) + b + d.shifted(1);
    if (cacheable) cache.insert(key, result);
    return result;
}

inline DomPolynomial compute_impl(const Graph& g, const ComputeOptions& opt,
                                  DomPolyCache& cache) {
    DomPolynomial out = DomPolynomial::one();
    for (const Relabeled& comp : components(g))
        out = out * compute_component(comp.graph, opt, cache);
    return out;
}

inline DomPolyCache& thread_cache() {
    thread_local DomPolyCache cache;
    return cache;
}

}  // namespace detail

// Scalable exact domination polynomial. Components factor the product rule;
// tree components run the rooted dynamic program; components under the
// brute-force guard enumerate directly; larger components with nested
// closed neighborhoods reduce recursively with isomorphism-keyed
// memoization, shrinking until the guard or a tree takes over.
inline DomPolynomial compute(const Graph& g, const ComputeOptions& opt = {}) {
    DomPolyCache& cache = opt.cache ? *opt.cache : detail::thread_cache();
    return detail::compute_impl(g, opt, cache);
}

inline int gamma(const Graph& g, const ComputeOptions& opt = {}) {
    DomPolynomial p = compute(g, opt);
    for (std::size_t k = 0; k < p.coeffs.size(); ++k)
        if (!p.coeffs[k].is_zero()) return static_cast<int>(k);
    throw std::logic_error("gamma: domination polynomial is zero");  // unreachable
}

// average order of a dominating set, exactly: D'(1)/D(1)
inline Rational avd(const Graph& g, const ComputeOptions& opt = {}) {
    EvalPair e = eval_pair(compute(g, opt));
    return Rational(e.dp1, e.d1);
}

// dominating sets of G avoiding every vertex of `avoid` (the lambda count)
inline BigInt count_dominating_avoiding(const Graph& g, const std::vector<int>& avoid,
                                        int guard = kDefaultBruteGuard) {
    detail::check_brute_guard(g, guard, "count_dominating_avoiding");
    std::uint64_t allowed =
        g.order() >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    if (g.order() == 0) allowed = 0;
    for (int v : avoid) {
        if (v < 0 || v >= g.order())
            throw std::out_of_range("count_dominating_avoiding: vertex out of range");
        allowed &= ~(std::uint64_t{1} << v);
    }
    std::vector<std::uint64_t> cnt = detail::dominating_counts(g, allowed);
    BigInt total;
    for (std::uint64_t c : cnt) total += BigInt(c);
    return total;
}

// (polynomial over dominating sets containing u, polynomial over those
// avoiding u); the two sum to the domination polynomial
inline std::pair<DomPolynomial, DomPolynomial> split_by_vertex(const Graph& g, int u,
                                                               int guard = kDefaultBruteGuard) {
    detail::check_brute_guard(g, guard, "split_by_vertex");
    if (u < 0 || u >= g.order()) throw std::out_of_range("split_by_vertex: vertex out of range");
    const int n = g.order();
    std::vector<std::uint64_t> cn(n);
    for (int v = 0; v < n; ++v) cn[v] = g.closed_neighbor_mask(v);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> with_u(n + 1, 0), without_u(n + 1, 0);
    for (std::uint64_t s = 0; s <= full; ++s) {
        std::uint64_t uni = 0;
        for (std::uint64_t rest = s; rest; rest &= rest - 1) uni |= cn[std::countr_zero(rest)];
        if (uni == full)
            ++((s >> u) & 1 ? with_u : without_u)[std::popcount(s)];
    }
    auto widen = [](const std::vector<std::uint64_t>& v) {
        std::vector<BigInt> c(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) c[i] = BigInt(v[i]);
        return DomPolynomial{std::move(c)};
    };
    return {widen(with_u), widen(without_u)};
}

}  // namespace domforge
