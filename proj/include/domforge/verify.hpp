#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domforge/canonical.hpp"
#include "domforge/domcount.hpp"
#include "domforge/dompoly.hpp"
#include "domforge/enumerate.hpp"
#include "domforge/graph.hpp"
#include "domforge/graph_io.hpp"
#include "domforge/workers.hpp"

namespace domforge {

enum class BoundStatus { strict, equality, violation };

inline std::string bound_status_name(BoundStatus s) {
    switch (s) {
        case BoundStatus::strict: return "strict";
        case BoundStatus::equality: return "equality";
        case BoundStatus::violation: return "violation";
    }
    return "?";
}

// exact comparison of 3 D'(1) against 2n D(1); equivalent to avd <= 2n/3 by
// cross-multiplication but stays in integers
struct BoundReport {
    int n = 0;
    BigInt lhs;  // 3 D'(1)
    BigInt rhs;  // 2n D(1)
    BoundStatus status = BoundStatus::strict;
    Rational avd_value;
    bool extremal_shape = false;
};

inline BoundReport check_bound(const Graph& g, const ComputeOptions& opt = {}) {
    BoundReport r;
    r.n = g.order();
    EvalPair e = eval_pair(compute(g, opt));
    r.lhs = BigInt(3) * e.dp1;
    r.rhs = BigInt(2 * g.order()) * e.d1;
    r.status = r.lhs < r.rhs   ? BoundStatus::strict
               : r.lhs == r.rhs ? BoundStatus::equality
                                : BoundStatus::violation;
    r.avd_value = Rational(e.dp1, e.d1);
    r.extremal_shape = is_extremal_shape(g);
    return r;
}

struct SweepReport {
    std::string family;
    int n = 0;
    std::uint64_t total = 0;
    std::vector<std::string> equality_cases;  // canonical codes, sorted
    std::vector<std::string> violations;      // expected empty
    std::vector<std::string> mismatches;      // equality XOR extremal shape; expected empty
    std::int64_t elapsed_ms = 0;

    bool clean() const { return violations.empty() && mismatches.empty(); }
};

namespace detail {

class StopWatch {
public:
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

// bound + equality-characterization sweep over an explicit graph list
inline SweepReport sweep_graph_list(const std::string& family, int n,
                                    const std::vector<Graph>& graphs, int workers = 0) {
    detail::StopWatch clock;
    SweepReport report;
    report.family = family;
    report.n = n;
    report.total = graphs.size();
    struct Local {
        std::vector<std::string> equality, violations, mismatches;
    };
    int w = resolve_workers(workers);
    std::vector<Local> locals(std::max(1, w));
    run_partitioned(graphs.size(), w, [&](int worker, std::uint64_t lo, std::uint64_t hi) {
        Local& local = locals[worker];
        for (std::uint64_t i = lo; i < hi; ++i) {
            const Graph& g = graphs[i];
            BoundReport b = check_bound(g);
            std::string code;
            auto code_of = [&]() {
                if (code.empty()) code = canonical_code(g);
                return code;
            };
            if (b.status == BoundStatus::violation) local.violations.push_back(code_of());
            if (b.status == BoundStatus::equality) local.equality.push_back(code_of());
            if ((b.status == BoundStatus::equality) != b.extremal_shape)
                local.mismatches.push_back(code_of());
        }
    });
    for (Local& local : locals) {
        report.equality_cases.insert(report.equality_cases.end(), local.equality.begin(),
                                     local.equality.end());
        report.violations.insert(report.violations.end(), local.violations.begin(),
                                 local.violations.end());
        report.mismatches.insert(report.mismatches.end(), local.mismatches.begin(),
                                 local.mismatches.end());
    }
    std::sort(report.equality_cases.begin(), report.equality_cases.end());
    std::sort(report.violations.begin(), report.violations.end());
    std::sort(report.mismatches.begin(), report.mismatches.end());
    report.elapsed_ms = clock.ms();
    return report;
}

inline SweepReport sweep_forest_order(int n, int workers = 0) {
    return sweep_graph_list("forests-no-isolated", n, forests_no_isolated(n), workers);
}

// Theorem sweep: every forest without isolated vertices on 2..max_n vertices
// satisfies 3D'(1) <= 2n D(1), with equality exactly on the extremal shape
inline std::vector<SweepReport> sweep_forests(int max_n, int workers = 0) {
    if (max_n < 2 || max_n > kTreeOrderGuard)
        throw std::invalid_argument("sweep_forests: max_n must be in [2, " +
                                    std::to_string(kTreeOrderGuard) + "]");
    std::vector<SweepReport> out;
    for (int n = 2; n <= max_n; ++n) out.push_back(sweep_forest_order(n, workers));
    return out;
}

// ----- lemma checkers -----

// D_G = x D_{G/u} + D_{G\u} + x D_{G\N[u]} whenever N[v] subseteq N[u]
inline bool verify_recur(const Graph& g, int u, int v, const ComputeOptions& opt = {}) {
    if (u == v) throw std::invalid_argument("verify_recur: u and v must differ");
    std::vector<int> cu = g.closed_neighborhood(u), cv = g.closed_neighborhood(v);
    if (!std::includes(cu.begin(), cu.end(), cv.begin(), cv.end()))
        throw std::invalid_argument("verify_recur: hypothesis N[v] subseteq N[u] not met");
    DomPolynomial lhs = compute(g, opt);
    DomPolynomial rhs = compute(contract(g, u), opt).shifted(1) +
                        compute(delete_vertices(g, {u}).graph, opt) +
                        compute(delete_vertices(g, cu).graph, opt).shifted(1);
    return lhs == rhs;
}

// D_{G_(u,k)} = (x+1)^{k-1} [D_{G_(u,1)} + D_{G\u}] - D_{G\u}
inline bool verify_glue(const Graph& g, int u, int k, const ComputeOptions& opt = {}) {
    DomPolynomial glued = compute(glue_clique(g, u, k), opt);
    DomPolynomial pendant = compute(glue_clique(g, u, 1), opt);
    DomPolynomial without_u = compute(delete_vertices(g, {u}).graph, opt);
    DomPolynomial rhs = one_plus_x_pow(k - 1) * (pendant + without_u) - without_u;
    return glued == rhs;
}

// hypothesis-gated report for the support-vertex inequality
struct SupportLemmaReport {
    int t = 0;                          // |L_G(w)|
    bool neighbors_all_support = false;  // every u in N(w)\L(w) is a support vertex
    bool h_bound_holds = false;          // 3 D'_H(1) <= 2(n-t-1) D_H(1)
    bool h_bound_equality = false;
    bool conclusion_holds = false;  // 3 D'_G(1) <= 2n D_G(1)
    bool conclusion_equality = false;
    bool equality_characterized = false;  // equality iff t in {1,2} and equality in H

    bool hypotheses_hold() const { return neighbors_all_support && h_bound_holds; }
};

inline SupportLemmaReport verify_support_lemma(const Graph& g, int w,
                                               const ComputeOptions& opt = {}) {
    std::vector<VertexClass> cls = classify(g);
    if (w < 0 || w >= g.order() || !cls[w].is_support)
        throw std::invalid_argument("verify_support_lemma: w is not a support vertex");
    SupportLemmaReport r;
    std::vector<int> closed_leaf_star{w};  // L_G[w]
    for (int v : g.neighbors(w)) {
        if (cls[v].is_leaf) {
            closed_leaf_star.push_back(v);
            ++r.t;
        }
    }
    r.neighbors_all_support = true;
    for (int v : g.neighbors(w))
        if (!cls[v].is_leaf && !cls[v].is_support) r.neighbors_all_support = false;

    Graph h = delete_vertices(g, closed_leaf_star).graph;
    EvalPair eh = eval_pair(compute(h, opt));
    EvalPair eg = eval_pair(compute(g, opt));
    const int n = g.order();
    BigInt h_lhs = BigInt(3) * eh.dp1, h_rhs = BigInt(2 * (n - r.t - 1)) * eh.d1;
    r.h_bound_holds = h_lhs <= h_rhs;
    r.h_bound_equality = h_lhs == h_rhs;
    BigInt g_lhs = BigInt(3) * eg.dp1, g_rhs = BigInt(2 * n) * eg.d1;
    r.conclusion_holds = g_lhs <= g_rhs;
    r.conclusion_equality = g_lhs == g_rhs;
    r.equality_characterized =
        r.conclusion_equality == ((r.t == 1 || r.t == 2) && r.h_bound_equality);
    return r;
}

struct ThreeItemReport {
    bool attach_vs_mixed = false;   // D_{G_1}(1) <= D_T(1) + 3 D_{T\u}(1)
    bool attach_vs_deleted = false;  // D_{G_1}(1) <= 5 D_{T\u}(1)
    bool tree_vs_deleted = false;    // D_T(1) <= 3 D_{T\u}(1)

    bool all() const { return attach_vs_mixed && attach_vs_deleted && tree_vs_deleted; }
};

// eligibility for the three-inequality lemma: u not a support vertex of the
// tree, and at most one neighbor of u is not a support vertex
inline bool three_item_hypothesis(const Graph& t, int u) {
    std::vector<VertexClass> cls = classify(t);
    if (cls[u].is_support) return false;
    int non_support_neighbors = 0;
    for (int v : t.neighbors(u))
        if (!cls[v].is_support) ++non_support_neighbors;
    return non_support_neighbors <= 1;
}

inline ThreeItemReport verify_three_item(const Graph& t, int u, const ComputeOptions& opt = {}) {
    if (t.order() < 3 || !is_tree(t))
        throw std::invalid_argument("verify_three_item: need a tree on >= 3 vertices");
    if (u < 0 || u >= t.order()) throw std::out_of_range("verify_three_item: vertex out of range");
    if (!three_item_hypothesis(t, u))
        throw std::invalid_argument(
            "verify_three_item: u must be a non-support vertex with at most one "
            "non-support neighbor");
    std::vector<int> counts(t.order(), 0);
    counts[u] = 1;
    BigInt d_attached = eval_pair(compute(attach_leaves(t, counts), opt)).d1;
    BigInt d_tree = eval_pair(compute(t, opt)).d1;
    BigInt d_deleted = eval_pair(compute(delete_vertices(t, {u}).graph, opt)).d1;
    ThreeItemReport r;
    r.attach_vs_mixed = d_attached <= d_tree + BigInt(3) * d_deleted;
    r.attach_vs_deleted = d_attached <= BigInt(5) * d_deleted;
    r.tree_vs_deleted = d_tree <= BigInt(3) * d_deleted;
    return r;
}

// D_{G(v_1^{k_1},...)} = prod D_{K_{1,k_i}}, and avd sums over the stars
inline bool verify_leaf_attach(const Graph& g, const std::vector<int>& counts,
                               const ComputeOptions& opt = {}) {
    for (int k : counts)
        if (k < 1) throw std::invalid_argument("verify_leaf_attach: counts must be positive");
    DomPolynomial lhs = compute(attach_leaves(g, counts), opt);
    DomPolynomial rhs = DomPolynomial::one();
    Rational avd_sum;
    for (int k : counts) {
        DomPolynomial star = star_poly(k);
        rhs = rhs * star;
        EvalPair e = eval_pair(star);
        avd_sum += Rational(e.dp1, e.d1);
    }
    if (lhs != rhs) return false;
    EvalPair e = eval_pair(lhs);
    return Rational(e.dp1, e.d1) == avd_sum;
}

// ----- minimality sweeps -----

// avd(T) > avd(K_{1,n-1}) for every tree T on n vertices other than the star
inline SweepReport star_min_sweep(int n_max, int workers = 0) {
    if (n_max < 2 || n_max > 13)
        throw std::invalid_argument("star_min_sweep: n_max must be in [2, 13]");
    detail::StopWatch clock;
    SweepReport report;
    report.family = "star-min";
    report.n = n_max;
    for (int n = 2; n <= n_max; ++n) {
        EvalPair star = eval_pair(star_poly(n - 1));
        std::string star_code = canonical_code(attach_leaves(Graph(1), {n - 1}));
        std::vector<Graph> family = trees(n);
        struct Local {
            std::uint64_t tested = 0;
            std::vector<std::string> violations;
        };
        int w = resolve_workers(workers);
        std::vector<Local> locals(std::max(1, w));
        run_partitioned(family.size(), w, [&](int worker, std::uint64_t lo, std::uint64_t hi) {
            Local& local = locals[worker];
            for (std::uint64_t i = lo; i < hi; ++i) {
                std::string code = canonical_code(family[i]);
                if (code == star_code) continue;
                ++local.tested;
                EvalPair e = eval_pair(compute(family[i]));
                // avd(T) > avd(star) by cross-multiplication
                if (!(e.dp1 * star.d1 > star.dp1 * e.d1)) local.violations.push_back(code);
            }
        });
        for (Local& local : locals) {
            report.total += local.tested;
            report.violations.insert(report.violations.end(), local.violations.begin(),
                                     local.violations.end());
        }
    }
    std::sort(report.violations.begin(), report.violations.end());
    report.elapsed_ms = clock.ms();
    return report;
}

// avd(G) >= avd(K_n) over all labeled graphs, equality only at K_n itself;
// D_{K_n}(x) = (1+x)^n - 1 gives the reference pair exactly
inline SweepReport kn_min_sweep(int n, int workers = 0) {
    if (n < 1 || n > 7) throw std::invalid_argument("kn_min_sweep: n must be in [1, 7]");
    detail::StopWatch clock;
    SweepReport report;
    report.family = "kn-min";
    report.n = n;
    const std::uint64_t kn_d1 = (std::uint64_t{1} << n) - 1;
    const std::uint64_t kn_dp1 = static_cast<std::uint64_t>(n) * (std::uint64_t{1} << (n - 1));
    const std::uint64_t total = labeled_graph_count(n);
    const std::uint64_t complete_mask = total - 1;
    report.total = total;
    struct Local {
        std::set<std::string> violations, equalities;
    };
    int w = resolve_workers(workers);
    std::vector<Local> locals(std::max(1, w));
    run_partitioned(total, w, [&](int worker, std::uint64_t lo, std::uint64_t hi) {
        Local& local = locals[worker];
        DomCounter counter(n);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            DomCount c = counter.count_edge_mask(mask);
            std::uint64_t lhs = c.dp1 * kn_d1, rhs = kn_dp1 * c.d1;
            if (lhs < rhs)
                local.violations.insert(canonical_code(labeled_graph_from_mask(n, mask)));
            else if (lhs == rhs && mask != complete_mask)
                local.violations.insert(canonical_code(labeled_graph_from_mask(n, mask)));
            else if (lhs == rhs)
                local.equalities.insert(canonical_code(labeled_graph_from_mask(n, mask)));
        }
    });
    std::set<std::string> violations, equalities;
    for (Local& local : locals) {
        violations.insert(local.violations.begin(), local.violations.end());
        equalities.insert(local.equalities.begin(), local.equalities.end());
    }
    report.violations.assign(violations.begin(), violations.end());
    report.equality_cases.assign(equalities.begin(), equalities.end());
    report.elapsed_ms = clock.ms();
    return report;
}

// Conjecture sweep over all labeled graphs of order n without isolated
// vertices: 3 D'(1) <= 2n D(1). Orders 8 and 9 run only when allow_large is
// set; they stream without tables and take considerably longer.
inline SweepReport general_bound_sweep(int n, int workers = 0, bool allow_large = false) {
    int cap = allow_large ? 9 : 7;
    if (n < 2 || n > cap)
        throw std::invalid_argument("general_bound_sweep: n must be in [2, " +
                                    std::to_string(cap) + "]" +
                                    (allow_large ? "" : " (pass the long-run flag for 8..9)"));
    detail::StopWatch clock;
    SweepReport report;
    report.family = "labeled-no-isolated";
    report.n = n;
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    struct Local {
        std::uint64_t tested = 0;
        std::set<std::string> violations, equalities;
    };
    int w = resolve_workers(workers);
    std::vector<Local> locals(std::max(1, w));
    run_partitioned(total, w, [&](int worker, std::uint64_t lo, std::uint64_t hi) {
        Local& local = locals[worker];
        DomCounter counter(n);
        const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            DomCount c = counter.count_edge_mask(mask);
            const std::uint64_t* nb = counter.closed_neighborhoods();
            bool isolated = false;
            for (int v = 0; v < n && !isolated; ++v)
                if (nb[v] == (std::uint64_t{1} << v)) isolated = true;
            if (isolated) continue;
            ++local.tested;
            std::uint64_t lhs = 3 * c.dp1, rhs = two_n * c.d1;
            if (lhs > rhs)
                local.violations.insert(canonical_code(labeled_graph_from_mask(n, mask)));
            else if (lhs == rhs)
                local.equalities.insert(canonical_code(labeled_graph_from_mask(n, mask)));
        }
    });
    std::set<std::string> violations, equalities;
    for (Local& local : locals) {
        report.total += local.tested;
        violations.insert(local.violations.begin(), local.violations.end());
        equalities.insert(local.equalities.begin(), local.equalities.end());
    }
    report.violations.assign(violations.begin(), violations.end());
    report.equality_cases.assign(equalities.begin(), equalities.end());
    report.elapsed_ms = clock.ms();
    return report;
}

// ----- edge-removal conjecture exploration -----

enum class EdgeMode { any_edge, non_pendant_edge };

inline std::string edge_mode_name(EdgeMode m) {
    return m == EdgeMode::any_edge ? "any-edge" : "non-pendant-edge";
}

struct ConjectureFinding {
    std::string canonical;
    std::string graph6;
    std::string detail;
};

struct ConjectureReport {
    int n = 0;
    std::string mode;
    std::uint64_t tested = 0;
    std::vector<ConjectureFinding> counterexamples;
    std::int64_t elapsed_ms = 0;
};

// Does some edge (mode any_edge), or some non-pendant edge (mode
// non_pendant_edge, skipping disjoint unions of stars and empty graphs),
// strictly increase avd when removed? Graphs where no such edge exists are
// reported.
inline ConjectureReport edge_removal_sweep(int n, EdgeMode mode, int workers = 0) {
    if (n < 2 || n > 7) throw std::invalid_argument("edge_removal_sweep: n must be in [2, 7]");
    detail::StopWatch clock;
    ConjectureReport report;
    report.n = n;
    report.mode = edge_mode_name(mode);
    const int edge_slots = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << edge_slots;

    LabeledCountTable table;
    table.n = n;
    table.d1.resize(total);
    table.dp1.resize(total);
    int w = resolve_workers(workers);
    run_partitioned(total, w, [&](int, std::uint64_t lo, std::uint64_t hi) {
        fill_labeled_counts(table, lo, hi);
    });

    // endpoints per edge bit, degrees recomputed per mask
    std::vector<std::pair<int, int>> ends(edge_slots);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) ends[edge_bit_index(i, j)] = {i, j};

    struct Local {
        std::uint64_t tested = 0;
        std::map<std::string, ConjectureFinding> findings;  // keyed by canonical code
    };
    std::vector<Local> locals(std::max(1, w));
    run_partitioned(total, w, [&](int worker, std::uint64_t lo, std::uint64_t hi) {
        Local& local = locals[worker];
        int deg[8];
        for (std::uint64_t mask = std::max<std::uint64_t>(lo, 1); mask < hi; ++mask) {
            for (int v = 0; v < n; ++v) deg[v] = 0;
            for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
                auto [a, b] = ends[std::countr_zero(rest)];
                ++deg[a];
                ++deg[b];
            }
            int candidate_edges = 0;
            bool witness = false;
            const std::uint64_t g_d1 = table.d1[mask], g_dp1 = table.dp1[mask];
            for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
                int e = std::countr_zero(rest);
                if (mode == EdgeMode::non_pendant_edge) {
                    auto [a, b] = ends[e];
                    if (deg[a] == 1 || deg[b] == 1) continue;  // pendant edge
                }
                ++candidate_edges;
                const std::uint64_t sub = mask & ~(std::uint64_t{1} << e);
                // avd(G) < avd(G\e) by cross-multiplication
                if (g_dp1 * table.d1[sub] < static_cast<std::uint64_t>(table.dp1[sub]) * g_d1) {
                    witness = true;
                    break;
                }
            }
            if (mode == EdgeMode::non_pendant_edge && candidate_edges == 0)
                continue;  // disjoint union of stars / empty components: out of scope
            ++local.tested;
            if (!witness) {
                Graph g = labeled_graph_from_mask(n, mask);
                std::string code = canonical_code(g);
                if (!local.findings.count(code)) {
                    ConjectureFinding f;
                    f.canonical = code;
                    f.graph6 = to_graph6(g);
                    f.detail = "no " + edge_mode_name(mode) + " removal increases avd; avd = " +
                               Rational(BigInt(g_dp1), BigInt(g_d1)).to_string();
                    local.findings.emplace(std::move(code), std::move(f));
                }
            }
        }
    });
    std::map<std::string, ConjectureFinding> merged;
    for (Local& local : locals) {
        report.tested += local.tested;
        for (auto& [code, f] : local.findings) merged.emplace(code, std::move(f));
    }
    for (auto& [code, f] : merged) report.counterexamples.push_back(std::move(f));
    report.elapsed_ms = clock.ms();
    return report;
}

// ----- lemma identity suites -----

struct LemmaSuiteReport {
    std::string name;
    std::uint64_t checked = 0;  // hypothesis-satisfying instances verified
    std::uint64_t gated = 0;    // instances skipped because the hypotheses fail
    std::vector<std::string> failures;
    std::int64_t elapsed_ms = 0;

    bool clean() const { return failures.empty(); }
};

namespace detail {

template <class Fn>
inline void suite_over_trees(int n_lo, int n_hi, int workers, LemmaSuiteReport& report, Fn&& fn) {
    for (int n = n_lo; n <= n_hi; ++n) {
        std::vector<Graph> family = trees(n);
        struct Local {
            std::uint64_t checked = 0, gated = 0;
            std::vector<std::string> failures;
        };
        int w = resolve_workers(workers);
        std::vector<Local> locals(std::max(1, w));
        run_partitioned(family.size(), w, [&](int worker, std::uint64_t lo, std::uint64_t hi) {
            Local& local = locals[worker];
            for (std::uint64_t i = lo; i < hi; ++i)
                fn(family[i], local.checked, local.gated, local.failures);
        });
        for (Local& local : locals) {
            report.checked += local.checked;
            report.gated += local.gated;
            report.failures.insert(report.failures.end(), local.failures.begin(),
                                   local.failures.end());
        }
    }
    std::sort(report.failures.begin(), report.failures.end());
}

}  // namespace detail

// Lemma: D_G = x D_{G/u} + D_{G\u} + x D_{G\N[u]} for nested closed
// neighborhoods, over all eligible ordered pairs of all trees up to
// max_tree_n and all labeled graphs up to max_labeled_n
inline LemmaSuiteReport run_recur_suite(int max_tree_n = 9, int max_labeled_n = 6,
                                        int workers = 0) {
    detail::StopWatch clock;
    LemmaSuiteReport report;
    report.name = "nested-neighborhood-recurrence";
    auto check_graph = [](const Graph& g, std::uint64_t& checked,
                          std::vector<std::string>& failures) {
        for (int u = 0; u < g.order(); ++u) {
            std::vector<int> cu = g.closed_neighborhood(u);
            for (int v : g.neighbors(u)) {
                std::vector<int> cv = g.closed_neighborhood(v);
                if (!std::includes(cu.begin(), cu.end(), cv.begin(), cv.end())) continue;
                ++checked;
                if (!verify_recur(g, u, v))
                    failures.push_back("recurrence fails at (u=" + std::to_string(u) +
                                       ", v=" + std::to_string(v) + ") of " + canonical_code(g));
            }
        }
    };
    detail::suite_over_trees(2, max_tree_n, workers, report,
                             [&](const Graph& t, std::uint64_t& checked, std::uint64_t&,
                                 std::vector<std::string>& failures) {
                                 check_graph(t, checked, failures);
                             });
    for (int n = 1; n <= max_labeled_n; ++n) {
        const std::uint64_t total = labeled_graph_count(n);
        struct Local {
            std::uint64_t checked = 0;
            std::vector<std::string> failures;
        };
        int w = resolve_workers(workers);
        std::vector<Local> locals(std::max(1, w));
        run_partitioned(total, w, [&](int worker, std::uint64_t lo, std::uint64_t hi) {
            Local& local = locals[worker];
            for (std::uint64_t mask = lo; mask < hi; ++mask)
                check_graph(labeled_graph_from_mask(n, mask), local.checked, local.failures);
        });
        for (Local& local : locals) {
            report.checked += local.checked;
            report.failures.insert(report.failures.end(), local.failures.begin(),
                                   local.failures.end());
        }
    }
    std::sort(report.failures.begin(), report.failures.end());
    report.elapsed_ms = clock.ms();
    return report;
}

inline LemmaSuiteReport run_glue_suite(int max_tree_n = 7, int max_k = 4, int workers = 0) {
    detail::StopWatch clock;
    LemmaSuiteReport report;
    report.name = "clique-gluing-identity";
    detail::suite_over_trees(
        2, max_tree_n, workers, report,
        [&](const Graph& t, std::uint64_t& checked, std::uint64_t&,
            std::vector<std::string>& failures) {
            for (int u = 0; u < t.order(); ++u)
                for (int k = 1; k <= max_k; ++k) {
                    ++checked;
                    if (!verify_glue(t, u, k))
                        failures.push_back("gluing identity fails at (u=" + std::to_string(u) +
                                           ", k=" + std::to_string(k) + ") of " +
                                           canonical_code(t));
                }
        });
    report.elapsed_ms = clock.ms();
    return report;
}

inline LemmaSuiteReport run_support_suite(int max_tree_n = 10, int workers = 0) {
    detail::StopWatch clock;
    LemmaSuiteReport report;
    report.name = "support-vertex-bound";
    detail::suite_over_trees(
        2, max_tree_n, workers, report,
        [&](const Graph& t, std::uint64_t& checked, std::uint64_t& gated,
            std::vector<std::string>& failures) {
            std::vector<VertexClass> cls = classify(t);
            for (int w = 0; w < t.order(); ++w) {
                if (!cls[w].is_support) continue;
                SupportLemmaReport r = verify_support_lemma(t, w);
                if (!r.hypotheses_hold()) {
                    ++gated;
                    continue;
                }
                ++checked;
                if (!r.conclusion_holds || !r.equality_characterized)
                    failures.push_back("support lemma fails at w=" + std::to_string(w) + " of " +
                                       canonical_code(t));
            }
        });
    report.elapsed_ms = clock.ms();
    return report;
}

inline LemmaSuiteReport run_three_item_suite(int max_tree_n = 10, int workers = 0) {
    detail::StopWatch clock;
    LemmaSuiteReport report;
    report.name = "three-inequality-lemma";
    detail::suite_over_trees(
        3, max_tree_n, workers, report,
        [&](const Graph& t, std::uint64_t& checked, std::uint64_t& gated,
            std::vector<std::string>& failures) {
            for (int u = 0; u < t.order(); ++u) {
                if (!three_item_hypothesis(t, u)) {
                    ++gated;
                    continue;
                }
                ++checked;
                if (!verify_three_item(t, u).all())
                    failures.push_back("three-item lemma fails at u=" + std::to_string(u) +
                                       " of " + canonical_code(t));
            }
        });
    report.elapsed_ms = clock.ms();
    return report;
}

struct LemmaSuiteCaps {
    int recur_trees = 9;
    int recur_labeled = 6;
    int glue_trees = 7;
    int glue_k = 4;
    int support_trees = 10;
    int three_item_trees = 10;
};

inline std::vector<LemmaSuiteReport> run_all_lemma_suites(const LemmaSuiteCaps& caps = {},
                                                          int workers = 0) {
    return {run_recur_suite(caps.recur_trees, caps.recur_labeled, workers),
            run_glue_suite(caps.glue_trees, caps.glue_k, workers),
            run_support_suite(caps.support_trees, workers),
            run_three_item_suite(caps.three_item_trees, workers)};
}

}  // namespace domforge
