#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thetacover/errors.hpp"
#include "thetacover/graph.hpp"
#include "thetacover/ideal.hpp"
#include "thetacover/linalg.hpp"
#include "thetacover/polynomial.hpp"

namespace thetacover {

/// Ground-truth optimum from exhaustive enumeration. The witness is the
/// lexicographically least optimal set; enumeration_count counts search nodes.
struct ExactResult {
    Rational value = 0;
    VarSubset witness;
    std::vector<Clique> triangle_witness;   ///< packing witness for nu only
    std::uint64_t enumeration_count = 0;
};

namespace detail {

inline void guard_vars(const ProblemContext& ctx, int limit, const char* who) {
    if (ctx.num_vars() > limit)
        throw GuardError(std::string(who) + ": " + std::to_string(ctx.num_vars()) +
                         " variables exceeds the guard of " + std::to_string(limit) +
                         " (search space ~2^" + std::to_string(ctx.num_vars()) + ")");
}

struct FreeSearch {
    const ProblemContext& ctx;
    const std::vector<Rational>& weights;
    std::vector<std::uint32_t> blocker_masks;
    std::vector<std::vector<std::uint32_t>> masks_by_var;  ///< blocker masks minus the var bit
    std::vector<Rational> suffix_positive;                 ///< sum of positive weights from j on
    Rational best = 0;
    bool have_best = false;
    VarSubset best_set;
    std::uint64_t nodes = 0;

    explicit FreeSearch(const ProblemContext& c, const std::vector<Rational>& w)
        : ctx(c), weights(w) {
        const int n = ctx.num_vars();
        for (const VarSubset& b : ctx.blockers) {
            std::uint32_t m = 0;
            for (int j : b) m |= (1u << j);
            blocker_masks.push_back(m);
        }
        masks_by_var.assign(static_cast<std::size_t>(n), {});
        for (std::size_t bi = 0; bi < ctx.blockers.size(); ++bi)
            for (int j : ctx.blockers[bi])
                masks_by_var[static_cast<std::size_t>(j)].push_back(blocker_masks[bi] & ~(1u << j));
        suffix_positive.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int j = n - 1; j >= 0; --j) {
            suffix_positive[static_cast<std::size_t>(j)] = suffix_positive[static_cast<std::size_t>(j) + 1];
            if (weights[static_cast<std::size_t>(j)] > 0)
                suffix_positive[static_cast<std::size_t>(j)] += weights[static_cast<std::size_t>(j)];
        }
    }

    /// Include-first DFS in index order visits free sets in lexicographic
    /// order, so with strict improvement the first optimum kept is lex-least.
    void run(int j, std::uint32_t mask, Rational value, VarSubset& current) {
        ++nodes;
        if (!have_best || value > best) {
            best = value;
            best_set = current;
            have_best = true;
        }
        if (j >= ctx.num_vars()) return;
        // No strict improvement possible below; tied optima below are
        // lex-greater than best_set, so skipping them is safe.
        if (value + suffix_positive[static_cast<std::size_t>(j)] <= best) return;
        bool can_include = true;
        for (std::uint32_t m : masks_by_var[static_cast<std::size_t>(j)])
            if ((m & mask) == m) { can_include = false; break; }
        if (can_include) {
            current.push_back(j);
            run(j + 1, mask | (1u << j), value + weights[static_cast<std::size_t>(j)], current);
            current.pop_back();
        }
        run(j + 1, mask, value, current);
    }
};

}

/// Maximum-weight K_i-free subset by depth-first enumeration with blocker
/// pruning. Guarded at 30 variables.
inline ExactResult max_free(const ProblemContext& ctx, const std::vector<Rational>& weights) {
    detail::guard_vars(ctx, 30, "max_free");
    if (static_cast<int>(weights.size()) != ctx.num_vars())
        throw std::invalid_argument("max_free: weight count does not match variable count");
    detail::FreeSearch search(ctx, weights);
    VarSubset current;
    search.run(0, 0, 0, current);
    ExactResult out;
    out.value = search.best;
    out.witness = search.best_set;
    out.enumeration_count = search.nodes;
    return out;
}

/// Minimum-weight K_i-cover by complementation: C covers iff its complement
/// is free, so value = sum(weights) - max_free and the witnesses partition
/// the variable set.
inline ExactResult min_cover(const ProblemContext& ctx, const std::vector<Rational>& weights) {
    ExactResult free_side = max_free(ctx, weights);
    Rational total = 0;
    for (const Rational& w : weights) total += w;
    ExactResult out;
    out.value = total - free_side.value;
    VarSubset all;
    for (int j = 0; j < ctx.num_vars(); ++j) all.push_back(j);
    out.witness = set_difference(all, free_side.witness);
    out.enumeration_count = free_side.enumeration_count;
    return out;
}

inline std::vector<Rational> unit_weights(int n) {
    return std::vector<Rational>(static_cast<std::size_t>(n), 1);
}

/// Minimum-size triangle cover.
inline ExactResult tau(const Graph& g) {
    ProblemContext ctx = build_context(g, 3);
    return min_cover(ctx, unit_weights(ctx.num_vars()));
}

/// Maximum-size edge-disjoint triangle packing, by include/exclude recursion
/// over the lexicographic triangle list with a remaining-count bound.
inline ExactResult nu(const Graph& g) {
    if (g.num_vertices() > 12)
        throw GuardError("nu: graphs above 12 vertices exceed the enumeration guard");
    std::vector<Clique> triangles = enumerate_cliques(g, 3);
    ProblemContext edge_ctx = build_context(g, 2);   // edge indexing only
    if (edge_ctx.num_vars() > 62)
        throw GuardError("nu: more than 62 edges exceeds the edge-mask guard");
    std::vector<std::uint64_t> tri_edges;
    for (const Clique& t : triangles) {
        std::uint64_t m = 0;
        m |= 1ull << edge_ctx.var_index({t[0], t[1]});
        m |= 1ull << edge_ctx.var_index({t[0], t[2]});
        m |= 1ull << edge_ctx.var_index({t[1], t[2]});
        tri_edges.push_back(m);
    }
    ExactResult out;
    std::vector<int> current, best;
    bool have_best = false;
    std::uint64_t nodes = 0;
    auto rec = [&](auto&& self, std::size_t t, std::uint64_t used) -> void {
        ++nodes;
        if (!have_best || static_cast<int>(current.size()) > static_cast<int>(best.size())) {
            best = current;
            have_best = true;
        }
        if (t >= triangles.size()) return;
        if (static_cast<int>(current.size() + (triangles.size() - t)) <= static_cast<int>(best.size()))
            return;
        if ((tri_edges[t] & used) == 0) {
            current.push_back(static_cast<int>(t));
            self(self, t + 1, used | tri_edges[t]);
            current.pop_back();
        }
        self(self, t + 1, used);
    };
    rec(rec, 0, 0);
    out.value = static_cast<int>(best.size());
    for (int t : best) {
        out.triangle_witness.push_back(triangles[static_cast<std::size_t>(t)]);
        out.witness.push_back(t);
    }
    out.enumeration_count = nodes;
    return out;
}

/// A linear inequality a.x <= b over the context variables.
struct Inequality {
    std::vector<Rational> weights;
    Rational rhs = 0;
};

/// Read (a, b) off an affine target polynomial b - a.x.
inline Inequality inequality_from_target(const Polynomial& target, int num_vars) {
    if (target.degree() > 1)
        throw std::invalid_argument("inequality_from_target: target not affine");
    Inequality ineq;
    ineq.rhs = target.coeff({});
    ineq.weights.assign(static_cast<std::size_t>(num_vars), 0);
    for (const auto& [s, c] : target.terms())
        if (s.size() == 1) ineq.weights[static_cast<std::size_t>(s[0])] = -c;
    return ineq;
}

/// Clique inequality: sum of H's facet variables <= i-1.
inline Inequality clique_inequality(const ProblemContext& ctx, const Clique& h) {
    Inequality ineq;
    ineq.rhs = ctx.i - 1;
    ineq.weights.assign(static_cast<std::size_t>(ctx.num_vars()), 0);
    for (std::size_t drop = 0; drop < h.size(); ++drop) {
        Clique facet;
        for (std::size_t a = 0; a < h.size(); ++a)
            if (a != drop) facet.push_back(h[a]);
        int idx = ctx.var_index(facet);
        if (idx < 0) throw std::invalid_argument("clique_inequality: H is not a K_i of the graph");
        ineq.weights[static_cast<std::size_t>(idx)] = 1;
    }
    return ineq;
}

/// Hole inequality with RHS ceil((p-1)/2)(2i-3) + i-2: the paper's facet RHS
/// for odd p, and the valid (slack) extension for even p.
inline Inequality hole_inequality(const ProblemContext& ctx, const HoleLabeling& hl) {
    Inequality ineq;
    ineq.weights.assign(static_cast<std::size_t>(ctx.num_vars()), 0);
    const int half_p = (hl.p - 1 + 1) / 2;  // ceil((p-1)/2)
    ineq.rhs = half_p * (2 * ctx.i - 3) + ctx.i - 2;
    auto mark = [&](const Clique& c) {
        int idx = ctx.var_index(c);
        if (idx < 0) throw std::invalid_argument("hole_inequality: labeling clique is not a variable");
        ineq.weights[static_cast<std::size_t>(idx)] = 1;
    };
    for (const Clique& s : hl.shared) mark(s);
    for (const auto& block_lone : hl.lone)
        for (const Clique& f : block_lone) mark(f);
    return ineq;
}

/// Valid iff the exact maximum of a.x over free sets is <= b.
inline bool check_valid(const Inequality& ineq, const ProblemContext& ctx) {
    detail::guard_vars(ctx, 30, "check_valid");
    return max_free(ctx, ineq.weights).value <= ineq.rhs;
}

/// Facet iff valid and the tight free sets have affine rank |vars| - 1
/// (exact rational rank; P_i(G) is full-dimensional).
inline bool check_facet(const Inequality& ineq, const ProblemContext& ctx) {
    detail::guard_vars(ctx, 22, "check_facet");
    if (!check_valid(ineq, ctx)) return false;
    const int n = ctx.num_vars();

    std::vector<VarSubset> tight;
    detail::FreeSearch search(ctx, ineq.weights);
    VarSubset current;
    // Reuse the search masks for a plain enumeration of all free sets.
    auto rec = [&](auto&& self, int j, std::uint32_t mask, Rational value) -> void {
        if (j >= n) {
            if (value == ineq.rhs) tight.push_back(current);
            return;
        }
        bool can_include = true;
        for (std::uint32_t m : search.masks_by_var[static_cast<std::size_t>(j)])
            if ((m & mask) == m) { can_include = false; break; }
        if (can_include) {
            current.push_back(j);
            self(self, j + 1, mask | (1u << j), value + ineq.weights[static_cast<std::size_t>(j)]);
            current.pop_back();
        }
        self(self, j + 1, mask, value);
    };
    rec(rec, 0, 0, 0);

    if (tight.empty()) return false;
    IncrementalRank rank(static_cast<std::size_t>(n));
    auto chi = [&](const VarSubset& s) {
        std::vector<Rational> v(static_cast<std::size_t>(n), 0);
        for (int j : s) v[static_cast<std::size_t>(j)] = 1;
        return v;
    };
    std::vector<Rational> base = chi(tight.front());
    for (std::size_t t = 1; t < tight.size(); ++t) {
        std::vector<Rational> v = chi(tight[t]);
        for (std::size_t c = 0; c < v.size(); ++c) v[c] -= base[c];
        rank.insert(std::move(v));
        if (rank.rank() >= n - 1) return true;
    }
    return rank.rank() == n - 1;
}

}
