#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "thetacover/errors.hpp"
#include "thetacover/graph.hpp"
#include "thetacover/polynomial.hpp"
#include "thetacover/varset.hpp"

namespace thetacover {

/// Problem data for the K_i-free problem on a graph: one variable per
/// (i-1)-clique, one blocker per K_i (the index set of its i facets).
struct ProblemContext {
    Graph g;
    int i;
    std::vector<Clique> vars;            ///< K_{i-1}(g), lexicographic
    std::vector<VarSubset> blockers;     ///< per K_i, sorted facet-variable indices
    std::vector<std::vector<int>> blockers_by_var;  ///< blocker ids touching each variable
    std::unordered_map<Clique, int, VarSubsetHash> var_lookup;

    int num_vars() const { return static_cast<int>(vars.size()); }

    int var_index(const Clique& c) const {
        auto it = var_lookup.find(c);
        return it == var_lookup.end() ? -1 : it->second;
    }

    void rebuild_lookup() {
        var_lookup.clear();
        for (int j = 0; j < num_vars(); ++j) var_lookup[vars[static_cast<std::size_t>(j)]] = j;
        blockers_by_var.assign(static_cast<std::size_t>(num_vars()), {});
        for (int b = 0; b < static_cast<int>(blockers.size()); ++b)
            for (int j : blockers[static_cast<std::size_t>(b)])
                blockers_by_var[static_cast<std::size_t>(j)].push_back(b);
    }
};

inline ProblemContext build_context(const Graph& g, int i) {
    if (i < 2) throw std::invalid_argument("build_context: i must be >= 2");
    ProblemContext ctx{g, i, enumerate_cliques(g, i - 1), {}, {}, {}};
    ctx.rebuild_lookup();
    for (const Clique& k : enumerate_cliques(g, i)) {
        VarSubset blocker;
        for (std::size_t drop = 0; drop < k.size(); ++drop) {
            Clique facet;
            for (std::size_t a = 0; a < k.size(); ++a)
                if (a != drop) facet.push_back(k[a]);
            int idx = ctx.var_index(facet);
            if (idx < 0) throw Error("build_context: facet of a clique is not a clique");
            blocker.push_back(idx);
        }
        ctx.blockers.push_back(canonicalize(blocker));
    }
    ctx.rebuild_lookup();
    return ctx;
}

inline void check_var_indices(const VarSubset& s, const ProblemContext& ctx) {
    if (!is_canonical(s)) throw std::invalid_argument("variable subset not canonical");
    if (!s.empty() && (s.front() < 0 || s.back() >= ctx.num_vars()))
        throw std::invalid_argument("variable index out of range");
}

/// True iff no blocker is contained in s.
inline bool is_free(const VarSubset& s, const ProblemContext& ctx) {
    check_var_indices(s, ctx);
    for (const VarSubset& b : ctx.blockers)
        if (is_subset(b, s)) return false;
    return true;
}

inline constexpr std::size_t default_variety_ceiling = 2'000'000;

/// The K_i-free subsets of the variable set up to a size bound, ordered by
/// (size, lex). Element 0 is the empty set, then the singletons in variable
/// order. Lower-comprehensive by construction.
class VarietyTable {
public:
    VarietyTable(const ProblemContext& ctx, int bound, std::size_t ceiling)
        : bound_(bound) {
        if (bound < 0) throw std::invalid_argument("enumerate_variety: negative bound");
        // Binomial-sum prediction of the unpruned count, saturating at 2x ceiling.
        double predicted = 0;
        {
            double level = 1;
            for (int s = 0; s <= bound && predicted < 2.0 * static_cast<double>(ceiling); ++s) {
                predicted += level;
                level = level * (ctx.num_vars() - s) / (s + 1);
                if (s >= ctx.num_vars()) break;
            }
        }
        elements_.push_back({});
        std::size_t level_begin = 0;
        for (int size = 1; size <= bound; ++size) {
            std::size_t level_end = elements_.size();
            for (std::size_t e = level_begin; e < level_end; ++e) {
                int lo = elements_[e].empty() ? 0 : elements_[e].back() + 1;
                for (int j = lo; j < ctx.num_vars(); ++j) {
                    bool free = true;
                    for (int b : ctx.blockers_by_var[static_cast<std::size_t>(j)]) {
                        const VarSubset& blocker = ctx.blockers[static_cast<std::size_t>(b)];
                        bool inside = true;
                        for (int v : blocker)
                            if (v != j && !set_contains(elements_[e], v)) { inside = false; break; }
                        if (inside) { free = false; break; }
                    }
                    if (!free) continue;
                    if (elements_.size() >= ceiling)
                        throw GuardError(
                            "enumerate_variety: ceiling of " + std::to_string(ceiling) +
                            " elements exceeded (binomial-sum prediction " +
                            std::to_string(static_cast<unsigned long long>(predicted)) + ")");
                    VarSubset next = elements_[e];
                    next.push_back(j);
                    elements_.push_back(std::move(next));
                }
            }
            level_begin = level_end;
        }
        lookup_.reserve(elements_.size());
        for (std::size_t idx = 0; idx < elements_.size(); ++idx)
            lookup_[elements_[idx]] = static_cast<int>(idx);
    }

    int bound() const { return bound_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<VarSubset>& elements() const { return elements_; }
    const VarSubset& element(int idx) const { return elements_[static_cast<std::size_t>(idx)]; }

    /// Position of s, or -1 when s is not in the table (not free, or too big).
    int index_of(const VarSubset& s) const {
        auto it = lookup_.find(s);
        return it == lookup_.end() ? -1 : it->second;
    }

private:
    int bound_;
    std::vector<VarSubset> elements_;
    std::unordered_map<VarSubset, int, VarSubsetHash> lookup_;
};

inline VarietyTable enumerate_variety(const ProblemContext& ctx, int bound,
                                      std::size_t ceiling = default_variety_ceiling) {
    return VarietyTable(ctx, bound, ceiling);
}

/// Reduction to the monomial basis of R[x]/I: multilinearization is already
/// structural in Polynomial, so the normal form just deletes every monomial
/// whose support contains a blocker. Idempotent, and the unique representative
/// in the span of {x^S : S free}.
inline Polynomial normal_form(const Polynomial& p, const ProblemContext& ctx) {
    Polynomial out;
    for (const auto& [support, c] : p.terms()) {
        check_var_indices(support, ctx);
        bool blocked = false;
        for (const VarSubset& b : ctx.blockers)
            if (is_subset(b, support)) { blocked = true; break; }
        if (!blocked) out.add_term(support, c);
    }
    return out;
}

}
