#pragma once

// Test-only brute-force oracles, independent of the library's search and
// solver paths. Everything here enumerates, in the most literal way that
// fits desk scale.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "thetacover/graph.hpp"
#include "thetacover/ideal.hpp"
#include "thetacover/rational.hpp"
#include "thetacover/varset.hpp"

namespace oracles {

using thetacover::Clique;
using thetacover::Graph;
using thetacover::ProblemContext;
using thetacover::Rational;
using thetacover::VarSubset;

/// Every size-j vertex subset, checked pairwise. No ordered extension.
inline std::vector<Clique> naive_cliques(const Graph& g, int j) {
    std::vector<Clique> out;
    const int n = g.num_vertices();
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == j) {
            for (std::size_t a = 0; a < pick.size(); ++a)
                for (std::size_t b = a + 1; b < pick.size(); ++b)
                    if (!g.adjacent(pick[a], pick[b])) return;
            out.push_back(pick);
            return;
        }
        for (int v = from; v < n; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Full 2^m scan for the max-weight free set; m capped at 22.
inline Rational naive_max_free(const ProblemContext& ctx, const std::vector<Rational>& weights) {
    const int m = ctx.num_vars();
    if (m > 22) throw std::runtime_error("naive_max_free: too many variables for the oracle");
    Rational best = 0;
    bool have = false;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        VarSubset s;
        for (int j = 0; j < m; ++j)
            if (mask & (1u << j)) s.push_back(j);
        if (!thetacover::is_free(s, ctx)) continue;
        Rational v = 0;
        for (int j : s) v += weights[static_cast<std::size_t>(j)];
        if (!have || v > best) {
            best = v;
            have = true;
        }
    }
    return best;
}

/// All free sets by the same full scan.
inline std::vector<VarSubset> naive_free_sets(const ProblemContext& ctx) {
    const int m = ctx.num_vars();
    if (m > 22) throw std::runtime_error("naive_free_sets: too many variables for the oracle");
    std::vector<VarSubset> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        VarSubset s;
        for (int j = 0; j < m; ++j)
            if (mask & (1u << j)) s.push_back(j);
        if (thetacover::is_free(s, ctx)) out.push_back(std::move(s));
    }
    return out;
}

/// Max edge-disjoint triangle packing over all subsets of triangles.
inline int naive_packing(const Graph& g) {
    std::vector<Clique> tris = thetacover::enumerate_cliques(g, 3);
    if (tris.size() > 22) throw std::runtime_error("naive_packing: too many triangles for the oracle");
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << tris.size()); ++mask) {
        std::vector<std::pair<int, int>> used;
        bool ok = true;
        int count = 0;
        for (std::size_t t = 0; t < tris.size() && ok; ++t) {
            if (!(mask & (1u << t))) continue;
            ++count;
            for (auto [a, b] : {std::pair{tris[t][0], tris[t][1]},
                                {tris[t][0], tris[t][2]},
                                {tris[t][1], tris[t][2]}}) {
                if (std::find(used.begin(), used.end(), std::pair{a, b}) != used.end()) {
                    ok = false;
                    break;
                }
                used.emplace_back(a, b);
            }
        }
        if (ok) best = std::max(best, count);
    }
    return best;
}

/// Exact LP optimum of max/min c.x over {x : rows' slack >= 0} by enumerating
/// candidate bases (all nvars-subsets of rows), solving each square rational
/// system, and keeping feasible solutions. Desk scale only.
struct LpOracleRow {
    Rational constant;                              // slack = constant + coeffs . x
    std::vector<Rational> coeffs;
};

inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = b[r] / a[r][r];
    return x;
}

inline Rational lp_vertex_enum(const std::vector<LpOracleRow>& rows,
                               const std::vector<Rational>& objective, bool maximize) {
    const std::size_t n = objective.size();
    if (rows.size() < n) throw std::runtime_error("lp_vertex_enum: not enough rows");
    std::optional<Rational> best;
    std::vector<std::size_t> pick;
    auto feasible = [&](const std::vector<Rational>& x) {
        for (const auto& row : rows) {
            Rational slack = row.constant;
            for (std::size_t j = 0; j < n; ++j) slack += row.coeffs[j] * x[j];
            if (slack < 0) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (pick.size() == n) {
            std::vector<std::vector<Rational>> a;
            std::vector<Rational> b;
            for (std::size_t r : pick) {
                a.push_back(rows[r].coeffs);
                b.push_back(-rows[r].constant);
            }
            auto x = solve_square(std::move(a), std::move(b));
            if (!x || !feasible(*x)) return;
            Rational v = 0;
            for (std::size_t j = 0; j < n; ++j) v += objective[j] * (*x)[j];
            if (!best || (maximize ? v > *best : v < *best)) best = v;
            return;
        }
        for (std::size_t r = from; r < rows.size(); ++r) {
            pick.push_back(r);
            self(self, r + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    if (!best) throw std::runtime_error("lp_vertex_enum: no feasible basic solution");
    return *best;
}

}
