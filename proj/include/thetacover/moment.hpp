#pragma once

#include <utility>
#include <vector>

#include "thetacover/ideal.hpp"

namespace thetacover {

/// Symbolic reduced moment matrix M_{V_k}(y): rows/columns indexed by V_k,
/// entry (X, Y) naming the position of X u Y in V_{2k}, or a structural zero
/// when the union contains a blocker.
struct MomentMatrixSpec {
    static constexpr int structural_zero = -1;

    int k = 0;
    VarietyTable rows;     ///< V_k
    VarietyTable vars;     ///< V_{2k}
    int dim = 0;
    std::vector<std::vector<int>> entries;   ///< dim x dim, var index or structural_zero
    std::vector<int> objective_coords;       ///< positions of the singletons in vars

    MomentMatrixSpec(VarietyTable rows_, VarietyTable vars_)
        : rows(std::move(rows_)), vars(std::move(vars_)) {}
};

inline MomentMatrixSpec build_moment_spec(const ProblemContext& ctx, int k,
                                          std::size_t ceiling = default_variety_ceiling) {
    if (k < 1) throw std::invalid_argument("build_moment_spec: k must be >= 1");
    MomentMatrixSpec spec(enumerate_variety(ctx, k, ceiling),
                          enumerate_variety(ctx, 2 * k, ceiling));
    spec.k = k;
    spec.dim = static_cast<int>(spec.rows.size());
    spec.entries.assign(static_cast<std::size_t>(spec.dim),
                        std::vector<int>(static_cast<std::size_t>(spec.dim), MomentMatrixSpec::structural_zero));
    for (int x = 0; x < spec.dim; ++x)
        for (int y = x; y < spec.dim; ++y) {
            // |X u Y| <= 2k always, so absence from V_{2k} means not free.
            int idx = spec.vars.index_of(set_union(spec.rows.element(x), spec.rows.element(y)));
            spec.entries[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = idx;
            spec.entries[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = idx;
        }
    for (int j = 0; j < ctx.num_vars(); ++j)
        spec.objective_coords.push_back(spec.vars.index_of({j}));
    return spec;
}

/// One 0/1 symmetric matrix per element of V_{2k}: A_S has a 1 exactly where
/// the entry table names S. Supports are disjoint and cover the structural
/// nonzeros, giving M(y) = sum_S y_S A_S.
struct CoefficientMatrix {
    int var = -1;
    std::vector<std::pair<int, int>> positions;  ///< all (row, col), mirrors included
};

inline std::vector<CoefficientMatrix> coefficient_matrices(const MomentMatrixSpec& spec) {
    std::vector<CoefficientMatrix> out(spec.vars.size());
    for (int s = 0; s < static_cast<int>(spec.vars.size()); ++s) out[static_cast<std::size_t>(s)].var = s;
    for (int x = 0; x < spec.dim; ++x)
        for (int y = 0; y < spec.dim; ++y) {
            int s = spec.entries[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            if (s >= 0) out[static_cast<std::size_t>(s)].positions.emplace_back(x, y);
        }
    return out;
}

}
