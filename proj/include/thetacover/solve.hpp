#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <utility>
#include <vector>

#include "thetacover/exact.hpp"
#include "thetacover/graph.hpp"
#include "thetacover/ideal.hpp"
#include "thetacover/moment.hpp"
#include "thetacover/rational.hpp"
#include "thetacover/sdp.hpp"

namespace thetacover {

enum class Sense { maximize, minimize };

/// Optimum over TH_k as seen through the reduced moment matrix. y_0 = 1
/// exactly; projected_x are the singleton coordinates.
struct SdpResult {
    SolveStatus status = SolveStatus::infeasible_numerics;
    double value = 0;
    std::vector<double> y;
    std::vector<double> projected_x;
    double min_eigenvalue = 0;
    double duality_gap_estimate = 0;
    int iterations = 0;
    std::vector<IterationTrace> trace;
};

namespace detail {

/// Strictly feasible start: y_S = rho^|S| with rho picked from a fixed
/// halving grid by maximizing the minimum eigenvalue of M(y(rho)).
inline Eigen::VectorXd barycenter_start(const MomentMatrixSpec& spec, const AffineLmi& lmi) {
    const int m = lmi.num_vars();
    Eigen::VectorXd best_x(m);
    double best_eig = -1;
    for (int j = 1; j <= 20; ++j) {
        const double rho = std::pow(0.5, j);
        Eigen::VectorXd x(m);
        for (int s = 1; s < static_cast<int>(spec.vars.size()); ++s)
            x[s - 1] = std::pow(rho, static_cast<double>(spec.vars.element(s).size()));
        Eigen::MatrixXd mat = assemble(lmi, x);
        Eigen::LLT<Eigen::MatrixXd> llt(mat);
        if (llt.info() != Eigen::Success) continue;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mat, Eigen::EigenvaluesOnly);
        double eig = es.eigenvalues().minCoeff();
        if (eig > best_eig) {
            best_eig = eig;
            best_x = x;
        }
    }
    if (best_eig <= 0)
        throw Error("barycenter_start: no strictly feasible scaled-barycenter point found");
    return best_x;
}

}

/// Optimize weights . x over {y : M_{V_k}(y) PSD, y_0 = 1} (Prop. 2.3 form).
inline SdpResult theta_optimize(const MomentMatrixSpec& spec, const std::vector<Rational>& weights,
                                Sense sense, const SolverOptions& opts = {}) {
    const int n = static_cast<int>(spec.objective_coords.size());
    if (static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("theta_optimize: weight count does not match variable count");

    SdpResult out;
    const int m = static_cast<int>(spec.vars.size()) - 1;  // y_0 pinned to 1
    if (m < 0 || spec.dim == 0) throw std::invalid_argument("theta_optimize: empty spec");
    if (m == 0) {
        out.status = SolveStatus::optimal;
        out.y = {1.0};
        out.min_eigenvalue = 1.0;
        return out;
    }

    AffineLmi lmi;
    lmi.dim = spec.dim;
    lmi.coeff.resize(static_cast<std::size_t>(m));
    for (const CoefficientMatrix& a : coefficient_matrices(spec)) {
        auto& dst = a.var == 0 ? lmi.constant : lmi.coeff[static_cast<std::size_t>(a.var - 1)];
        for (auto [r, c] : a.positions) dst.push_back({r, c, 1.0});
    }

    Eigen::VectorXd objective = Eigen::VectorXd::Zero(m);
    const double sign = sense == Sense::maximize ? 1.0 : -1.0;
    for (int j = 0; j < n; ++j)
        objective[spec.objective_coords[static_cast<std::size_t>(j)] - 1] +=
            sign * to_double(weights[static_cast<std::size_t>(j)]);

    EngineResult er = lmi_maximize(lmi, objective, detail::barycenter_start(spec, lmi), opts);

    out.status = er.status;
    out.value = sign * er.value;
    out.y.assign(static_cast<std::size_t>(m) + 1, 1.0);
    for (int s = 0; s < m; ++s) out.y[static_cast<std::size_t>(s) + 1] = er.x[s];
    for (int j = 0; j < n; ++j)
        out.projected_x.push_back(out.y[static_cast<std::size_t>(spec.objective_coords[static_cast<std::size_t>(j)])]);
    out.min_eigenvalue = er.min_eigenvalue;
    out.duality_gap_estimate = er.gap_estimate;
    out.iterations = er.iterations;
    out.trace = std::move(er.trace);
    return out;
}

/// Exact feasibility of a rank-1 vertex moment vector, for the engine's
/// feasibility surface: builds M(y(S)) over the rationals and runs the exact
/// PSD check.
inline bool moment_vector_feasible(const MomentMatrixSpec& spec, const VarSubset& s) {
    RatMatrix m(static_cast<std::size_t>(spec.dim),
                std::vector<Rational>(static_cast<std::size_t>(spec.dim), 0));
    for (int x = 0; x < spec.dim; ++x)
        for (int y = 0; y < spec.dim; ++y) {
            int idx = spec.entries[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            if (idx >= 0 && is_subset(spec.vars.element(idx), s))
                m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
        }
    return exact_psd(std::move(m));
}

struct LpResult {
    SolveStatus status = SolveStatus::infeasible_numerics;
    double value = 0;
    std::vector<double> x;
    double gap_estimate = 0;
    int iterations = 0;
};

/// LP in "affine slack" form: every row constant + terms . x >= 0; solved by
/// the SDP engine on the diagonal matrix of slacks, then the returned point
/// is rechecked for feasibility in exact rational arithmetic.
struct LpProblem {
    struct Row {
        Rational constant;
        std::vector<std::pair<int, Rational>> terms;
    };
    int num_vars = 0;
    std::vector<Rational> objective;
    std::vector<Row> rows;
    Sense sense = Sense::maximize;
    std::vector<Rational> interior;
};

inline SolverOptions lp_default_options() {
    SolverOptions o;
    o.tol = 1e-9;
    return o;
}

inline LpResult solve_lp(const LpProblem& lp, const SolverOptions& opts = lp_default_options()) {
    LpResult out;
    if (lp.num_vars == 0) {
        out.status = SolveStatus::optimal;
        return out;
    }
    AffineLmi lmi;
    lmi.dim = static_cast<int>(lp.rows.size());
    lmi.coeff.resize(static_cast<std::size_t>(lp.num_vars));
    for (int r = 0; r < lmi.dim; ++r) {
        const auto& row = lp.rows[static_cast<std::size_t>(r)];
        lmi.constant.push_back({r, r, to_double(row.constant)});
        for (const auto& [j, c] : row.terms)
            lmi.coeff[static_cast<std::size_t>(j)].push_back({r, r, to_double(c)});
    }
    const double sign = lp.sense == Sense::maximize ? 1.0 : -1.0;
    Eigen::VectorXd objective(lp.num_vars), x0(lp.num_vars);
    for (int j = 0; j < lp.num_vars; ++j) {
        objective[j] = sign * to_double(lp.objective[static_cast<std::size_t>(j)]);
        x0[j] = to_double(lp.interior[static_cast<std::size_t>(j)]);
    }
    EngineResult er = lmi_maximize(lmi, objective, x0, opts);
    out.status = er.status;
    out.value = sign * er.value;
    out.x.assign(er.x.data(), er.x.data() + er.x.size());
    out.gap_estimate = er.gap_estimate;
    out.iterations = er.iterations;

    if (out.status == SolveStatus::optimal) {
        // Exact-rational recheck of the reported point.
        const Rational feas(rational_from_double(opts.feas_tol));
        std::vector<Rational> xr;
        for (double v : out.x) xr.push_back(rational_from_double(v));
        for (const auto& row : lp.rows) {
            Rational slack = row.constant;
            for (const auto& [j, c] : row.terms) slack += c * xr[static_cast<std::size_t>(j)];
            if (slack < -feas) {
                out.status = SolveStatus::infeasible_numerics;
                return out;
            }
        }
        Rational obj = 0;
        for (int j = 0; j < lp.num_vars; ++j)
            obj += lp.objective[static_cast<std::size_t>(j)] * xr[static_cast<std::size_t>(j)];
        Rational diff = obj - rational_from_double(out.value);
        if (diff < -feas || diff > feas) out.status = SolveStatus::infeasible_numerics;
    }
    return out;
}

/// FRAC_i(G): the box plus one clique-sum row per K_i. Optimized by the LP
/// path of the engine.
inline LpResult frac_optimize(const ProblemContext& ctx, const std::vector<Rational>& weights,
                              Sense sense, const SolverOptions& opts = lp_default_options()) {
    if (static_cast<int>(weights.size()) != ctx.num_vars())
        throw std::invalid_argument("frac_optimize: weight count does not match variable count");
    LpProblem lp;
    lp.num_vars = ctx.num_vars();
    lp.objective = weights;
    lp.sense = sense;
    for (int j = 0; j < lp.num_vars; ++j) {
        lp.rows.push_back({0, {{j, 1}}});    // x_j >= 0
        lp.rows.push_back({1, {{j, -1}}});   // x_j <= 1
    }
    for (const VarSubset& blocker : ctx.blockers) {
        LpProblem::Row row;
        row.constant = ctx.i - 1;
        for (int j : blocker) row.terms.push_back({j, -1});
        lp.rows.push_back(std::move(row));   // sum over the K_i's facets <= i-1
    }
    lp.interior.assign(static_cast<std::size_t>(lp.num_vars),
                       Rational(ctx.i - 1) / Rational(2 * ctx.i));
    return solve_lp(lp, opts);
}

/// tau*: min sum x_e with every triangle covered fractionally.
inline LpResult tau_star(const Graph& g, const SolverOptions& opts = lp_default_options()) {
    ProblemContext ctx = build_context(g, 3);
    LpProblem lp;
    lp.num_vars = ctx.num_vars();
    lp.objective = unit_weights(lp.num_vars);
    lp.sense = Sense::minimize;
    for (int j = 0; j < lp.num_vars; ++j) {
        lp.rows.push_back({0, {{j, 1}}});
        lp.rows.push_back({1, {{j, -1}}});
    }
    for (const VarSubset& blocker : ctx.blockers) {
        LpProblem::Row row;
        row.constant = -1;
        for (int j : blocker) row.terms.push_back({j, 1});
        lp.rows.push_back(std::move(row));   // sum over the triangle's edges >= 1
    }
    lp.interior.assign(static_cast<std::size_t>(lp.num_vars), Rational(2, 3));
    return solve_lp(lp, opts);
}

/// nu*: max sum y_Delta with every edge fractionally packed at most once.
inline LpResult nu_star(const Graph& g, const SolverOptions& opts = lp_default_options()) {
    ProblemContext edge_ctx = build_context(g, 2);
    std::vector<Clique> triangles = enumerate_cliques(g, 3);
    LpProblem lp;
    lp.num_vars = static_cast<int>(triangles.size());
    lp.objective = unit_weights(lp.num_vars);
    lp.sense = Sense::maximize;
    if (lp.num_vars == 0) return solve_lp(lp);

    std::vector<std::vector<int>> triangles_on_edge(static_cast<std::size_t>(edge_ctx.num_vars()));
    for (int t = 0; t < lp.num_vars; ++t) {
        const Clique& tri = triangles[static_cast<std::size_t>(t)];
        for (auto [a, b] : {std::pair{tri[0], tri[1]}, {tri[0], tri[2]}, {tri[1], tri[2]}})
            triangles_on_edge[static_cast<std::size_t>(edge_ctx.var_index({a, b}))].push_back(t);
    }
    std::size_t max_degree = 1;
    for (const auto& list : triangles_on_edge) max_degree = std::max(max_degree, list.size());
    for (int t = 0; t < lp.num_vars; ++t) {
        lp.rows.push_back({0, {{t, 1}}});
        lp.rows.push_back({1, {{t, -1}}});
    }
    for (const auto& list : triangles_on_edge) {
        if (list.empty()) continue;
        LpProblem::Row row;
        row.constant = 1;
        for (int t : list) row.terms.push_back({t, -1});
        lp.rows.push_back(std::move(row));   // sum of triangles through the edge <= 1
    }
    lp.interior.assign(static_cast<std::size_t>(lp.num_vars),
                       Rational(1) / Rational(2 * static_cast<int>(max_degree)));
    return solve_lp(lp, opts);
}

struct TauDaggerResult {
    double value = 0;
    SdpResult theta;
};

/// tau-dagger via the complement identity: the cover variety is the
/// coordinatewise complement of the free variety, so min sum x over its TH_2
/// equals |E| minus the unit-weight max over TH_2 of the triangle-free ideal.
inline TauDaggerResult tau_dagger(const Graph& g, const SolverOptions& opts = {},
                                  std::size_t ceiling = default_variety_ceiling) {
    ProblemContext ctx = build_context(g, 3);
    TauDaggerResult out;
    if (ctx.num_vars() == 0) {
        out.theta.status = SolveStatus::optimal;
        return out;
    }
    MomentMatrixSpec spec = build_moment_spec(ctx, 2, ceiling);
    out.theta = theta_optimize(spec, unit_weights(ctx.num_vars()), Sense::maximize, opts);
    out.value = ctx.num_vars() - out.theta.value;
    return out;
}

}
