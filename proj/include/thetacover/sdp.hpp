#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "thetacover/errors.hpp"

namespace thetacover {

/// Directed sparse entry of a symmetric matrix; off-diagonal positions carry
/// both mirror copies so trace formulas need no symmetrization.
struct LmiEntry {
    int row = 0;
    int col = 0;
    double val = 0;
};

/// Affine matrix map M(x) = C + sum_j x_j B_j, dim x dim symmetric.
struct AffineLmi {
    int dim = 0;
    std::vector<LmiEntry> constant;
    std::vector<std::vector<LmiEntry>> coeff;

    int num_vars() const { return static_cast<int>(coeff.size()); }
};

enum class SolveStatus { optimal, max_iterations, infeasible_numerics };

inline std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::max_iterations: return "max_iterations";
        case SolveStatus::infeasible_numerics: return "infeasible_numerics";
    }
    return "?";
}

struct SolverOptions {
    double tol = 1e-7;        ///< relative duality-gap target
    double feas_tol = 1e-8;
    int max_iter = 500;       ///< total Newton iterations
    bool verbose = false;
    double mu = 10.0;         ///< barrier growth factor
    double newton_tol = 0.25; ///< centering decrement threshold
};

struct IterationTrace {
    double t = 0;
    double decrement = 0;
    double objective = 0;
    int backtracks = 0;
};

struct EngineResult {
    SolveStatus status = SolveStatus::infeasible_numerics;
    double value = 0;
    Eigen::VectorXd x;
    double min_eigenvalue = 0;
    double gap_estimate = 0;   ///< dim / t at exit
    int iterations = 0;
    std::vector<IterationTrace> trace;
};

namespace detail {

inline Eigen::MatrixXd assemble(const AffineLmi& lmi, const Eigen::VectorXd& x) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(lmi.dim, lmi.dim);
    for (const LmiEntry& e : lmi.constant) m(e.row, e.col) += e.val;
    for (int j = 0; j < lmi.num_vars(); ++j)
        for (const LmiEntry& e : lmi.coeff[static_cast<std::size_t>(j)])
            m(e.row, e.col) += x[j] * e.val;
    return m;
}

inline bool cholesky_logdet(const Eigen::MatrixXd& m, double& logdet, Eigen::LLT<Eigen::MatrixXd>& llt) {
    llt.compute(m);
    if (llt.info() != Eigen::Success) return false;
    const auto& l = llt.matrixLLT();
    logdet = 0;
    for (int r = 0; r < m.rows(); ++r) {
        double d = l(r, r);
        if (!(d > 0) || !std::isfinite(d)) return false;
        logdet += 2.0 * std::log(d);
    }
    return std::isfinite(logdet);
}

struct FlatEntries {
    std::vector<int> row, col, var;
    std::vector<double> val;

    explicit FlatEntries(const AffineLmi& lmi) {
        for (int j = 0; j < lmi.num_vars(); ++j)
            for (const LmiEntry& e : lmi.coeff[static_cast<std::size_t>(j)]) {
                row.push_back(e.row);
                col.push_back(e.col);
                var.push_back(j);
                val.push_back(e.val);
            }
    }

    std::size_t size() const { return row.size(); }
};

}

/// Maximize objective . x over {x : M(x) PSD} with a logdet barrier:
/// Newton centering with backtracking line search on t*obj + logdet M, t
/// growing geometrically until the barrier gap dim/t meets the relative
/// tolerance. Deterministic; x0 must be strictly feasible.
inline EngineResult lmi_maximize(const AffineLmi& lmi, const Eigen::VectorXd& objective,
                                 const Eigen::VectorXd& x0, const SolverOptions& opts = {}) {
    const int m = lmi.num_vars();
    if (objective.size() != m || x0.size() != m)
        throw std::invalid_argument("lmi_maximize: dimension mismatch");
    EngineResult res;
    res.x = x0;
    if (m == 0) {
        res.status = SolveStatus::optimal;
        if (lmi.dim > 0) {
            Eigen::MatrixXd mat = detail::assemble(lmi, res.x);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mat, Eigen::EigenvaluesOnly);
            res.min_eigenvalue = es.eigenvalues().minCoeff();
        }
        return res;
    }

    const detail::FlatEntries flat(lmi);
    Eigen::VectorXd x = x0;
    Eigen::MatrixXd mat = detail::assemble(lmi, x);
    double logdet = 0;
    Eigen::LLT<Eigen::MatrixXd> llt(lmi.dim);
    if (!detail::cholesky_logdet(mat, logdet, llt)) {
        res.status = SolveStatus::infeasible_numerics;
        return res;
    }

    int total_newton = 0;
    auto finish = [&](SolveStatus status, double t) {
        res.status = status;
        res.x = x;
        res.value = objective.dot(x);
        res.gap_estimate = t > 0 ? lmi.dim / t : std::numeric_limits<double>::infinity();
        res.iterations = total_newton;
        Eigen::MatrixXd final_mat = detail::assemble(lmi, x);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(final_mat, Eigen::EigenvaluesOnly);
        res.min_eigenvalue = es.eigenvalues().minCoeff();
        return res;
    };

    double t = 1.0;
    Eigen::MatrixXd hess(m, m);
    Eigen::VectorXd grad(m);

    while (true) {
        // Center for the current t.
        bool stalled = false;
        for (;;) {
            if (total_newton >= opts.max_iter) return finish(SolveStatus::max_iterations, t);

            Eigen::MatrixXd w = llt.solve(Eigen::MatrixXd::Identity(lmi.dim, lmi.dim));

            grad = t * objective;
            for (std::size_t e = 0; e < flat.size(); ++e)
                grad[flat.var[e]] += flat.val[e] * w(flat.col[e], flat.row[e]);

            hess.setZero();
            for (std::size_t e = 0; e < flat.size(); ++e) {
                const int a = flat.row[e], b = flat.col[e], u = flat.var[e];
                const double ve = flat.val[e];
                const double* wa = w.data() + static_cast<std::ptrdiff_t>(a) * lmi.dim;
                const double* wb = w.data() + static_cast<std::ptrdiff_t>(b) * lmi.dim;
                for (std::size_t f = e; f < flat.size(); ++f) {
                    // H[u][v] = sum val_e val_f W(q,a) W(b,p) over entry pairs.
                    const double c = ve * flat.val[f] * wa[flat.col[f]] * wb[flat.row[f]];
                    hess(flat.var[f], u) += c;
                    if (f != e) hess(u, flat.var[f]) += c;
                }
            }

            Eigen::LLT<Eigen::MatrixXd> hllt(hess);
            Eigen::VectorXd step;
            if (hllt.info() == Eigen::Success) {
                step = hllt.solve(grad);
                step += hllt.solve(grad - hess * step);  // one refinement pass
            } else {
                Eigen::MatrixXd damped = hess;
                damped.diagonal().array() += 1e-12 * (1.0 + hess.diagonal().maxCoeff());
                Eigen::LDLT<Eigen::MatrixXd> hldlt(damped);
                if (hldlt.info() != Eigen::Success) return finish(SolveStatus::infeasible_numerics, t);
                step = hldlt.solve(grad);
            }

            double decrement_sq = grad.dot(step);
            if (!std::isfinite(decrement_sq)) return finish(SolveStatus::infeasible_numerics, t);
            if (decrement_sq <= opts.newton_tol * opts.newton_tol) break;

            const double f_now = t * objective.dot(x) + logdet;
            double s = 1.0;
            int backtracks = 0;
            bool moved = false;
            Eigen::LLT<Eigen::MatrixXd> trial_llt(lmi.dim);
            for (; backtracks < 60; ++backtracks, s *= 0.5) {
                Eigen::VectorXd xt = x + s * step;
                Eigen::MatrixXd mt = detail::assemble(lmi, xt);
                double ld = 0;
                if (!detail::cholesky_logdet(mt, ld, trial_llt)) continue;
                double ft = t * objective.dot(xt) + ld;
                if (ft >= f_now + 0.01 * s * decrement_sq) {
                    x = std::move(xt);
                    mat = std::move(mt);
                    logdet = ld;
                    llt = trial_llt;
                    moved = true;
                    break;
                }
            }
            ++total_newton;
            if (opts.verbose)
                res.trace.push_back({t, std::sqrt(std::max(0.0, decrement_sq)),
                                     objective.dot(x), backtracks});
            if (!moved) {
                stalled = true;
                break;
            }
        }

        const double scale = std::max(1.0, std::abs(objective.dot(x)));
        if (lmi.dim / t <= 0.5 * opts.tol * scale) return finish(SolveStatus::optimal, t);
        if (stalled) return finish(SolveStatus::infeasible_numerics, t);
        t *= opts.mu;
    }
}

}
