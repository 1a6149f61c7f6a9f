#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetacover/errors.hpp"
#include "thetacover/graph.hpp"
#include "thetacover/ideal.hpp"
#include "thetacover/polynomial.hpp"

namespace thetacover {

/// A claimed identity  target == sum_j squares[j]^2  (mod I), with every
/// squares[j] of degree <= degree_bound. The squares are stored unsquared;
/// the verifier always squares them, so idempotents are used directly.
struct Certificate {
    Polynomial target;
    std::vector<Polynomial> squares;
    int degree_bound = 0;
};

enum class VerifyFailure {
    none,
    target_not_affine,
    degree_bound_exceeded,
    nonzero_remainder,
};

struct Verdict {
    bool accepted = false;
    VerifyFailure failure = VerifyFailure::none;
    bool target_affine = false;
    int offending_square = -1;      ///< index for degree_bound_exceeded
    Polynomial remainder;           ///< nonzero iff failure == nonzero_remainder

    explicit operator bool() const { return accepted; }
};

struct VerifyOptions {
    /// Enforce condition (a): target must be affine. Theta-body validity
    /// certificates (clique, hole) need this; the chain identities of the
    /// auxiliary lemma have targets of degree |B| and are verified without it.
    bool require_affine_target = false;
};

inline bool is_idempotent(const Polynomial& p, const ProblemContext& ctx) {
    return normal_form(p * p - p, ctx).is_zero();
}

/// Accepts iff (a) the target is affine (when required), (b) every square has
/// degree <= degree_bound, and (c) target - sum squares^2 reduces to exactly
/// zero mod the ideal. The nonzero remainder is reported on (c) failures.
inline Verdict verify_certificate(const Certificate& c, const ProblemContext& ctx,
                                  const VerifyOptions& opts = {}) {
    Verdict v;
    v.target_affine = c.target.degree() <= 1;
    if (opts.require_affine_target && !v.target_affine) {
        v.failure = VerifyFailure::target_not_affine;
        return v;
    }
    for (int j = 0; j < static_cast<int>(c.squares.size()); ++j) {
        if (c.squares[static_cast<std::size_t>(j)].degree() > c.degree_bound) {
            v.failure = VerifyFailure::degree_bound_exceeded;
            v.offending_square = j;
            return v;
        }
    }
    Polynomial diff = c.target;
    for (const Polynomial& g : c.squares) diff -= g * g;
    v.remainder = normal_form(diff, ctx);
    if (!v.remainder.is_zero()) {
        v.failure = VerifyFailure::nonzero_remainder;
        return v;
    }
    v.accepted = true;
    return v;
}

inline std::string to_string(VerifyFailure f) {
    switch (f) {
        case VerifyFailure::none: return "none";
        case VerifyFailure::target_not_affine: return "target_not_affine";
        case VerifyFailure::degree_bound_exceeded: return "degree_bound_exceeded";
        case VerifyFailure::nonzero_remainder: return "nonzero_remainder";
    }
    return "?";
}

namespace detail {

/// The telescoping idempotents g = 1 - x_j - x^A + x^(A+j) along the chain
/// a = A_1 c A_2 c ... c A_m = b, new elements taken in ascending order.
/// Zero summands (from A = empty) are dropped.
inline std::vector<Polynomial> chain_idempotents(const VarSubset& a, const VarSubset& b) {
    std::vector<Polynomial> out;
    VarSubset current = a;
    for (int j : set_difference(b, a)) {
        VarSubset next = set_union(current, {j});
        Polynomial g = Polynomial::constant(1) - Polynomial::variable(j) -
                       Polynomial::power_monomial(current) + Polynomial::power_monomial(next);
        if (!g.is_zero()) out.push_back(std::move(g));
        current = std::move(next);
    }
    return out;
}

/// |b \ a| - x^a + x^b - sum_{k in b \ a} x_k
inline Polynomial chain_target(const VarSubset& a, const VarSubset& b) {
    VarSubset diff = set_difference(b, a);
    Polynomial f = Polynomial::constant(static_cast<int>(diff.size())) -
                   Polynomial::power_monomial(a) + Polynomial::power_monomial(b);
    for (int k : diff) f -= Polynomial::variable(k);
    return f;
}

inline bool inside_one_blocker(const VarSubset& b, const ProblemContext& ctx) {
    if (b.empty()) return true;
    for (const VarSubset& blocker : ctx.blockers)
        if (is_subset(b, blocker)) return true;
    return false;
}

}

/// Certificate that |B\A| - x^A + x^B - sum_{k in B\A} x_k is |B|-sos mod I,
/// for A subset of B subset of the facet variables of a single K_i.
inline Certificate chain_certificate(const ProblemContext& ctx, const VarSubset& a,
                                     const VarSubset& b) {
    check_var_indices(a, ctx);
    check_var_indices(b, ctx);
    if (!is_subset(a, b)) throw std::invalid_argument("chain_certificate: A not a subset of B");
    if (!detail::inside_one_blocker(b, ctx))
        throw std::invalid_argument(
            "chain_certificate: B is not contained in the facet set of a single clique");
    Certificate c;
    c.target = detail::chain_target(a, b);
    c.squares = detail::chain_idempotents(a, b);
    c.degree_bound = static_cast<int>(b.size());
    return c;
}

/// Certificate that (i-1) - sum of H's facet variables is ceil(i/2)-sos mod I,
/// for H a K_i of the graph. J is the lexicographically first ceil(i/2) facet
/// variables; the pieces are the two chains for J and its complement plus the
/// idempotent 1 - x^J - x^Jc.
inline Certificate clique_certificate(const ProblemContext& ctx, const Clique& h) {
    VarSubset facets;
    {
        if (static_cast<int>(h.size()) != ctx.i || !is_canonical(h))
            throw std::invalid_argument("clique_certificate: H is not a canonical K_i vertex list");
        for (std::size_t drop = 0; drop < h.size(); ++drop) {
            Clique facet;
            for (std::size_t a = 0; a < h.size(); ++a)
                if (a != drop) facet.push_back(h[a]);
            int idx = ctx.var_index(facet);
            if (idx < 0) throw std::invalid_argument("clique_certificate: H is not a K_i of the graph");
            facets.push_back(idx);
        }
        facets = canonicalize(facets);
        if (static_cast<int>(facets.size()) != ctx.i)
            throw std::invalid_argument("clique_certificate: H is not a K_i of the graph");
    }
    const int half = (ctx.i + 1) / 2;
    VarSubset j_set(facets.begin(), facets.begin() + half);
    VarSubset jc_set(facets.begin() + half, facets.end());

    Certificate c;
    c.degree_bound = half;
    c.target = Polynomial::constant(ctx.i - 1);
    for (int k : facets) c.target -= Polynomial::variable(k);
    c.squares = detail::chain_idempotents({}, j_set);
    for (auto& g : detail::chain_idempotents({}, jc_set)) c.squares.push_back(std::move(g));
    c.squares.push_back(Polynomial::constant(1) - Polynomial::power_monomial(j_set) -
                        Polynomial::power_monomial(jc_set));
    return c;
}

namespace detail {

struct HoleVars {
    int p = 0;
    std::vector<int> shared;              ///< shared[l] = variable of the K_{i-1} common to blocks l-1, l
    std::vector<VarSubset> lone;          ///< per block, ascending lone variables
    std::vector<VarSubset> block_facets;  ///< per block, all i facet variables
};

/// Check the labeling invariants against the context and resolve everything
/// to variable indices. Throws std::invalid_argument on any violation.
inline HoleVars resolve_labeling(const HoleLabeling& hl, const ProblemContext& ctx) {
    const int p = hl.p, i = hl.i;
    if (i != ctx.i) throw std::invalid_argument("hole labeling: i does not match context");
    if (p < 3 || static_cast<int>(hl.blocks.size()) != p ||
        static_cast<int>(hl.shared.size()) != p || static_cast<int>(hl.lone.size()) != p)
        throw std::invalid_argument("hole labeling: inconsistent block/shared/lone counts");

    HoleVars hv;
    hv.p = p;
    for (int l = 0; l < p; ++l) {
        const Clique& block = hl.blocks[static_cast<std::size_t>(l)];
        if (static_cast<int>(block.size()) != i || !is_canonical(block))
            throw std::invalid_argument("hole labeling: block is not a canonical K_i vertex list");
        VarSubset facets;
        for (std::size_t drop = 0; drop < block.size(); ++drop) {
            Clique facet;
            for (std::size_t a = 0; a < block.size(); ++a)
                if (a != drop) facet.push_back(block[a]);
            int idx = ctx.var_index(facet);
            if (idx < 0) throw std::invalid_argument("hole labeling: block is not a K_i of the graph");
            facets.push_back(idx);
        }
        hv.block_facets.push_back(canonicalize(facets));
    }
    // Sharing pattern on the blocks themselves: a common K_{i-1} iff adjacent mod p.
    for (int l = 0; l < p; ++l)
        for (int m = l + 1; m < p; ++m) {
            bool adjacent = (m - l == 1) || (l == 0 && m == p - 1);
            std::size_t common =
                set_intersection(hl.blocks[static_cast<std::size_t>(l)],
                                 hl.blocks[static_cast<std::size_t>(m)]).size();
            if (adjacent && common != static_cast<std::size_t>(i - 1))
                throw std::invalid_argument("hole labeling: consecutive blocks do not share a K_{i-1}");
            if (!adjacent && common >= static_cast<std::size_t>(i - 1))
                throw std::invalid_argument("hole labeling: non-consecutive blocks share a K_{i-1}");
        }
    for (int l = 0; l < p; ++l) {
        const Clique& sh = hl.shared[static_cast<std::size_t>(l)];
        int idx = ctx.var_index(sh);
        if (idx < 0) throw std::invalid_argument("hole labeling: shared clique is not a variable");
        const Clique& prev = hl.blocks[static_cast<std::size_t>((l + p - 1) % p)];
        const Clique& cur = hl.blocks[static_cast<std::size_t>(l)];
        if (!is_subset(sh, prev) || !is_subset(sh, cur))
            throw std::invalid_argument("hole labeling: shared[l] not inside blocks l-1 and l");
        hv.shared.push_back(idx);
    }
    for (int l = 0; l < p; ++l) {
        if (static_cast<int>(hl.lone[static_cast<std::size_t>(l)].size()) != i - 2)
            throw std::invalid_argument("hole labeling: block must have i-2 lone facets");
        VarSubset lone_vars;
        for (const Clique& f : hl.lone[static_cast<std::size_t>(l)]) {
            int idx = ctx.var_index(f);
            if (idx < 0) throw std::invalid_argument("hole labeling: lone clique is not a variable");
            lone_vars.push_back(idx);
        }
        lone_vars = canonicalize(lone_vars);
        VarSubset expected = canonicalize(
            {hv.shared[static_cast<std::size_t>(l)], hv.shared[static_cast<std::size_t>((l + 1) % p)]});
        if (set_union(expected, lone_vars) != hv.block_facets[static_cast<std::size_t>(l)] ||
            !set_intersection(expected, lone_vars).empty())
            throw std::invalid_argument(
                "hole labeling: facets of a block must be shared[l], shared[l+1] and the lone list");
        hv.lone.push_back(std::move(lone_vars));
    }
    return hv;
}

}

/// Certificate that the K_i-p-hole inequality (p odd) is ceil(i/2)-sos mod I:
///   (p-1)/2 * (2i-3) + i-2 - sum over the blocks' facet variables >= 0.
/// Built exactly as the proof: per block the two chains and the idempotent
/// h = 1 - x_l x_{l+1} y^{J1} - y^{J2} (with J1 empty for i in {3,4}), plus
/// the two telescoping idempotent sums over the shared variables.
inline Certificate hole_certificate(const ProblemContext& ctx, const HoleLabeling& hl) {
    detail::HoleVars hv = detail::resolve_labeling(hl, ctx);
    const int p = hv.p, i = ctx.i;
    if (p % 2 == 0)
        throw EvenHoleError("hole_certificate: p is even; the construction covers odd p only");
    const int k = (p - 1) / 2;
    const int half = (i + 1) / 2;

    Certificate c;
    c.degree_bound = half;

    // Target over the union of all block facets.
    VarSubset support;
    for (const VarSubset& f : hv.block_facets) support = set_union(support, f);
    c.target = Polynomial::constant(k * (2 * i - 3) + i - 2);
    for (int v : support) c.target -= Polynomial::variable(v);

    // x(l) is the paper's 1-based shared variable; block l has {x(l), x(l+1)}.
    auto x = [&](int l) {
        return hv.shared[static_cast<std::size_t>(((l - 1) % p + p) % p)];
    };

    for (int l = 1; l <= p; ++l) {
        const VarSubset& lone = hv.lone[static_cast<std::size_t>(l - 1)];
        const VarSubset base = canonicalize({x(l), x(l + 1)});
        const int j1_size = std::max(0, half - 2);
        VarSubset j1(lone.begin(), lone.begin() + j1_size);
        VarSubset j2(lone.begin() + j1_size, lone.end());
        VarSubset base_j1 = set_union(base, j1);

        for (auto& g : detail::chain_idempotents(base, base_j1)) c.squares.push_back(std::move(g));
        for (auto& g : detail::chain_idempotents({}, j2)) c.squares.push_back(std::move(g));
        Polynomial h = Polynomial::constant(1) - Polynomial::power_monomial(base_j1) -
                       Polynomial::power_monomial(j2);
        if (!h.is_zero()) c.squares.push_back(std::move(h));
    }

    // Telescoping sums handling k - sum x_l + sum x_l x_{l+1}.
    for (int l = 1; l <= k; ++l) {
        int a = x(2 * l - 1), b = x(2 * l), d = x(2 * l + 1);
        Polynomial r = Polynomial::constant(1) - Polynomial::variable(a) - Polynomial::variable(b) -
                       Polynomial::variable(d) +
                       Polynomial::power_monomial(canonicalize({a, b})) +
                       Polynomial::power_monomial(canonicalize({a, d})) +
                       Polynomial::power_monomial(canonicalize({b, d}));
        c.squares.push_back(std::move(r));
    }
    for (int l = 2; l <= k; ++l) {
        int a = x(2 * l - 1), d = x(2 * l + 1), one = x(1);
        Polynomial q = Polynomial::variable(a) -
                       Polynomial::power_monomial(canonicalize({a, one})) -
                       Polynomial::power_monomial(canonicalize({a, d})) +
                       Polynomial::power_monomial(canonicalize({d, one}));
        c.squares.push_back(std::move(q));
    }
    return c;
}

}
