#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "thetacover/certificate.hpp"
#include "thetacover/exact.hpp"

#include "support/oracles.hpp"

using namespace thetacover;

namespace {

/// Semantic soundness on every variety point: target >= 0 and target equals
/// the sum of squared square-roots, evaluated exactly.
void check_semantics(const Certificate& c, const ProblemContext& ctx) {
    for (const VarSubset& s : oracles::naive_free_sets(ctx)) {
        Rational lhs = c.target.eval_binary(s);
        Rational rhs = 0;
        for (const Polynomial& g : c.squares) {
            Rational v = g.eval_binary(s);
            rhs += v * v;
        }
        REQUIRE(lhs >= 0);
        REQUIRE(lhs == rhs);
    }
}

void check_idempotents_evaluate_binary(const Certificate& c, const ProblemContext& ctx) {
    for (const VarSubset& s : oracles::naive_free_sets(ctx))
        for (const Polynomial& g : c.squares) {
            Rational v = g.eval_binary(s);
            REQUIRE((v == 0 || v == 1));
        }
}

}

TEST_CASE("idempotents from the proofs") {
    ProblemContext k3 = build_context(complete_graph(3), 3);

    // g_k = 1 - x_k - x^{A_k} + x^{A_{k+1}} with A_k = {0}, adding variable 1.
    Polynomial g = Polynomial::constant(1) - Polynomial::variable(1) -
                   Polynomial::power_monomial({0}) + Polynomial::power_monomial({0, 1});
    CHECK(is_idempotent(g, k3));

    // h = 1 - x^J - x^Jc needs the blocker x_0 x_1 x_2.
    Polynomial h = Polynomial::constant(1) - Polynomial::power_monomial({0, 1}) -
                   Polynomial::power_monomial({2});
    CHECK(is_idempotent(h, k3));

    // x_0 + x_1 is not idempotent when {x_0, x_1} is free: p^2 - p = 2 x_0 x_1.
    ProblemContext k4 = build_context(complete_graph(4), 3);
    Polynomial p = Polynomial::variable(0) + Polynomial::variable(1);
    CHECK(is_free({0, 1}, k4));
    CHECK(!is_idempotent(p, k4));
}

TEST_CASE("chain certificate: telescoping collapse for B = one variable") {
    ProblemContext k3 = build_context(complete_graph(3), 3);
    Certificate c = chain_certificate(k3, {}, {1});
    CHECK(c.target.is_zero());
    CHECK(c.squares.empty());
    CHECK(verify_certificate(c, k3).accepted);
}

TEST_CASE("chain certificate: paper's two-variable case in K_3") {
    ProblemContext k3 = build_context(complete_graph(3), 3);
    Certificate c = chain_certificate(k3, {}, {0, 1});

    Polynomial expected;  // 1 + x_0 x_1 - x_0 - x_1
    expected.add_term({}, 1);
    expected.add_term({0, 1}, 1);
    expected.add_term({0}, -1);
    expected.add_term({1}, -1);
    CHECK(c.target == expected);

    REQUIRE(c.squares.size() == 1);
    Polynomial g2;  // 1 - x_1 - x_0 + x_0 x_1
    g2.add_term({}, 1);
    g2.add_term({1}, -1);
    g2.add_term({0}, -1);
    g2.add_term({0, 1}, 1);
    CHECK(c.squares[0] == g2);
    CHECK(is_idempotent(c.squares[0], k3));
    CHECK(verify_certificate(c, k3).accepted);
    check_semantics(c, k3);
}

TEST_CASE("chain certificate: A = {x1}, B = {x1,x2,x3} in the K_4 (i=4) context") {
    ProblemContext k4 = build_context(complete_graph(4), 4);
    Certificate c = chain_certificate(k4, {0}, {0, 1, 2});
    CHECK(c.degree_bound == 3);

    Polynomial expected;  // 2 - x_0 + x_0 x_1 x_2 - x_1 - x_2
    expected.add_term({}, 2);
    expected.add_term({0}, -1);
    expected.add_term({0, 1, 2}, 1);
    expected.add_term({1}, -1);
    expected.add_term({2}, -1);
    CHECK(c.target == expected);

    Verdict v = verify_certificate(c, k4);
    CHECK(v.accepted);
    CHECK(!v.target_affine);
    check_semantics(c, k4);
}

TEST_CASE("chain certificate errors") {
    ProblemContext k4 = build_context(complete_graph(4), 3);
    CHECK_THROWS_AS(chain_certificate(k4, {0, 1}, {0}), std::invalid_argument);
    // {0, 5} is not inside the facet set of a single triangle of K_4.
    CHECK(is_free({0, 5}, k4));
    CHECK_THROWS_AS(chain_certificate(k4, {}, {0, 5}), std::invalid_argument);
}

TEST_CASE("chain telescoping: the summands add up to the target exactly") {
    ProblemContext k5 = build_context(complete_graph(5), 5);
    std::mt19937_64 gen(101);
    for (int trial = 0; trial < 20; ++trial) {
        VarSubset b, a;
        for (int j = 0; j < 5; ++j)
            if (gen() % 2 == 0) b.push_back(j);
        for (int j : b)
            if (gen() % 2 == 0) a.push_back(j);
        Certificate c = chain_certificate(k5, a, b);
        Polynomial sum;
        for (const Polynomial& g : c.squares) sum += g;
        CHECK(normal_form(sum - c.target, k5).is_zero());
        CHECK(verify_certificate(c, k5).accepted);
        for (const Polynomial& g : c.squares) {
            CHECK(g.degree() <= static_cast<int>(b.size()));
            CHECK(is_idempotent(g, k5));
        }
    }
}

TEST_CASE("clique certificates for i = 3, 4, 5 on K_i") {
    for (int i : {3, 4, 5}) {
        ProblemContext ctx = build_context(complete_graph(i), i);
        Clique whole;
        for (int v = 0; v < i; ++v) whole.push_back(v);
        Certificate c = clique_certificate(ctx, whole);
        CHECK(c.degree_bound == (i + 1) / 2);

        Polynomial expected = Polynomial::constant(i - 1);
        for (int j = 0; j < i; ++j) expected -= Polynomial::variable(j);
        CHECK(c.target == expected);

        Verdict v = verify_certificate(c, ctx, {.require_affine_target = true});
        CHECK(v.accepted);
        check_semantics(c, ctx);
        check_idempotents_evaluate_binary(c, ctx);
    }
}

TEST_CASE("clique certificate inside a larger graph") {
    ProblemContext ctx = build_context(complete_graph(4), 3);
    Certificate c = clique_certificate(ctx, {0, 1, 2});
    CHECK(c.degree_bound == 2);
    CHECK(verify_certificate(c, ctx, {.require_affine_target = true}).accepted);
    check_semantics(c, ctx);

    CHECK_THROWS_AS(clique_certificate(ctx, {0, 1}), std::invalid_argument);
}

TEST_CASE("hole certificates for (3,5), (3,3), (4,3)") {
    struct Case {
        int i, p, rhs;
    };
    for (auto [i, p, rhs] : {Case{3, 5, 7}, Case{3, 3, 4}, Case{4, 3, 7}}) {
        CAPTURE(i, p);
        auto [g, hl] = wheel_hole(i, p);
        ProblemContext ctx = build_context(g, i);
        Certificate c = hole_certificate(ctx, hl);
        CHECK(c.degree_bound == (i + 1) / 2);
        CHECK(c.target.coeff({}) == rhs);

        Verdict v = verify_certificate(c, ctx, {.require_affine_target = true});
        CAPTURE(to_string(v.failure));
        CHECK(v.accepted);
        check_semantics(c, ctx);
        check_idempotents_evaluate_binary(c, ctx);

        // Facet tightness: the brute-force maximum of the target's weights
        // over free sets equals the RHS.
        Inequality ineq = inequality_from_target(c.target, ctx.num_vars());
        CHECK(oracles::naive_max_free(ctx, ineq.weights) == ineq.rhs);
    }
}

TEST_CASE("hole certificate rejects even p with a distinct error") {
    auto [g, hl] = wheel_hole(3, 4);
    ProblemContext ctx = build_context(g, 3);
    CHECK_THROWS_AS(hole_certificate(ctx, hl), EvenHoleError);
}

TEST_CASE("hole certificate rejects invalid labelings") {
    auto [g, hl] = wheel_hole(3, 5);
    ProblemContext ctx = build_context(g, 3);

    HoleLabeling shuffled = hl;
    std::swap(shuffled.blocks[1], shuffled.blocks[3]);
    CHECK_THROWS_AS(hole_certificate(ctx, shuffled), std::invalid_argument);

    HoleLabeling wrong_shared = hl;
    wrong_shared.shared[0] = wrong_shared.shared[1];
    CHECK_THROWS_AS(hole_certificate(ctx, wrong_shared), std::invalid_argument);

    HoleLabeling truncated = hl;
    truncated.lone[2].clear();
    CHECK_THROWS_AS(hole_certificate(ctx, truncated), std::invalid_argument);
}

TEST_CASE("verifier rejections") {
    ProblemContext k4 = build_context(complete_graph(4), 3);
    Certificate c = clique_certificate(k4, {0, 1, 2});
    REQUIRE(verify_certificate(c, k4).accepted);

    SECTION("degree bound lowered to 1: condition (b)") {
        Certificate low = c;
        low.degree_bound = 1;
        Verdict v = verify_certificate(low, k4);
        CHECK(!v.accepted);
        CHECK(v.failure == VerifyFailure::degree_bound_exceeded);
        CHECK(v.offending_square >= 0);
    }

    SECTION("perturbed coefficient: condition (c) with nonzero remainder") {
        Certificate bad = c;
        REQUIRE(!bad.squares.empty());
        bad.squares[0] += Rational(1, 1000) * Polynomial::constant(1);
        Verdict v = verify_certificate(bad, k4);
        CHECK(!v.accepted);
        CHECK(v.failure == VerifyFailure::nonzero_remainder);
        CHECK(!v.remainder.is_zero());
    }

    SECTION("non-affine target: condition (a) only when required") {
        // {0, 1, 3} is the facet set of the triangle {0,1,2} of K_4.
        Certificate chain = chain_certificate(k4, {}, {0, 1, 3});
        CHECK(verify_certificate(chain, k4).accepted);
        Verdict strict = verify_certificate(chain, k4, {.require_affine_target = true});
        CHECK(!strict.accepted);
        CHECK(strict.failure == VerifyFailure::target_not_affine);
    }
}
