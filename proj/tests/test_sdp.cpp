#include <catch2/catch_amalgamated.hpp>

#include "thetacover/linalg.hpp"
#include "thetacover/sdp.hpp"

using namespace thetacover;
using Catch::Matchers::WithinAbs;

namespace {

AffineLmi two_by_two_arrow() {
    // M(x) = [[1, x], [x, 1]]; max x has optimum 1.
    AffineLmi lmi;
    lmi.dim = 2;
    lmi.constant = {{0, 0, 1.0}, {1, 1, 1.0}};
    lmi.coeff = {{{0, 1, 1.0}, {1, 0, 1.0}}};
    return lmi;
}

}

TEST_CASE("engine: 2x2 correlation matrix") {
    AffineLmi lmi = two_by_two_arrow();
    Eigen::VectorXd b(1), x0(1);
    b << 1.0;
    x0 << 0.0;
    EngineResult r = lmi_maximize(lmi, b, x0);
    CHECK(r.status == SolveStatus::optimal);
    CHECK_THAT(r.value, WithinAbs(1.0, 1e-6));
    CHECK(r.min_eigenvalue > -1e-8);

    // Minimize via negation reaches -1 as well.
    Eigen::VectorXd neg = -b;
    EngineResult rn = lmi_maximize(lmi, neg, x0);
    CHECK_THAT(-rn.value, WithinAbs(-1.0, 1e-6));
}

TEST_CASE("engine: diagonal LP box") {
    // max x1 + 2 x2 over 0 <= x <= 1 via slack diagonal.
    AffineLmi lmi;
    lmi.dim = 4;
    lmi.constant = {{1, 1, 1.0}, {3, 3, 1.0}};
    lmi.coeff = {
        {{0, 0, 1.0}, {1, 1, -1.0}},
        {{2, 2, 1.0}, {3, 3, -1.0}},
    };
    Eigen::VectorXd b(2), x0(2);
    b << 1.0, 2.0;
    x0 << 0.5, 0.5;
    SolverOptions opts;
    opts.tol = 1e-9;
    EngineResult r = lmi_maximize(lmi, b, x0, opts);
    CHECK(r.status == SolveStatus::optimal);
    CHECK_THAT(r.value, WithinAbs(3.0, 1e-7));
    CHECK_THAT(r.x[0], WithinAbs(1.0, 1e-6));
    CHECK_THAT(r.x[1], WithinAbs(1.0, 1e-6));
}

TEST_CASE("engine: constrained LP with a fractional optimum") {
    // max x1 + x2 s.t. x >= 0, x1 + 2 x2 <= 1, 2 x1 + x2 <= 1: optimum 2/3.
    AffineLmi lmi;
    lmi.dim = 4;
    lmi.constant = {{2, 2, 1.0}, {3, 3, 1.0}};
    lmi.coeff = {
        {{0, 0, 1.0}, {2, 2, -1.0}, {3, 3, -2.0}},
        {{1, 1, 1.0}, {2, 2, -2.0}, {3, 3, -1.0}},
    };
    Eigen::VectorXd b(2), x0(2);
    b << 1.0, 1.0;
    x0 << 0.2, 0.2;
    SolverOptions opts;
    opts.tol = 1e-9;
    EngineResult r = lmi_maximize(lmi, b, x0, opts);
    CHECK(r.status == SolveStatus::optimal);
    CHECK_THAT(r.value, WithinAbs(2.0 / 3.0, 1e-8));
}

TEST_CASE("engine: determinism") {
    AffineLmi lmi = two_by_two_arrow();
    Eigen::VectorXd b(1), x0(1);
    b << 1.0;
    x0 << 0.25;
    SolverOptions opts;
    opts.verbose = true;
    EngineResult r1 = lmi_maximize(lmi, b, x0, opts);
    EngineResult r2 = lmi_maximize(lmi, b, x0, opts);
    CHECK(r1.value == r2.value);
    CHECK(r1.iterations == r2.iterations);
    CHECK(r1.gap_estimate == r2.gap_estimate);
    REQUIRE(r1.trace.size() == r2.trace.size());
    for (std::size_t t = 0; t < r1.trace.size(); ++t)
        CHECK(r1.trace[t].decrement == r2.trace[t].decrement);
    CHECK(!r1.trace.empty());
}

TEST_CASE("engine: infeasible start and iteration cap are reported") {
    AffineLmi lmi = two_by_two_arrow();
    Eigen::VectorXd b(1), x0(1);
    b << 1.0;
    x0 << 2.0;  // not feasible: matrix indefinite
    EngineResult r = lmi_maximize(lmi, b, x0);
    CHECK(r.status == SolveStatus::infeasible_numerics);

    x0 << 0.0;
    SolverOptions opts;
    opts.max_iter = 2;
    EngineResult capped = lmi_maximize(lmi, b, x0, opts);
    CHECK(capped.status == SolveStatus::max_iterations);
    CHECK(capped.value <= 1.0 + 1e-9);
}

TEST_CASE("engine: dimension mismatch throws") {
    AffineLmi lmi = two_by_two_arrow();
    Eigen::VectorXd b(2), x0(1);
    b << 1.0, 2.0;
    x0 << 0.0;
    CHECK_THROWS_AS(lmi_maximize(lmi, b, x0), std::invalid_argument);
}

TEST_CASE("exact_psd") {
    auto mat = [](std::initializer_list<std::initializer_list<int>> rows) {
        RatMatrix m;
        for (const auto& r : rows) {
            m.emplace_back();
            for (int v : r) m.back().push_back(v);
        }
        return m;
    };
    CHECK(exact_psd(mat({{1, 0}, {0, 1}})));
    CHECK(exact_psd(mat({{0, 0}, {0, 1}})));
    CHECK(exact_psd(mat({{1, 1}, {1, 1}})));          // rank-1
    CHECK(!exact_psd(mat({{1, 2}, {2, 1}})));         // eigenvalue -1
    CHECK(!exact_psd(mat({{0, 1}, {1, 0}})));         // zero pivot, nonzero row
    CHECK(!exact_psd(mat({{-1}})));
    CHECK(exact_psd(mat({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})));
    CHECK(exact_psd(RatMatrix{}));

    // v v^T for a rational vector is PSD.
    std::vector<Rational> v{Rational(1, 2), Rational(-2, 3), Rational(5)};
    RatMatrix outer(3, std::vector<Rational>(3));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) outer[a][b] = v[a] * v[b];
    CHECK(exact_psd(outer));
}

TEST_CASE("rational_rank and IncrementalRank") {
    RatMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(rational_rank(m) == 2);

    IncrementalRank inc(3);
    CHECK(inc.insert({1, 2, 3}));
    CHECK(!inc.insert({2, 4, 6}));
    CHECK(inc.insert({0, 1, 1}));
    CHECK(!inc.insert({1, 3, 4}));
    CHECK(inc.rank() == 2);
}
