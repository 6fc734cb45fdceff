#include <doctest.h>

#include "factorlab/fractional.hpp"
#include "factorlab/generators.hpp"

using namespace factorlab;

TEST_CASE("FactorBounds invariant") {
    CHECK_THROWS_AS(FactorBounds(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(FactorBounds(-1, 2), std::invalid_argument);
    CHECK_NOTHROW(FactorBounds(0, 0));
}

TEST_CASE("tee_set") {
    Graph c4 = cycle(4);
    CHECK(tee_set(c4, {0, 4}, 1).bits == 0);          // all degrees 2
    CHECK(tee_set(c4, {0b0001, 4}, 1).bits == 0b1010);  // path endpoints 1,3
    CHECK(tee_set(c4, {0, 4}, 2).bits == 0b1111);     // a >= max degree
}

TEST_CASE("epsilon: the three cases") {
    CHECK(epsilon(complete(4), {0b0011, 4}, 1) == 2);
    CHECK(epsilon(complete(4), {0b0011, 4}, 3) == 2);
    CHECK(epsilon(cycle(4), {0, 4}, 1) == 0);
    CHECK(epsilon(complete(5), {0, 5}, 2) == 0);
    // S={0} independent, edge 0-1 with d_{G-S}(1) = 1 = a
    CHECK(epsilon(cycle(4), {0b0001, 4}, 1) == 1);
    // S={0} in C_5, a=0: T empty, but 0 has neighbors outside S u T
    CHECK(epsilon(cycle(5), {0b00001, 5}, 0) == 1);
}

TEST_CASE("epsilon(S) <= min(2, |S|)") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_gnp(6, Rational(1, 2), seed);
        for (Mask s = 0; s <= g.full_mask(); ++s) {
            for (int a = 0; a <= 3; ++a) {
                int eps = epsilon(g, {s, 6}, a);
                CHECK(eps <= 2);
                CHECK(eps <= std::popcount(s));
            }
            if (s == g.full_mask()) break;
        }
    }
}

TEST_CASE("delta_st") {
    Graph c4 = cycle(4);
    CHECK(delta_st(c4, {0b0001, 4}, FactorBounds(1, 1)) == 1);
    CHECK(delta_st(c4, {0, 4}, FactorBounds(1, 1)) == 0);
    CHECK(delta_st(Graph::from_edge_list(3, {}), {0, 3}, FactorBounds(1, 2)) == -3);
}

TEST_CASE("structural covered criterion: frozen verdicts") {
    CHECK(is_fractional_ab_covered(cycle(4), FactorBounds(1, 1)).covered);
    CHECK(is_fractional_ab_covered(complete(4), FactorBounds(1, 1)).covered);

    CoveredVerdict p3 = is_fractional_ab_covered(path(3), FactorBounds(1, 1));
    CHECK_FALSE(p3.covered);
    REQUIRE(p3.witness);

    CoveredVerdict c5 = is_fractional_ab_covered(cycle(5), FactorBounds(1, 1));
    CHECK_FALSE(c5.covered);
}

TEST_CASE("not-covered witnesses re-validate") {
    std::vector<std::pair<Graph, FactorBounds>> cases = {
        {path(3), FactorBounds(1, 1)},
        {cycle(5), FactorBounds(1, 1)},
        {path(7), FactorBounds(2, 2)},
        {Graph::from_edge_list(4, {}), FactorBounds(1, 2)},
    };
    for (auto& [g, bounds] : cases) {
        CoveredVerdict v = is_fractional_ab_covered(g, bounds);
        REQUIRE_FALSE(v.covered);
        const CoveredWitness& w = *v.witness;
        CHECK(tee_set(g, w.s, bounds.a).bits == w.t.bits);
        CHECK(epsilon(g, w.s, bounds.a) == w.epsilon);
        CHECK(delta_st(g, w.s, bounds) == w.delta);
        CHECK(w.delta <= w.epsilon - 1);
    }
}

TEST_CASE("half-integral factor search") {
    auto k2 = fractional_factor_exists(complete(2), FactorBounds(1, 1));
    REQUIRE(k2);
    CHECK(k2->weights == std::vector<Rational>{Rational(1)});

    auto k3 = fractional_factor_exists(complete(3), FactorBounds(1, 1));
    REQUIRE(k3);
    CHECK(k3->weights == std::vector<Rational>(3, Rational(1, 2)));
    CHECK(k3->validates(complete(3), FactorBounds(1, 1)));

    CHECK_FALSE(fractional_factor_exists(path(3), FactorBounds(1, 1)));
}

TEST_CASE("forced edges are pinned at weight 1") {
    Graph c4 = cycle(4);
    auto h = fractional_factor_exists(c4, FactorBounds(1, 1), {0});
    REQUIRE(h);
    CHECK(h->weights[0] == Rational(1));
    CHECK(h->validates(c4, FactorBounds(1, 1)));
    CHECK_THROWS_AS(fractional_factor_exists(c4, FactorBounds(1, 1), {9}),
                    std::invalid_argument);
}

TEST_CASE("free-edge cap raises a capacity error") {
    CHECK_THROWS_AS(fractional_factor_exists(complete(8), FactorBounds(2, 3)),
                    capacity_error);
    CHECK_THROWS_AS(covered_oracle(complete(8), FactorBounds(2, 3)), capacity_error);
    // a higher cap lifts it
    CHECK(fractional_factor_exists(complete(8), FactorBounds(2, 3), {}, 28));
}

TEST_CASE("covered oracle: frozen verdicts") {
    CHECK(covered_oracle(cycle(4), FactorBounds(1, 1)).covered);
    CHECK(covered_oracle(complete(4), FactorBounds(1, 1)).covered);

    OracleVerdict c5 = covered_oracle(cycle(5), FactorBounds(1, 1));
    CHECK_FALSE(c5.covered);
    CHECK(c5.failing_edge == std::pair<int, int>{0, 1});

    OracleVerdict p3 = covered_oracle(path(3), FactorBounds(1, 1));
    CHECK_FALSE(p3.covered);
}

TEST_CASE("edgeless and a=b=0 degenerate cases") {
    Graph e3 = Graph::from_edge_list(3, {});
    Graph e0 = Graph::from_edge_list(0, {});

    // a = 0: the all-zero factor exists, and there is no edge to cover
    CHECK(covered_oracle(e3, FactorBounds(0, 2)).covered);
    CHECK(is_fractional_ab_covered(e3, FactorBounds(0, 2)).covered);
    CHECK(covered_oracle(e0, FactorBounds(1, 1)).covered);
    CHECK(is_fractional_ab_covered(e0, FactorBounds(1, 1)).covered);

    // a > 0 with no edges: no factor, not covered
    CHECK_FALSE(covered_oracle(e3, FactorBounds(1, 2)).covered);
    CHECK_FALSE(is_fractional_ab_covered(e3, FactorBounds(1, 2)).covered);

    // a = b = 0: covered iff E is empty
    CHECK(covered_oracle(e3, FactorBounds(0, 0)).covered);
    CHECK(is_fractional_ab_covered(e3, FactorBounds(0, 0)).covered);
    CHECK_FALSE(covered_oracle(complete(3), FactorBounds(0, 0)).covered);
    CHECK_FALSE(is_fractional_ab_covered(complete(3), FactorBounds(0, 0)).covered);
}

TEST_CASE("criterion agrees with the oracle on all graphs with n <= 5") {
    std::vector<FactorBounds> bounds = {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}};
    for (int n = 0; n <= 5; ++n) {
        int npairs = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
        for (Mask em = 0; em < (Mask(1) << npairs); ++em) {
            std::vector<std::pair<int, int>> e;
            for (int i = 0; i < npairs; ++i)
                if ((em >> i) & 1) e.push_back(all[i]);
            Graph g = Graph::from_edge_list(n, e);
            for (FactorBounds b : bounds)
                CHECK(is_fractional_ab_covered(g, b).covered == covered_oracle(g, b).covered);
        }
    }
}

TEST_CASE("covered at (a,b) implies covered at (a,b+1)") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = random_gnp(6, Rational(1 + seed % 8, 10), seed);
        for (int a = 0; a <= 2; ++a)
            for (int b = a; b <= 3; ++b)
                if (is_fractional_ab_covered(g, FactorBounds(a, b)).covered)
                    CHECK(is_fractional_ab_covered(g, FactorBounds(a, b + 1)).covered);
    }
}
