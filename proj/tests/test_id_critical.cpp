#include <doctest.h>

#include "factorlab/generators.hpp"
#include "factorlab/id_critical.hpp"

using namespace factorlab;

TEST_CASE("frozen verdicts") {
    // K_2 is [1,1]-covered, but deleting one vertex leaves K_1 with no factor
    IdCriticalVerdict k2 = is_id_critical_covered(complete(2), FactorBounds(1, 1));
    CHECK_FALSE(k2.holds);
    CHECK(k2.failing_set->bits == 0b01);

    // C_5 fails already at I = {}
    IdCriticalVerdict c5 = is_id_critical_covered(cycle(5), FactorBounds(1, 1));
    CHECK_FALSE(c5.holds);
    CHECK(c5.failing_set->bits == 0);

    CHECK(is_id_critical_covered(complete(7), FactorBounds(2, 2)).holds);
}

TEST_CASE("excluding the empty set is a separate reading") {
    // C_5 itself is not covered, but that only shows up through I = {}
    // removing any vertex leaves P_4, also not [1,1]-covered
    IdCriticalVerdict v = is_id_critical_covered(cycle(5), FactorBounds(1, 1), false);
    CHECK_FALSE(v.holds);
    CHECK(v.failing_set->bits == 0b00001);

    // C_4 is [2,2]-covered (all-ones factor), every vertex deletion leaves P_3
    // which is not; with I = {} excluded the first failure is a singleton
    IdCriticalVerdict c4 = is_id_critical_covered(cycle(4), FactorBounds(2, 2), false);
    CHECK_FALSE(c4.holds);
    CHECK(c4.failing_set->bits == 0b0001);
    CHECK(is_fractional_ab_covered(cycle(4), FactorBounds(2, 2)).covered);
}

TEST_CASE("witnesses carry original labels and re-validate") {
    // C_6 at (2,2): covered itself, fails after deleting an independent set
    Graph c6 = cycle(6);
    IdCriticalVerdict v = is_id_critical_covered(c6, FactorBounds(2, 2));
    REQUIRE_FALSE(v.holds);
    VertexSet i = *v.failing_set;
    CHECK(is_independent(c6, i));

    DeletionResult res = c6.delete_vertices(i);
    CoveredVerdict again = is_fractional_ab_covered(res.graph, FactorBounds(2, 2));
    REQUIRE_FALSE(again.covered);
    CHECK(res.to_old(again.witness->s).bits == v.inner->witness->s.bits);
    CHECK(res.to_old(again.witness->t).bits == v.inner->witness->t.bits);
    CHECK(again.witness->epsilon == v.inner->witness->epsilon);
    CHECK(again.witness->delta == v.inner->witness->delta);
    // translated sets avoid the deleted vertices
    CHECK((v.inner->witness->s.bits & i.bits) == 0);
    CHECK((v.inner->witness->t.bits & i.bits) == 0);
}

TEST_CASE("holds implies covered for G and for every G - v") {
    Graph k7 = complete(7);
    REQUIRE(is_id_critical_covered(k7, FactorBounds(2, 2)).holds);
    CHECK(is_fractional_ab_covered(k7, FactorBounds(2, 2)).covered);
    for (int v = 0; v < 7; ++v)
        CHECK(is_fractional_ab_covered(k7.delete_vertices({Mask(1) << v, 7}).graph,
                                       FactorBounds(2, 2))
                  .covered);
}

TEST_CASE("profile groups pass/fail by |I|") {
    IdCriticalProfile k7 = id_critical_profile(complete(7), FactorBounds(2, 2));
    REQUIRE(k7.by_size.size() == 2);
    CHECK(k7.by_size[0] == std::pair<int, int>{1, 0});
    CHECK(k7.by_size[1] == std::pair<int, int>{7, 0});
    CHECK(k7.total_failures() == 0);

    IdCriticalProfile c5 = id_critical_profile(cycle(5), FactorBounds(1, 1));
    CHECK(c5.by_size[0] == std::pair<int, int>{0, 1});

    IdCriticalProfile p3 = id_critical_profile(path(3), FactorBounds(1, 1));
    CHECK(p3.by_size[0] == std::pair<int, int>{0, 1});
}

TEST_CASE("profile failure count matches the early-exit verdict") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = random_gnp(7, Rational(3, 5), seed);
        IdCriticalVerdict v = is_id_critical_covered(g, FactorBounds(1, 2));
        IdCriticalProfile p = id_critical_profile(g, FactorBounds(1, 2));
        CHECK(v.holds == (p.total_failures() == 0));
    }
}
