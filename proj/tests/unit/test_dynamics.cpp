#include "doctest.h"

#include <vector>

#include "cxdyn/dynamics.hpp"
#include "cxdyn/errors.hpp"

using namespace cxdyn;

TEST_CASE("cycle structure of a rotation and of a collapse") {
    const FiniteSpace sp(4);
    const CycleStructure rot = cycle_structure(Transformation::rotation(sp, 1));
    REQUIRE(rot.cycles.size() == 1);
    CHECK(rot.cycles[0] == std::vector<Point>{0, 1, 2, 3});
    CHECK(rot.on_cycle == std::vector<bool>{true, true, true, true});

    const CycleStructure col = cycle_structure(Transformation(sp, {0, 0, 2, 2}));
    REQUIRE(col.cycles.size() == 2);
    CHECK(col.cycles[0] == std::vector<Point>{0});
    CHECK(col.cycles[1] == std::vector<Point>{2});
    CHECK(col.entry_cycle == std::vector<std::size_t>{0, 0, 1, 1});
    CHECK(col.on_cycle == std::vector<bool>{true, false, true, false});
}

TEST_CASE("invariance is cycle-constancy for bijections") {
    const FiniteSpace sp(4);
    const Transformation rot2 = Transformation::rotation(sp, 2);
    // rot2 has cycles {0, 2} and {1, 3}
    const Measure flat(sp, {0.5, 2.0, 0.5, 2.0});
    CHECK(is_invariant(flat, rot2));
    CHECK(cycle_constant(flat, rot2));

    const Measure skew(sp, {0.5, 2.0, 1.0, 2.0});
    CHECK_FALSE(is_invariant(skew, rot2));
    CHECK_FALSE(cycle_constant(skew, rot2));

    CHECK_THROWS_AS(cycle_constant(flat, Transformation(sp, {0, 0, 2, 2})),
                    PreconditionError);
}

TEST_CASE("ergodicity needs exactly one charged cycle") {
    const FiniteSpace sp(4);
    const Transformation rot2 = Transformation::rotation(sp, 2);
    CHECK(is_ergodic(Measure(sp, {1.0, 0.0, 1.0, 0.0}), rot2));
    CHECK_FALSE(is_ergodic(Measure(sp, {1.0, 1.0, 1.0, 1.0}), rot2));

    // preconditions: bijective map, invariant measure
    CHECK_THROWS_AS(is_ergodic(Measure(sp, {1.0, 2.0, 1.0, 1.0}), rot2),
                    PreconditionError);
    CHECK_THROWS_AS(is_ergodic(Measure::uniform(sp), Transformation(sp, {0, 0, 2, 2})),
                    PreconditionError);
}

TEST_CASE("ergodic decomposition worked example") {
    const FiniteSpace sp(4);
    const Transformation rot2 = Transformation::rotation(sp, 2);
    const Measure mu(sp, {3.0, 1.0, 3.0, 1.0});

    const ErgodicDecomposition dec = ergodic_decompose(mu, rot2);
    REQUIRE(dec.components.size() == 2);
    CHECK(dec.components[0].weights() == std::vector<double>{0.5, 0.0, 0.5, 0.0});
    CHECK(dec.components[1].weights() == std::vector<double>{0.0, 0.5, 0.0, 0.5});
    CHECK(dec.weights == std::vector<double>{0.75, 0.25});
    CHECK(decomposition_residual(dec, mu) == 0.0);

    // zero-mass cycles are skipped
    const ErgodicDecomposition one = ergodic_decompose(Measure(sp, {0.0, 2.0, 0.0, 2.0}), rot2);
    CHECK(one.components.size() == 1);
    CHECK(one.weights[0] == 1.0);
}

TEST_CASE("orbit averages") {
    const FiniteSpace sp(2);
    const Func h(sp, {1.0, 3.0});
    CHECK(birkhoff_average(h, Transformation::rotation(sp, 1), 0, 2) == 2.0);
    CHECK(birkhoff_average(h, Transformation::identity(sp), 1, 5) == 3.0);
    CHECK_THROWS_AS(birkhoff_average(h, Transformation::identity(sp), 0, 0),
                    InvalidArgument);
}

TEST_CASE("point mass averages to cycle-uniform exactly at the period") {
    const FiniteSpace sp(4);
    const CesaroReport rep =
        invariant_limit_check(Measure::dirac(sp, 1), Transformation::rotation(sp, 1), 4);
    REQUIRE(rep.rows.size() == 4);
    CHECK(rep.rows[3].T == 4);
    CHECK(rep.rows[3].distance == 0.0);
    CHECK(rep.exact_at_final);
    CHECK(rep.limit == Measure::uniform(sp));
    CHECK(rep.limit_invariant);
    CHECK(rep.limit_in_ergodic_hull);
    CHECK(rep.hull_residual == 0.0);
}

TEST_CASE("limits exist for non-bijective maps through entry cycles") {
    const FiniteSpace sp(4);
    const Transformation col(sp, {0, 0, 2, 2});
    const CesaroReport rep = invariant_limit_check(Measure::uniform(sp), col, 8);
    CHECK(rep.limit.weights() == std::vector<double>{0.5, 0.0, 0.5, 0.0});
    CHECK(rep.limit_invariant);
    CHECK(rep.limit_in_ergodic_hull);
}

TEST_CASE("l1 distance") {
    const FiniteSpace sp(2);
    CHECK(l1_distance(Measure(sp, {1.0, 0.5}), Measure(sp, {0.25, 2.0})) == 2.25);
    CHECK_THROWS_AS(l1_distance(Measure(sp, {1.0, 0.5}), Measure::uniform(FiniteSpace(3))),
                    InvalidArgument);
}
