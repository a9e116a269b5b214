#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

#include "cxdyn/errors.hpp"
#include "cxdyn/space.hpp"

using namespace cxdyn;

TEST_CASE("circle metric on four points") {
    const FiniteSpace sp(4);
    CHECK(sp.chord(0, 2) == 2);
    CHECK(sp.chord(0, 3) == 1);
    CHECK(sp.chord(3, 0) == 1);
    CHECK(sp.metric(0, 2) == 0.5);
    CHECK(sp.metric(0, 3) == 0.25);
    CHECK(sp.metric(1, 1) == 0.0);
}

TEST_CASE("closed balls use exact dyadic comparison") {
    const FiniteSpace sp(4);
    CHECK(sp.ball(0, 0.25) == std::vector<Point>{0, 1, 3});
    CHECK(sp.ball(0, 0.2499999999999999) == std::vector<Point>{0});
    CHECK(sp.ball(0, 0.5) == std::vector<Point>{0, 1, 2, 3});
    CHECK(sp.ball(2, 0.0) == std::vector<Point>{2});
    CHECK(sp.ball(0, -1.0).empty());
}

// expected values computed with exact rational arithmetic, reading the double
// argument as the binary fraction it stores
TEST_CASE("fraction_le frozen table") {
    CHECK(fraction_le(1, 4, 0.25));
    CHECK_FALSE(fraction_le(1, 4, 0.2499999999999999));
    CHECK_FALSE(fraction_le(1, 3, 1.0 / 3.0));  // double(1/3) < 1/3
    CHECK_FALSE(fraction_le(2, 3, 2.0 / 3.0));
    CHECK(fraction_le(1, 10, 0.1)); // double(0.1) > 1/10
    CHECK_FALSE(fraction_le(1, 7, 1.0 / 7.0));
    CHECK_FALSE(fraction_le(3, 7, 3.0 / 7.0));
    CHECK(fraction_le(0, 5, 0.0));
    CHECK(fraction_le(0, 5, -0.0));
    CHECK(fraction_le(5, 5, 1.0));
    CHECK_FALSE(fraction_le(5, 5, 0.9999999999999999));
    CHECK_FALSE(fraction_le(1, 1048575, std::ldexp(1.0, -54)));
    CHECK(fraction_le(1, 2, 0.5));
    CHECK_FALSE(fraction_le(1, 2, 0.49999999999999994));
    CHECK(fraction_le(7, 8, 0.875));
    CHECK(fraction_le(1048574, 1048575, 1.0 - std::ldexp(1.0, -21)));
    CHECK_FALSE(fraction_le(1, 2, std::numeric_limits<double>::quiet_NaN()));
    CHECK(fraction_le(1, 2, std::numeric_limits<double>::infinity()));
}

TEST_CASE("triangle inequality holds exhaustively on small circles") {
    // exact at the hop level; the double-valued metric only adds the rounding
    // of one division per term (2/15 + 4/15 lands one ulp under 6/15), so the
    // float-side check allows a single ulp at magnitude 1
    constexpr double slack = 2.3e-16;
    for (Point n = 1; n <= 16; ++n) {
        const FiniteSpace sp(n);
        for (Point i = 0; i < n; ++i)
            for (Point j = 0; j < n; ++j) {
                CHECK(sp.chord(i, j) == sp.chord(j, i));
                CHECK(sp.metric(i, j) == sp.metric(j, i));
                for (Point k = 0; k < n; ++k) {
                    CHECK(sp.chord(i, k) <= sp.chord(i, j) + sp.chord(j, k));
                    CHECK(sp.metric(i, k) <= sp.metric(i, j) + sp.metric(j, k) + slack);
                }
            }
    }
}

TEST_CASE("space construction guards") {
    CHECK_THROWS_AS(FiniteSpace(0), InvalidArgument);
    CHECK_THROWS_AS(FiniteSpace(-3), InvalidArgument);
    CHECK_THROWS_AS(FiniteSpace((1 << 20) + 1), InvalidArgument);
    CHECK(FiniteSpace(1 << 20).size() == 1 << 20);
}

TEST_CASE("interval model validates breakpoints") {
    const IntervalModel m({0.0, 0.25, 1.0});
    CHECK(m.piece_count() == 2);
    CHECK_THROWS_AS(IntervalModel({0.0}), InvalidArgument);
    CHECK_THROWS_AS(IntervalModel({0.0, 0.5, 0.5, 1.0}), InvalidArgument);
    CHECK_THROWS_AS(IntervalModel({0.1, 1.0}), InvalidArgument);
    CHECK_THROWS_AS(IntervalModel({0.0, 0.9}), InvalidArgument);
}
