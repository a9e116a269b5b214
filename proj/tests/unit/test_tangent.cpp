#include "doctest.h"

#include <cmath>

#include "cxdyn/errors.hpp"
#include "cxdyn/tangent.hpp"

using namespace cxdyn;

TEST_CASE("piecewise density moments") {
    const PiecewiseDensity flat = PiecewiseDensity::constant({0.0, 1.0}, {1.0});
    CHECK(flat.mass() == 1.0);
    CHECK(flat.moment(1) == 0.5);
    CHECK(flat.moment(2) == 1.0 / 3.0);
    CHECK(flat.moment_over(0, 0.25, 0.75) == 0.5);
    CHECK(flat.moment_over(0, -5.0, 0.5) == 0.5); // clipped to the carrier

    const PiecewiseDensity ramp = PiecewiseDensity::linear({0.0, 1.0}, {0.0, 2.0});
    CHECK(ramp.mass() == 1.0);
    CHECK(ramp.moment(1) == 2.0 / 3.0);
    CHECK(ramp.moment(2) == 0.5);
    CHECK(ramp.moment(3) == 0.4);
}

TEST_CASE("density validation") {
    CHECK_THROWS_AS(PiecewiseDensity({{0.0, 0.0, 1.0, 1.0}}), InvalidArgument);
    CHECK_THROWS_AS(PiecewiseDensity({{0.0, 1.0, -1.0, 1.0}}), InvalidArgument);
    CHECK_THROWS_AS(PiecewiseDensity({{0.0, 1.0, 1.0, 1.0}, {0.5, 2.0, 1.0, 1.0}}),
                    InvalidArgument); // overlap
    CHECK_THROWS_AS(PiecewiseDensity::constant({0.0, 1.0}, {1.0, 2.0}), InvalidArgument);
}

TEST_CASE("hybrid measures merge atoms and validate") {
    const HybridMeasure m({Atom{0.5, 1.0}, Atom{0.5, 2.0}, Atom{0.25, 1.0}},
                          PiecewiseDensity());
    REQUIRE(m.atoms().size() == 2);
    CHECK(m.atoms()[0].location == 0.25);
    CHECK(m.atoms()[1].mass == 3.0);
    CHECK(m.total_mass() == 4.0);
    CHECK(m.ball_mass(0.5, 0.25) == 4.0); // closed ball takes the boundary atom
    CHECK(m.ball_mass(0.5, 0.2) == 3.0);

    CHECK_THROWS_AS(HybridMeasure({}, PiecewiseDensity()), InvalidArgument);
    CHECK_THROWS_AS(HybridMeasure({Atom{0.0, 0.0}}, PiecewiseDensity()), InvalidArgument);
}

TEST_CASE("homothety push moves atoms and rescales densities") {
    const HybridMeasure m({Atom{0.75, 2.0}},
                          PiecewiseDensity::constant({0.0, 1.0}, {1.0}));
    const HybridMeasure out = homothety_push(m, 0.5, 0.5);
    CHECK(out.atoms()[0].location == 0.5);
    CHECK(out.atoms()[0].mass == 2.0);
    REQUIRE(out.density().pieces().size() == 1);
    CHECK(out.density().pieces()[0].lo == -1.0);
    CHECK(out.density().pieces()[0].hi == 1.0);
    CHECK(out.density().pieces()[0].v_lo == 0.5);
    CHECK(out.density().pieces()[0].v_hi == 0.5);
    CHECK(out.total_mass() == m.total_mass());
    CHECK_THROWS_AS(homothety_push(m, 0.0, 0.0), InvalidArgument);
}

TEST_CASE("restriction keeps the closed window") {
    const HybridMeasure m({Atom{-1.0, 1.0}, Atom{2.0, 1.0}},
                          PiecewiseDensity::constant({-2.0, 2.0}, {1.0}));
    const HybridMeasure cut = restrict_to(m, -1.0, 1.0);
    REQUIRE(cut.atoms().size() == 1);
    CHECK(cut.atoms()[0].location == -1.0);
    CHECK(cut.density().mass() == 2.0);
    CHECK(cut.total_mass() == 3.0);
    CHECK_THROWS_AS(restrict_to(m, 5.0, 6.0), InvalidArgument);
}

TEST_CASE("dyadic blow-up schedule") {
    const BlowupNet net = dyadic_net(0.5, 3);
    CHECK(net.center == 0.5);
    CHECK(net.radii == std::vector<double>{0.5, 0.25, 0.125});
}

TEST_CASE("uniform mass at an interior point blows up to a constant net") {
    const HybridMeasure leb({}, PiecewiseDensity::constant({0.0, 1.0}, {1.0}));
    const TangentNetResult net = tangent_net(leb, 0.5, 10);
    REQUIRE(net.rows.size() == 10);
    for (const TangentNetRow& row : net.rows) {
        CHECK(row.moments[0] == 1.0);
        CHECK(row.moments[1] == 0.0);
        CHECK(row.moments[2] == 1.0 / 3.0);
        CHECK(row.moments[3] == 0.0);
        CHECK(row.increment == 0.0);
    }
    REQUIRE(net.final_measure.density().pieces().size() == 1);
    CHECK(net.final_measure.density().pieces()[0].v_lo == 0.5);
    CHECK(net.final_measure.density().pieces()[0].v_hi == 0.5);
}

TEST_CASE("atom at the center blows up to the unit point mass at zero") {
    const HybridMeasure dir({Atom{0.5, 1.0}}, PiecewiseDensity());
    const TangentNetResult net = tangent_net(dir, 0.5, 8);
    for (const TangentNetRow& row : net.rows) {
        CHECK(row.moments[0] == 1.0);
        CHECK(row.moments[1] == 0.0);
        CHECK(row.increment == 0.0);
    }
    REQUIRE(net.final_measure.atoms().size() == 1);
    CHECK(net.final_measure.atoms()[0].location == 0.0);
    CHECK(net.final_measure.atoms()[0].mass == 1.0);
    CHECK(net.final_measure.density().empty());
}

TEST_CASE("one-sided linear density is self-similar at the boundary") {
    // density 2y on [0, 1], blown up at 0: every scale gives 2u du on [0, 1]
    const HybridMeasure ramp({}, PiecewiseDensity::linear({0.0, 1.0}, {0.0, 2.0}));
    const TangentNetResult net = tangent_net(ramp, 0.0, 22);
    for (const TangentNetRow& row : net.rows) {
        CHECK(row.moments[0] == 1.0);
        CHECK(row.moments[1] == 2.0 / 3.0);
        CHECK(row.moments[2] == 0.5);
        CHECK(row.increment == 0.0);
    }
    CHECK(net.max_tail_increment(20) == 0.0);
}

TEST_CASE("net closure under scaling and zooming") {
    const HybridMeasure leb({}, PiecewiseDensity::constant({0.0, 1.0}, {1.0}));
    const TangentNetResult net = tangent_net(leb, 0.5, 6);
    const TanClosureReport rep = tan_closure_check(net, 2.0, 0.5);
    CHECK(rep.scaled_valid);
    CHECK(rep.rescaled_valid);
    CHECK(rep.scaled_moment_deviation <= 1e-12);
    CHECK(rep.rescaled_moment_deviation <= 1e-12);
    REQUIRE(rep.scaled_normalizers.size() == net.rows.size());
    for (std::size_t i = 0; i < net.rows.size(); ++i) {
        CHECK(rep.scaled_normalizers[i] == 2.0 * net.rows[i].normalizer);
        CHECK(rep.rescaled_radii[i] == 0.5 * net.rows[i].radius);
    }
    CHECK(rep.scaled.total_mass() == 2.0 * net.final_measure.total_mass());
}

TEST_CASE("degenerate centers are rejected") {
    const HybridMeasure far({Atom{2.0, 1.0}}, PiecewiseDensity());
    CHECK_THROWS_AS(tangent_net(far, 0.0, 3), DegenerateCenterError);
    CHECK_THROWS_AS(tangent_net(far, 2.0, 0), InvalidArgument);
    BlowupNet bad{0.0, {0.25, 0.5}};
    CHECK_THROWS_AS(tangent_net(far, bad), InvalidArgument);
}

TEST_CASE("interval model measures route through breakpoints") {
    const IntervalModel model({0.0, 0.5, 1.0});
    const HybridMeasure m = HybridMeasure::on_unit_interval(model, {1.0, 3.0}, {});
    CHECK(m.total_mass() == 2.0);
    CHECK_THROWS_AS(HybridMeasure::on_unit_interval(model, {1.0, 1.0}, {Atom{1.5, 1.0}}),
                    InvalidArgument);
}
