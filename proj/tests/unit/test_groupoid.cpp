#include "doctest.h"

#include <vector>

#include "cxdyn/errors.hpp"
#include "cxdyn/groupoid.hpp"

using namespace cxdyn;

namespace {

GroupoidInstance small_instance() {
    const FiniteSpace sp(4);
    GroupoidConfig cfg{sp, 0, {}, {}, 2};
    for (double c : {1.0, -1.0, 2.0, 0.5})
        cfg.units.push_back(Func::constant(sp, c));
    cfg.ideal_seeds.push_back(Func(sp, {0.0, 1.0, 2.0, 1.0}));
    cfg.ideal_seeds.push_back(Func(sp, {0.0, 1.0, 0.0, 1.0}));
    return GroupoidInstance(cfg);
}

} // namespace

TEST_CASE("arrow composition, units and inverses") {
    const FiniteSpace sp(4);
    const MaximalIdeal m(sp, 0);
    const Func f(sp, {0.0, 1.0, 2.0, 4.0});
    const UnitElement g1(Func::constant(sp, 2.0));
    const UnitElement g2(Func::constant(sp, -0.5));

    const Arrow a(m, f, g1);
    const Arrow b(m, a.target_func(), g2);

    CHECK(source(a) == f);
    CHECK(target(a) == Func(sp, {0.0, 2.0, 4.0, 8.0}));

    const Arrow ab = compose(a, b);
    CHECK(source(ab) == f);
    CHECK(target(ab) == target(b));
    CHECK(ab.unit() == g1 * g2);

    CHECK(compose(a, inverse(a)) == unit_arrow(m, f));
    CHECK(compose(inverse(a), a) == unit_arrow(m, a.target_func()));
    CHECK(inverse(inverse(a)) == a);
    CHECK(is_unit_arrow(unit_arrow(m, f)));
    CHECK_FALSE(is_unit_arrow(a));

    // mismatched middle object
    const Arrow c(m, 2.0 * a.target_func(), g2);
    CHECK_FALSE(composable(a, c));
    CHECK_THROWS_AS(compose(a, c), ComposabilityError);

    // arrows need sources inside the ideal
    CHECK_THROWS_AS(Arrow(m, Func::constant(sp, 1.0), g1), InvalidArgument);
}

TEST_CASE("cocycle residual vanishes on the zero set, 0.25 off it") {
    const FiniteSpace two(2);
    const Func f(two, {0.0, 1.0});
    const UnitElement one(Func::constant(two, 1.0));
    const CocycleResidualReport rep = cocycle_residual(f, one, one);
    CHECK(rep.residual.value(0) == 0.0);
    CHECK(rep.residual.value(1) == 0.25);
    CHECK(rep.max_on_zero_set == 0.0);
    CHECK(rep.max_off_zero_set == 0.25);
}

TEST_CASE("cocycle along an arrow matches tau") {
    const FiniteSpace sp(3);
    const MaximalIdeal m(sp, 0);
    const Func f(sp, {0.0, 3.0, 1.0});
    const UnitElement g(Func::constant(sp, 1.0));
    const Func rho = cocycle(Arrow(m, f, g));
    CHECK(rho.value(0) == 1.0);
    CHECK(rho.value(1) == 0.25);
    CHECK(rho.value(2) == 0.5);
}

TEST_CASE("instance closure and fibres") {
    const GroupoidInstance inst = small_instance();
    CHECK(inst.unit_member(Func::constant(inst.space(), 1.0)));
    CHECK(inst.units().size() == 4);
    for (std::size_t i = 0; i < inst.units().size(); ++i) {
        const std::size_t j = inst.unit_inverse_index(i);
        CHECK(inst.units()[i] * inst.units()[j] == UnitElement::identity(inst.space()));
    }
    for (const Func& f : inst.ideal_sample())
        CHECK(inst.ideal().contains(f));

    const Func& f = inst.ideal_sample().front();
    const std::vector<Arrow> fibre = t_fibre(inst, f);
    REQUIRE(fibre.size() == inst.units().size());
    for (const Arrow& a : fibre)
        CHECK(a.target_func() == f);
}

TEST_CASE("fibre translation is quasi-invariant atom by atom") {
    const GroupoidInstance inst = small_instance();
    const Func& f = inst.ideal_sample().front();
    const std::vector<double> weights = {1.0, 0.0, 2.0, 0.5};

    const Arrow a(inst.ideal(), f, inst.units()[3]); // translate by the constant 2
    const FibreTranslationReport rep = quasi_invariance_check(inst, f, weights, a);
    CHECK(rep.lands_in_target_fibre);
    CHECK(rep.mass_preserved);
    CHECK(rep.multiset_preserved);
    CHECK(rep.null_atoms_correspond);
    CHECK(rep.pass());
}

TEST_CASE("symmetric weightings are the inversion-closed null sets") {
    const GroupoidInstance inst = small_instance();
    // units sorted ascending by value: -1, 0.5, 1, 2; the 0.5 <-> 2 pair is
    // the only one split by inversion
    CHECK(is_symmetric_weighting(inst, {1.0, 1.0, 1.0, 1.0}));
    CHECK(is_symmetric_weighting(inst, {0.0, 1.0, 1.0, 1.0}));

    std::vector<double> w = {1.0, 1.0, 1.0, 1.0};
    w[inst.unit_inverse_index(1)] = 0.0; // kill 2 but not 0.5
    CHECK_FALSE(is_symmetric_weighting(inst, w));
}

TEST_CASE("fibre measures validate their weights") {
    const GroupoidInstance inst = small_instance();
    const Func& f = inst.ideal_sample().front();
    CHECK_THROWS_AS(product_fibre_measure(inst, f, {1.0}), InvalidArgument);
    CHECK_THROWS_AS(product_fibre_measure(inst, f, {0.0, 0.0, 0.0, 0.0}),
                    InvalidArgument);
    CHECK_THROWS_AS(product_fibre_measure(inst, f, {1.0, -1.0, 1.0, 1.0}),
                    InvalidArgument);
    const FibreMeasure fm = product_fibre_measure(inst, f, {1.0, 0.0, 2.0, 0.5});
    CHECK(fm.total_mass() == 3.5);
    CHECK(fm.null_atoms() == std::vector<std::size_t>{1});
}

TEST_CASE("instance construction guards") {
    const FiniteSpace sp(4);
    GroupoidConfig cfg{sp, 0, {Func::constant(sp, 1.0)}, {Func(sp, {1.0, 1.0, 1.0, 1.0})}, 1};
    CHECK_THROWS_AS(GroupoidInstance{cfg}, InvalidArgument); // seed misses the ideal

    GroupoidConfig cfg2{sp, 0, {Func(sp, {1.0, 0.0, 1.0, 1.0})}, {Func(sp, {0.0, 1.0, 1.0, 1.0})}, 1};
    CHECK_THROWS_AS(GroupoidInstance{cfg2}, InvalidArgument); // unit vanishes
}
