// Acceptance gate: eight criteria, one line each, nonzero exit on any failure.
// Tolerances are pinned here and do not bend to configuration.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cxdyn/action.hpp"
#include "cxdyn/algebra.hpp"
#include "cxdyn/config.hpp"
#include "cxdyn/dynamics.hpp"
#include "cxdyn/errors.hpp"
#include "cxdyn/groupoid.hpp"
#include "cxdyn/measure.hpp"
#include "cxdyn/orbits.hpp"
#include "cxdyn/report.hpp"
#include "cxdyn/space.hpp"
#include "cxdyn/suites.hpp"
#include "cxdyn/tangent.hpp"

using namespace cxdyn;

namespace {

constexpr double kTauTol = 1e-15;
constexpr double kSumTol = 1e-12;
constexpr double kNetTol = 1e-6;

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
    double seconds = 0.0;
};

// dyadic palettes keep products, inverses and small sums exact
constexpr double kFuncVals[] = {0.0, 0.0, 0.0, 1.0, -1.0, 2.0, -2.0, 0.5, -0.5, 3.0, 4.0};
constexpr double kUnitVals[] = {1.0, -1.0, 2.0, -2.0, 0.5, -0.5, 4.0, 0.25};
constexpr double kWeightVals[] = {0.0, 0.0, 1.0, 2.0, 0.5, 0.25, 3.0, 1.5};

template <std::size_t N>
double draw(std::mt19937_64& rng, const double (&vals)[N]) {
    return vals[rng() % N];
}

Func draw_func(std::mt19937_64& rng, const FiniteSpace& sp) {
    std::vector<double> v(static_cast<std::size_t>(sp.size()));
    for (double& x : v)
        x = draw(rng, kFuncVals);
    return Func(sp, std::move(v));
}

Func draw_unit(std::mt19937_64& rng, const FiniteSpace& sp) {
    std::vector<double> v(static_cast<std::size_t>(sp.size()));
    for (double& x : v)
        x = draw(rng, kUnitVals);
    return Func(sp, std::move(v));
}

Measure draw_measure(std::mt19937_64& rng, const FiniteSpace& sp) {
    std::vector<double> w(static_cast<std::size_t>(sp.size()));
    bool positive = false;
    for (double& x : w) {
        x = draw(rng, kWeightVals);
        positive = positive || x > 0.0;
    }
    if (!positive)
        w[rng() % w.size()] = 1.0;
    return Measure(sp, std::move(w));
}

Transformation draw_permutation(std::mt19937_64& rng, const FiniteSpace& sp) {
    std::vector<Point> m(static_cast<std::size_t>(sp.size()));
    for (Point x = 0; x < sp.size(); ++x)
        m[static_cast<std::size_t>(x)] = x;
    for (std::size_t i = m.size(); i > 1; --i)
        std::swap(m[i - 1], m[rng() % i]);
    return Transformation(sp, std::move(m));
}

// 1: zero-set lattice identities, exact, 1000 random pairs on n <= 32
Outcome criterion_1() {
    std::mt19937_64 rng(101);
    int fails = 0;
    for (int t = 0; t < 1000; ++t) {
        const FiniteSpace sp(static_cast<Point>(1 + rng() % 32));
        const Func f = draw_func(rng, sp);
        const Func g = draw_func(rng, sp);

        bool ok = zero_set(abs(f)) == zero_set(f) && zero_set(pow(f, 2)) == zero_set(f) &&
                  zero_set(pow(f, 3)) == zero_set(f);

        std::vector<Point> nonneg;
        for (Point x = 0; x < sp.size(); ++x)
            if (f.value(x) >= 0.0)
                nonneg.push_back(x);
        ok = ok && zero_set(f - abs(f)) == ZeroSet(sp, std::move(nonneg));

        ok = ok && zero_set(f * g) == set_union(zero_set(f), zero_set(g));

        const ZeroSet meet = set_intersection(zero_set(f), zero_set(g));
        ok = ok && zero_set(f * f + g * g) == meet && zero_set(abs(f) + abs(g)) == meet;

        if (!ok)
            ++fails;
    }
    return {fails == 0, "1000 random pairs, n <= 32, " + std::to_string(fails) + " failures"};
}

// 2: both unit actions preserve zero sets; ranges [0,1) and (0,1]; tau
// complements the normalized value to 1 within 1e-15
Outcome criterion_2() {
    std::mt19937_64 rng(202);
    int fails = 0;
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const FiniteSpace sp(static_cast<Point>(1 + rng() % 32));
        const Func f = draw_func(rng, sp);
        const UnitElement g(draw_unit(rng, sp));

        const Func h = normalized_action(g, f);
        const Func m = multiplicative_action(g, f);
        const Func tv = tau(f, g);

        bool ok = zero_set(h) == zero_set(f) && zero_set(m) == zero_set(f);
        for (Point x = 0; x < sp.size(); ++x) {
            const double hv = h.value(x);
            const double tvv = tv.value(x);
            ok = ok && hv >= 0.0 && hv < 1.0 && tvv > 0.0 && tvv <= 1.0;
            if (f.value(x) == 0.0)
                ok = ok && hv == 0.0 && tvv == 1.0;
            worst = std::max(worst, std::fabs(tvv + hv - 1.0));
        }
        if (!ok)
            ++fails;
    }
    const bool pass = fails == 0 && worst <= kTauTol;
    char buf[96];
    std::snprintf(buf, sizeof buf, "1000 trials, complement residual %.3g", worst);
    return {pass, buf};
}

// 3: groupoid laws on 1000 composable triples from the default instance;
// the cocycle identity is exact on zero sets, and the two-point example
// leaves exactly 1/4 elsewhere
Outcome criterion_3() {
    std::mt19937_64 rng(303);
    const GroupoidInstance inst(default_groupoid_config(FiniteSpace(8)));
    const MaximalIdeal& ideal = inst.ideal();
    int fails = 0;
    double boundary = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const Func& f = inst.ideal_sample()[rng() % inst.ideal_sample().size()];
        const UnitElement& g1 = inst.units()[rng() % inst.units().size()];
        const UnitElement& g2 = inst.units()[rng() % inst.units().size()];
        const UnitElement& g3 = inst.units()[rng() % inst.units().size()];

        const Arrow a(ideal, f, g1);
        const Arrow b(ideal, a.target_func(), g2);
        const Arrow c(ideal, b.target_func(), g3);

        bool ok = compose(compose(a, b), c) == compose(a, compose(b, c));
        ok = ok && compose(unit_arrow(ideal, f), a) == a;
        ok = ok && compose(a, unit_arrow(ideal, a.target_func())) == a;
        ok = ok && compose(a, inverse(a)) == unit_arrow(ideal, f);
        ok = ok && compose(inverse(a), a) == unit_arrow(ideal, a.target_func());
        const Arrow ab = compose(a, b);
        ok = ok && source(ab) == source(a) && target(ab) == target(b);

        boundary = std::max(boundary, cocycle_residual(f, g1, g2).max_on_zero_set);
        if (!ok)
            ++fails;
    }

    const FiniteSpace two(2);
    const UnitElement one(Func::constant(two, 1.0));
    const CocycleResidualReport frozen =
        cocycle_residual(Func(two, {0.0, 1.0}), one, one);

    const bool pass = fails == 0 && boundary == 0.0 && frozen.residual.value(1) == 0.25 &&
                      frozen.max_on_zero_set == 0.0;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "1000 triples, boundary residual %.3g, pinned off-set value %.17g",
                  boundary, frozen.residual.value(1));
    return {pass, buf};
}

// 4: disintegration reconstruction and the double sum within 1e-12 on 500
// random pairs; derivative chain rule and piece-ratio invariance on
// equivalent triples
Outcome criterion_4() {
    std::mt19937_64 rng(404);
    int fails = 0;
    double worst = 0.0;
    for (int t = 0; t < 500; ++t) {
        const FiniteSpace sp(static_cast<Point>(1 + rng() % 32));
        const Measure nu = draw_measure(rng, sp);

        std::vector<Point> support = nu.support();
        for (std::size_t i = support.size(); i > 1; --i)
            std::swap(support[i - 1], support[rng() % i]);
        const std::size_t blocks =
            1 + rng() % std::min<std::size_t>(4, support.size());
        std::vector<std::vector<double>> vals(
            blocks, std::vector<double>(static_cast<std::size_t>(sp.size()), 0.0));
        for (std::size_t i = 0; i < support.size(); ++i)
            vals[i % blocks][static_cast<std::size_t>(support[i])] = 1.0;
        std::vector<Func> parts;
        for (auto& v : vals)
            parts.emplace_back(sp, std::move(v));

        const Disintegration dis = disintegrate(nu, parts);
        for (Point y = 0; y < sp.size(); ++y) {
            double sum = 0.0;
            for (std::size_t i = 0; i < dis.conditionals.size(); ++i)
                sum += dis.base_weights[i] * dis.conditionals[i].weight(y);
            worst = std::max(worst, std::fabs(sum - nu.weight(y)));
        }
        for (int k = 0; k < 5; ++k) {
            std::vector<double> hvals(static_cast<std::size_t>(sp.size()));
            for (double& x : hvals)
                x = draw(rng, kFuncVals);
            const Func h(sp, std::move(hvals));
            double inner = 0.0;
            for (std::size_t i = 0; i < dis.conditionals.size(); ++i)
                inner += dis.base_weights[i] * integrate(h, dis.conditionals[i]);
            worst = std::max(worst, std::fabs(integrate(h, nu) - inner));
        }

        // equivalent scalings of nu give an exact chain and exact piece ratios
        const auto rescale = [&](const Measure& m, double lo, double hi) {
            std::vector<double> w = m.weights();
            for (double& v : w)
                if (v > 0.0)
                    v *= (rng() % 2 == 0 ? lo : hi);
            return Measure(sp, std::move(w));
        };
        const Measure mid = rescale(nu, 0.5, 2.0);
        const Measure lam = rescale(mid, 0.25, 4.0);
        const Func d1 = rn_derivative(mid, nu);
        const Func d2 = rn_derivative(nu, lam);
        const Func d3 = rn_derivative(mid, lam);
        for (Point x : nu.support())
            worst = std::max(worst,
                             std::fabs(d3.value(x) - d1.value(x) * d2.value(x)));

        const RnDecompositionReport rep = rn_decomposition_invariance(mid, nu, parts);
        worst = std::max(worst, rep.max_deviation);

        if (worst > kSumTol)
            ++fails;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "500 pairs, worst residual %.3g", worst);
    return {fails == 0 && worst <= kSumTol, buf};
}

// 5: blow-up nets: constant for uniform mass once the scale clears the
// boundary, the unit point mass at its own atom at every scale, and the
// one-sided linear density reaching first moment 2/3 by scale 20
Outcome criterion_5() {
    const HybridMeasure leb({}, PiecewiseDensity::constant({0.0, 1.0}, {1.0}));
    bool pass = true;
    std::string note;

    {
        const TangentNetResult net = tangent_net(leb, 0.5, 24);
        for (const TangentNetRow& row : net.rows)
            pass = pass && row.moments == net.rows.front().moments && row.increment == 0.0;
    }
    {
        // interior center at 0.25: rows settle once the radius is at most the
        // distance 0.25 to the boundary, i.e. from the second scale on
        const TangentNetResult net = tangent_net(leb, 0.25, 24);
        for (std::size_t i = 1; i < net.rows.size(); ++i) {
            pass = pass && net.rows[i].moments == net.rows[1].moments;
            if (i >= 2)
                pass = pass && net.rows[i].increment == 0.0;
        }
        pass = pass && net.rows[1].moments[1] == 0.0 && net.rows[0].moments[1] != 0.0;
    }
    {
        const HybridMeasure dir({Atom{0.5, 1.0}}, PiecewiseDensity());
        const TangentNetResult net = tangent_net(dir, 0.5, 24);
        for (const TangentNetRow& row : net.rows)
            pass = pass && row.moments[0] == 1.0 && row.moments[1] == 0.0 &&
                   row.moments[2] == 0.0 && row.increment == 0.0;
        pass = pass && net.final_measure.density().empty() &&
               net.final_measure.atoms().size() == 1 &&
               net.final_measure.atoms()[0].location == 0.0 &&
               net.final_measure.atoms()[0].mass == 1.0;
    }
    {
        const HybridMeasure ramp({}, PiecewiseDensity::linear({0.0, 1.0}, {0.0, 2.0}));
        const TangentNetResult net = tangent_net(ramp, 0.0, 22);
        const TangentNetRow& row20 = net.rows[19];
        const double dev = std::fabs(row20.moments[1] - 2.0 / 3.0);
        pass = pass && dev <= kNetTol && net.max_tail_increment(20) <= kNetTol;
        char buf[96];
        std::snprintf(buf, sizeof buf, "first-moment deviation at scale 20: %.3g", dev);
        note = buf;
    }
    return {pass, note};
}

// 6: sampled bijections on up to eight points: invariance equals
// cycle-constancy, ergodicity equals a single charged cycle (checked against
// the invariant-subset definition), decomposition identities within 1e-12,
// and the point-mass average is exactly cycle-uniform at the period
Outcome criterion_6() {
    std::mt19937_64 rng(606);
    int fails = 0;
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const FiniteSpace sp(static_cast<Point>(1 + rng() % 8));
        const Transformation phi = draw_permutation(rng, sp);
        const CycleStructure cs = cycle_structure(phi);

        const Measure generic = draw_measure(rng, sp);
        bool ok = is_invariant(generic, phi) == cycle_constant(generic, phi);

        std::vector<double> w(static_cast<std::size_t>(sp.size()), 0.0);
        bool positive = false;
        for (const auto& cycle : cs.cycles) {
            const double v = draw(rng, kWeightVals);
            positive = positive || v > 0.0;
            for (Point x : cycle)
                w[static_cast<std::size_t>(x)] = v;
        }
        if (!positive)
            for (Point x : cs.cycles.front())
                w[static_cast<std::size_t>(x)] = 1.0;
        const Measure aligned(sp, std::move(w));
        ok = ok && is_invariant(aligned, phi);

        const bool fast = is_ergodic(aligned, phi);
        bool subset_def = true;
        for (std::uint32_t mask = 0; mask < (1u << sp.size()); ++mask) {
            std::uint32_t image = 0;
            for (Point x = 0; x < sp.size(); ++x)
                if (mask & (1u << x))
                    image |= 1u << phi.apply(x);
            if (image != mask)
                continue;
            double in = 0.0, out = 0.0;
            for (Point x = 0; x < sp.size(); ++x)
                (mask & (1u << x) ? in : out) += aligned.weight(x);
            if (in != 0.0 && out != 0.0)
                subset_def = false;
        }
        ok = ok && fast == subset_def;
        if (fast) {
            // one charged cycle, uniformly
            ok = ok && aligned.normalized() ==
                           Measure::uniform_on(sp, aligned.support());
        }

        const ErgodicDecomposition dec = ergodic_decompose(aligned, phi);
        worst = std::max(worst, decomposition_residual(dec, aligned));
        for (const Measure& comp : dec.components)
            ok = ok && is_ergodic(comp, phi);
        for (int k = 0; k < 10; ++k) {
            std::vector<double> hvals(static_cast<std::size_t>(sp.size()));
            for (double& x : hvals)
                x = draw(rng, kFuncVals);
            const Func h(sp, std::move(hvals));
            double outer = 0.0;
            for (std::size_t i = 0; i < dec.components.size(); ++i)
                outer += dec.weights[i] * integrate(h, dec.components[i]);
            worst = std::max(worst,
                             std::fabs(integrate(h, aligned.normalized()) - outer));
        }
        if (!ok)
            ++fails;
    }

    bool cesaro = true;
    for (Point n = 1; n <= 8; ++n) {
        const FiniteSpace sp(n);
        const CesaroReport rep = invariant_limit_check(
            Measure::dirac(sp, n / 2), Transformation::rotation(sp, 1), n);
        cesaro = cesaro && rep.exact_at_final && rep.limit == Measure::uniform(sp);
    }

    char buf[96];
    std::snprintf(buf, sizeof buf, "200 bijections, worst residual %.3g", worst);
    return {fails == 0 && worst <= kSumTol && cesaro, buf};
}

// 7: strata enumeration and sections for up to ten points, plus the sampled
// relabeling action behaving as an action
Outcome criterion_7() {
    bool pass = true;
    for (Point n = 1; n <= 10; ++n) {
        const FiniteSpace sp(n);
        const std::vector<Stratum> strata = stratify(sp, 24);
        pass = pass && strata.size() == (std::size_t{1} << n) - 1;
        std::size_t diracs = 0;
        for (const Stratum& st : strata)
            if (st.kind == StratumKind::dirac)
                ++diracs;
        pass = pass && diracs == static_cast<std::size_t>(n);

        const std::vector<Measure> reps = section(sp);
        pass = pass && reps.size() == strata.size();
        std::set<std::vector<Point>> supports;
        for (const Measure& rep : reps) {
            supports.insert(rep.support());
            pass = pass && project_to_section(rep) == rep;
        }
        pass = pass && supports.size() == reps.size();
    }

    const GroupoidInstance inst(default_groupoid_config(FiniteSpace(8)));
    const TruenessReport tr = trueness_check(inst, 500, 707);
    pass = pass && tr.pass() && tr.composable_checked >= 500;

    char buf[96];
    std::snprintf(buf, sizeof buf, "n <= 10 enumerated, %zu relabeling samples",
                  tr.samples);
    return {pass, buf};
}

// 8: equal seeds and stable serialization give byte-identical reports
Outcome criterion_8() {
    const ExperimentConfig cfg = default_config();
    const std::string a = report_to_json(run_suite(cfg, Suite::all), true);
    const std::string b = report_to_json(run_suite(cfg, Suite::all), true);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%zu bytes each", a.size());
    return {a == b && !a.empty(), buf};
}

} // namespace

int main() {
    struct Row {
        int id;
        const char* title;
        Outcome (*fn)();
        double limit_seconds; // 0 = untimed
    };
    const Row rows[] = {
        {1, "zero-set lattice identities", criterion_1, 1.0},
        {2, "unit actions and the complement identity", criterion_2, 1.0},
        {3, "groupoid laws and the cocycle boundary", criterion_3, 2.0},
        {4, "disintegration and derivative invariance", criterion_4, 2.0},
        {5, "blow-up nets", criterion_5, 1.0},
        {6, "invariance, ergodicity and averages", criterion_6, 5.0},
        {7, "orbit strata, sections and relabeling", criterion_7, 5.0},
        {8, "deterministic reports", criterion_8, 0.0},
    };

    int failed = 0;
    for (const Row& row : rows) {
        const auto t0 = Clock::now();
        Outcome out;
        try {
            out = row.fn();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        const bool in_time = row.limit_seconds == 0.0 || out.seconds < row.limit_seconds;
        const bool ok = out.pass && in_time;
        std::printf("[%s] criterion %d: %s (%s, %.3f s%s)\n", ok ? "PASS" : "FAIL", row.id,
                    row.title, out.detail.c_str(), out.seconds,
                    in_time ? "" : ", over the time limit");
        if (!ok)
            ++failed;
    }
    std::printf("%d of 8 criteria passed\n", 8 - failed);
    return failed == 0 ? 0 : 1;
}
