#include "cxdyn/orbits.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cxdyn/errors.hpp"

namespace cxdyn {

namespace {

StratumKind kind_of(std::size_t support_size, Point n) {
    if (support_size == 1)
        return StratumKind::dirac;
    if (support_size == static_cast<std::size_t>(n))
        return StratumKind::principal;
    return StratumKind::singular;
}

Stratum stratum_of_support(std::vector<Point> support, Point n) {
    Stratum s;
    s.kind = kind_of(support.size(), n);
    s.dim = static_cast<int>(support.size()) - 1;
    s.support = std::move(support);
    return s;
}

} // namespace

std::vector<Stratum> stratify(const FiniteSpace& space, int max_enumeration,
                              std::size_t sample_count, std::uint64_t seed) {
    const Point n = space.size();
    std::vector<Stratum> out;
    if (n <= max_enumeration) {
        if (n > 24)
            throw InvalidArgument("stratify: exhaustive enumeration capped at 24 points");
        const std::uint64_t limit = std::uint64_t{1} << n;
        out.reserve(static_cast<std::size_t>(limit - 1));
        for (std::uint64_t mask = 1; mask < limit; ++mask) {
            std::vector<Point> support;
            for (Point x = 0; x < n; ++x)
                if (mask & (std::uint64_t{1} << x))
                    support.push_back(x);
            out.push_back(stratum_of_support(std::move(support), n));
        }
        return out;
    }

    // Sampled mode: every dirac up to the sample budget, the principal
    // stratum, then seeded random supports, deduplicated.
    std::set<std::vector<Point>> seen;
    const auto add = [&](std::vector<Point> support) {
        if (seen.insert(support).second)
            out.push_back(stratum_of_support(std::move(support), n));
    };
    const Point dirac_budget =
        std::min<Point>(n, static_cast<Point>(std::min<std::size_t>(sample_count, 1024)));
    for (Point x = 0; x < dirac_budget; ++x)
        add({x});
    std::vector<Point> all(static_cast<std::size_t>(n));
    for (Point x = 0; x < n; ++x)
        all[static_cast<std::size_t>(x)] = x;
    add(all);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < sample_count; ++i) {
        std::vector<Point> support;
        for (Point x = 0; x < n; ++x)
            if (rng() & 1)
                support.push_back(x);
        if (!support.empty())
            add(std::move(support));
    }
    return out;
}

Stratum classify(const Measure& mu) {
    return stratum_of_support(mu.support(), mu.space().size());
}

Measure canonical_representative(const FiniteSpace& space, const Stratum& stratum) {
    return Measure::uniform_on(space, stratum.support);
}

std::vector<Measure> section(const FiniteSpace& space) {
    if (space.size() > 20)
        throw InvalidArgument("section: exhaustive section capped at 20 points");
    const std::vector<Stratum> strata = stratify(space, space.size());
    std::vector<Measure> out;
    out.reserve(strata.size());
    for (const Stratum& s : strata)
        out.push_back(canonical_representative(space, s));
    return out;
}

Measure project_to_section(const Measure& mu) {
    return Measure::uniform_on(mu.space(), mu.support());
}

Arrow divide(const Arrow& a, const Arrow& b) { return compose(inverse(b), a); }

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t count) {
    return static_cast<std::size_t>(rng() % count);
}

} // namespace

TruenessReport trueness_check(const GroupoidInstance& inst, std::size_t samples,
                              std::uint64_t seed) {
    TruenessReport report{samples, 0, true, true, true, true};
    std::mt19937_64 rng(seed);

    // Sources with empty cozero set label the zero class, which carries no
    // measure; skip them when drawing.
    std::vector<std::size_t> usable;
    for (std::size_t i = 0; i < inst.ideal_sample().size(); ++i)
        if (!cozero_set(inst.ideal_sample()[i]).empty())
            usable.push_back(i);
    if (usable.empty())
        throw InvalidArgument("trueness_check: every sampled source has empty cozero set");

    for (std::size_t s = 0; s < samples; ++s) {
        const Func& f = inst.ideal_sample()[usable[pick(rng, usable.size())]];
        const std::size_t gi1 = pick(rng, inst.units().size());
        const std::size_t gi2 = pick(rng, inst.units().size());
        const UnitElement& g1 = inst.units()[gi1];
        const UnitElement& g2 = inst.units()[gi2];

        const Arrow a(inst.ideal(), f, g1);
        const Arrow b(inst.ideal(), f * g1.func(), g2);
        const Arrow ab = compose(a, b);
        ++report.composable_checked;

        // Relabeling along ab in one step versus along a then b.
        const Func composed_label = f * ab.unit().func();
        const Func sequential_label = (f * g1.func()) * g2.func();
        if (!(composed_label == sequential_label))
            report.composition_consistent = false;

        const ZeroSet u = cozero_set(f);
        if (!(cozero_set(composed_label) == u) || !(cozero_set(sequential_label) == u))
            report.classes_preserved = false;
        else if (!(Measure::uniform_on(inst.space(), cozero_set(composed_label).points()) ==
                   Measure::uniform_on(inst.space(), cozero_set(sequential_label).points())))
            report.composition_consistent = false;

        const Arrow e = unit_arrow(inst.ideal(), f);
        if (!(f * e.unit().func() == f))
            report.units_act_trivially = false;

        // A source inside the ideal that cannot follow a: doubling the target
        // changes it somewhere on the nonempty cozero set.
        const Func bad_source = 2.0 * a.target_func();
        if (!(bad_source == a.target_func())) {
            bool rejected = false;
            try {
                (void)compose(a, Arrow(inst.ideal(), bad_source, g2));
            } catch (const ComposabilityError&) {
                rejected = true;
            }
            if (!rejected)
                report.non_composable_rejected = false;
        }
    }
    return report;
}

PropernessReport properness_report(const GroupoidInstance& inst, std::size_t samples,
                                   std::uint64_t seed) {
    PropernessReport report{};
    report.unit_count = inst.units().size();

    std::map<std::pair<std::vector<double>, std::vector<double>>, std::size_t> preimages;
    for (std::size_t fi = 0; fi < inst.ideal_sample().size(); ++fi)
        for (std::size_t gi = 0; gi < inst.units().size(); ++gi) {
            const Arrow arr = inst.arrow(fi, gi);
            const auto sv = arr.source_func().values();
            const auto tv = arr.target_func().values();
            ++preimages[{std::vector<double>(sv.begin(), sv.end()),
                         std::vector<double>(tv.begin(), tv.end())}];
            ++report.arrow_count;
        }
    report.pair_classes = preimages.size();
    report.max_preimage = 0;
    for (const auto& [key, count] : preimages)
        report.max_preimage = std::max(report.max_preimage, count);
    report.preimages_bounded = report.max_preimage <= report.unit_count;

    report.division_defined_on_equal_sources = true;
    report.division_rejects_unequal_sources = true;
    report.division_of_arrow_by_itself_is_unit = true;
    std::mt19937_64 rng(seed);
    const std::size_t nf = inst.ideal_sample().size();
    const std::size_t ng = inst.units().size();
    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t fi = pick(rng, nf);
        const Arrow a = inst.arrow(fi, pick(rng, ng));
        const Arrow b = inst.arrow(fi, pick(rng, ng));
        try {
            const Arrow d = divide(a, b);
            if (!(source(d) == target(b)) || !(target(d) == target(a)))
                report.division_defined_on_equal_sources = false;
        } catch (const Error&) {
            report.division_defined_on_equal_sources = false;
        }

        const Arrow self = inst.arrow(fi, pick(rng, ng));
        if (!is_unit_arrow(divide(self, self)))
            report.division_of_arrow_by_itself_is_unit = false;

        // A pair with different sources, when the sample offers one.
        if (nf >= 2) {
            std::size_t fj = pick(rng, nf);
            if (fj == fi)
                fj = (fj + 1) % nf;
            if (!(inst.ideal_sample()[fi] == inst.ideal_sample()[fj])) {
                const Arrow c = inst.arrow(fj, pick(rng, ng));
                bool rejected = false;
                try {
                    (void)divide(a, c);
                } catch (const ComposabilityError&) {
                    rejected = true;
                }
                if (!rejected)
                    report.division_rejects_unequal_sources = false;
            }
        }
    }
    return report;
}

CodimensionReport codimension_report(const FiniteSpace& space) {
    const int n = static_cast<int>(space.size());
    CodimensionReport report;
    report.principal_dim = n - 1;
    report.simplex_dim = n - 1;
    report.cone_dim = n;
    report.codim_in_simplex = report.simplex_dim - report.principal_dim;
    report.codim_in_cone = report.cone_dim - report.principal_dim;
    return report;
}

} // namespace cxdyn
