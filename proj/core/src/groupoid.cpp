#include "cxdyn/groupoid.hpp"

#include <algorithm>
#include <cmath>

#include "cxdyn/errors.hpp"

namespace cxdyn {

Arrow::Arrow(const MaximalIdeal& ideal, Func f, UnitElement g)
    : ideal_(ideal), f_(std::move(f)), g_(std::move(g)) {
    if (!(f_.space() == ideal_.space()) || !(g_.space() == ideal_.space()))
        throw InvalidArgument("Arrow: components live on different spaces");
    if (!ideal_.contains(f_))
        throw InvalidArgument("Arrow: source function must vanish at the base point");
}

Func source(const Arrow& a) { return a.source_func(); }

Func target(const Arrow& a) { return a.target_func(); }

bool composable(const Arrow& a, const Arrow& b) {
    return a.ideal() == b.ideal() && b.source_func() == a.target_func();
}

Arrow compose(const Arrow& a, const Arrow& b) {
    if (!composable(a, b))
        throw ComposabilityError("compose: target of the first arrow is not the "
                                 "source of the second");
    return Arrow(a.ideal(), a.source_func(), a.unit() * b.unit());
}

Arrow inverse(const Arrow& a) {
    return Arrow(a.ideal(), a.target_func(), a.unit().inverse());
}

Arrow unit_arrow(const MaximalIdeal& ideal, const Func& f) {
    return Arrow(ideal, f, UnitElement::identity(ideal.space()));
}

bool is_unit_arrow(const Arrow& a) {
    return a.unit() == UnitElement::identity(a.ideal().space());
}

Func cocycle(const Arrow& a) { return tau(a.source_func(), a.unit()); }

CocycleResidualReport cocycle_residual(const Func& f, const UnitElement& g1,
                                       const UnitElement& g2) {
    const Func lhs = tau(f, g1 * g2);
    const Func step1 = tau(f, g1);
    const Func step2 = tau(f * g1.func(), g2);
    std::vector<double> res(static_cast<std::size_t>(f.size()));
    for (Point x = 0; x < f.size(); ++x)
        res[static_cast<std::size_t>(x)] =
            lhs.value(x) - step1.value(x) * step2.value(x);
    Func residual(f.space(), std::move(res));
    CocycleResidualReport report{residual, 0.0, 0.0};
    for (Point x = 0; x < f.size(); ++x) {
        const double r = std::fabs(residual.value(x));
        if (f.value(x) == 0.0)
            report.max_on_zero_set = std::max(report.max_on_zero_set, r);
        else
            report.max_off_zero_set = std::max(report.max_off_zero_set, r);
    }
    return report;
}

namespace {

bool func_less(const Func& a, const Func& b) {
    return std::lexicographical_compare(a.values().begin(), a.values().end(),
                                        b.values().begin(), b.values().end());
}

bool contains_func(const std::vector<Func>& sorted, const Func& f) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), f, func_less);
    return it != sorted.end() && *it == f;
}

} // namespace

GroupoidConfig default_groupoid_config(const FiniteSpace& space) {
    GroupoidConfig cfg{space, 0, {}, {}, 3};
    for (double c : {1.0, -1.0, 2.0, 0.5})
        cfg.units.push_back(Func::constant(space, c));
    const Point n = space.size();
    std::vector<double> step(static_cast<std::size_t>(n), 1.0);
    step[0] = 0.0;
    std::vector<double> tent(static_cast<std::size_t>(n));
    std::vector<double> comb(static_cast<std::size_t>(n));
    for (Point x = 0; x < n; ++x) {
        tent[static_cast<std::size_t>(x)] = static_cast<double>(space.chord(0, x));
        comb[static_cast<std::size_t>(x)] = (x % 2 == 0) ? 0.0 : 1.0;
    }
    cfg.ideal_seeds.emplace_back(space, std::move(step));
    cfg.ideal_seeds.emplace_back(space, std::move(tent));
    cfg.ideal_seeds.emplace_back(space, std::move(comb));
    return cfg;
}

GroupoidInstance::GroupoidInstance(GroupoidConfig cfg)
    : ideal_(cfg.space, cfg.base_point) {
    if (cfg.units.empty())
        throw InvalidArgument("GroupoidInstance: need at least one unit");
    if (cfg.ideal_seeds.empty())
        throw InvalidArgument("GroupoidInstance: need at least one ideal seed");
    if (cfg.closure_depth < 0)
        throw InvalidArgument("GroupoidInstance: closure depth must be non-negative");

    std::vector<Func> unit_funcs;
    for (const Func& g : cfg.units) {
        if (!(g.space() == cfg.space))
            throw InvalidArgument("GroupoidInstance: unit on wrong space");
        if (!is_unit(g))
            throw InvalidArgument("GroupoidInstance: listed unit vanishes somewhere");
        unit_funcs.push_back(g);
    }
    std::sort(unit_funcs.begin(), unit_funcs.end(), func_less);
    unit_funcs.erase(std::unique(unit_funcs.begin(), unit_funcs.end()), unit_funcs.end());
    if (!contains_func(unit_funcs, Func::constant(cfg.space, 1.0)))
        throw InvalidArgument("GroupoidInstance: units must contain the identity");
    for (const Func& g : unit_funcs)
        if (!contains_func(unit_funcs, unit_inverse(g)))
            throw InvalidArgument("GroupoidInstance: units must be closed under inversion");
    for (const Func& g : unit_funcs)
        units_.emplace_back(g);

    std::vector<Func> sample;
    for (const Func& f : cfg.ideal_seeds) {
        if (!(f.space() == cfg.space))
            throw InvalidArgument("GroupoidInstance: ideal seed on wrong space");
        if (!ideal_.contains(f))
            throw InvalidArgument("GroupoidInstance: ideal seed does not vanish at the "
                                  "base point");
        sample.push_back(f);
    }
    std::sort(sample.begin(), sample.end(), func_less);
    sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
    for (int d = 0; d < cfg.closure_depth; ++d) {
        std::vector<Func> grown = sample;
        for (const Func& f : sample)
            for (const UnitElement& g : units_) {
                Func fg = f * g.func();
                if (!contains_func(sample, fg))
                    grown.push_back(std::move(fg));
            }
        std::sort(grown.begin(), grown.end(), func_less);
        grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
        if (grown.size() == sample.size())
            break;
        sample = std::move(grown);
    }
    ideal_sample_ = std::move(sample);
}

Arrow GroupoidInstance::arrow(std::size_t f_index, std::size_t g_index) const {
    if (f_index >= ideal_sample_.size() || g_index >= units_.size())
        throw InvalidArgument("GroupoidInstance::arrow: index out of range");
    return Arrow(ideal_, ideal_sample_[f_index], units_[g_index]);
}

bool GroupoidInstance::unit_member(const Func& g) const {
    for (const UnitElement& u : units_)
        if (u.func() == g)
            return true;
    return false;
}

bool GroupoidInstance::ideal_member(const Func& f) const {
    return contains_func(ideal_sample_, f);
}

std::size_t GroupoidInstance::unit_inverse_index(std::size_t g_index) const {
    if (g_index >= units_.size())
        throw InvalidArgument("GroupoidInstance::unit_inverse_index: index out of range");
    const Func inv = unit_inverse(units_[g_index].func());
    for (std::size_t i = 0; i < units_.size(); ++i)
        if (units_[i].func() == inv)
            return i;
    throw InvalidArgument("GroupoidInstance: inverse closure violated");
}

std::vector<Arrow> t_fibre(const GroupoidInstance& inst, const Func& f) {
    if (!inst.ideal().contains(f))
        throw InvalidArgument("t_fibre: function must vanish at the base point");
    std::vector<Arrow> out;
    out.reserve(inst.units().size());
    for (const UnitElement& g : inst.units())
        out.emplace_back(inst.ideal(), f * g.inverse().func(), g);
    return out;
}

FibreMeasure::FibreMeasure(std::vector<Arrow> atoms, std::vector<double> weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights)) {
    if (atoms_.empty())
        throw InvalidArgument("FibreMeasure: need at least one atom");
    if (atoms_.size() != weights_.size())
        throw InvalidArgument("FibreMeasure: one weight per atom");
    bool positive = false;
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0)
            throw InvalidArgument("FibreMeasure: weights must be finite and non-negative");
        if (w > 0.0)
            positive = true;
    }
    if (!positive)
        throw InvalidArgument("FibreMeasure: the zero measure is not representable");
}

double FibreMeasure::total_mass() const {
    double s = 0.0;
    for (double w : weights_)
        s += w;
    return s;
}

std::vector<std::size_t> FibreMeasure::null_atoms() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < weights_.size(); ++i)
        if (weights_[i] == 0.0)
            out.push_back(i);
    return out;
}

FibreMeasure product_fibre_measure(const GroupoidInstance& inst, const Func& f,
                                   const std::vector<double>& unit_weights) {
    if (unit_weights.size() != inst.units().size())
        throw InvalidArgument("product_fibre_measure: one weight per sampled unit");
    return FibreMeasure(t_fibre(inst, f), unit_weights);
}

FibreMeasure translate(const FibreMeasure& m, const Arrow& a) {
    std::vector<Arrow> out;
    out.reserve(m.size());
    for (const Arrow& b : m.atoms())
        out.push_back(compose(b, a));
    return FibreMeasure(std::move(out), m.weights());
}

FibreTranslationReport quasi_invariance_check(const GroupoidInstance& inst, const Func& f,
                                              const std::vector<double>& unit_weights,
                                              const Arrow& a) {
    const FibreMeasure before = product_fibre_measure(inst, f, unit_weights);
    if (!(a.source_func() == f))
        throw InvalidArgument("quasi_invariance_check: arrow must start at f");
    const FibreMeasure after = translate(before, a);

    FibreTranslationReport report{true, false, false, true};
    const Func target_obj = a.target_func();
    for (const Arrow& b : after.atoms())
        if (!(b.target_func() == target_obj))
            report.lands_in_target_fibre = false;

    report.mass_preserved = before.total_mass() == after.total_mass();

    std::vector<double> wb = before.weights();
    std::vector<double> wa = after.weights();
    std::sort(wb.begin(), wb.end());
    std::sort(wa.begin(), wa.end());
    report.multiset_preserved = wb == wa;

    report.null_atoms_correspond = before.null_atoms() == after.null_atoms();
    return report;
}

bool is_symmetric_weighting(const GroupoidInstance& inst,
                            const std::vector<double>& unit_weights) {
    if (unit_weights.size() != inst.units().size())
        throw InvalidArgument("is_symmetric_weighting: one weight per sampled unit");
    for (std::size_t i = 0; i < unit_weights.size(); ++i) {
        const std::size_t j = inst.unit_inverse_index(i);
        if ((unit_weights[i] == 0.0) != (unit_weights[j] == 0.0))
            return false;
    }
    return true;
}

} // namespace cxdyn
