#include "cxdyn/measure.hpp"

#include <algorithm>
#include <cmath>

#include "cxdyn/errors.hpp"

namespace cxdyn {

Measure::Measure(FiniteSpace space, std::vector<double> weights)
    : space_(space), weights_(std::move(weights)) {
    if (weights_.size() != static_cast<std::size_t>(space_.size()))
        throw InvalidArgument("Measure: weight count must match the space size");
    bool positive = false;
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0)
            throw InvalidArgument("Measure: weights must be finite and non-negative");
        if (w > 0.0)
            positive = true;
    }
    if (!positive)
        throw InvalidArgument("Measure: the zero measure is not representable");
}

Measure Measure::dirac(const FiniteSpace& space, Point x) {
    if (!space.contains(x))
        throw InvalidArgument("Measure::dirac: point out of range");
    std::vector<double> w(static_cast<std::size_t>(space.size()), 0.0);
    w[static_cast<std::size_t>(x)] = 1.0;
    return Measure(space, std::move(w));
}

Measure Measure::uniform(const FiniteSpace& space) {
    const double w = 1.0 / static_cast<double>(space.size());
    return Measure(space, std::vector<double>(static_cast<std::size_t>(space.size()), w));
}

Measure Measure::uniform_on(const FiniteSpace& space, const std::vector<Point>& support) {
    if (support.empty())
        throw InvalidArgument("Measure::uniform_on: support must be nonempty");
    std::vector<double> w(static_cast<std::size_t>(space.size()), 0.0);
    const double v = 1.0 / static_cast<double>(support.size());
    for (Point x : support) {
        if (!space.contains(x))
            throw InvalidArgument("Measure::uniform_on: point out of range");
        w[static_cast<std::size_t>(x)] = v;
    }
    return Measure(space, std::move(w));
}

double Measure::weight(Point x) const {
    if (!space_.contains(x))
        throw InvalidArgument("Measure::weight: point out of range");
    return weights_[static_cast<std::size_t>(x)];
}

double Measure::total_mass() const {
    double s = 0.0;
    for (double w : weights_)
        s += w;
    return s;
}

double Measure::mass_of(const ZeroSet& set) const {
    if (!(set.space() == space_))
        throw InvalidArgument("Measure::mass_of: space mismatch");
    double s = 0.0;
    for (Point x : set.points())
        s += weights_[static_cast<std::size_t>(x)];
    return s;
}

std::vector<Point> Measure::support() const {
    std::vector<Point> out;
    for (Point x = 0; x < space_.size(); ++x)
        if (weights_[static_cast<std::size_t>(x)] > 0.0)
            out.push_back(x);
    return out;
}

ZeroSet Measure::null_set() const {
    std::vector<Point> out;
    for (Point x = 0; x < space_.size(); ++x)
        if (weights_[static_cast<std::size_t>(x)] == 0.0)
            out.push_back(x);
    return ZeroSet(space_, std::move(out));
}

Measure Measure::normalized() const { return scaled(1.0 / total_mass()); }

Measure Measure::scaled(double c) const {
    if (!std::isfinite(c) || c <= 0.0)
        throw InvalidArgument("Measure::scaled: factor must be positive");
    std::vector<double> w = weights_;
    for (double& v : w)
        v *= c;
    return Measure(space_, std::move(w));
}

Transformation::Transformation(FiniteSpace space, std::vector<Point> map)
    : space_(space), map_(std::move(map)) {
    if (map_.size() != static_cast<std::size_t>(space_.size()))
        throw InvalidArgument("Transformation: map size must match the space size");
    std::vector<bool> hit(map_.size(), false);
    for (Point y : map_) {
        if (!space_.contains(y))
            throw InvalidArgument("Transformation: image point out of range");
        hit[static_cast<std::size_t>(y)] = true;
    }
    bijective_ = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Transformation Transformation::identity(const FiniteSpace& space) {
    std::vector<Point> m(static_cast<std::size_t>(space.size()));
    for (Point x = 0; x < space.size(); ++x)
        m[static_cast<std::size_t>(x)] = x;
    return Transformation(space, std::move(m));
}

Transformation Transformation::rotation(const FiniteSpace& space, Point shift) {
    std::vector<Point> m(static_cast<std::size_t>(space.size()));
    const Point n = space.size();
    for (Point x = 0; x < n; ++x)
        m[static_cast<std::size_t>(x)] = static_cast<Point>(((x + shift) % n + n) % n);
    return Transformation(space, std::move(m));
}

Point Transformation::apply(Point x) const {
    if (!space_.contains(x))
        throw InvalidArgument("Transformation::apply: point out of range");
    return map_[static_cast<std::size_t>(x)];
}

Transformation Transformation::compose_after(const Transformation& inner) const {
    if (!(space_ == inner.space_))
        throw InvalidArgument("Transformation::compose_after: space mismatch");
    std::vector<Point> m(map_.size());
    for (Point x = 0; x < space_.size(); ++x)
        m[static_cast<std::size_t>(x)] = apply(inner.apply(x));
    return Transformation(space_, std::move(m));
}

Measure push_forward(const Measure& mu, const Transformation& phi) {
    if (!(mu.space() == phi.space()))
        throw InvalidArgument("push_forward: space mismatch");
    std::vector<double> w(static_cast<std::size_t>(mu.space().size()), 0.0);
    for (Point x = 0; x < mu.space().size(); ++x)
        w[static_cast<std::size_t>(phi.apply(x))] += mu.weight(x);
    return Measure(mu.space(), std::move(w));
}

bool same_class(const Measure& mu, const Measure& nu) {
    if (!(mu.space() == nu.space()))
        throw InvalidArgument("same_class: space mismatch");
    return mu.null_set() == nu.null_set();
}

double integrate(const Func& h, const Measure& mu) {
    if (!(h.space() == mu.space()))
        throw InvalidArgument("integrate: space mismatch");
    double s = 0.0;
    for (Point x = 0; x < mu.space().size(); ++x)
        s += h.value(x) * mu.weight(x);
    return s;
}

namespace {

// Validates that the cozero sets are pairwise disjoint and cover supp(nu).
std::vector<ZeroSet> checked_partition(const Measure& nu,
                                       const std::vector<Func>& partition_funcs) {
    if (partition_funcs.empty())
        throw PartitionError("disintegrate: empty partition");
    std::vector<ZeroSet> cozeros;
    cozeros.reserve(partition_funcs.size());
    std::vector<bool> covered(static_cast<std::size_t>(nu.space().size()), false);
    for (const Func& f : partition_funcs) {
        if (!(f.space() == nu.space()))
            throw PartitionError("disintegrate: partition function on wrong space");
        ZeroSet u = cozero_set(f);
        for (Point x : u.points()) {
            if (covered[static_cast<std::size_t>(x)])
                throw PartitionError("disintegrate: cozero sets overlap");
            covered[static_cast<std::size_t>(x)] = true;
        }
        cozeros.push_back(std::move(u));
    }
    for (Point x : nu.support())
        if (!covered[static_cast<std::size_t>(x)])
            throw PartitionError("disintegrate: support point not covered");
    return cozeros;
}

} // namespace

Disintegration disintegrate(const Measure& nu, const std::vector<Func>& partition_funcs) {
    const std::vector<ZeroSet> cozeros = checked_partition(nu, partition_funcs);
    Disintegration out;
    for (std::size_t i = 0; i < cozeros.size(); ++i) {
        const double mass = nu.mass_of(cozeros[i]);
        if (mass == 0.0)
            continue;
        std::vector<double> w(static_cast<std::size_t>(nu.space().size()), 0.0);
        for (Point x : cozeros[i].points())
            w[static_cast<std::size_t>(x)] = nu.weight(x) / mass;
        out.conditionals.emplace_back(nu.space(), std::move(w));
        out.base_weights.push_back(mass);
        out.piece_index.push_back(i);
    }
    return out;
}

Func rn_derivative(const Measure& nu, const Measure& mu) {
    if (!same_class(nu, mu))
        throw AbsoluteContinuityError("rn_derivative: measures are not equivalent");
    std::vector<double> j(static_cast<std::size_t>(nu.space().size()), 0.0);
    for (Point x : nu.support())
        j[static_cast<std::size_t>(x)] = nu.weight(x) / mu.weight(x);
    return Func(nu.space(), std::move(j));
}

RnDecompositionReport rn_decomposition_invariance(const Measure& nu, const Measure& mu,
                                                  const std::vector<Func>& partition_funcs) {
    const Func j = rn_derivative(nu, mu);
    const Disintegration dnu = disintegrate(nu, partition_funcs);
    const Disintegration dmu = disintegrate(mu, partition_funcs);
    if (dnu.piece_index != dmu.piece_index)
        throw PartitionError("rn_decomposition_invariance: pieces carry mass for one "
                             "measure but not the other");
    RnDecompositionReport report;
    report.max_deviation = 0.0;
    for (std::size_t i = 0; i < dnu.conditionals.size(); ++i) {
        const Func ji = rn_derivative(dnu.conditionals[i], dmu.conditionals[i]);
        const double ratio = dnu.base_weights[i] / dmu.base_weights[i];
        double dev = 0.0;
        for (Point x : dnu.conditionals[i].support())
            dev = std::max(dev, std::fabs(j.value(x) - ratio * ji.value(x)));
        report.pieces.push_back(RnPieceReport{dnu.piece_index[i], ratio, dev});
        report.max_deviation = std::max(report.max_deviation, dev);
    }
    return report;
}

} // namespace cxdyn
