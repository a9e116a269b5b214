#include "cxdyn/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "cxdyn/errors.hpp"

namespace cxdyn {

namespace {

void check_finite(const std::vector<double>& values, const char* who) {
    for (double v : values)
        if (!std::isfinite(v))
            throw InvalidArgument(std::string(who) + ": values must be finite");
}

void check_same_space(const Func& f, const Func& g) {
    if (!(f.space() == g.space()))
        throw InvalidArgument("Func: operands live on different spaces");
}

template <typename Op>
Func zip(const Func& f, const Func& g, Op op) {
    check_same_space(f, g);
    std::vector<double> out(f.values().begin(), f.values().end());
    for (Point x = 0; x < f.size(); ++x)
        out[x] = op(out[x], g.value(x));
    return Func(f.space(), std::move(out));
}

} // namespace

Func::Func(FiniteSpace space, std::vector<double> values)
    : space_(space), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(space_.size()))
        throw InvalidArgument("Func: value count must match the space size");
    check_finite(values_, "Func");
}

Func Func::constant(const FiniteSpace& space, double value) {
    return Func(space, std::vector<double>(static_cast<std::size_t>(space.size()), value));
}

double Func::value(Point x) const {
    if (!space_.contains(x))
        throw InvalidArgument("Func::value: point out of range");
    return values_[static_cast<std::size_t>(x)];
}

bool operator==(const Func& a, const Func& b) {
    return a.space_ == b.space_ && a.values_ == b.values_;
}

Func operator+(const Func& f, const Func& g) {
    return zip(f, g, [](double a, double b) { return a + b; });
}

Func operator-(const Func& f, const Func& g) {
    return zip(f, g, [](double a, double b) { return a - b; });
}

Func operator*(const Func& f, const Func& g) {
    return zip(f, g, [](double a, double b) { return a * b; });
}

Func operator-(const Func& f) { return -1.0 * f; }

Func operator*(double c, const Func& f) {
    std::vector<double> out(f.values().begin(), f.values().end());
    for (double& v : out)
        v *= c;
    return Func(f.space(), std::move(out));
}

Func abs(const Func& f) {
    std::vector<double> out(f.values().begin(), f.values().end());
    for (double& v : out)
        v = std::fabs(v);
    return Func(f.space(), std::move(out));
}

Func min(const Func& f, const Func& g) {
    return zip(f, g, [](double a, double b) { return std::min(a, b); });
}

Func max(const Func& f, const Func& g) {
    return zip(f, g, [](double a, double b) { return std::max(a, b); });
}

Func pow(const Func& f, int k) {
    if (k < 0)
        throw InvalidArgument("pow: exponent must be non-negative");
    Func out = Func::constant(f.space(), 1.0);
    for (int i = 0; i < k; ++i)
        out = out * f;
    return out;
}

ZeroSet::ZeroSet(FiniteSpace space, std::vector<Point> points)
    : space_(space), points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    for (Point x : points_)
        if (!space_.contains(x))
            throw InvalidArgument("ZeroSet: point out of range");
}

ZeroSet ZeroSet::full(const FiniteSpace& space) {
    std::vector<Point> all(static_cast<std::size_t>(space.size()));
    for (Point x = 0; x < space.size(); ++x)
        all[static_cast<std::size_t>(x)] = x;
    return ZeroSet(space, std::move(all));
}

ZeroSet ZeroSet::empty_set(const FiniteSpace& space) { return ZeroSet(space, {}); }

bool ZeroSet::contains(Point x) const {
    return std::binary_search(points_.begin(), points_.end(), x);
}

ZeroSet ZeroSet::complement() const {
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(space_.size()) - points_.size());
    for (Point x = 0; x < space_.size(); ++x)
        if (!contains(x))
            out.push_back(x);
    return ZeroSet(space_, std::move(out));
}

bool operator==(const ZeroSet& a, const ZeroSet& b) {
    return a.space_ == b.space_ && a.points_ == b.points_;
}

namespace {
void check_same_space(const ZeroSet& a, const ZeroSet& b) {
    if (!(a.space() == b.space()))
        throw InvalidArgument("ZeroSet: operands live on different spaces");
}
} // namespace

ZeroSet set_union(const ZeroSet& a, const ZeroSet& b) {
    check_same_space(a, b);
    std::vector<Point> out;
    std::set_union(a.points().begin(), a.points().end(), b.points().begin(),
                   b.points().end(), std::back_inserter(out));
    return ZeroSet(a.space(), std::move(out));
}

ZeroSet set_intersection(const ZeroSet& a, const ZeroSet& b) {
    check_same_space(a, b);
    std::vector<Point> out;
    std::set_intersection(a.points().begin(), a.points().end(), b.points().begin(),
                          b.points().end(), std::back_inserter(out));
    return ZeroSet(a.space(), std::move(out));
}

bool is_subset(const ZeroSet& a, const ZeroSet& b) {
    check_same_space(a, b);
    return std::includes(b.points().begin(), b.points().end(), a.points().begin(),
                         a.points().end());
}

ZeroSet zero_set(const Func& f) {
    std::vector<Point> pts;
    for (Point x = 0; x < f.size(); ++x)
        if (f.value(x) == 0.0)
            pts.push_back(x);
    return ZeroSet(f.space(), std::move(pts));
}

ZeroSet cozero_set(const Func& f) { return zero_set(f).complement(); }

bool is_unit(const Func& f) {
    for (Point x = 0; x < f.size(); ++x)
        if (f.value(x) == 0.0)
            return false;
    return true;
}

Func unit_inverse(const Func& f) {
    if (!is_unit(f))
        throw InvalidArgument("unit_inverse: function vanishes somewhere");
    std::vector<double> out(f.values().begin(), f.values().end());
    for (double& v : out)
        v = 1.0 / v;
    return Func(f.space(), std::move(out));
}

MaximalIdeal::MaximalIdeal(FiniteSpace space, Point base) : space_(space), base_(base) {
    if (!space_.contains(base))
        throw InvalidArgument("MaximalIdeal: base point out of range");
}

bool MaximalIdeal::contains(const Func& f) const {
    if (!(f.space() == space_))
        throw InvalidArgument("MaximalIdeal::contains: space mismatch");
    return f.value(base_) == 0.0;
}

std::vector<ZeroSet> z_filter(const MaximalIdeal& ideal, const std::vector<Func>& members) {
    std::vector<ZeroSet> out;
    out.reserve(members.size());
    for (const Func& f : members) {
        if (!ideal.contains(f))
            throw InvalidArgument("z_filter: function does not vanish at the base point");
        out.push_back(zero_set(f));
    }
    return out;
}

} // namespace cxdyn
