#ifndef CXDYN_ALGEBRA_HPP
#define CXDYN_ALGEBRA_HPP

#include <span>
#include <vector>

#include "cxdyn/space.hpp"

namespace cxdyn {

// Real-valued function on a FiniteSpace. Values are kept verbatim; equality,
// zero sets and unit tests all use literal comparison with 0.0, never an
// epsilon. All entries must be finite.
class Func {
public:
    Func(FiniteSpace space, std::vector<double> values);

    static Func constant(const FiniteSpace& space, double value);

    const FiniteSpace& space() const noexcept { return space_; }
    Point size() const noexcept { return space_.size(); }
    double value(Point x) const;
    double operator[](Point x) const { return value(x); }
    std::span<const double> values() const noexcept { return values_; }

    friend bool operator==(const Func& a, const Func& b);

private:
    FiniteSpace space_;
    std::vector<double> values_;
};

Func operator+(const Func& f, const Func& g);
Func operator-(const Func& f, const Func& g);
Func operator*(const Func& f, const Func& g);
Func operator-(const Func& f);
Func operator*(double c, const Func& f);
Func abs(const Func& f);
Func min(const Func& f, const Func& g);
Func max(const Func& f, const Func& g);
Func pow(const Func& f, int k); // k >= 0

// Subset of a FiniteSpace, stored sorted. On a finite grid every subset is
// the zero set of some function, so the one type serves for zero sets and
// cozero sets alike.
class ZeroSet {
public:
    ZeroSet(FiniteSpace space, std::vector<Point> points);

    static ZeroSet full(const FiniteSpace& space);
    static ZeroSet empty_set(const FiniteSpace& space);

    const FiniteSpace& space() const noexcept { return space_; }
    const std::vector<Point>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    bool is_full() const noexcept {
        return points_.size() == static_cast<std::size_t>(space_.size());
    }
    bool contains(Point x) const;

    ZeroSet complement() const;

    friend bool operator==(const ZeroSet& a, const ZeroSet& b);

private:
    FiniteSpace space_;
    std::vector<Point> points_;
};

ZeroSet set_union(const ZeroSet& a, const ZeroSet& b);
ZeroSet set_intersection(const ZeroSet& a, const ZeroSet& b);
bool is_subset(const ZeroSet& a, const ZeroSet& b);

// Z(f) = {x : f(x) = 0} under the literal-zero convention.
ZeroSet zero_set(const Func& f);
// U_f = X - Z(f).
ZeroSet cozero_set(const Func& f);

// f is invertible iff it vanishes nowhere.
bool is_unit(const Func& f);
// Pointwise reciprocal; throws InvalidArgument when f is not a unit.
Func unit_inverse(const Func& f);

// m_x = {f : f(x) = 0}, the maximal ideal sitting at x.
class MaximalIdeal {
public:
    MaximalIdeal(FiniteSpace space, Point base);

    const FiniteSpace& space() const noexcept { return space_; }
    Point base() const noexcept { return base_; }
    bool contains(const Func& f) const;

    friend bool operator==(const MaximalIdeal& a, const MaximalIdeal& b) {
        return a.space_ == b.space_ && a.base_ == b.base_;
    }

private:
    FiniteSpace space_;
    Point base_;
};

// Zero sets of the given ideal members; every one contains the base point,
// and the family is closed under finite intersection in the ambient lattice.
std::vector<ZeroSet> z_filter(const MaximalIdeal& ideal, const std::vector<Func>& members);

} // namespace cxdyn

#endif
