#ifndef CXDYN_SPACE_HPP
#define CXDYN_SPACE_HPP

#include <cstdint>
#include <vector>

namespace cxdyn {

using Point = std::int32_t;

// Exact test of k/n <= r for integers 0 <= k <= n, treating the double r as
// the binary rational it represents. No rounding is involved, so membership
// questions stated with dyadic radii have one correct answer and this gives it.
bool fraction_le(std::int64_t k, std::int64_t n, double r);

// n points equally spaced on the circle of circumference 1. The metric is the
// chord count divided by n, i.e. d(i, j) = min(|i-j|, n-|i-j|) / n.
class FiniteSpace {
public:
    explicit FiniteSpace(Point n);

    Point size() const noexcept { return n_; }
    bool contains(Point x) const noexcept { return x >= 0 && x < n_; }

    // Number of grid steps between x and y along the shorter arc.
    std::int64_t chord(Point x, Point y) const;
    double metric(Point x, Point y) const;

    // Closed ball {y : d(x, y) <= r}, sorted ascending. The comparison
    // chord/n <= r is evaluated exactly.
    std::vector<Point> ball(Point x, double r) const;

    friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) noexcept {
        return a.n_ == b.n_;
    }

private:
    Point n_;
};

FiniteSpace make_circle_space(Point n);

// The unit interval [0, 1] split by an increasing breakpoint sequence into
// density pieces. Carrier of the measures fed to the blow-up layer.
class IntervalModel {
public:
    explicit IntervalModel(std::vector<double> breakpoints);

    const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
    std::size_t piece_count() const noexcept { return breakpoints_.size() - 1; }

private:
    std::vector<double> breakpoints_;
};

} // namespace cxdyn

#endif
