#include "cxdyn/space.hpp"

#include <cmath>
#include <cstdlib>

#include "cxdyn/errors.hpp"

namespace cxdyn {

namespace {
// Grid sizes stay below 2^20 so the cross multiplications in fraction_le fit
// comfortably in 128 bits.
constexpr Point kMaxPoints = 1 << 20;
} // namespace

bool fraction_le(std::int64_t k, std::int64_t n, double r) {
    if (n < 1 || k < 0 || k > n)
        throw InvalidArgument("fraction_le: need 0 <= k <= n, n >= 1");
    if (std::isnan(r))
        return false;
    if (k == 0)
        return r >= 0.0;
    if (r <= 0.0)
        return false;
    if (r >= 1.0)
        return true;
    // 0 < r < 1. Write r = m * 2^(e-53) with m an integer in [2^52, 2^53).
    int e = 0;
    const double mant = std::frexp(r, &e);
    const auto m = static_cast<unsigned __int128>(std::llround(std::ldexp(mant, 53)));
    const int shift = 53 - e; // k/n <= r  <=>  k * 2^shift <= m * n
    if (shift >= 107)
        return false; // r < 2^-53 while k/n >= 2^-20
    return (static_cast<unsigned __int128>(k) << shift) <=
           m * static_cast<unsigned __int128>(n);
}

FiniteSpace::FiniteSpace(Point n) : n_(n) {
    if (n < 1)
        throw InvalidArgument("FiniteSpace: need at least one point");
    if (n > kMaxPoints)
        throw InvalidArgument("FiniteSpace: grid too large");
}

std::int64_t FiniteSpace::chord(Point x, Point y) const {
    if (!contains(x) || !contains(y))
        throw InvalidArgument("FiniteSpace::chord: point out of range");
    const std::int64_t d = std::abs(static_cast<std::int64_t>(x) - y);
    return std::min(d, static_cast<std::int64_t>(n_) - d);
}

double FiniteSpace::metric(Point x, Point y) const {
    return static_cast<double>(chord(x, y)) / static_cast<double>(n_);
}

std::vector<Point> FiniteSpace::ball(Point x, double r) const {
    if (!contains(x))
        throw InvalidArgument("FiniteSpace::ball: center out of range");
    std::vector<Point> out;
    for (Point y = 0; y < n_; ++y)
        if (fraction_le(chord(x, y), n_, r))
            out.push_back(y);
    return out;
}

FiniteSpace make_circle_space(Point n) { return FiniteSpace(n); }

IntervalModel::IntervalModel(std::vector<double> breakpoints)
    : breakpoints_(std::move(breakpoints)) {
    if (breakpoints_.size() < 2)
        throw InvalidArgument("IntervalModel: need at least two breakpoints");
    if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0)
        throw InvalidArgument("IntervalModel: breakpoints must run from 0 to 1");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        if (!(breakpoints_[i] < breakpoints_[i + 1]))
            throw InvalidArgument("IntervalModel: breakpoints must be strictly increasing");
}

} // namespace cxdyn
