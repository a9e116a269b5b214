#include "cxdyn/tangent.hpp"

#include <algorithm>
#include <cmath>

#include "cxdyn/errors.hpp"

namespace cxdyn {

namespace {

void check_piece(const PiecewiseDensity::Piece& p) {
    if (!std::isfinite(p.lo) || !std::isfinite(p.hi) || !(p.lo < p.hi))
        throw InvalidArgument("PiecewiseDensity: piece endpoints must be finite with "
                              "lo < hi");
    if (!std::isfinite(p.v_lo) || !std::isfinite(p.v_hi) || p.v_lo < 0.0 || p.v_hi < 0.0)
        throw InvalidArgument("PiecewiseDensity: values must be finite and non-negative");
}

// integral of y^j over [a, b] divided out of the antiderivative.
double power_integral(int j, double a, double b) {
    const auto ipow = [](double y, int e) {
        double out = 1.0;
        for (int i = 0; i < e; ++i)
            out *= y;
        return out;
    };
    return (ipow(b, j + 1) - ipow(a, j + 1)) / static_cast<double>(j + 1);
}

} // namespace

PiecewiseDensity::PiecewiseDensity(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    std::sort(pieces_.begin(), pieces_.end(),
              [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        check_piece(pieces_[i]);
        if (i > 0 && pieces_[i].lo < pieces_[i - 1].hi)
            throw InvalidArgument("PiecewiseDensity: pieces overlap");
    }
}

PiecewiseDensity PiecewiseDensity::constant(const std::vector<double>& breakpoints,
                                            const std::vector<double>& cell_values) {
    if (breakpoints.size() != cell_values.size() + 1)
        throw InvalidArgument("PiecewiseDensity::constant: need one value per cell");
    std::vector<Piece> pieces;
    pieces.reserve(cell_values.size());
    for (std::size_t i = 0; i < cell_values.size(); ++i)
        pieces.push_back(Piece{breakpoints[i], breakpoints[i + 1], cell_values[i],
                               cell_values[i]});
    return PiecewiseDensity(std::move(pieces));
}

PiecewiseDensity PiecewiseDensity::linear(const std::vector<double>& breakpoints,
                                          const std::vector<double>& node_values) {
    if (breakpoints.size() < 2 || breakpoints.size() != node_values.size())
        throw InvalidArgument("PiecewiseDensity::linear: need one value per breakpoint");
    std::vector<Piece> pieces;
    pieces.reserve(breakpoints.size() - 1);
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        pieces.push_back(Piece{breakpoints[i], breakpoints[i + 1], node_values[i],
                               node_values[i + 1]});
    return PiecewiseDensity(std::move(pieces));
}

double PiecewiseDensity::mass() const { return moment(0); }

double PiecewiseDensity::moment_over(int j, double a, double b) const {
    if (j < 0 || j > 3)
        throw InvalidArgument("PiecewiseDensity::moment_over: j must be 0..3");
    double s = 0.0;
    for (const Piece& p : pieces_) {
        const double lo = std::max(a, p.lo);
        const double hi = std::min(b, p.hi);
        if (!(lo < hi)) {
            continue;
        }
        // density alpha + beta*y on the piece
        const double beta = (p.v_hi - p.v_lo) / (p.hi - p.lo);
        const double alpha = p.v_lo - beta * p.lo;
        s += alpha * power_integral(j, lo, hi) + beta * power_integral(j + 1, lo, hi);
    }
    return s;
}

double PiecewiseDensity::moment(int j) const {
    if (pieces_.empty())
        return 0.0;
    return moment_over(j, pieces_.front().lo, pieces_.back().hi);
}

HybridMeasure::HybridMeasure(std::vector<Atom> atoms, PiecewiseDensity density)
    : atoms_(std::move(atoms)), density_(std::move(density)) {
    std::sort(atoms_.begin(), atoms_.end(),
              [](const Atom& a, const Atom& b) { return a.location < b.location; });
    std::vector<Atom> merged;
    for (const Atom& a : atoms_) {
        if (!std::isfinite(a.location) || !std::isfinite(a.mass) || a.mass <= 0.0)
            throw InvalidArgument("HybridMeasure: atoms need finite locations and "
                                  "positive mass");
        if (!merged.empty() && merged.back().location == a.location)
            merged.back().mass += a.mass;
        else
            merged.push_back(a);
    }
    atoms_ = std::move(merged);
    if (atoms_.empty() && density_.mass() <= 0.0)
        throw InvalidArgument("HybridMeasure: the zero measure is not representable");
}

HybridMeasure HybridMeasure::on_unit_interval(const IntervalModel& model,
                                              const std::vector<double>& cell_values,
                                              std::vector<Atom> atoms) {
    for (const Atom& a : atoms)
        if (a.location < 0.0 || a.location > 1.0)
            throw InvalidArgument("HybridMeasure: atom outside the unit interval");
    PiecewiseDensity density;
    if (!cell_values.empty()) {
        if (cell_values.size() == model.piece_count())
            density = PiecewiseDensity::constant(model.breakpoints(), cell_values);
        else if (cell_values.size() == model.breakpoints().size())
            density = PiecewiseDensity::linear(model.breakpoints(), cell_values);
        else
            throw InvalidArgument("HybridMeasure: density values must match the model "
                                  "cells or breakpoints");
    }
    return HybridMeasure(std::move(atoms), std::move(density));
}

double HybridMeasure::total_mass() const {
    double s = density_.mass();
    for (const Atom& a : atoms_)
        s += a.mass;
    return s;
}

double HybridMeasure::ball_mass(double x, double r) const {
    if (!(r > 0.0) || !std::isfinite(r) || !std::isfinite(x))
        throw InvalidArgument("HybridMeasure::ball_mass: need a finite center and "
                              "positive radius");
    double s = density_.moment_over(0, x - r, x + r);
    for (const Atom& a : atoms_)
        if (std::fabs(a.location - x) <= r)
            s += a.mass;
    return s;
}

double HybridMeasure::moment(int j) const {
    const auto ipow = [](double y, int e) {
        double out = 1.0;
        for (int i = 0; i < e; ++i)
            out *= y;
        return out;
    };
    double s = density_.moment(j);
    for (const Atom& a : atoms_)
        s += a.mass * ipow(a.location, j);
    return s;
}

HybridMeasure homothety_push(const HybridMeasure& mu, double center, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius) || !std::isfinite(center))
        throw InvalidArgument("homothety_push: need a finite center and positive radius");
    std::vector<Atom> atoms = mu.atoms();
    for (Atom& a : atoms)
        a.location = (a.location - center) / radius;
    std::vector<PiecewiseDensity::Piece> pieces = mu.density().pieces();
    for (auto& p : pieces) {
        p.lo = (p.lo - center) / radius;
        p.hi = (p.hi - center) / radius;
        p.v_lo *= radius;
        p.v_hi *= radius;
    }
    return HybridMeasure(std::move(atoms), PiecewiseDensity(std::move(pieces)));
}

HybridMeasure restrict_to(const HybridMeasure& mu, double lo, double hi) {
    if (!(lo < hi))
        throw InvalidArgument("restrict_to: need lo < hi");
    std::vector<Atom> atoms;
    for (const Atom& a : mu.atoms())
        if (a.location >= lo && a.location <= hi)
            atoms.push_back(a);
    std::vector<PiecewiseDensity::Piece> pieces;
    for (const auto& p : mu.density().pieces()) {
        const double a = std::max(lo, p.lo);
        const double b = std::min(hi, p.hi);
        if (!(a < b))
            continue;
        const double beta = (p.v_hi - p.v_lo) / (p.hi - p.lo);
        const double va = p.v_lo + beta * (a - p.lo);
        const double vb = p.v_lo + beta * (b - p.lo);
        pieces.push_back(PiecewiseDensity::Piece{a, b, va, vb});
    }
    if (atoms.empty() && pieces.empty())
        throw InvalidArgument("restrict_to: nothing survives the restriction");
    return HybridMeasure(std::move(atoms), PiecewiseDensity(std::move(pieces)));
}

HybridMeasure scale(const HybridMeasure& mu, double c) {
    if (!(c > 0.0) || !std::isfinite(c))
        throw InvalidArgument("scale: factor must be positive and finite");
    std::vector<Atom> atoms = mu.atoms();
    for (Atom& a : atoms)
        a.mass *= c;
    std::vector<PiecewiseDensity::Piece> pieces = mu.density().pieces();
    for (auto& p : pieces) {
        p.v_lo *= c;
        p.v_hi *= c;
    }
    return HybridMeasure(std::move(atoms), PiecewiseDensity(std::move(pieces)));
}

BlowupNet dyadic_net(double center, int depth) {
    if (depth < 1)
        throw InvalidArgument("dyadic_net: depth must be at least 1");
    BlowupNet net{center, {}};
    net.radii.reserve(static_cast<std::size_t>(depth));
    for (int k = 1; k <= depth; ++k)
        net.radii.push_back(std::ldexp(1.0, -k));
    return net;
}

double TangentNetResult::max_tail_increment(int from_k) const {
    double m = 0.0;
    for (const TangentNetRow& row : rows)
        if (row.k >= from_k)
            m = std::max(m, row.increment);
    return m;
}

TangentNetResult tangent_net(const HybridMeasure& mu, const BlowupNet& net) {
    if (net.radii.empty())
        throw InvalidArgument("tangent_net: empty radius schedule");
    for (std::size_t i = 0; i < net.radii.size(); ++i) {
        if (!(net.radii[i] > 0.0))
            throw InvalidArgument("tangent_net: radii must be positive");
        if (i > 0 && !(net.radii[i] < net.radii[i - 1]))
            throw InvalidArgument("tangent_net: radii must be strictly decreasing");
    }
    std::vector<TangentNetRow> rows;
    rows.reserve(net.radii.size());
    std::array<double, 4> prev{};
    HybridMeasure current = mu; // replaced below before first use of final value
    for (std::size_t i = 0; i < net.radii.size(); ++i) {
        const double r = net.radii[i];
        const double bm = mu.ball_mass(net.center, r);
        if (!(bm > 0.0))
            throw DegenerateCenterError("tangent_net: ball carries no mass at scale " +
                                        std::to_string(r));
        const HybridMeasure nu =
            scale(restrict_to(homothety_push(mu, net.center, r), -1.0, 1.0), 1.0 / bm);
        TangentNetRow row;
        row.k = static_cast<int>(i) + 1;
        row.radius = r;
        row.normalizer = 1.0 / bm;
        for (int j = 0; j < 4; ++j)
            row.moments[static_cast<std::size_t>(j)] = nu.moment(j);
        row.increment = 0.0;
        if (i > 0)
            for (int j = 0; j < 4; ++j)
                row.increment =
                    std::max(row.increment,
                             std::fabs(row.moments[static_cast<std::size_t>(j)] -
                                       prev[static_cast<std::size_t>(j)]));
        prev = row.moments;
        rows.push_back(row);
        current = nu;
    }
    return TangentNetResult{net.center, std::move(rows), std::move(current)};
}

TangentNetResult tangent_net(const HybridMeasure& mu, double center, int depth) {
    return tangent_net(mu, dyadic_net(center, depth));
}

TanClosureReport tan_closure_check(const TangentNetResult& net_result, double c, double r) {
    if (!(c > 0.0) || !std::isfinite(c))
        throw InvalidArgument("tan_closure_check: scale factor must be positive");
    if (!(r > 0.0) || !std::isfinite(r))
        throw InvalidArgument("tan_closure_check: zoom factor must be positive");
    const HybridMeasure& nu = net_result.final_measure;
    HybridMeasure scaled = scale(nu, c);
    HybridMeasure rescaled = homothety_push(nu, 0.0, r);

    std::vector<double> scaled_normalizers;
    std::vector<double> rescaled_radii;
    for (const TangentNetRow& row : net_result.rows) {
        scaled_normalizers.push_back(c * row.normalizer);
        rescaled_radii.push_back(r * row.radius);
    }

    const auto decreasing = [](const std::vector<double>& v) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (!(v[i + 1] < v[i]))
                return false;
        return true;
    };
    const auto positive = [](const std::vector<double>& v) {
        return std::all_of(v.begin(), v.end(), [](double x) { return x > 0.0; });
    };

    TanClosureReport report{std::move(scaled),
                            std::move(rescaled),
                            std::move(scaled_normalizers),
                            std::move(rescaled_radii),
                            false,
                            false,
                            0.0,
                            0.0};

    for (int j = 0; j < 4; ++j) {
        const double base = nu.moment(j);
        const double want_scaled = c * base;
        const double got_scaled = report.scaled.moment(j);
        const double denom_s = std::max(1.0, std::fabs(want_scaled));
        report.scaled_moment_deviation = std::max(
            report.scaled_moment_deviation, std::fabs(got_scaled - want_scaled) / denom_s);

        double rj = 1.0;
        for (int i = 0; i < j; ++i)
            rj *= r;
        const double want_rescaled = base / rj;
        const double got_rescaled = report.rescaled.moment(j);
        const double denom_r = std::max(1.0, std::fabs(want_rescaled));
        report.rescaled_moment_deviation =
            std::max(report.rescaled_moment_deviation,
                     std::fabs(got_rescaled - want_rescaled) / denom_r);
    }

    report.scaled_valid = positive(report.scaled_normalizers) &&
                          report.scaled.total_mass() > 0.0 &&
                          report.scaled_moment_deviation <= 1e-12;
    report.rescaled_valid = positive(report.rescaled_radii) &&
                            decreasing(report.rescaled_radii) &&
                            report.rescaled.total_mass() > 0.0 &&
                            report.rescaled_moment_deviation <= 1e-12;
    return report;
}

} // namespace cxdyn
