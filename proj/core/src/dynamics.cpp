#include "cxdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "cxdyn/errors.hpp"

namespace cxdyn {

CycleStructure cycle_structure(const Transformation& phi) {
    const std::size_t n = static_cast<std::size_t>(phi.space().size());
    // Peel off points of in-degree zero until only the terminal cycles remain.
    std::vector<int> indegree(n, 0);
    for (Point x = 0; x < phi.space().size(); ++x)
        ++indegree[static_cast<std::size_t>(phi.apply(x))];
    std::vector<Point> queue;
    for (Point x = 0; x < phi.space().size(); ++x)
        if (indegree[static_cast<std::size_t>(x)] == 0)
            queue.push_back(x);
    std::vector<bool> on_cycle(n, true);
    while (!queue.empty()) {
        const Point x = queue.back();
        queue.pop_back();
        on_cycle[static_cast<std::size_t>(x)] = false;
        const Point y = phi.apply(x);
        if (--indegree[static_cast<std::size_t>(y)] == 0)
            queue.push_back(y);
    }

    CycleStructure cs;
    cs.on_cycle = on_cycle;
    cs.entry_cycle.assign(n, 0);
    std::vector<bool> assigned(n, false);
    for (Point x = 0; x < phi.space().size(); ++x) {
        if (!on_cycle[static_cast<std::size_t>(x)] || assigned[static_cast<std::size_t>(x)])
            continue;
        std::vector<Point> cycle;
        Point y = x;
        do {
            cycle.push_back(y);
            assigned[static_cast<std::size_t>(y)] = true;
            y = phi.apply(y);
        } while (y != x);
        std::sort(cycle.begin(), cycle.end());
        for (Point z : cycle)
            cs.entry_cycle[static_cast<std::size_t>(z)] = cs.cycles.size();
        cs.cycles.push_back(std::move(cycle));
    }
    // Cycles found in ascending order of their smallest point already, since
    // the outer scan runs in point order.
    for (Point x = 0; x < phi.space().size(); ++x) {
        if (on_cycle[static_cast<std::size_t>(x)])
            continue;
        Point y = x;
        while (!on_cycle[static_cast<std::size_t>(y)])
            y = phi.apply(y);
        cs.entry_cycle[static_cast<std::size_t>(x)] =
            cs.entry_cycle[static_cast<std::size_t>(y)];
    }
    return cs;
}

bool is_invariant(const Measure& mu, const Transformation& phi) {
    return push_forward(mu, phi) == mu;
}

bool cycle_constant(const Measure& mu, const Transformation& phi) {
    if (!(mu.space() == phi.space()))
        throw InvalidArgument("cycle_constant: space mismatch");
    if (!phi.bijective())
        throw PreconditionError("cycle_constant: map must be bijective");
    const CycleStructure cs = cycle_structure(phi);
    for (const auto& cycle : cs.cycles) {
        const double w = mu.weight(cycle.front());
        for (Point x : cycle)
            if (mu.weight(x) != w)
                return false;
    }
    return true;
}

namespace {

void check_ergodic_preconditions(const Measure& mu, const Transformation& phi,
                                 const char* who) {
    if (!(mu.space() == phi.space()))
        throw InvalidArgument(std::string(who) + ": space mismatch");
    if (!phi.bijective())
        throw PreconditionError(std::string(who) + ": map must be bijective");
    if (!is_invariant(mu, phi))
        throw PreconditionError(std::string(who) + ": measure must be invariant");
}

} // namespace

bool is_ergodic(const Measure& mu, const Transformation& phi) {
    check_ergodic_preconditions(mu, phi, "is_ergodic");
    const CycleStructure cs = cycle_structure(phi);
    std::size_t positive = 0;
    for (const auto& cycle : cs.cycles)
        if (mu.weight(cycle.front()) > 0.0)
            ++positive;
    return positive == 1;
}

ErgodicDecomposition ergodic_decompose(const Measure& mu, const Transformation& phi) {
    check_ergodic_preconditions(mu, phi, "ergodic_decompose");
    const CycleStructure cs = cycle_structure(phi);
    const double total = mu.total_mass();
    ErgodicDecomposition dec;
    for (const auto& cycle : cs.cycles) {
        double mass = 0.0;
        for (Point x : cycle)
            mass += mu.weight(x);
        if (mass == 0.0)
            continue;
        std::vector<double> w(static_cast<std::size_t>(mu.space().size()), 0.0);
        for (Point x : cycle)
            w[static_cast<std::size_t>(x)] = mu.weight(x) / mass;
        dec.components.emplace_back(mu.space(), std::move(w));
        dec.weights.push_back(mass / total);
    }
    return dec;
}

double decomposition_residual(const ErgodicDecomposition& dec, const Measure& mu) {
    const Measure normalized = mu.normalized();
    double residual = 0.0;
    for (Point y = 0; y < mu.space().size(); ++y) {
        double s = 0.0;
        for (std::size_t i = 0; i < dec.components.size(); ++i)
            s += dec.weights[i] * dec.components[i].weight(y);
        residual = std::max(residual, std::fabs(s - normalized.weight(y)));
    }
    return residual;
}

double birkhoff_average(const Func& h, const Transformation& phi, Point x, int steps) {
    if (!(h.space() == phi.space()))
        throw InvalidArgument("birkhoff_average: space mismatch");
    if (steps < 1)
        throw InvalidArgument("birkhoff_average: need at least one step");
    double s = 0.0;
    Point y = x;
    for (int t = 0; t < steps; ++t) {
        s += h.value(y);
        y = phi.apply(y);
    }
    return s / static_cast<double>(steps);
}

double l1_distance(const Measure& a, const Measure& b) {
    if (!(a.space() == b.space()))
        throw InvalidArgument("l1_distance: space mismatch");
    double s = 0.0;
    for (Point x = 0; x < a.space().size(); ++x)
        s += std::fabs(a.weight(x) - b.weight(x));
    return s;
}

CesaroReport invariant_limit_check(const Measure& mu, const Transformation& phi,
                                   int depth) {
    if (!(mu.space() == phi.space()))
        throw InvalidArgument("invariant_limit_check: space mismatch");
    if (depth < 1)
        throw InvalidArgument("invariant_limit_check: depth must be at least 1");

    const CycleStructure cs = cycle_structure(phi);
    const std::size_t n = static_cast<std::size_t>(mu.space().size());

    // L(mu): all mass entering a cycle spreads uniformly over it.
    std::vector<double> cycle_mass(cs.cycles.size(), 0.0);
    for (Point x = 0; x < mu.space().size(); ++x)
        cycle_mass[cs.entry_cycle[static_cast<std::size_t>(x)]] += mu.weight(x);
    std::vector<double> lw(n, 0.0);
    for (std::size_t c = 0; c < cs.cycles.size(); ++c) {
        const double share = cycle_mass[c] / static_cast<double>(cs.cycles[c].size());
        for (Point x : cs.cycles[c])
            lw[static_cast<std::size_t>(x)] = share;
    }
    Measure limit(mu.space(), std::move(lw));

    CesaroReport report{{},    limit, false, false, 0.0,
                        0.0,   false};
    report.limit_invariant = is_invariant(limit, phi);

    // Hull certificate: the limit is the cycle-mass mixture of the uniform
    // probability measures on the positive cycles.
    double hull_residual = 0.0;
    {
        std::vector<double> rebuilt(n, 0.0);
        for (std::size_t c = 0; c < cs.cycles.size(); ++c) {
            if (cycle_mass[c] == 0.0)
                continue;
            const Measure uc = Measure::uniform_on(mu.space(), cs.cycles[c]);
            for (Point x : cs.cycles[c])
                rebuilt[static_cast<std::size_t>(x)] += cycle_mass[c] * uc.weight(x);
        }
        for (std::size_t i = 0; i < n; ++i)
            hull_residual = std::max(hull_residual,
                                     std::fabs(rebuilt[i] - limit.weight(static_cast<Point>(i))));
    }
    report.hull_residual = hull_residual;
    report.limit_in_ergodic_hull = hull_residual <= 1e-12;

    std::vector<double> iterate = mu.weights();
    std::vector<double> accum(n, 0.0);
    for (int T = 1; T <= depth; ++T) {
        for (std::size_t i = 0; i < n; ++i)
            accum[i] += iterate[i];
        double dist = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            dist += std::fabs(accum[i] / static_cast<double>(T) -
                              limit.weight(static_cast<Point>(i)));
        report.rows.push_back(CesaroRow{T, dist});
        // push the iterate one step
        std::vector<double> next(n, 0.0);
        for (Point x = 0; x < mu.space().size(); ++x)
            next[static_cast<std::size_t>(phi.apply(x))] += iterate[static_cast<std::size_t>(x)];
        iterate = std::move(next);
    }
    report.final_distance = report.rows.back().distance;
    report.exact_at_final = report.final_distance == 0.0;
    return report;
}

} // namespace cxdyn
