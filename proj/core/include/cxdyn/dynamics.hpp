#ifndef CXDYN_DYNAMICS_HPP
#define CXDYN_DYNAMICS_HPP

#include <vector>

#include "cxdyn/measure.hpp"

namespace cxdyn {

// Terminal cycles of the functional graph of phi, plus for every point the
// cycle its forward orbit ends in. For a bijection every point lies on a
// cycle. Cycles are listed by smallest member, each with sorted points.
struct CycleStructure {
    std::vector<std::vector<Point>> cycles;
    std::vector<std::size_t> entry_cycle; // per point
    std::vector<bool> on_cycle;           // per point
};

CycleStructure cycle_structure(const Transformation& phi);

// push_forward(mu, phi) == mu, with literal weight equality.
bool is_invariant(const Measure& mu, const Transformation& phi);

// For bijective phi, invariance is the same as being constant along every
// cycle; this evaluates that characterisation directly.
bool cycle_constant(const Measure& mu, const Transformation& phi);

// An invariant measure under a bijection is ergodic iff exactly one cycle
// carries positive mass. Throws PreconditionError unless phi is bijective
// and mu is invariant.
bool is_ergodic(const Measure& mu, const Transformation& phi);

// Invariant measures split over the positive-mass cycles: components are the
// normalized cycle restrictions (each ergodic), weights are mu(c)/mu(X).
// Components are ordered by smallest cycle point, which pins the
// decomposition uniquely. Throws PreconditionError unless phi is bijective
// and mu is invariant.
struct ErgodicDecomposition {
    std::vector<Measure> components;
    std::vector<double> weights;
};

ErgodicDecomposition ergodic_decompose(const Measure& mu, const Transformation& phi);

// max_y | sum_i w_i comp_i(y) - mu(y)/mu(X) |.
double decomposition_residual(const ErgodicDecomposition& dec, const Measure& mu);

// (1/N) sum_{t<N} h(phi^t x).
double birkhoff_average(const Func& h, const Transformation& phi, Point x, int steps);

// l1 distance between weight vectors.
double l1_distance(const Measure& a, const Measure& b);

// Cesaro averages A_T = (1/T) sum_{t<T} phi_*^t mu against the limit
// L(mu) = sum_x mu(x) * uniform(cycle entered by x). For bijective phi the
// limit is exactly the projection of every A_T onto the cycle-constant
// measures, so the distance column reads as distance to the invariant set.
struct CesaroRow {
    int T;
    double distance;
};

struct CesaroReport {
    std::vector<CesaroRow> rows;
    Measure limit;
    bool limit_invariant;        // push_forward(limit) == limit exactly
    bool limit_in_ergodic_hull;  // non-negative cycle weights reassemble the limit
    double hull_residual;
    double final_distance;
    bool exact_at_final; // final distance is literally 0.0
};

CesaroReport invariant_limit_check(const Measure& mu, const Transformation& phi, int depth);

} // namespace cxdyn

#endif
