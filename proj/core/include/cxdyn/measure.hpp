#ifndef CXDYN_MEASURE_HPP
#define CXDYN_MEASURE_HPP

#include <cstddef>
#include <vector>

#include "cxdyn/algebra.hpp"
#include "cxdyn/space.hpp"

namespace cxdyn {

// Finite nonzero measure on a FiniteSpace, stored as one non-negative weight
// per point. The zero measure is not representable: construction rejects it.
class Measure {
public:
    Measure(FiniteSpace space, std::vector<double> weights);

    static Measure dirac(const FiniteSpace& space, Point x);
    static Measure uniform(const FiniteSpace& space);
    // Uniform probability measure on a nonempty subset.
    static Measure uniform_on(const FiniteSpace& space, const std::vector<Point>& support);

    const FiniteSpace& space() const noexcept { return space_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    double weight(Point x) const;
    double total_mass() const;
    double mass_of(const ZeroSet& set) const;

    // Points with strictly positive weight, sorted.
    std::vector<Point> support() const;
    ZeroSet null_set() const;

    Measure normalized() const;
    Measure scaled(double c) const; // c > 0

    friend bool operator==(const Measure& a, const Measure& b) {
        return a.space_ == b.space_ && a.weights_ == b.weights_;
    }

private:
    FiniteSpace space_;
    std::vector<double> weights_;
};

// Point map on a FiniteSpace, given as the image list map[x].
class Transformation {
public:
    Transformation(FiniteSpace space, std::vector<Point> map);

    static Transformation identity(const FiniteSpace& space);
    static Transformation rotation(const FiniteSpace& space, Point shift);

    const FiniteSpace& space() const noexcept { return space_; }
    const std::vector<Point>& map() const noexcept { return map_; }
    Point apply(Point x) const;
    bool bijective() const noexcept { return bijective_; }

    Transformation compose_after(const Transformation& inner) const; // this(inner(x))

private:
    FiniteSpace space_;
    std::vector<Point> map_;
    bool bijective_;
};

// Image measure: (push_forward(mu, phi))(A) = mu(phi^{-1} A).
Measure push_forward(const Measure& mu, const Transformation& phi);

// Same measure class, meaning identical null sets.
bool same_class(const Measure& mu, const Measure& nu);

// Integral of h against mu, summed in point order.
double integrate(const Func& h, const Measure& mu);

// Disintegration of nu over a finite partition of its support by cozero sets.
// Conditionals are probability measures supported in their pieces; pieces
// carrying no nu-mass are dropped (piece_index records positions in the
// input list). Reconstruction sum_i base_weight_i * conditional_i = nu.
struct Disintegration {
    std::vector<Measure> conditionals;
    std::vector<double> base_weights;
    std::vector<std::size_t> piece_index;
};

// Throws PartitionError when the cozero sets of partition_funcs overlap or
// fail to cover supp(nu).
Disintegration disintegrate(const Measure& nu, const std::vector<Func>& partition_funcs);

// Radon-Nikodym derivative dnu/dmu as a Func: nu(y)/mu(y) on the common
// support, 0 elsewhere. Throws AbsoluteContinuityError unless the measures
// share a class.
Func rn_derivative(const Measure& nu, const Measure& mu);

// Restriction of dnu/dmu to a partition piece, compared against the
// conditional derivative rescaled by nu(U_i)/mu(U_i).
struct RnPieceReport {
    std::size_t piece_index;
    double ratio;         // nu(U_i) / mu(U_i)
    double max_deviation; // max over U_i of |j - ratio * j_i|
};

struct RnDecompositionReport {
    std::vector<RnPieceReport> pieces;
    double max_deviation;
};

RnDecompositionReport rn_decomposition_invariance(const Measure& nu, const Measure& mu,
                                                  const std::vector<Func>& partition_funcs);

} // namespace cxdyn

#endif
