#ifndef CXDYN_TANGENT_HPP
#define CXDYN_TANGENT_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "cxdyn/space.hpp"

namespace cxdyn {

// Density on a union of intervals, linear on each piece. Affine changes of
// variable map linear pieces to linear pieces, so the class is closed under
// the blow-up maps used below; constant pieces are the special case
// v_lo = v_hi.
class PiecewiseDensity {
public:
    struct Piece {
        double lo, hi;   // lo < hi
        double v_lo, v_hi; // endpoint values, non-negative
    };

    PiecewiseDensity() = default;
    explicit PiecewiseDensity(std::vector<Piece> pieces);

    // Constant value per cell of the breakpoint grid.
    static PiecewiseDensity constant(const std::vector<double>& breakpoints,
                                     const std::vector<double>& cell_values);
    // Value per breakpoint, interpolated linearly across each cell.
    static PiecewiseDensity linear(const std::vector<double>& breakpoints,
                                   const std::vector<double>& node_values);

    bool empty() const noexcept { return pieces_.empty(); }
    const std::vector<Piece>& pieces() const noexcept { return pieces_; }

    double mass() const;
    // integral of y^j * density over [a, b] intersected with the carrier,
    // j = 0..3.
    double moment_over(int j, double a, double b) const;
    double moment(int j) const;

private:
    std::vector<Piece> pieces_;
};

struct Atom {
    double location;
    double mass; // > 0
};

// Finite nonzero measure on the real line: point atoms plus a piecewise
// linear density. The zero measure is not representable.
class HybridMeasure {
public:
    HybridMeasure(std::vector<Atom> atoms, PiecewiseDensity density);

    // Measure on the unit interval model: atoms inside [0, 1], density cells
    // on the model's breakpoints. cell_values may hold one value per cell
    // (constant pieces) or one per breakpoint (linear interpolation).
    static HybridMeasure on_unit_interval(const IntervalModel& model,
                                          const std::vector<double>& cell_values,
                                          std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    const PiecewiseDensity& density() const noexcept { return density_; }

    double total_mass() const;
    // Mass of the closed ball [x - r, x + r].
    double ball_mass(double x, double r) const;
    // integral of y^j, j = 0..3.
    double moment(int j) const;

private:
    std::vector<Atom> atoms_;
    PiecewiseDensity density_;
};

// Image of mu under T_{x,r}(y) = (y - x) / r, for r > 0. Atoms move, masses
// stay; a density picks up the factor r from the change of variables.
HybridMeasure homothety_push(const HybridMeasure& mu, double center, double radius);

// Restriction to the closed interval [lo, hi]. Throws InvalidArgument when
// nothing survives.
HybridMeasure restrict_to(const HybridMeasure& mu, double lo, double hi);

// c * mu for c > 0.
HybridMeasure scale(const HybridMeasure& mu, double c);

// Blow-up schedule at a center: strictly decreasing positive radii. The
// default schedule is r_k = 2^-k.
struct BlowupNet {
    double center;
    std::vector<double> radii;
};

BlowupNet dyadic_net(double center, int depth);

// One scale of the net: nu_k = (1 / mu(B(x, r_k))) * (T_{x, r_k})_* mu
// restricted to [-1, 1], its normalizer, its first four moments and the
// largest moment change against the previous scale.
struct TangentNetRow {
    int k;
    double radius;
    double normalizer;
    std::array<double, 4> moments;
    double increment;
};

struct TangentNetResult {
    double center;
    std::vector<TangentNetRow> rows;
    HybridMeasure final_measure;

    // Largest increment over rows with k >= from_k.
    double max_tail_increment(int from_k) const;
};

// Throws DegenerateCenterError when some ball in the schedule carries no
// mass.
TangentNetResult tangent_net(const HybridMeasure& mu, const BlowupNet& net);
TangentNetResult tangent_net(const HybridMeasure& mu, double center, int depth);

// Closure of the tangent family under scaling and under zooming: c * nu is
// reached by the normalizers c * c_k, and nu_{0,r} (the image of nu under
// T_{0,r}) by the radii r * r_k. The report carries both adjusted parameter
// lists, the two derived measures and moment cross-checks.
struct TanClosureReport {
    HybridMeasure scaled;   // c * nu
    HybridMeasure rescaled; // nu_{0,r}
    std::vector<double> scaled_normalizers;
    std::vector<double> rescaled_radii;
    bool scaled_valid;
    bool rescaled_valid;
    double scaled_moment_deviation;   // max_j rel. dev of I_j(c*nu) from c*I_j(nu)
    double rescaled_moment_deviation; // max_j rel. dev of I_j(nu_{0,r}) from r^-j I_j(nu)
};

TanClosureReport tan_closure_check(const TangentNetResult& net_result, double c, double r);

} // namespace cxdyn

#endif
