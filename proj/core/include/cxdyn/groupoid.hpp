#ifndef CXDYN_GROUPOID_HPP
#define CXDYN_GROUPOID_HPP

#include <cstddef>
#include <vector>

#include "cxdyn/action.hpp"
#include "cxdyn/algebra.hpp"

namespace cxdyn {

// Arrow (f, g) of the action groupoid over m_x: source f, target f*g.
// Equality of arrows is exact pointwise equality of both components.
class Arrow {
public:
    Arrow(const MaximalIdeal& ideal, Func f, UnitElement g);

    const MaximalIdeal& ideal() const noexcept { return ideal_; }
    const Func& source_func() const noexcept { return f_; }
    const UnitElement& unit() const noexcept { return g_; }
    Func target_func() const { return f_ * g_.func(); }

    friend bool operator==(const Arrow& a, const Arrow& b) {
        return a.ideal_ == b.ideal_ && a.f_ == b.f_ && a.g_ == b.g_;
    }

private:
    MaximalIdeal ideal_;
    Func f_;
    UnitElement g_;
};

Func source(const Arrow& a);
Func target(const Arrow& a);

// (f1, g1)(f2, g2) is defined exactly when f2 = f1*g1, and equals (f1, g1*g2).
bool composable(const Arrow& a, const Arrow& b);
Arrow compose(const Arrow& a, const Arrow& b); // throws ComposabilityError

// (f, g)^{-1} = (f*g, g^{-1}).
Arrow inverse(const Arrow& a);

// The unit arrow (f, e) at the object f.
Arrow unit_arrow(const MaximalIdeal& ideal, const Func& f);
bool is_unit_arrow(const Arrow& a);

// rho(f, g) = |g| / (|f| + |g|) along the arrow; equals 1 exactly on Z(f).
Func cocycle(const Arrow& a);

// residual(x) = rho(f, g1*g2)(x) - rho(f, g1)(x) * rho(f*g1, g2)(x).
// Vanishes identically on Z(f); off Z(f) it is reported, not asserted.
struct CocycleResidualReport {
    Func residual;
    double max_on_zero_set;
    double max_off_zero_set;
};

CocycleResidualReport cocycle_residual(const Func& f, const UnitElement& g1,
                                       const UnitElement& g2);

// Finite slice of the groupoid used for sampling: a base ideal m_x, a list of
// units closed under inversion and containing the identity, and a list of
// ideal members closed under multiplication by the units up to a fixed depth.
struct GroupoidConfig {
    FiniteSpace space;
    Point base_point;
    std::vector<Func> units;
    std::vector<Func> ideal_seeds;
    int closure_depth = 3;
};

// Constants {1, 2, 1/2, -1} as units and three integer-valued seed functions
// vanishing at 0. All products stay dyadic, so arrow algebra is exact.
GroupoidConfig default_groupoid_config(const FiniteSpace& space);

class GroupoidInstance {
public:
    explicit GroupoidInstance(GroupoidConfig cfg);

    const FiniteSpace& space() const noexcept { return ideal_.space(); }
    const MaximalIdeal& ideal() const noexcept { return ideal_; }
    const std::vector<UnitElement>& units() const noexcept { return units_; }
    const std::vector<Func>& ideal_sample() const noexcept { return ideal_sample_; }

    Arrow arrow(std::size_t f_index, std::size_t g_index) const;
    std::size_t arrow_count() const noexcept {
        return ideal_sample_.size() * units_.size();
    }

    // Exact membership in the sampled lists.
    bool unit_member(const Func& g) const;
    bool ideal_member(const Func& f) const;
    // Index of the unit with pointwise reciprocal values, present by
    // construction.
    std::size_t unit_inverse_index(std::size_t g_index) const;

private:
    MaximalIdeal ideal_;
    std::vector<UnitElement> units_;
    std::vector<Func> ideal_sample_;
};

// Arrows with target f under t, namely {(f*g^{-1}, g) : g sampled}.
std::vector<Arrow> t_fibre(const GroupoidInstance& inst, const Func& f);

// Finitely supported measure on a list of arrows (one weight per atom).
// Weights are non-negative with positive total; zero weights mark null atoms.
class FibreMeasure {
public:
    FibreMeasure(std::vector<Arrow> atoms, std::vector<double> weights);

    std::size_t size() const noexcept { return atoms_.size(); }
    const std::vector<Arrow>& atoms() const noexcept { return atoms_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    double total_mass() const;
    std::vector<std::size_t> null_atoms() const;

private:
    std::vector<Arrow> atoms_;
    std::vector<double> weights_;
};

// mu_f x nu over the t-fibre of f: atom (f*g^{-1}, g) carries nu's weight
// for the unit g.
FibreMeasure product_fibre_measure(const GroupoidInstance& inst, const Func& f,
                                   const std::vector<double>& unit_weights);

// Right translation b -> b*a of a fibre measure, weights carried along.
// Sends the t-fibre of f bijectively onto the t-fibre of f*g1 for a=(f,g1).
FibreMeasure translate(const FibreMeasure& m, const Arrow& a);

// Numerical record of one fibre translation: the translated measure must land
// in the target fibre with total mass, weight multiset and null atoms all
// carried over atom-by-atom. That is the quasi-invariance statement at this
// finite scale.
struct FibreTranslationReport {
    bool lands_in_target_fibre;
    bool mass_preserved;
    bool multiset_preserved;
    bool null_atoms_correspond;
    bool pass() const {
        return lands_in_target_fibre && mass_preserved && multiset_preserved &&
               null_atoms_correspond;
    }
};

FibreTranslationReport quasi_invariance_check(const GroupoidInstance& inst, const Func& f,
                                              const std::vector<double>& unit_weights,
                                              const Arrow& a);

// nu is symmetric iff its null set of units is closed under g -> g^{-1}.
bool is_symmetric_weighting(const GroupoidInstance& inst,
                            const std::vector<double>& unit_weights);

} // namespace cxdyn

#endif
