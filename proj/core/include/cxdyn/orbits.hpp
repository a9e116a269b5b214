#ifndef CXDYN_ORBITS_HPP
#define CXDYN_ORBITS_HPP

#include <cstdint>
#include <vector>

#include "cxdyn/groupoid.hpp"
#include "cxdyn/measure.hpp"

namespace cxdyn {

// Measure classes on a finite space are labeled by supports, so the orbit
// space splits into one stratum per nonempty subset of the space.
enum class StratumKind { dirac, singular, principal };

struct Stratum {
    std::vector<Point> support; // sorted, nonempty
    StratumKind kind;
    int dim; // |support| - 1
};

// All 2^n - 1 strata when n <= max_enumeration, in ascending bitmask order;
// otherwise a deterministic sample (diracs, the principal stratum and seeded
// random supports).
std::vector<Stratum> stratify(const FiniteSpace& space, int max_enumeration,
                              std::size_t sample_count = 128, std::uint64_t seed = 0);

// The stratum of supp(mu).
Stratum classify(const Measure& mu);

// Uniform probability measure on the stratum's support.
Measure canonical_representative(const FiniteSpace& space, const Stratum& stratum);

// Canonical representative per stratum: a section of the orbit space, meeting
// every stratum exactly once. Exhaustive, so n is capped.
std::vector<Measure> section(const FiniteSpace& space);

// mu mapped to the canonical representative of its stratum; idempotent.
Measure project_to_section(const Measure& mu);

// The relabeling mu_f -> mu_{f*g} is an action of the arrow algebra:
// composing arrows first and acting once agrees with acting twice, unit
// arrows act trivially, supports travel exactly, and non-composable pairs
// are rejected before anything acts.
struct TruenessReport {
    std::size_t samples;
    std::size_t composable_checked;
    bool composition_consistent;
    bool classes_preserved;
    bool units_act_trivially;
    bool non_composable_rejected;
    bool pass() const {
        return composition_consistent && classes_preserved && units_act_trivially &&
               non_composable_rejected;
    }
};

TruenessReport trueness_check(const GroupoidInstance& inst, std::size_t samples,
                              std::uint64_t seed);

// (source, target) preimages over the sampled arrow set stay no larger than
// the unit sample, and the division map compose(inverse(b), a) is defined
// exactly on pairs with equal sources, sending (a, a) to the unit arrow at
// the target object.
struct PropernessReport {
    std::size_t arrow_count;
    std::size_t pair_classes;
    std::size_t max_preimage;
    std::size_t unit_count;
    bool preimages_bounded;
    bool division_defined_on_equal_sources;
    bool division_rejects_unequal_sources;
    bool division_of_arrow_by_itself_is_unit;
    bool pass() const {
        return preimages_bounded && division_defined_on_equal_sources &&
               division_rejects_unequal_sources && division_of_arrow_by_itself_is_unit;
    }
};

PropernessReport properness_report(const GroupoidInstance& inst, std::size_t samples,
                                   std::uint64_t seed);

// Division map D(a, b) = compose(inverse(b), a), defined when the sources
// agree exactly.
Arrow divide(const Arrow& a, const Arrow& b);

// Dimension bookkeeping for the principal stratum: codimension 0 inside the
// probability simplex, 1 inside the cone of finite measures.
struct CodimensionReport {
    int principal_dim;
    int simplex_dim;
    int cone_dim;
    int codim_in_simplex;
    int codim_in_cone;
};

CodimensionReport codimension_report(const FiniteSpace& space);

} // namespace cxdyn

#endif
