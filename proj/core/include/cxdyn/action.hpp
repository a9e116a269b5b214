#ifndef CXDYN_ACTION_HPP
#define CXDYN_ACTION_HPP

#include "cxdyn/algebra.hpp"

namespace cxdyn {

// Element of G(1), the group of nowhere-vanishing functions under pointwise
// multiplication.
class UnitElement {
public:
    explicit UnitElement(Func g);

    static UnitElement identity(const FiniteSpace& space);

    const Func& func() const noexcept { return g_; }
    const FiniteSpace& space() const noexcept { return g_.space(); }

    UnitElement inverse() const;

    friend UnitElement operator*(const UnitElement& a, const UnitElement& b);
    friend bool operator==(const UnitElement& a, const UnitElement& b) {
        return a.g_ == b.g_;
    }

private:
    Func g_;
};

// h = |f| / (|f| + |g|). Takes values in [0, 1), is 0 exactly on Z(f) and
// lands in (0, 1) elsewhere; in particular Z(h) = Z(f).
Func normalized_action(const UnitElement& g, const Func& f);

// f mapped to g*f. Pointwise multiplication by a unit; a genuine group
// action that preserves zero sets.
Func multiplicative_action(const UnitElement& g, const Func& f);

// tau(f, g) = |g| / (|f| + |g|). Takes values in (0, 1] and equals 1 exactly
// on Z(f). Pointwise tau(f, g) + normalized_action(g, f) = 1.
Func tau(const Func& f, const UnitElement& g);

/// Cozero data of the translation f -> g*f for f in some maximal ideal:
// U_{gf} = U_f, so source and target coincide set-wise.
struct CozeroTranslation {
    ZeroSet source; // U_f
    ZeroSet target; // U_{gf}
};

CozeroTranslation cozero_translation(const UnitElement& g, const Func& f);

} // namespace cxdyn

#endif
