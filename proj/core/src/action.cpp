#include "cxdyn/action.hpp"

#include <cmath>

#include "cxdyn/errors.hpp"

namespace cxdyn {

UnitElement::UnitElement(Func g) : g_(std::move(g)) {
    if (!is_unit(g_))
        throw InvalidArgument("UnitElement: function vanishes somewhere");
}

UnitElement UnitElement::identity(const FiniteSpace& space) {
    return UnitElement(Func::constant(space, 1.0));
}

UnitElement UnitElement::inverse() const { return UnitElement(unit_inverse(g_)); }

UnitElement operator*(const UnitElement& a, const UnitElement& b) {
    return UnitElement(a.g_ * b.g_);
}

namespace {
void check_same_space(const UnitElement& g, const Func& f) {
    if (!(g.space() == f.space()))
        throw InvalidArgument("action: unit and function live on different spaces");
}
} // namespace

Func normalized_action(const UnitElement& g, const Func& f) {
    check_same_space(g, f);
    std::vector<double> out(static_cast<std::size_t>(f.size()));
    for (Point x = 0; x < f.size(); ++x) {
        const double af = std::fabs(f.value(x));
        const double ag = std::fabs(g.func().value(x));
        out[static_cast<std::size_t>(x)] = af / (af + ag);
    }
    return Func(f.space(), std::move(out));
}

Func multiplicative_action(const UnitElement& g, const Func& f) {
    check_same_space(g, f);
    return g.func() * f;
}

Func tau(const Func& f, const UnitElement& g) {
    check_same_space(g, f);
    std::vector<double> out(static_cast<std::size_t>(f.size()));
    for (Point x = 0; x < f.size(); ++x) {
        const double af = std::fabs(f.value(x));
        const double ag = std::fabs(g.func().value(x));
        out[static_cast<std::size_t>(x)] = ag / (af + ag);
    }
    return Func(f.space(), std::move(out));
}

CozeroTranslation cozero_translation(const UnitElement& g, const Func& f) {
    check_same_space(g, f);
    if (is_unit(f))
        throw InvalidArgument("cozero_translation: f must lie in a maximal ideal");
    return CozeroTranslation{cozero_set(f), cozero_set(multiplicative_action(g, f))};
}

} // namespace cxdyn
