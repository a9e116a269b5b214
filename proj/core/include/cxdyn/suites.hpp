#ifndef CXDYN_SUITES_HPP
#define CXDYN_SUITES_HPP

#include <optional>
#include <string>

#include "cxdyn/config.hpp"
#include "cxdyn/report.hpp"

namespace cxdyn {

enum class Suite { algebra, action, groupoid, measure, tangent, dynamics, orbits, all };

std::optional<Suite> parse_suite(const std::string& name);
std::string suite_name(Suite suite);

// Runs the named suite's checks against the configuration. Deterministic for
// a fixed configuration and seed. Informational rows never fail a run;
// report.pass reflects the asserted rows only.
RunReport run_suite(const ExperimentConfig& cfg, Suite suite);

} // namespace cxdyn

#endif
