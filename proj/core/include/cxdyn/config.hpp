#ifndef CXDYN_CONFIG_HPP
#define CXDYN_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cxdyn/groupoid.hpp"
#include "cxdyn/measure.hpp"
#include "cxdyn/space.hpp"
#include "cxdyn/tangent.hpp"

namespace cxdyn {

struct ToleranceConfig {
    double exact_sum = 1e-12;
    double net_cauchy = 1e-6;
};

struct NamedMeasure {
    std::string name;
    Measure measure;
};

struct NamedTransformation {
    std::string name;
    Transformation map;
};

struct TangentJob {
    std::string name;
    HybridMeasure measure;
    double center;
    int depth;
};

struct ExperimentConfig {
    FiniteSpace space;
    std::uint64_t seed = 0;
    int trials = 1000;
    int measure_trials = 500;
    int trueness_samples = 500;
    int dynamics_samples = 200;
    int cesaro_depth = 64;
    ToleranceConfig tolerances;
    GroupoidConfig groupoid;
    std::vector<NamedMeasure> measures;
    std::vector<NamedTransformation> transformations;
    std::vector<TangentJob> tangent_jobs;
};

// Reference setup on the 8-point circle: the default groupoid slice, a few
// dyadic measures and rotations, and three blow-up jobs (interior Lebesgue,
// an atom, a linear density ramp).
ExperimentConfig default_config();

// Parses and validates a JSON configuration. Missing sections fall back to
// the defaults; anything malformed throws ConfigError naming the offending
// field.
ExperimentConfig parse_config_text(const std::string& json_text);
ExperimentConfig load_config_file(const std::filesystem::path& path);

} // namespace cxdyn

#endif
