#ifndef CXDYN_REPORT_HPP
#define CXDYN_REPORT_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "cxdyn/space.hpp"

namespace cxdyn {

// One named verification. Asserted checks decide the run's pass flag;
// informational rows record observed quantities without judging them.
struct CheckResult {
    std::string name;
    bool asserted = true;
    bool pass = true;
    double residual = 0.0;
    std::map<std::string, double> metrics;
    std::string note;
};

struct TangentSeriesRow {
    std::string job;
    int k;
    double radius;
    double normalizer;
    double i0, i1, i2, i3;
    double increment;
};

struct CesaroSeriesRow {
    std::string measure;
    std::string map;
    int T;
    double distance;
};

struct ResidualSeriesRow {
    std::size_t triple;
    Point point;
    double residual;
};

struct RunReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    std::vector<TangentSeriesRow> tangent_series;
    std::vector<CesaroSeriesRow> cesaro_series;
    std::vector<ResidualSeriesRow> residual_series;
    double wall_time_ms = 0.0;
    std::string timestamp;
    bool pass = true;
};

// Sorts checks by name and recomputes the pass flag from the asserted rows.
void finalize_report(RunReport& report);

// Serialized report, schema "1". With stable set, the timestamp and timing
// fields are left out so that identical runs serialize to identical bytes.
std::string report_to_json(const RunReport& report, bool stable);

// CSV companions for plotting: one file per tangent job (k, I0..I3,
// increment), one per Cesaro pair (T, distance_to_invariant), one for the
// cocycle residuals (triple, point, residual). Empty series leave
// header-only files.
void emit_plot_data(const RunReport& report, const std::filesystem::path& out_dir);

} // namespace cxdyn

#endif
