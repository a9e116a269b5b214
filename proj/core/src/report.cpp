#include "cxdyn/report.hpp"

#include <algorithm>
#include <fstream>

#include "json.hpp"

#include "cxdyn/errors.hpp"

namespace cxdyn {

void finalize_report(RunReport& report) {
    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const CheckResult& c) { return !c.asserted || c.pass; });
}

std::string report_to_json(const RunReport& report, bool stable) {
    nlohmann::json j;
    j["schema"] = "1";
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    j["pass"] = report.pass;

    std::size_t failed = 0;
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : report.checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["asserted"] = c.asserted;
        jc["pass"] = c.pass;
        jc["residual"] = c.residual;
        if (!c.metrics.empty())
            jc["metrics"] = c.metrics;
        if (!c.note.empty())
            jc["note"] = c.note;
        checks.push_back(std::move(jc));
        if (c.asserted && !c.pass)
            ++failed;
    }
    j["checks"] = std::move(checks);
    j["summary"] = {{"checks", report.checks.size()}, {"failed", failed}};

    nlohmann::json series;
    nlohmann::json tangent = nlohmann::json::array();
    for (const TangentSeriesRow& r : report.tangent_series)
        tangent.push_back({{"job", r.job},
                           {"k", r.k},
                           {"radius", r.radius},
                           {"normalizer", r.normalizer},
                           {"i0", r.i0},
                           {"i1", r.i1},
                           {"i2", r.i2},
                           {"i3", r.i3},
                           {"increment", r.increment}});
    series["tangent"] = std::move(tangent);
    nlohmann::json cesaro = nlohmann::json::array();
    for (const CesaroSeriesRow& r : report.cesaro_series)
        cesaro.push_back({{"measure", r.measure},
                          {"map", r.map},
                          {"T", r.T},
                          {"distance", r.distance}});
    series["cesaro"] = std::move(cesaro);
    nlohmann::json residuals = nlohmann::json::array();
    for (const ResidualSeriesRow& r : report.residual_series)
        residuals.push_back(
            {{"triple", r.triple}, {"point", r.point}, {"residual", r.residual}});
    series["cocycle_residuals"] = std::move(residuals);
    j["series"] = std::move(series);

    if (!stable) {
        j["timestamp"] = report.timestamp;
        j["wall_time_ms"] = report.wall_time_ms;
    }
    return j.dump(2) + "\n";
}

namespace {

std::ofstream open_csv(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("emit_plot_data: cannot open " + path.string());
    return out;
}

// Shortest round-trip decimal form, same as the JSON serializer uses.
std::string num(double v) { return nlohmann::json(v).dump(); }

} // namespace

void emit_plot_data(const RunReport& report, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);

    if (report.tangent_series.empty()) {
        auto out = open_csv(out_dir / "tangent.csv");
        out << "k,I0,I1,I2,I3,increment\n";
    } else {
        std::vector<std::string> jobs;
        for (const TangentSeriesRow& r : report.tangent_series)
            if (std::find(jobs.begin(), jobs.end(), r.job) == jobs.end())
                jobs.push_back(r.job);
        for (const std::string& job : jobs) {
            auto out = open_csv(out_dir / ("tangent_" + job + ".csv"));
            out << "k,I0,I1,I2,I3,increment\n";
            for (const TangentSeriesRow& r : report.tangent_series)
                if (r.job == job)
                    out << r.k << ',' << num(r.i0) << ',' << num(r.i1) << ','
                        << num(r.i2) << ',' << num(r.i3) << ',' << num(r.increment)
                        << '\n';
        }
    }

    if (report.cesaro_series.empty()) {
        auto out = open_csv(out_dir / "dynamics_cesaro.csv");
        out << "T,distance_to_invariant\n";
    } else {
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const CesaroSeriesRow& r : report.cesaro_series) {
            const auto key = std::make_pair(r.measure, r.map);
            if (std::find(pairs.begin(), pairs.end(), key) == pairs.end())
                pairs.push_back(key);
        }
        for (const auto& [measure, map] : pairs) {
            auto out = open_csv(out_dir / ("dynamics_" + measure + "_" + map + ".csv"));
            out << "T,distance_to_invariant\n";
            for (const CesaroSeriesRow& r : report.cesaro_series)
                if (r.measure == measure && r.map == map)
                    out << r.T << ',' << num(r.distance) << '\n';
        }
    }

    {
        auto out = open_csv(out_dir / "groupoid_residuals.csv");
        out << "triple,point,residual\n";
        for (const ResidualSeriesRow& r : report.residual_series)
            out << r.triple << ',' << r.point << ',' << num(r.residual) << '\n';
    }
}

} // namespace cxdyn
