#include "cxdyn/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cxdyn/errors.hpp"

namespace cxdyn {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ConfigError("config: " + where + ": " + what);
}

double get_number(const json& j, const std::string& where) {
    if (!j.is_number())
        fail(where, "expected a number");
    return j.get<double>();
}

int get_int(const json& j, const std::string& where, int lo, int hi) {
    if (!j.is_number_integer())
        fail(where, "expected an integer");
    const auto v = j.get<std::int64_t>();
    if (v < lo || v > hi)
        fail(where, "out of range");
    return static_cast<int>(v);
}

std::string sanitize_name(const std::string& raw) {
    std::string out;
    for (char c : raw)
        out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return out.empty() ? std::string("unnamed") : out;
}

std::string get_name(const json& j, const std::string& fallback) {
    if (j.contains("name")) {
        if (!j["name"].is_string())
            fail(fallback, "name must be a string");
        return sanitize_name(j["name"].get<std::string>());
    }
    return fallback;
}

std::vector<double> get_values(const json& j, const FiniteSpace& space,
                               const std::string& where) {
    if (j.is_number())
        return std::vector<double>(static_cast<std::size_t>(space.size()),
                                   j.get<double>());
    if (!j.is_array())
        fail(where, "expected an array of values or a constant");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number())
            fail(where, "expected numeric entries");
        out.push_back(v.get<double>());
    }
    if (out.size() != static_cast<std::size_t>(space.size()))
        fail(where, "expected one value per point");
    return out;
}

template <typename Fn>
auto wrap(const std::string& where, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        fail(where, e.what());
    }
}

GroupoidConfig parse_groupoid(const json& j, const FiniteSpace& space) {
    GroupoidConfig cfg = default_groupoid_config(space);
    if (j.contains("base_point"))
        cfg.base_point = static_cast<Point>(
            get_int(j["base_point"], "groupoid.base_point", 0, space.size() - 1));
    if (j.contains("closure_depth"))
        cfg.closure_depth = get_int(j["closure_depth"], "groupoid.closure_depth", 0, 8);
    if (j.contains("units")) {
        if (!j["units"].is_array() || j["units"].empty())
            fail("groupoid.units", "expected a nonempty array");
        cfg.units.clear();
        std::size_t i = 0;
        for (const auto& u : j["units"]) {
            const std::string where = "groupoid.units[" + std::to_string(i++) + "]";
            cfg.units.push_back(
                wrap(where, [&] { return Func(space, get_values(u, space, where)); }));
        }
    }
    if (j.contains("ideal_seeds")) {
        if (!j["ideal_seeds"].is_array() || j["ideal_seeds"].empty())
            fail("groupoid.ideal_seeds", "expected a nonempty array");
        cfg.ideal_seeds.clear();
        std::size_t i = 0;
        for (const auto& f : j["ideal_seeds"]) {
            const std::string where = "groupoid.ideal_seeds[" + std::to_string(i++) + "]";
            cfg.ideal_seeds.push_back(
                wrap(where, [&] { return Func(space, get_values(f, space, where)); }));
        }
    }
    return cfg;
}

HybridMeasure parse_hybrid(const json& j, const std::string& where) {
    std::vector<Atom> atoms;
    if (j.contains("atoms")) {
        if (!j["atoms"].is_array())
            fail(where + ".atoms", "expected an array of [location, mass] pairs");
        for (const auto& a : j["atoms"]) {
            if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number())
                fail(where + ".atoms", "expected [location, mass] pairs");
            atoms.push_back(Atom{a[0].get<double>(), a[1].get<double>()});
        }
    }
    std::vector<double> breakpoints;
    std::vector<double> values;
    if (j.contains("breakpoints")) {
        for (const auto& b : j["breakpoints"]) {
            if (!b.is_number())
                fail(where + ".breakpoints", "expected numbers");
            breakpoints.push_back(b.get<double>());
        }
    }
    if (j.contains("values")) {
        for (const auto& v : j["values"]) {
            if (!v.is_number())
                fail(where + ".values", "expected numbers");
            values.push_back(v.get<double>());
        }
    }
    if (breakpoints.empty() != values.empty())
        fail(where, "breakpoints and values must be given together");
    return wrap(where, [&] {
        if (breakpoints.empty())
            return HybridMeasure(std::move(atoms), PiecewiseDensity());
        return HybridMeasure::on_unit_interval(IntervalModel(breakpoints), values,
                                               std::move(atoms));
    });
}

} // namespace

ExperimentConfig default_config() {
    const FiniteSpace space = make_circle_space(8);
    ExperimentConfig cfg{space,
                         0,
                         1000,
                         500,
                         500,
                         200,
                         64,
                         ToleranceConfig{},
                         default_groupoid_config(space),
                         {},
                         {},
                         {}};

    cfg.measures.push_back(NamedMeasure{"uniform", Measure::uniform(space)});
    cfg.measures.push_back(NamedMeasure{
        "dyadic_blocks",
        Measure(space, {0.25, 0.25, 0.125, 0.125, 0.0625, 0.0625, 0.0625, 0.0625})});
    cfg.measures.push_back(NamedMeasure{"dirac0", Measure::dirac(space, 0)});
    cfg.measures.push_back(NamedMeasure{
        "two_cycle_blend",
        Measure(space, {0.125, 0.0625, 0.125, 0.0625, 0.125, 0.0625, 0.125, 0.0625})});

    cfg.transformations.push_back(
        NamedTransformation{"rot1", Transformation::rotation(space, 1)});
    cfg.transformations.push_back(
        NamedTransformation{"rot2", Transformation::rotation(space, 2)});
    cfg.transformations.push_back(
        NamedTransformation{"identity", Transformation::identity(space)});
    cfg.transformations.push_back(
        NamedTransformation{"collapse", Transformation(space, {0, 0, 2, 2, 4, 4, 6, 6})});

    cfg.tangent_jobs.push_back(TangentJob{
        "lebesgue_interior",
        HybridMeasure({}, PiecewiseDensity::constant({0.0, 1.0}, {1.0})), 0.5, 24});
    cfg.tangent_jobs.push_back(TangentJob{
        "dirac_atom", HybridMeasure({Atom{0.5, 1.0}}, PiecewiseDensity()), 0.5, 24});
    cfg.tangent_jobs.push_back(TangentJob{
        "linear_profile",
        HybridMeasure({}, PiecewiseDensity::linear({0.0, 1.0}, {0.0, 2.0})), 0.0, 24});
    return cfg;
}

ExperimentConfig parse_config_text(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ConfigError("config: top level must be an object");

    Point n = 8;
    if (j.contains("space")) {
        const auto& s = j["space"];
        if (!s.is_object() || !s.contains("points"))
            fail("space", "expected an object with a points count");
        n = static_cast<Point>(get_int(s["points"], "space.points", 1, 1 << 20));
    }
    const FiniteSpace space =
        wrap("space", [&] { return make_circle_space(n); });

    ExperimentConfig cfg = default_config();
    const bool same_space = space == cfg.space;
    cfg.space = space;
    if (!same_space) {
        // Point-indexed defaults only fit the default space.
        cfg.groupoid = default_groupoid_config(space);
        cfg.measures.clear();
        cfg.measures.push_back(NamedMeasure{"uniform", Measure::uniform(space)});
        cfg.transformations.clear();
        cfg.transformations.push_back(
            NamedTransformation{"rot1", Transformation::rotation(space, 1)});
        cfg.transformations.push_back(
            NamedTransformation{"identity", Transformation::identity(space)});
    }

    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
            fail("seed", "expected an integer");
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("trials"))
        cfg.trials = get_int(j["trials"], "trials", 1, 1000000);
    if (j.contains("measure_trials"))
        cfg.measure_trials = get_int(j["measure_trials"], "measure_trials", 1, 1000000);
    if (j.contains("trueness_samples"))
        cfg.trueness_samples =
            get_int(j["trueness_samples"], "trueness_samples", 1, 1000000);
    if (j.contains("dynamics_samples"))
        cfg.dynamics_samples =
            get_int(j["dynamics_samples"], "dynamics_samples", 1, 1000000);
    if (j.contains("cesaro_depth"))
        cfg.cesaro_depth = get_int(j["cesaro_depth"], "cesaro_depth", 1, 1 << 20);

    if (j.contains("tolerances")) {
        const auto& t = j["tolerances"];
        if (!t.is_object())
            fail("tolerances", "expected an object");
        if (t.contains("exact_sum")) {
            cfg.tolerances.exact_sum = get_number(t["exact_sum"], "tolerances.exact_sum");
            if (!(cfg.tolerances.exact_sum > 0.0))
                fail("tolerances.exact_sum", "must be positive");
        }
        if (t.contains("net_cauchy")) {
            cfg.tolerances.net_cauchy =
                get_number(t["net_cauchy"], "tolerances.net_cauchy");
            if (!(cfg.tolerances.net_cauchy > 0.0))
                fail("tolerances.net_cauchy", "must be positive");
        }
    }

    if (j.contains("groupoid")) {
        if (!j["groupoid"].is_object())
            fail("groupoid", "expected an object");
        cfg.groupoid = parse_groupoid(j["groupoid"], space);
    }

    if (j.contains("measures")) {
        if (!j["measures"].is_array() || j["measures"].empty())
            fail("measures", "expected a nonempty array");
        cfg.measures.clear();
        std::size_t i = 0;
        for (const auto& m : j["measures"]) {
            const std::string where = "measures[" + std::to_string(i) + "]";
            if (!m.is_object() || !m.contains("weights"))
                fail(where, "expected an object with weights");
            const std::string name = get_name(m, "measure" + std::to_string(i));
            Measure measure = wrap(where + ".weights", [&] {
                return Measure(space, get_values(m["weights"], space, where + ".weights"));
            });
            cfg.measures.push_back(NamedMeasure{name, std::move(measure)});
            ++i;
        }
    }

    if (j.contains("transformations")) {
        if (!j["transformations"].is_array() || j["transformations"].empty())
            fail("transformations", "expected a nonempty array");
        cfg.transformations.clear();
        std::size_t i = 0;
        for (const auto& t : j["transformations"]) {
            const std::string where = "transformations[" + std::to_string(i) + "]";
            if (!t.is_object())
                fail(where, "expected an object");
            const std::string name = get_name(t, "map" + std::to_string(i));
            if (t.contains("rotation")) {
                const int shift =
                    get_int(t["rotation"], where + ".rotation", -space.size(), space.size());
                cfg.transformations.push_back(NamedTransformation{
                    name, Transformation::rotation(space, static_cast<Point>(shift))});
            } else if (t.contains("map")) {
                if (!t["map"].is_array() ||
                    t["map"].size() != static_cast<std::size_t>(space.size()))
                    fail(where + ".map", "expected one image point per point");
                std::vector<Point> map;
                for (const auto& y : t["map"])
                    map.push_back(static_cast<Point>(
                        get_int(y, where + ".map", 0, space.size() - 1)));
                cfg.transformations.push_back(NamedTransformation{
                    name, wrap(where + ".map",
                               [&] { return Transformation(space, std::move(map)); })});
            } else {
                fail(where, "expected a map array or a rotation shift");
            }
            ++i;
        }
    }

    if (j.contains("tangent_jobs")) {
        if (!j["tangent_jobs"].is_array() || j["tangent_jobs"].empty())
            fail("tangent_jobs", "expected a nonempty array");
        cfg.tangent_jobs.clear();
        std::size_t i = 0;
        for (const auto& job : j["tangent_jobs"]) {
            const std::string where = "tangent_jobs[" + std::to_string(i) + "]";
            if (!job.is_object() || !job.contains("measure"))
                fail(where, "expected an object with a measure");
            TangentJob parsed{get_name(job, "job" + std::to_string(i)),
                              parse_hybrid(job["measure"], where + ".measure"),
                              0.5, 24};
            if (job.contains("center")) {
                parsed.center = get_number(job["center"], where + ".center");
                if (!std::isfinite(parsed.center))
                    fail(where + ".center", "must be finite");
            }
            if (job.contains("depth"))
                parsed.depth = get_int(job["depth"], where + ".depth", 1, 64);
            cfg.tangent_jobs.push_back(std::move(parsed));
            ++i;
        }
    }

    return cfg;
}

ExperimentConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("config: cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

} // namespace cxdyn
