#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cxdyn/config.hpp"
#include "cxdyn/errors.hpp"
#include "cxdyn/report.hpp"
#include "cxdyn/suites.hpp"

int main(int argc, char** argv) {
    CLI::App app{"check suites for function algebras, measures and dynamics on a finite circle"};
    app.require_subcommand(1);

    std::string config_path;
    std::string suite_arg;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool stable = false;

    CLI::App* run = app.add_subcommand("run", "run one suite and print its JSON report");
    run->add_option("--config", config_path, "JSON configuration file")->required();
    run->add_option("--suite", suite_arg,
                    "algebra, action, groupoid, measure, tangent, dynamics, orbits or all")
        ->required();
    CLI::Option* seed_opt = run->add_option("--seed", seed, "override the configured seed");
    run->add_flag("--stable", stable, "omit timestamp and timing so reruns are byte-identical");
    run->add_option("--out", out_dir, "directory to receive report.json and plot CSVs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cxdyn::ExperimentConfig cfg = cxdyn::load_config_file(config_path);
        if (seed_opt->count() > 0)
            cfg.seed = seed;

        const std::optional<cxdyn::Suite> suite = cxdyn::parse_suite(suite_arg);
        if (!suite) {
            std::cerr << "error: unknown suite '" << suite_arg << "'\n";
            return 2;
        }

        const cxdyn::RunReport report = cxdyn::run_suite(cfg, *suite);
        const std::string json = cxdyn::report_to_json(report, stable);
        std::cout << json;

        if (!out_dir.empty()) {
            const std::filesystem::path dir(out_dir);
            std::filesystem::create_directories(dir);
            std::ofstream file(dir / "report.json", std::ios::binary);
            file << json;
            file.close();
            if (!file) {
                std::cerr << "error: cannot write " << (dir / "report.json").string() << "\n";
                return 2;
            }
            cxdyn::emit_plot_data(report, dir);
        }

        return report.pass ? 0 : 1;
    } catch (const cxdyn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
