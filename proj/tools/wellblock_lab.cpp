#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wellblock/experiment.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_solver = 3;

wellblock::experiment::ExperimentConfig
load_with_overrides(const std::string& config_path, const std::string& out_dir,
                    double tol, bool tol_given) {
    auto cfg = wellblock::experiment::load_config(config_path);
    if (!out_dir.empty()) {
        cfg.output_dir = out_dir;
    } else if (const char* env = std::getenv("WELLBLOCK_OUT"); env && *env) {
        cfg.output_dir = env;
    }
    if (tol_given) {
        if (!(tol >= 1e-14 && tol <= 1e-4))
            throw wellblock::ConfigError("--tol must lie in [1e-14, 1e-4]");
        cfg.solver_tol = tol;
    }
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wellblock-lab: well-block radius experiments"};
    app.set_version_flag("--version", wellblock::experiment::version());
    app.require_subcommand(0, 1);

    std::string config_path, out_dir;
    double tol = 1e-11;

    auto* run = app.add_subcommand("run", "execute an experiment config");
    run->add_option("--config", config_path, "JSON experiment config")
        ->required();
    run->add_option("--out", out_dir,
                    "output directory (overrides config and WELLBLOCK_OUT)");
    auto* tol_opt =
        run->add_option("--tol", tol, "solver relative residual tolerance");

    auto* validate = app.add_subcommand("validate", "check a config and exit");
    validate->add_option("--config", config_path, "JSON experiment config")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e); // also handles --help / --version
    }

    try {
        if (validate->parsed()) {
            const auto cfg = wellblock::experiment::load_config(config_path);
            const auto report = wellblock::experiment::validate(cfg);
            std::cerr << report.text();
            if (!report.valid()) return exit_config;
            std::cout << "config ok: " << wellblock::experiment::to_string(cfg.kind)
                      << '\n';
            return exit_ok;
        }
        if (run->parsed()) {
            const auto cfg = load_with_overrides(config_path, out_dir, tol,
                                                 tol_opt->count() > 0);
            const auto bundle = wellblock::experiment::run_experiment(cfg);
            std::cout << "wrote " << bundle.csv_path.string() << '\n'
                      << "wrote " << bundle.json_path.string() << '\n';
            return exit_ok;
        }
        std::cerr << app.help();
        return exit_config;
    } catch (const wellblock::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const wellblock::SolverError& e) {
        std::cerr << "solver error: " << e.what()
                  << " (residual " << e.residual << " after " << e.iterations
                  << " iterations)\n";
        return exit_solver;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    }
}
