#pragma once

#include <filesystem>

#include "wellblock/types.hpp"

namespace wellblock::experiment {

enum class ExperimentKind {
    VerifyPeaceman,    // FD solve per grid, block pressures, r0 regression
    ForchheimerRadius, // delta factor and r0 across a rate sweep
    DakeCompare,       // simulator vs corrected inflow drop across spacings
    GreenCheck,        // oscillation check, analytic disk and FD square
    WellIndex,         // well index across a rate sweep
};

const char* to_string(ExperimentKind kind);

/// Full experiment description. "sweep" is the per-experiment abscissa:
/// grid half-counts M (verify-peaceman), rates q (forchheimer-radius,
/// well-index), block spacings Delta (dake-compare), or probe radii as
/// fractions of L (green-check). An empty sweep falls back to the
/// single value implied by grid/well.
struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::VerifyPeaceman;
    FluidRockParams fluid{1.0, 1.0, 1.0, 0.0};
    GridSpec grid{1.0, 64};
    WellSpec well{0.01, 0.01, 1.0};
    std::vector<double> sweep;
    std::filesystem::path output_dir = "out";
    double solver_tol = 1e-11;
};

/// Parses the JSON config text. Fail-closed: unknown keys anywhere,
/// wrong types, or out-of-domain values raise ConfigError. "theta"
/// defaults to r_w, "beta1" to 0.
ExperimentConfig parse_config(const std::string& json_text);

/// Reads and parses a config file. Missing or unreadable file raises
/// ConfigError.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Runs core validation for every parameter set the sweep will touch.
/// Returns the merged report; callers treat violations as config errors.
ValidationReport validate(const ExperimentConfig& cfg);

struct ReportBundle {
    std::filesystem::path csv_path;
    std::filesystem::path json_path;
};

/// Executes the experiment and writes <name>.csv and <name>.json into
/// output_dir (created if absent). CSV: ',' delimiter, '.' decimal
/// point, LF line endings, reals at 17 significant digits; reruns are
/// byte-identical. The JSON summary echoes the config and the rows.
/// Throws ConfigError on validation failure, SolverError from the grid.
ReportBundle run_experiment(const ExperimentConfig& cfg);

/// Version string "major.minor.patch+<build hash>".
std::string version();

} // namespace wellblock::experiment
