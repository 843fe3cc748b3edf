#include "wellblock/experiment.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wellblock/fd_grid.hpp"
#include "wellblock/radial_flow.hpp"
#include "wellblock/well_model.hpp"

#ifndef WELLBLOCK_BUILD_HASH
#define WELLBLOCK_BUILD_HASH "unknown"
#endif

namespace wellblock::experiment {

namespace {

using nlohmann::ordered_json;

constexpr const char* kind_names[] = {
    "verify-peaceman", "forchheimer-radius", "dake-compare", "green-check",
    "well-index",
};

ExperimentKind kind_from_string(const std::string& s) {
    for (std::size_t i = 0; i < std::size(kind_names); ++i)
        if (s == kind_names[i]) return static_cast<ExperimentKind>(i);
    throw ConfigError("unknown experiment '" + s +
                      "' (expected one of: verify-peaceman, forchheimer-radius, "
                      "dake-compare, green-check, well-index)");
}

void reject_unknown_keys(const ordered_json& obj, const char* block,
                         std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (item.key() == a) known = true;
        if (!known)
            throw ConfigError(std::string("unknown key '") + item.key() +
                              "' in " + block);
    }
}

double number_field(const ordered_json& obj, const char* block,
                    const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number())
        throw ConfigError(std::string(block) + "." + key + " must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x))
        throw ConfigError(std::string(block) + "." + key + " must be finite");
    return x;
}

// CSV cell formats: reals carry 17 significant digits so a rerun is
// byte-identical and the value round-trips; counts print as integers.
std::string csv_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_int(long long x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", x);
    return buf;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> cells; // preformatted
    std::vector<std::vector<double>> numeric;    // same rows, for the JSON echo
};

void merge_report(ValidationReport& into, const ValidationReport& part) {
    auto add_unique = [](std::vector<std::string>& dst, const std::string& s) {
        for (const auto& have : dst)
            if (have == s) return;
        dst.push_back(s);
    };
    for (const auto& v : part.violations) add_unique(into.violations, v);
    for (const auto& w : part.warnings) add_unique(into.warnings, w);
    // A sweep can straddle both reconstruction regimes; report the
    // branch-2 case if any swept point hits it, matching the warning.
    into.reconstruction_branch =
        std::max(into.reconstruction_branch, part.reconstruction_branch);
}

std::vector<double> effective_sweep(const ExperimentConfig& cfg) {
    if (!cfg.sweep.empty()) return cfg.sweep;
    switch (cfg.kind) {
    case ExperimentKind::VerifyPeaceman:
        return {static_cast<double>(cfg.grid.M)};
    case ExperimentKind::ForchheimerRadius:
    case ExperimentKind::WellIndex:
        return {cfg.well.q};
    case ExperimentKind::DakeCompare:
        return {cfg.grid.delta()};
    case ExperimentKind::GreenCheck:
        return {0.4, 0.2, 0.1};
    }
    throw std::logic_error("unreachable experiment kind");
}

} // namespace

const char* to_string(ExperimentKind kind) {
    return kind_names[static_cast<int>(kind)];
}

ExperimentConfig parse_config(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config root must be a JSON object");
    reject_unknown_keys(doc, "config", {"experiment", "fluid", "grid", "well",
                                        "sweep", "output_dir", "solver_tol"});

    ExperimentConfig cfg;
    if (!doc.contains("experiment") || !doc.at("experiment").is_string())
        throw ConfigError("config requires a string key 'experiment'");
    cfg.kind = kind_from_string(doc.at("experiment").get<std::string>());

    if (doc.contains("fluid")) {
        const auto& f = doc.at("fluid");
        if (!f.is_object()) throw ConfigError("'fluid' must be an object");
        reject_unknown_keys(f, "fluid", {"mu", "k", "h", "beta1"});
        cfg.fluid.mu = number_field(f, "fluid", "mu", cfg.fluid.mu);
        cfg.fluid.k = number_field(f, "fluid", "k", cfg.fluid.k);
        cfg.fluid.h = number_field(f, "fluid", "h", cfg.fluid.h);
        cfg.fluid.beta1 = number_field(f, "fluid", "beta1", cfg.fluid.beta1);
    }
    if (doc.contains("grid")) {
        const auto& g = doc.at("grid");
        if (!g.is_object()) throw ConfigError("'grid' must be an object");
        reject_unknown_keys(g, "grid", {"L", "M"});
        cfg.grid.L = number_field(g, "grid", "L", cfg.grid.L);
        const double m = number_field(g, "grid", "M", cfg.grid.M);
        if (m != std::floor(m) || m < 2 || m > 4096)
            throw ConfigError("grid.M must be an integer in [2, 4096]");
        cfg.grid.M = static_cast<int>(m);
    }
    if (doc.contains("well")) {
        const auto& w = doc.at("well");
        if (!w.is_object()) throw ConfigError("'well' must be an object");
        reject_unknown_keys(w, "well", {"r_w", "theta", "q"});
        cfg.well.r_w = number_field(w, "well", "r_w", cfg.well.r_w);
        // theta follows r_w unless given explicitly
        cfg.well.theta = number_field(w, "well", "theta", cfg.well.r_w);
        cfg.well.q = number_field(w, "well", "q", cfg.well.q);
    }
    if (doc.contains("sweep")) {
        const auto& s = doc.at("sweep");
        if (!s.is_array()) throw ConfigError("'sweep' must be an array of numbers");
        for (const auto& v : s) {
            if (!v.is_number())
                throw ConfigError("'sweep' entries must be numbers");
            const double x = v.get<double>();
            if (!std::isfinite(x) || x <= 0)
                throw ConfigError("'sweep' entries must be positive and finite");
            cfg.sweep.push_back(x);
        }
    }
    if (doc.contains("output_dir")) {
        if (!doc.at("output_dir").is_string())
            throw ConfigError("'output_dir' must be a string");
        cfg.output_dir = doc.at("output_dir").get<std::string>();
        if (cfg.output_dir.empty())
            throw ConfigError("'output_dir' must not be empty");
    }
    cfg.solver_tol = number_field(doc, "config", "solver_tol", cfg.solver_tol);
    if (!(cfg.solver_tol >= 1e-14 && cfg.solver_tol <= 1e-4))
        throw ConfigError("solver_tol must lie in [1e-14, 1e-4]");
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

ValidationReport validate(const ExperimentConfig& cfg) {
    ValidationReport rep;
    const auto sweep = effective_sweep(cfg);
    switch (cfg.kind) {
    case ExperimentKind::VerifyPeaceman:
        if (cfg.well.q == 0)
            rep.violations.push_back(
                "verify-peaceman requires q != 0 (the r0 regression needs flow)");
        for (double m : sweep) {
            if (m != std::floor(m) || m < 2 || m > 4096) {
                rep.violations.push_back(
                    "verify-peaceman sweep entries are grid half-counts M and "
                    "must be integers in [2, 4096]");
                continue;
            }
            merge_report(rep, validate_config(cfg.fluid,
                                              {cfg.grid.L, static_cast<int>(m)},
                                              cfg.well));
        }
        break;
    case ExperimentKind::ForchheimerRadius:
        merge_report(rep, validate_config(cfg.fluid, cfg.grid, cfg.well));
        for (double q : sweep)
            if (q < 0) {
                rep.violations.push_back("forchheimer-radius requires q >= 0");
                break;
            }
        break;
    case ExperimentKind::WellIndex:
        merge_report(rep, validate_config(cfg.fluid, cfg.grid, cfg.well));
        for (double q : sweep)
            if (!(q > 0)) {
                rep.violations.push_back("well-index requires q > 0");
                break;
            }
        // The closed-form column and a positive drawdown both need the
        // strict regime; at delta = e^{pi/2} r_w the drawdown vanishes.
        if (cfg.grid.delta() <= std::exp(pi / 2) * cfg.well.r_w)
            rep.violations.push_back(
                "well-index requires delta > e^{pi/2} r_w (the closed-form "
                "index assumes the strict sewing regime)");
        break;
    case ExperimentKind::DakeCompare:
        merge_report(rep, validate_config(cfg.fluid, cfg.grid, cfg.well));
        for (double d : sweep)
            if (cfg.well.r_w >= d * peaceman_ratio) {
                rep.violations.push_back(
                    "dake-compare requires r_w < delta * e^{-pi/2} for every "
                    "swept spacing");
                break;
            }
        break;
    case ExperimentKind::GreenCheck: {
        merge_report(rep, validate_config(cfg.fluid, cfg.grid, cfg.well));
        if (cfg.well.q == 0)
            rep.violations.push_back(
                "green-check requires q != 0 (the field check needs flow)");
        const double spacing = cfg.grid.delta();
        for (double f : sweep) {
            if (f >= 0.5) {
                rep.violations.push_back(
                    "green-check probe fractions must be below 0.5 (the probe "
                    "disc must fit well inside the domain)");
                break;
            }
            if (f * cfg.grid.L * peaceman_ratio < spacing) {
                rep.violations.push_back(
                    "green-check probe fraction under-resolved: "
                    "f * L * e^{-pi/2} must be at least one grid spacing");
                break;
            }
        }
        break;
    }
    }
    return rep;
}

namespace {

Table run_verify_peaceman(const ExperimentConfig& cfg,
                          const std::vector<double>& sweep) {
    Table t;
    t.columns = {"M",           "delta",         "p0",    "p1",
                 "p1_minus_p0", "r0_over_delta", "slope", "fit_rms"};
    for (double m : sweep) {
        const GridSpec grid{cfg.grid.L, static_cast<int>(m)};
        const auto field =
            fd::solve(fd::assemble(grid, cfg.fluid, cfg.well.q), cfg.solver_tol);
        const auto bp = fd::block_pressures(field);
        const auto est = fd::estimate_r0_numeric(field, cfg.fluid, cfg.well.q);
        t.cells.push_back({csv_int(grid.M), csv_real(grid.delta()),
                           csv_real(bp.p0), csv_real(bp.p1),
                           csv_real(bp.p1 - bp.p0), csv_real(est.r0_over_delta),
                           csv_real(est.slope), csv_real(est.fit_rms)});
        t.numeric.push_back({static_cast<double>(grid.M), grid.delta(), bp.p0,
                             bp.p1, bp.p1 - bp.p0, est.r0_over_delta, est.slope,
                             est.fit_rms});
    }
    return t;
}

Table run_forchheimer_radius(const ExperimentConfig& cfg,
                             const std::vector<double>& sweep) {
    Table t;
    t.columns = {"q", "delta_factor", "r0", "r0_over_delta"};
    const double spacing = cfg.grid.delta();
    for (double q : sweep) {
        const auto fr = well::forchheimer_radius(cfg.fluid, q, spacing);
        t.cells.push_back({csv_real(q), csv_real(fr.delta_factor),
                           csv_real(fr.r0), csv_real(fr.r0 / spacing)});
        t.numeric.push_back({q, fr.delta_factor, fr.r0, fr.r0 / spacing});
    }
    return t;
}

Table run_dake_compare(const ExperimentConfig& cfg,
                       const std::vector<double>& sweep) {
    Table t;
    t.columns = {"delta", "drop_simulator", "drop_correct", "difference",
                 "beta_q2_over_4pi2_delta"};
    for (double d : sweep) {
        const double sim =
            well::dake_drop_simulator(cfg.well.q, cfg.fluid, d, cfg.well.r_w);
        const double correct =
            well::dake_drop_correct(cfg.well.q, cfg.fluid, d, cfg.well.r_w);
        const double tail = cfg.fluid.beta() * cfg.well.q * cfg.well.q /
                            (4 * pi * pi * d);
        t.cells.push_back({csv_real(d), csv_real(sim), csv_real(correct),
                           csv_real(sim - correct), csv_real(tail)});
        t.numeric.push_back({d, sim, correct, sim - correct, tail});
    }
    return t;
}

Table run_green_check(const ExperimentConfig& cfg,
                      const std::vector<double>& sweep) {
    Table t;
    t.columns = {"delta", "r0", "value_disk", "value_fd"};
    const auto field =
        fd::solve(fd::assemble(cfg.grid, cfg.fluid, cfg.well.q), cfg.solver_tol);
    for (double f : sweep) {
        const double probe = f * cfg.grid.L;
        const auto disk = fd::green_oscillation_check(cfg.grid.L, probe);
        const auto square =
            fd::green_oscillation_check_fd(field, cfg.fluid, cfg.well.q, probe);
        t.cells.push_back({csv_real(probe), csv_real(disk.r0_used),
                           csv_real(disk.value), csv_real(square.value)});
        t.numeric.push_back({probe, disk.r0_used, disk.value, square.value});
    }
    return t;
}

Table run_well_index(const ExperimentConfig& cfg,
                     const std::vector<double>& sweep) {
    Table t;
    t.columns = {"q", "drop", "t_w", "t_w_closed_form"};
    const double spacing = cfg.grid.delta();
    const double alpha = cfg.fluid.alpha();
    // The well index is invariant to the pressure datum; rows use p0 = 0.
    const double closed = 2 * pi * cfg.fluid.k * cfg.fluid.h /
                          std::log(spacing * peaceman_ratio / cfg.well.r_w);
    for (double q : sweep) {
        const double p_w =
            radial::reconstruct_pw_darcy(0.0, q, alpha, spacing, cfg.well.r_w);
        const double drop = 0.0 - p_w;
        const double t_w = well::well_index(q, cfg.fluid.mu, 0.0, p_w);
        t.cells.push_back(
            {csv_real(q), csv_real(drop), csv_real(t_w), csv_real(closed)});
        t.numeric.push_back({q, drop, t_w, closed});
    }
    return t;
}

ordered_json config_echo(const ExperimentConfig& cfg,
                         const std::vector<double>& sweep) {
    ordered_json j;
    j["experiment"] = to_string(cfg.kind);
    j["fluid"] = {{"mu", cfg.fluid.mu},
                  {"k", cfg.fluid.k},
                  {"h", cfg.fluid.h},
                  {"beta1", cfg.fluid.beta1}};
    j["grid"] = {{"L", cfg.grid.L}, {"M", cfg.grid.M}};
    j["well"] = {{"r_w", cfg.well.r_w},
                 {"theta", cfg.well.theta},
                 {"q", cfg.well.q}};
    j["sweep"] = sweep;
    j["output_dir"] = cfg.output_dir.string();
    j["solver_tol"] = cfg.solver_tol;
    return j;
}

} // namespace

ReportBundle run_experiment(const ExperimentConfig& cfg) {
    const auto report = validate(cfg);
    if (!report.valid())
        throw ConfigError("config rejected:\n" + report.text());

    const auto sweep = effective_sweep(cfg);
    Table table;
    switch (cfg.kind) {
    case ExperimentKind::VerifyPeaceman:
        table = run_verify_peaceman(cfg, sweep);
        break;
    case ExperimentKind::ForchheimerRadius:
        table = run_forchheimer_radius(cfg, sweep);
        break;
    case ExperimentKind::DakeCompare:
        table = run_dake_compare(cfg, sweep);
        break;
    case ExperimentKind::GreenCheck:
        table = run_green_check(cfg, sweep);
        break;
    case ExperimentKind::WellIndex:
        table = run_well_index(cfg, sweep);
        break;
    }

    std::filesystem::create_directories(cfg.output_dir);
    const std::string name = to_string(cfg.kind);
    ReportBundle bundle{cfg.output_dir / (name + ".csv"),
                        cfg.output_dir / (name + ".json")};

    {
        std::ofstream csv(bundle.csv_path, std::ios::binary);
        if (!csv)
            throw ConfigError("cannot write " + bundle.csv_path.string());
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            csv << (c ? "," : "") << table.columns[c];
        csv << '\n';
        for (const auto& row : table.cells) {
            for (std::size_t c = 0; c < row.size(); ++c)
                csv << (c ? "," : "") << row[c];
            csv << '\n';
        }
    }
    {
        ordered_json summary;
        summary["experiment"] = name;
        summary["version"] = version();
        summary["config"] = config_echo(cfg, sweep);
        summary["csv"] = bundle.csv_path.filename().string();
        summary["columns"] = table.columns;
        summary["rows"] = table.numeric;
        std::ofstream js(bundle.json_path, std::ios::binary);
        if (!js)
            throw ConfigError("cannot write " + bundle.json_path.string());
        js << summary.dump(2) << '\n';
    }
    return bundle;
}

std::string version() {
    return std::string("0.1.0+") + WELLBLOCK_BUILD_HASH;
}

} // namespace wellblock::experiment
