// Acceptance gate for the library and CLI. Each numbered check prints
// one PASS/FAIL line; the process exits nonzero if any check fails.
// Tolerances are fixed here, not configurable.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "wellblock/experiment.hpp"
#include "wellblock/fd_grid.hpp"
#include "wellblock/radial_flow.hpp"
#include "wellblock/well_model.hpp"

using namespace wellblock;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int number, const char* title, bool ok, const std::string& detail) {
    std::printf("%s %2d: %s (%s)\n", ok ? "PASS" : "FAIL", number, title,
                detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// Bisection root of the delta-factor equation, written independently of
// the library's Newton iteration.
double bisect_delta(double alpha, double beta, double q, double spacing,
                    int iterations) {
    auto F = [&](double d) {
        return d + beta * q / (alpha * pi * pi) *
                       (std::exp(d * pi / 2) - 1.0) / spacing - 1.0;
    };
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (F(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main() {
    const FluidRockParams unit{1.0, 1.0, 1.0, 0.0};

    // 1. The Darcy equivalent radius is delta * e^{-pi/2}.
    {
        const double r0 = well::peaceman_radius_darcy(1.0);
        const double err = std::fabs(r0 - 0.20787957635076193);
        report(1, "equivalent radius constant", err <= 1e-12,
               "r0(1) = " + fmt(r0) + ", err " + fmt(err));
    }

    // 2. Material balance on the M = 64 grid: p1 - p0 = alpha q / 4.
    const PressureField field64 =
        fd::solve(fd::assemble({1.0, 64}, unit, 1.0), 1e-11);
    {
        const auto bp = fd::block_pressures(field64);
        const double err = std::fabs(bp.p1 - bp.p0 - 0.25);
        report(2, "material balance at M=64", err <= 1e-9,
               "p1-p0 = " + fmt(bp.p1 - bp.p0) + ", err " + fmt(err));
    }

    // 3. The fitted well-block radius and slope of the M = 64 field.
    {
        const auto est = fd::estimate_r0_numeric(field64, unit, 1.0);
        const double slope_err =
            std::fabs(est.slope - 1.0 / (2 * pi)) / (1.0 / (2 * pi));
        const bool ok = est.r0_over_delta >= 0.19 && est.r0_over_delta <= 0.21 &&
                        slope_err <= 0.02;
        report(3, "fitted radius ratio and slope", ok,
               "r0/delta = " + fmt(est.r0_over_delta) + ", slope rel err " +
                   fmt(slope_err));
    }

    // 4. Exact Darcy degeneration of the Forchheimer path.
    {
        const double d = well::solve_delta({1.0, 0.0, 3.0, 2.0});
        const auto fr = well::forchheimer_radius({1, 1, 1, 0.0}, 3.0, 2.0);
        const radial::Annulus a{0.05, 1.4};
        const double gap = std::fabs(radial::forchheimer_drop(2.0, 1.5, 0.0, a) -
                                     radial::darcy_drop(2.0, 1.5, a));
        const bool ok = d == 1.0 && fr.delta_factor == 1.0 &&
                        fr.r0 == well::peaceman_radius_darcy(2.0) && gap <= 1e-14;
        report(4, "darcy degeneration is exact", ok,
               "delta = " + fmt(d) + ", drop gap " + fmt(gap));
    }

    // 5. Newton agrees with a 60-step bisection oracle at the reference point.
    {
        const double newton = well::solve_delta({1.0, 1.0, 1.0, 1.0});
        const double oracle = bisect_delta(1.0, 1.0, 1.0, 1.0, 60);
        const double err = std::fabs(newton - oracle);
        report(5, "delta-factor root vs bisection oracle", err <= 1e-12,
               "newton " + fmt(newton) + ", oracle " + fmt(oracle) + ", err " +
                   fmt(err));
    }

    // 6. The sewn radius closes the material balance across random parameters.
    {
        std::mt19937_64 rng(101);
        std::uniform_real_distribution<double> ua(0.2, 5.0), ub(0.0, 2.0),
            uq(0.2, 5.0), ud(0.5, 2.0), uw(0.1, 0.9);
        double worst = 0.0;
        int checked = 0;
        while (checked < 100) {
            const double alpha = ua(rng), beta = ub(rng), q = uq(rng),
                         spacing = ud(rng);
            if (beta * q / (alpha * spacing) > 20.0) continue;
            const FluidRockParams fluid{alpha, 1.0, 1.0, beta};
            const auto fr = well::forchheimer_radius(fluid, q, spacing);
            const double r_w = uw(rng) * fr.r0;
            const double p1 =
                radial::forchheimer_drop(q, alpha, beta, {r_w, spacing});
            const double p0 =
                radial::forchheimer_drop(q, alpha, beta, {r_w, fr.r0});
            worst = std::max(worst, std::fabs((p1 - p0) / (alpha * q / 4) - 1.0));
            ++checked;
        }
        report(6, "sewing closes the material balance (100 draws)",
               worst <= 1e-12, "worst rel err " + fmt(worst));
    }

    // 7. The two inflow formulas differ by exactly -beta q^2 / (4 pi^2 delta).
    {
        std::mt19937_64 rng(102);
        std::uniform_real_distribution<double> u(0.2, 5.0), uw(0.1, 0.9);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const FluidRockParams fluid{u(rng), u(rng), u(rng), u(rng)};
            const double q = u(rng), spacing = u(rng);
            const double r_w = uw(rng) * well::peaceman_radius_darcy(spacing);
            const double gap = well::dake_drop_correct(q, fluid, spacing, r_w) -
                               well::dake_drop_simulator(q, fluid, spacing, r_w);
            const double expected =
                -fluid.beta() * q * q / (4 * pi * pi * spacing);
            worst = std::max(worst, std::fabs(gap / expected - 1.0));
        }
        double worst_scaling = 0.0;
        const FluidRockParams fluid{1, 1, 1, 1};
        for (double spacing : {1.0, 10.0, 100.0}) {
            const double gap = well::dake_drop_correct(2.0, fluid, spacing, 0.01) -
                               well::dake_drop_simulator(2.0, fluid, spacing, 0.01);
            const double expected = -4.0 / (4 * pi * pi);
            worst_scaling =
                std::max(worst_scaling, std::fabs(gap * spacing / expected - 1.0));
        }
        report(7, "inflow-formula gap identity and 1/delta scaling",
               worst <= 1e-12 && worst_scaling <= 1e-10,
               "identity err " + fmt(worst) + ", scaling err " +
                   fmt(worst_scaling));
    }

    // 8. Closed-form drops match Simpson quadrature, which converges at
    //    fourth order.
    {
        std::mt19937_64 rng(103);
        std::uniform_real_distribution<double> u(0.1, 4.0), r_lo(0.05, 0.5),
            ratio(1.5, 20.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double q = u(rng), alpha = u(rng), beta = u(rng);
            const double r1 = r_lo(rng);
            const radial::Annulus a{r1, r1 * ratio(rng)};
            const double closed = radial::forchheimer_drop(q, alpha, beta, a);
            const double quad = radial::radial_ode_oracle(q, alpha, beta, a, 10000);
            worst = std::max(worst, std::fabs(quad / closed - 1.0));
        }
        const radial::Annulus a{0.1, 1.0};
        const double exact = radial::forchheimer_drop(1.0, 1.0, 1.0, a);
        const double e100 =
            std::fabs(radial::radial_ode_oracle(1.0, 1.0, 1.0, a, 100) - exact);
        const double e200 =
            std::fabs(radial::radial_ode_oracle(1.0, 1.0, 1.0, a, 200) - exact);
        const double order_ratio = e100 / e200;
        report(8, "quadrature agreement and fourth-order convergence",
               worst <= 1e-8 && order_ratio >= 15.0,
               "worst rel err " + fmt(worst) + ", halving ratio " +
                   fmt(order_ratio));
    }

    // 9. Drop-to-rate inversion round-trips across six decades.
    {
        double worst = 0.0;
        const radial::Annulus a{0.03, 2.0};
        for (double q : {1e-3, 1.0, 1e3}) {
            const double drop = radial::forchheimer_drop(q, 0.8, 1.7, a);
            const double back =
                radial::rate_from_drop_forchheimer(drop, 0.8, 1.7, a);
            worst = std::max(worst, std::fabs(back / q - 1.0));
        }
        report(9, "rate inversion round-trip", worst <= 1e-10,
               "worst rel err " + fmt(worst));
    }

    // 10. The Green oscillation identity: exact on the disk, within ten
    //     percent on the square with the deviation shrinking as the probe
    //     tightens.
    {
        double worst_disk = 0.0;
        for (double probe : {0.1, 0.05, 0.025})
            worst_disk = std::max(
                worst_disk,
                std::fabs(fd::green_oscillation_check(1.0, probe).value - 1.0));
        const auto field128 = fd::solve(fd::assemble({1.0, 128}, unit, 1.0), 1e-11);
        std::vector<double> deviations;
        bool in_band = true;
        for (double probe : {0.8, 0.6, 0.4}) {
            const double v =
                fd::green_oscillation_check_fd(field128, unit, 1.0, probe).value;
            in_band = in_band && v >= 0.9 && v <= 1.1;
            deviations.push_back(std::fabs(v - 1.0));
        }
        const bool shrinking = deviations[0] > deviations[1] &&
                               deviations[1] > deviations[2];
        report(10, "green oscillation identity (disk exact, square within band)",
               worst_disk <= 1e-14 && in_band && shrinking,
               "disk err " + fmt(worst_disk) + ", square devs " +
                   fmt(deviations[0]) + " > " + fmt(deviations[1]) + " > " +
                   fmt(deviations[2]));
    }

    // 11. Two CLI runs of the same config produce byte-identical tables.
    {
        bool ok = false;
        std::string detail = "CLI binary not configured";
#ifdef WELLBLOCK_CLI_BIN
        const fs::path base =
            fs::temp_directory_path() /
            ("wellblock_acceptance_" + std::to_string(::getpid()));
        fs::create_directories(base);
        const fs::path cfg_path = base / "config.json";
        {
            std::ofstream cfg(cfg_path, std::ios::binary);
            cfg << R"({"experiment": "verify-peaceman", "sweep": [16, 32]})";
        }
        auto run_once = [&](const char* sub) {
            std::ostringstream cmd;
            cmd << '"' << WELLBLOCK_CLI_BIN << '"'
                << " run --config " << cfg_path.string() << " --out "
                << (base / sub).string() << " > /dev/null 2>&1";
            return std::system(cmd.str().c_str());
        };
        const int rc1 = run_once("a");
        const int rc2 = run_once("b");
        if (rc1 == 0 && rc2 == 0) {
            const std::string csv_a = slurp(base / "a" / "verify-peaceman.csv");
            const std::string csv_b = slurp(base / "b" / "verify-peaceman.csv");
            ok = !csv_a.empty() && csv_a == csv_b;
            detail = ok ? "identical " + std::to_string(csv_a.size()) + " bytes"
                        : "outputs differ";
        } else {
            detail = "CLI exited with " + std::to_string(rc1) + "/" +
                     std::to_string(rc2);
        }
        std::error_code ec;
        fs::remove_all(base, ec);
#endif
        report(11, "repeated CLI runs are byte-identical", ok, detail);
    }

    if (failures == 0) {
        std::printf("ACCEPTANCE: all 11 checks passed\n");
        return 0;
    }
    std::printf("ACCEPTANCE: %d check(s) failed\n", failures);
    return 1;
}
