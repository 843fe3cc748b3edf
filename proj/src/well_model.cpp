#include "wellblock/well_model.hpp"

#include <sstream>

#include "wellblock/radial_flow.hpp"

namespace wellblock::well {

namespace {

void require_positive(double x, const char* name) {
    if (!std::isfinite(x) || x <= 0.0) {
        std::ostringstream os;
        os << name << " must be positive and finite";
        throw std::invalid_argument(os.str());
    }
}

void require_delta_equation(const DeltaEquation& eq) {
    require_positive(eq.alpha, "alpha");
    require_positive(eq.delta_spacing, "delta_spacing");
    if (!std::isfinite(eq.beta) || eq.beta < 0.0)
        throw std::invalid_argument("beta must be nonnegative and finite");
    if (!std::isfinite(eq.q) || eq.q < 0.0)
        throw std::invalid_argument(
            "beta*q < 0 not admissible: q must be nonnegative and finite");
}

} // namespace

double peaceman_radius_darcy(double delta_spacing) {
    require_positive(delta_spacing, "delta_spacing");
    return delta_spacing * peaceman_ratio;
}

double solve_delta(const DeltaEquation& eq, double tol) {
    require_delta_equation(eq);
    if (!(tol >= 1e-15 && tol <= 1e-6))
        throw std::invalid_argument("tol must lie in [1e-15, 1e-6]");
    if (eq.beta * eq.q == 0.0) return 1.0; // Darcy degeneration, no iteration

    const double g = eq.beta * eq.q / (eq.alpha * pi * pi * eq.delta_spacing);
    auto F = [g](double d) { return d + g * std::expm1(d * pi / 2) - 1.0; };
    auto Fp = [g](double d) { return 1.0 + g * (pi / 2) * std::exp(d * pi / 2); };

    // F(0) = -1, F(1) = g(e^{pi/2}-1) >= 0 for beta q > 0, F' > 1: the
    // root is unique in (0, 1]. Newton from the right edge, kept inside
    // a shrinking bracket; any step leaving it falls back to bisection.
    double lo = 0.0, hi = 1.0, d = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double f = F(d);
        if (std::fabs(f) <= tol) return d;
        if (f > 0.0)
            hi = d;
        else
            lo = d;
        double next = d - f / Fp(d);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        d = next;
    }
    std::ostringstream os;
    os << "delta-factor iteration failed to reach |F| <= " << tol
       << " (bracket [" << lo << ", " << hi << "], F(" << d << ") = " << F(d)
       << ")";
    throw SolverError(os.str(), std::fabs(F(d)), 200);
}

ForchheimerRadius forchheimer_radius(const FluidRockParams& fluid, double q,
                                     double delta_spacing, double tol) {
    const double delta =
        solve_delta({fluid.alpha(), fluid.beta(), q, delta_spacing}, tol);
    return {delta_spacing * std::exp(-delta * pi / 2), delta};
}

double d_factor(const FluidRockParams& fluid, double r_w) {
    require_positive(r_w, "r_w");
    return fluid.beta() / fluid.alpha() / (2 * pi * r_w);
}

namespace {

double require_dake_geometry(double delta_spacing, double r_w) {
    require_positive(delta_spacing, "delta_spacing");
    require_positive(r_w, "r_w");
    const double r0_darcy = delta_spacing * peaceman_ratio;
    if (r_w >= r0_darcy)
        throw std::invalid_argument("well radius exceeds equivalent radius");
    return r0_darcy;
}

} // namespace

double dake_drop_simulator(double q, const FluidRockParams& fluid,
                           double delta_spacing, double r_w) {
    const double r0_darcy = require_dake_geometry(delta_spacing, r_w);
    const double d = d_factor(fluid, r_w);
    return fluid.alpha() / (2 * pi) * q * (std::log(r0_darcy / r_w) + d * q);
}

double dake_drop_correct(double q, const FluidRockParams& fluid,
                         double delta_spacing, double r_w) {
    const double r0_darcy = require_dake_geometry(delta_spacing, r_w);
    return fluid.alpha() / (2 * pi) * q * std::log(r0_darcy / r_w) +
           fluid.beta() * q * q / (4 * pi * pi) * (1 / r_w - 1 / delta_spacing);
}

double well_index(double q, double mu, double p0, double p_w) {
    if (!std::isfinite(q) || !std::isfinite(mu) || !std::isfinite(p0) ||
        !std::isfinite(p_w))
        throw std::invalid_argument("non-finite well_index arguments");
    require_positive(mu, "mu");
    if (p0 == p_w) throw std::invalid_argument("zero drawdown");
    return q * mu / (p0 - p_w);
}

WellposednessReport check_strict_wellposedness(double delta_spacing,
                                               double theta, double q,
                                               double alpha) {
    require_positive(delta_spacing, "delta_spacing");
    require_positive(theta, "theta");
    require_positive(alpha, "alpha");
    if (!std::isfinite(q)) throw std::invalid_argument("q must be finite");

    WellposednessReport rep;
    rep.condition_met = delta_spacing > std::exp(pi / 2) * theta;
    rep.r0 = delta_spacing * peaceman_ratio;
    rep.sewing_residual = 0.5 - std::log(delta_spacing / rep.r0) / pi;
    // With p1 = 0 as datum, material balance puts p0 at -alpha q / 4.
    // The two annular continuations down to the imaginary well radius:
    const double p1 = 0.0;
    const double p0 = -alpha * q / 4;
    rep.u1_theta = radial::darcy_profile(q, alpha, theta, delta_spacing, p1);
    rep.u0_theta = radial::darcy_profile(q, alpha, theta, rep.r0, p0);
    return rep;
}

WellModelResult summarize(const FluidRockParams& fluid, double delta_spacing,
                          const WellSpec& well, double p0, double tol) {
    WellModelResult r{};
    const auto fr = forchheimer_radius(fluid, well.q, delta_spacing, tol);
    r.r0 = fr.r0;
    r.delta_factor = fr.delta_factor;
    r.d_factor = d_factor(fluid, well.r_w);
    r.drop_simulator = dake_drop_simulator(well.q, fluid, delta_spacing, well.r_w);
    r.drop_correct = dake_drop_correct(well.q, fluid, delta_spacing, well.r_w);
    r.p_w = radial::reconstruct_pw_darcy(p0, well.q, fluid.alpha(),
                                         delta_spacing, well.r_w);
    r.t_w = well_index(well.q, fluid.mu, p0, r.p_w);
    return r;
}

} // namespace wellblock::well
