#pragma once

#include "wellblock/types.hpp"

namespace wellblock::well {

/// Linear-flow well-block radius R0 = Delta e^{-pi/2}.
double peaceman_radius_darcy(double delta_spacing);

/// Parameters of the scalar equation fixing the rate-dependent factor
/// delta in R0 = Delta e^{-delta pi/2}:
///   F(delta) = delta + (beta q / (alpha pi^2)) (e^{delta pi/2} - 1) / Delta - 1 = 0.
/// F(0) = -1 and F' >= 1 on [0, 1], so the root is unique in (0, 1].
struct DeltaEquation {
    double alpha;         // > 0
    double beta;          // >= 0
    double q;             // >= 0
    double delta_spacing; // > 0
};

/// Safeguarded Newton iteration for the delta equation, bracketed on
/// [0, 1]. Stops when |F(delta)| <= tol. beta q == 0 returns exactly 1
/// with zero iterations.
double solve_delta(const DeltaEquation& eq, double tol = 1e-13);

struct ForchheimerRadius {
    double r0;           // Delta e^{-delta_factor pi/2}
    double delta_factor; // in (0, 1]
};

/// Rate-dependent well-block radius for two-term Forchheimer flow.
ForchheimerRadius forchheimer_radius(const FluidRockParams& fluid, double q,
                                     double delta_spacing, double tol = 1e-13);

/// Rate-dependent skin coefficient D = (beta/alpha) / (2 pi r_w).
double d_factor(const FluidRockParams& fluid, double r_w);

/// Inflow drop p0 - p_w as industry simulators compute it, folding the
/// quadratic loss into a rate-dependent skin:
///   (alpha/2pi) q (ln(R0_Darcy/r_w) + D q).
double dake_drop_simulator(double q, const FluidRockParams& fluid,
                           double delta_spacing, double r_w);

/// Corrected inflow drop with the quadratic loss integrated only up to
/// the block scale:
///   (alpha/2pi) q ln(R0_Darcy/r_w) + (beta q^2/4pi^2)(1/r_w - 1/Delta).
/// Differs from dake_drop_simulator by exactly -beta q^2/(4 pi^2 Delta).
double dake_drop_correct(double q, const FluidRockParams& fluid,
                         double delta_spacing, double r_w);

/// Well index T_w = q mu / (p0 - p_w). Requires p0 != p_w.
double well_index(double q, double mu, double p0, double p_w);

/// Strict well-posedness of the sewing construction for an imaginary
/// well of radius theta inside a block of spacing delta_spacing.
struct WellposednessReport {
    bool condition_met;    // delta_spacing > e^{pi/2} theta
    double r0;             // Delta e^{-pi/2}
    double sewing_residual;// 1/2 - (1/pi) ln(delta_spacing / r0), 0 at R0
    double u1_theta;       // p(theta) continued from p1 across [theta, Delta]
    double u0_theta;       // p(theta) continued from p0 across [theta, R0]
};

/// Checks delta_spacing > e^{pi/2} theta and that the two Darcy
/// continuations agree at theta once R0 = Delta e^{-pi/2} and
/// p1 - p0 = alpha q / 4 are imposed (p1 is taken as datum 0).
WellposednessReport check_strict_wellposedness(double delta_spacing, double theta,
                                               double q, double alpha);

/// Full derived summary for one parameter set: Forchheimer radius and
/// factor, D-factor, both Dake drops, bottom-hole pressure from p0 via
/// the Darcy reconstruction, and the resulting well index.
WellModelResult summarize(const FluidRockParams& fluid, double delta_spacing,
                          const WellSpec& well, double p0, double tol = 1e-13);

} // namespace wellblock::well
