#pragma once

#include "wellblock/types.hpp"

namespace wellblock::radial {

/// Annulus r_inner <= r <= r_outer around the well axis. Radii must be
/// positive; the drop formulas are antisymmetric under swapping them,
/// and only rate_from_drop_forchheimer insists on r_inner < r_outer.
struct Annulus {
    double r_inner;
    double r_outer;
};

/// Pressure drop p(r_outer) - p(r_inner) for steady plane-radial Darcy
/// flow at rate q: (alpha q / 2 pi) ln(r_outer / r_inner).
double darcy_drop(double q, double alpha, const Annulus& a);

/// Pressure at radius r given the value p_ref at r_ref (Darcy):
/// p(r) = p_ref + (alpha q / 2 pi) ln(r / r_ref).
double darcy_profile(double q, double alpha, double r, double r_ref, double p_ref);

/// Pressure drop across the annulus for the two-term Forchheimer law:
///   drop = (alpha q / 2 pi) ln(r_outer/r_inner)
///        + (beta q |q| / 4 pi^2) (1/r_inner - 1/r_outer).
/// The quadratic term uses q|q| so injection (q < 0) flips both terms.
double forchheimer_drop(double q, double alpha, double beta, const Annulus& a);

/// Inverse of forchheimer_drop in q for q >= 0, drop >= 0: solves
/// a2 q^2 + a1 q = drop with a2 = (beta/4pi^2)(1/r_inner - 1/r_outer),
/// a1 = (alpha/2pi) ln(r_outer/r_inner), using the cancellation-free
/// root q = 2 drop / (a1 + sqrt(a1^2 + 4 a2 drop)).
double rate_from_drop_forchheimer(double drop, double alpha, double beta,
                                  const Annulus& a);

/// Bottom-hole pressure from the well-block pressure p0 (Darcy).
/// Branch 1 (delta > e^{pi/2} r_w):  p_w = p0 - (alpha q / 2 pi) ln(e^{-pi/2} delta / r_w).
/// Branch 2 (r_w <= delta <= e^{pi/2} r_w):
///                                   p_w = p0 + alpha q / 4 - (alpha q / 2 pi) ln(delta / r_w).
/// The two branches agree at delta = e^{pi/2} r_w, where p_w = p0.
double reconstruct_pw_darcy(double p0, double q, double alpha, double delta,
                            double r_w);

/// Independent check of the closed-form drops: composite Simpson
/// quadrature of |dp/dr| = alpha q/(2 pi r) + beta q|q|/(4 pi^2 r^2)
/// over the annulus. n_steps must be even and >= 2. Fourth-order in
/// 1/n_steps; it shares no code with the closed forms above.
double radial_ode_oracle(double q, double alpha, double beta, const Annulus& a,
                         int n_steps);

} // namespace wellblock::radial
