#include "wellblock/radial_flow.hpp"

namespace wellblock::radial {

namespace {

// Positivity only: the log and 1/r forms are antisymmetric under
// swapping radii, and that property is part of the contract, so the
// ordering is not enforced here.
void require_annulus(const Annulus& a) {
    if (!std::isfinite(a.r_inner) || !std::isfinite(a.r_outer))
        throw std::invalid_argument("annulus radii must be finite");
    if (a.r_inner == 0.0 || a.r_outer == 0.0)
        throw std::invalid_argument("singular radius");
    if (a.r_inner < 0.0 || a.r_outer < 0.0)
        throw std::invalid_argument("annulus radii must be positive");
}

void require_coeffs(double q, double alpha, double beta) {
    if (!std::isfinite(q) || !std::isfinite(alpha) || !std::isfinite(beta))
        throw std::invalid_argument("non-finite flow coefficients");
    if (alpha <= 0.0) throw std::invalid_argument("alpha must be positive");
    if (beta < 0.0) throw std::invalid_argument("beta must be nonnegative");
}

} // namespace

double darcy_drop(double q, double alpha, const Annulus& a) {
    require_coeffs(q, alpha, 0.0);
    require_annulus(a);
    return alpha * q / (2 * pi) * std::log(a.r_outer / a.r_inner);
}

double darcy_profile(double q, double alpha, double r, double r_ref, double p_ref) {
    require_coeffs(q, alpha, 0.0);
    if (!std::isfinite(r) || !std::isfinite(r_ref) || !std::isfinite(p_ref))
        throw std::invalid_argument("non-finite profile arguments");
    if (r <= 0.0 || r_ref <= 0.0)
        throw std::invalid_argument("radii must be positive");
    return p_ref + alpha * q / (2 * pi) * std::log(r / r_ref);
}

double forchheimer_drop(double q, double alpha, double beta, const Annulus& a) {
    require_coeffs(q, alpha, beta);
    require_annulus(a);
    const double linear = alpha * q / (2 * pi) * std::log(a.r_outer / a.r_inner);
    const double quadratic =
        beta * q * std::fabs(q) / (4 * pi * pi) * (1 / a.r_inner - 1 / a.r_outer);
    return linear + quadratic;
}

double rate_from_drop_forchheimer(double drop, double alpha, double beta,
                                  const Annulus& a) {
    require_coeffs(0.0, alpha, beta);
    require_annulus(a);
    if (a.r_inner >= a.r_outer)
        throw std::invalid_argument("rate inversion needs r_inner < r_outer");
    if (!std::isfinite(drop) || drop < 0.0)
        throw std::invalid_argument("drop must be nonnegative (production convention)");
    if (drop == 0.0) return 0.0;
    const double a2 = beta / (4 * pi * pi) * (1 / a.r_inner - 1 / a.r_outer);
    const double a1 = alpha / (2 * pi) * std::log(a.r_outer / a.r_inner);
    // Positive root of a2 q^2 + a1 q - drop = 0, written so a2 -> 0 is
    // harmless and no subtraction of near-equal terms occurs.
    return 2 * drop / (a1 + std::sqrt(a1 * a1 + 4 * a2 * drop));
}

double reconstruct_pw_darcy(double p0, double q, double alpha, double delta,
                            double r_w) {
    require_coeffs(q, alpha, 0.0);
    if (!std::isfinite(p0) || !std::isfinite(delta) || !std::isfinite(r_w))
        throw std::invalid_argument("non-finite reconstruction arguments");
    if (r_w <= 0.0 || delta <= 0.0)
        throw std::invalid_argument("delta and r_w must be positive");
    if (r_w > delta)
        throw std::invalid_argument("r_w > delta: well larger than the block");
    if (delta > std::exp(pi / 2) * r_w)
        return p0 - alpha * q / (2 * pi) * std::log(std::exp(-pi / 2) * delta / r_w);
    return p0 + q * alpha / 4 - alpha * q / (2 * pi) * std::log(delta / r_w);
}

double radial_ode_oracle(double q, double alpha, double beta, const Annulus& a,
                         int n_steps) {
    require_coeffs(q, alpha, beta);
    require_annulus(a);
    if (n_steps < 2 || n_steps % 2 != 0)
        throw std::invalid_argument("n_steps must be even and >= 2");
    const double c1 = alpha * q / (2 * pi);
    const double c2 = beta * q * std::fabs(q) / (4 * pi * pi);
    auto grad = [c1, c2](double r) { return c1 / r + c2 / (r * r); };
    const double h = (a.r_outer - a.r_inner) / n_steps;
    double odd = 0.0, even = 0.0; // interior Simpson weights 4 and 2
    for (int i = 1; i < n_steps; i += 2) odd += grad(a.r_inner + i * h);
    for (int i = 2; i < n_steps; i += 2) even += grad(a.r_inner + i * h);
    return h / 3 * (grad(a.r_inner) + grad(a.r_outer) + 4 * odd + 2 * even);
}

} // namespace wellblock::radial
