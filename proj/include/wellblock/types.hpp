#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wellblock {

inline constexpr double pi = 3.14159265358979323846;

/// exp(-pi/2), the Peaceman ratio R0/Delta for linear Darcy flow.
inline constexpr double peaceman_ratio = 0.20787957635076193;

/// Raised when an iterative solve fails to reach its tolerance.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, double residual, int iterations)
        : std::runtime_error(what), residual(residual), iterations(iterations) {}
    double residual;
    int iterations;
};

/// Raised on malformed or rejected experiment configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fluid and rock constants. beta1 is the Forchheimer coefficient of the
/// 3-D law; the areal coefficient used by the plane-flow formulas is
/// beta() = beta1 / h^2.
struct FluidRockParams {
    double mu;          // viscosity [Pa s]
    double k;           // permeability [m^2]
    double h;           // formation thickness [m]
    double beta1 = 0.0; // Forchheimer coefficient [1/m], >= 0

    double alpha() const { return mu / (k * h); }  // mu/(kh), areal resistivity
    double alpha1() const { return mu / k; }       // mu/k = alpha()*h
    double beta() const { return beta1 / (h * h); }
};

/// Uniform square grid on [-L, L]^2 with nodes (i*delta, j*delta),
/// i, j = -M..M, so delta = L/M. Boundary nodes carry Dirichlet data.
struct GridSpec {
    double L; // domain half-width [m]
    int M;    // half node count per axis, >= 2

    double delta() const { return L / M; }
};

/// Well geometry and rate. q > 0 is production (a sink at the origin).
/// theta is the imaginary well radius of the sewing construction and
/// conventionally equals r_w; config and binding surfaces default it so.
struct WellSpec {
    double r_w;   // physical well radius [m]
    double theta; // imaginary well radius [m]
    double q;     // volumetric rate per unit thickness [m^2/s]
};

/// Outcome of validate_config. Violations are fatal; warnings are not.
/// reconstruction_branch tells which bottom-hole formula applies:
/// 1 when delta > e^{pi/2} r_w (the usual fine-well case), 2 otherwise.
struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
    int reconstruction_branch = 0;

    bool valid() const { return violations.empty(); }
    std::string text() const;
};

/// Checks mutual consistency of a parameter set. Throws
/// std::invalid_argument if any number is NaN or infinite; all other
/// problems are reported, never thrown.
ValidationReport validate_config(const FluidRockParams& fluid,
                                 const GridSpec& grid,
                                 const WellSpec& well);

/// Immutable nodal pressure field produced by the grid solver.
/// Values are stored for the full node set including the boundary.
class PressureField {
public:
    PressureField(const GridSpec& grid, std::vector<double> node_values,
                  double residual_norm, int iterations);

    /// Nodal value at (i*delta, j*delta), i, j in [-M, M].
    double at(int i, int j) const {
        const int M = grid_.M;
        if (i < -M || i > M || j < -M || j > M)
            throw std::out_of_range("PressureField::at: node index outside grid");
        return values_[static_cast<std::size_t>(j + M) * (2 * M + 1) + (i + M)];
    }

    const GridSpec& grid() const { return grid_; }
    double residual_norm() const { return residual_norm_; }
    int iterations() const { return iterations_; }
    std::span<const double> values() const { return values_; }

private:
    GridSpec grid_;
    std::vector<double> values_; // row-major, (2M+1)^2, j slow, i fast
    double residual_norm_;
    int iterations_;
};

/// Everything the well model derives for one parameter set.
struct WellModelResult {
    double r0;             // rate-dependent well-block radius [m]
    double delta_factor;   // delta in R0 = Delta e^{-delta pi/2}, in (0, 1]
    double d_factor;       // rate-dependent skin coefficient [s/m^2]
    double t_w;            // well index [m^3]
    double p_w;            // bottom-hole pressure [Pa]
    double drop_simulator; // p0 - p_w from the D-factor route
    double drop_correct;   // p0 - p_w from the corrected inflow formula
};

} // namespace wellblock
