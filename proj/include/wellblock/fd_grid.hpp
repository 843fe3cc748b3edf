#pragma once

#include <functional>

#include "wellblock/types.hpp"

namespace wellblock::fd {

/// Matrix-free five-point system for the well-block Poisson problem on
/// [-L, L]^2. With conductance c = kh/mu, the interior equation at node
/// (i, j) is
///   c (4 p_{i,j} - p_{i-1,j} - p_{i+1,j} - p_{i,j-1} - p_{i,j+1}) = -q d_{i0} d_{j0}
/// plus boundary data moved to the right-hand side. The operator is
/// symmetric positive definite; q > 0 (production) gives p0 < 0 under
/// zero boundary data. Unknowns are the (2M-1)^2 interior nodes,
/// row-major with j slow, i fast, index 0 at (-M+1, -M+1).
class StencilSystem {
public:
    StencilSystem(const GridSpec& grid, double conductance, double q,
                  std::vector<double> boundary_values);

    int interior_extent() const { return 2 * grid_.M - 1; }
    std::size_t dim() const {
        auto n = static_cast<std::size_t>(interior_extent());
        return n * n;
    }

    /// y = A x over interior unknowns. Neighbor contributions are summed
    /// in the fixed order (west + east) + (south + north), which keeps
    /// the result exactly symmetric under the grid's reflections whenever
    /// x is.
    void apply(std::span<const double> x, std::span<double> y) const;

    std::span<const double> rhs() const { return rhs_; }
    const GridSpec& grid() const { return grid_; }
    double conductance() const { return conductance_; }
    double q() const { return q_; }

    /// Boundary node values, full-grid layout ((2M+1)^2, interior zero).
    std::span<const double> boundary_values() const { return boundary_; }

private:
    GridSpec grid_;
    double conductance_;
    double q_;
    std::vector<double> boundary_; // (2M+1)^2, nonzero only on the frame
    std::vector<double> rhs_;      // (2M-1)^2
};

/// Builds the system with homogeneous Dirichlet data.
StencilSystem assemble(const GridSpec& grid, const FluidRockParams& fluid,
                       double q);

/// Builds the system with Dirichlet data g(x, y) on the frame.
StencilSystem assemble(const GridSpec& grid, const FluidRockParams& fluid,
                       double q,
                       const std::function<double(double, double)>& boundary);

/// Conjugate gradient on the SPD system, zero initial guess, fixed
/// arithmetic order, single-threaded: output is bitwise reproducible
/// for a given system and tolerance. Stops when
/// ||b - A x|| <= tol ||b||; throws SolverError past the iteration cap.
PressureField solve(const StencilSystem& sys, double tol = 1e-11);

struct BlockPressures {
    double p0;              // pressure at the well node (0, 0)
    double p1;              // mean of the four nearest neighbors
    double symmetry_defect; // max |p(neighbor) - p1| over the four
};

/// Well-block and first-ring pressures. For the symmetric problem the
/// four neighbors agree to rounding and p1 - p0 equals alpha q / 4 up
/// to the solver tolerance.
BlockPressures block_pressures(const PressureField& field);

struct FitWindow {
    double r_min_blocks = 1.0;    // include nodes with r >= r_min_blocks * delta
    double r_max_fraction = 0.25; // ... and r <= r_max_fraction * L
};

struct R0Estimate {
    double r0_over_delta; // exp((p0 - intercept)/slope) / delta
    double slope;         // fitted d p / d ln r, = alpha q / 2 pi in the limit
    double intercept;     // fitted p at ln r = 0
    int n_points;
    double fit_rms;       // rms residual of the log fit [Pa]
};

/// Least-squares fit of p against ln r over interior nodes inside the
/// window, then the radius where the fitted line meets p0. Converges to
/// the lattice constant e^{-gamma} 2^{-3/2} ~ 0.1985 as M grows, a few
/// percent below e^{-pi/2} ~ 0.2079.
R0Estimate estimate_r0_numeric(const PressureField& field,
                               const FluidRockParams& fluid, double q,
                               const FitWindow& window = {});

/// Discrete flow drawn across the node square max(|i|, |j|) <= ring by
/// the sink: sum of c (p_out - p_in) over the crossing edges, positive
/// for production. Telescopes to q for any ring enclosing the source.
double contour_flux(const PressureField& field, const FluidRockParams& fluid,
                    int ring);

struct RefinementRow {
    int M;
    double delta;
    double p_probe;      // pressure at the node nearest (L/4, L/8)
    double diff_prev;    // p_probe - previous row's p_probe (NaN first row)
    double contour_flux; // flux through the ring at half width L/2
};

struct ConvergenceTable {
    std::vector<RefinementRow> rows;
};

/// Solves the homogeneous-boundary problem on each grid of the sequence
/// and probes the fixed physical point (L/4, L/8). Successive probe
/// differences shrink at second order; each grid's half-width contour
/// flux reproduces q.
ConvergenceTable green_refinement_study(std::span<const int> grid_sequence,
                                        double L, const FluidRockParams& fluid,
                                        double q, double tol = 1e-11);

struct OscillationCheck {
    double value;   // |4 (G(delta) - G(r0))|, exactly 1 in the disk
    double r0_used; // delta e^{-pi/2}
};

/// Analytic disk variant: G(r) = (1/2pi) ln(R_e/r) on a centered disk
/// of radius R_e gives |4 (G(delta) - G(delta e^{-pi/2}))| = 1 exactly.
/// Requires 0 < delta < R_e / 2.
OscillationCheck green_oscillation_check(double R_e, double delta);

/// Square-domain FD variant: the Green-like function G = -p/(alpha q)
/// from a solved field is sampled along the +x axis with log-linear
/// interpolation between bracketing nodes. Deviation from 1 is the
/// domain-shape corrector plus lattice error; for probe radii well
/// inside the asymptotic window it stays within a few percent and
/// shrinks as delta decreases. Requires delta < L and
/// delta e^{-pi/2} >= grid spacing (the probe pair must be resolved).
OscillationCheck green_oscillation_check_fd(const PressureField& field,
                                            const FluidRockParams& fluid,
                                            double q, double delta);

} // namespace wellblock::fd
