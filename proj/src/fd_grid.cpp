#include "wellblock/fd_grid.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace wellblock::fd {

namespace {

void require_grid(const GridSpec& grid) {
    if (!std::isfinite(grid.L) || grid.L <= 0.0)
        throw std::invalid_argument("L must be positive and finite");
    if (grid.M < 2) throw std::invalid_argument("M must be at least 2");
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0; // fixed-order accumulation, part of the determinism contract
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

StencilSystem::StencilSystem(const GridSpec& grid, double conductance, double q,
                             std::vector<double> boundary_values)
    : grid_(grid), conductance_(conductance), q_(q),
      boundary_(std::move(boundary_values)) {
    require_grid(grid_);
    if (!std::isfinite(conductance_) || conductance_ <= 0.0)
        throw std::invalid_argument("conductance must be positive and finite");
    if (!std::isfinite(q_)) throw std::invalid_argument("q must be finite");
    const int M = grid_.M;
    const auto full = static_cast<std::size_t>(2 * M + 1);
    if (boundary_.size() != full * full)
        throw std::invalid_argument("boundary data size does not match grid");

    // Interior equation, positive-definite orientation:
    //   c (4 p_ij - sum of neighbors) = -q d_i0 d_j0 + c * (boundary terms).
    const int n = interior_extent();
    rhs_.assign(dim(), 0.0);
    auto li = [n, M](int i, int j) {
        return static_cast<std::size_t>(j + M - 1) * n + (i + M - 1);
    };
    auto bv = [this, M, full](int i, int j) {
        return boundary_[static_cast<std::size_t>(j + M) * full + (i + M)];
    };
    rhs_[li(0, 0)] = -q_;
    for (int k = -(M - 1); k <= M - 1; ++k) {
        rhs_[li(-(M - 1), k)] += conductance_ * bv(-M, k);
        rhs_[li(M - 1, k)] += conductance_ * bv(M, k);
        rhs_[li(k, -(M - 1))] += conductance_ * bv(k, -M);
        rhs_[li(k, M - 1)] += conductance_ * bv(k, M);
    }
}

void StencilSystem::apply(std::span<const double> x, std::span<double> y) const {
    const int n = interior_extent();
    if (x.size() != dim() || y.size() != dim())
        throw std::invalid_argument("apply: vector size does not match system");
    const double c = conductance_;
    for (int row = 0; row < n; ++row) {
        const std::size_t base = static_cast<std::size_t>(row) * n;
        for (int col = 0; col < n; ++col) {
            const std::size_t at = base + col;
            const double west = col > 0 ? x[at - 1] : 0.0;
            const double east = col < n - 1 ? x[at + 1] : 0.0;
            const double south = row > 0 ? x[at - n] : 0.0;
            const double north = row < n - 1 ? x[at + n] : 0.0;
            // Paired sums keep reflection/transpose symmetry exact.
            y[at] = c * (4.0 * x[at] - ((west + east) + (south + north)));
        }
    }
}

StencilSystem assemble(const GridSpec& grid, const FluidRockParams& fluid,
                       double q) {
    require_grid(grid);
    const auto full = static_cast<std::size_t>(2 * grid.M + 1);
    return StencilSystem(grid, 1.0 / fluid.alpha(), q,
                         std::vector<double>(full * full, 0.0));
}

StencilSystem assemble(const GridSpec& grid, const FluidRockParams& fluid,
                       double q,
                       const std::function<double(double, double)>& boundary) {
    require_grid(grid);
    const int M = grid.M;
    const double delta = grid.delta();
    const auto full = static_cast<std::size_t>(2 * M + 1);
    std::vector<double> bdata(full * full, 0.0);
    auto set = [&](int i, int j) {
        bdata[static_cast<std::size_t>(j + M) * full + (i + M)] =
            boundary(i * delta, j * delta);
    };
    for (int k = -M; k <= M; ++k) {
        set(-M, k);
        set(M, k);
        set(k, -M);
        set(k, M);
    }
    return StencilSystem(grid, 1.0 / fluid.alpha(), q, std::move(bdata));
}

PressureField solve(const StencilSystem& sys, double tol) {
    if (!(tol >= 1e-14 && tol <= 1e-4))
        throw std::invalid_argument("solver tol must lie in [1e-14, 1e-4]");
    const std::size_t dim = sys.dim();
    const std::span<const double> b = sys.rhs();
    const double norm_b = std::sqrt(dot(b, b));

    std::vector<double> x(dim, 0.0);
    std::vector<double> r(dim), p(dim), Ap(dim);
    int iterations = 0;
    if (norm_b > 0.0) {
        const int cap = 200 * (2 * sys.grid().M + 1) + 2000;
        // Restarted CG: each pass opens from the true residual, so the
        // reported convergence never relies on the recurrence alone.
        for (int pass = 0; pass < 4; ++pass) {
            sys.apply(x, Ap);
            for (std::size_t i = 0; i < dim; ++i) r[i] = b[i] - Ap[i];
            double rr = dot(r, r);
            if (std::sqrt(rr) <= tol * norm_b) break;
            if (iterations >= cap || pass == 3) {
                std::ostringstream os;
                os << "conjugate gradient stalled at relative residual "
                   << std::sqrt(rr) / norm_b << " after " << iterations
                   << " iterations";
                throw SolverError(os.str(), std::sqrt(rr) / norm_b, iterations);
            }
            p = r;
            while (iterations < cap) {
                sys.apply(p, Ap);
                const double alpha = rr / dot(p, Ap);
                for (std::size_t i = 0; i < dim; ++i) x[i] += alpha * p[i];
                for (std::size_t i = 0; i < dim; ++i) r[i] -= alpha * Ap[i];
                ++iterations;
                const double rr_next = dot(r, r);
                if (std::sqrt(rr_next) <= tol * norm_b) break;
                const double beta = rr_next / rr;
                for (std::size_t i = 0; i < dim; ++i) p[i] = r[i] + beta * p[i];
                rr = rr_next;
            }
        }
    }

    // Final certified residual.
    double rel_res = 0.0;
    if (norm_b > 0.0) {
        sys.apply(x, Ap);
        double s = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const double d = b[i] - Ap[i];
            s += d * d;
        }
        rel_res = std::sqrt(s) / norm_b;
    }

    const int M = sys.grid().M;
    const int n = sys.interior_extent();
    const auto full = static_cast<std::size_t>(2 * M + 1);
    std::vector<double> values(sys.boundary_values().begin(),
                               sys.boundary_values().end());
    for (int j = -(M - 1); j <= M - 1; ++j)
        for (int i = -(M - 1); i <= M - 1; ++i)
            values[static_cast<std::size_t>(j + M) * full + (i + M)] =
                x[static_cast<std::size_t>(j + M - 1) * n + (i + M - 1)];
    return PressureField(sys.grid(), std::move(values), rel_res, iterations);
}

BlockPressures block_pressures(const PressureField& field) {
    const double p0 = field.at(0, 0);
    const double e = field.at(1, 0), w = field.at(-1, 0);
    const double nn = field.at(0, 1), s = field.at(0, -1);
    const double p1 = ((w + e) + (s + nn)) / 4.0;
    double defect = 0.0;
    const double nb[4] = {e, w, nn, s};
    for (int a = 0; a < 4; ++a)
        for (int bidx = a + 1; bidx < 4; ++bidx)
            defect = std::max(defect, std::fabs(nb[a] - nb[bidx]));
    return {p0, p1, defect};
}

// The fluid argument is part of the documented signature so callers can
// compare the fitted slope against alpha q / 2 pi; the regression itself
// only needs the field and the rate.
R0Estimate estimate_r0_numeric(const PressureField& field,
                               const FluidRockParams& /*fluid*/, double q,
                               const FitWindow& window) {
    if (q == 0.0 || !std::isfinite(q))
        throw std::invalid_argument("r0 regression needs a nonzero rate");
    if (!(window.r_min_blocks >= 0.0) || !(window.r_max_fraction > 0.0))
        throw std::invalid_argument("malformed fit window");
    const GridSpec& grid = field.grid();
    const int M = grid.M;
    const double delta = grid.delta();
    const double r_lo = window.r_min_blocks * delta;
    const double r_hi = window.r_max_fraction * grid.L;

    std::vector<double> lnr, pv;
    for (int j = -(M - 1); j <= M - 1; ++j) {
        for (int i = -(M - 1); i <= M - 1; ++i) {
            if (i == 0 && j == 0) continue;
            const double r = delta * std::sqrt(double(i) * i + double(j) * j);
            if (r < r_lo || r > r_hi) continue;
            lnr.push_back(std::log(r));
            pv.push_back(field.at(i, j));
        }
    }
    const int n = static_cast<int>(lnr.size());
    if (n < 8)
        throw std::invalid_argument("fewer than 8 nodes in the fit window");

    double mean_x = 0.0, mean_y = 0.0;
    for (int i = 0; i < n; ++i) {
        mean_x += lnr[i];
        mean_y += pv[i];
    }
    mean_x /= n;
    mean_y /= n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        const double dx = lnr[i] - mean_x;
        sxx += dx * dx;
        sxy += dx * (pv[i] - mean_y);
    }
    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double resid = pv[i] - (slope * lnr[i] + intercept);
        ss += resid * resid;
    }
    const double p0 = field.at(0, 0);
    const double r0 = std::exp((p0 - intercept) / slope);
    return {r0 / delta, slope, intercept, n, std::sqrt(ss / n)};
}

double contour_flux(const PressureField& field, const FluidRockParams& fluid,
                    int ring) {
    const int M = field.grid().M;
    if (ring < 0 || ring > M - 1)
        throw std::invalid_argument("contour ring must lie in [0, M-1]");
    const double c = 1.0 / fluid.alpha();
    double flux = 0.0;
    for (int k = -ring; k <= ring; ++k) {
        flux += c * (field.at(ring + 1, k) - field.at(ring, k));
        flux += c * (field.at(-ring - 1, k) - field.at(-ring, k));
        flux += c * (field.at(k, ring + 1) - field.at(k, ring));
        flux += c * (field.at(k, -ring - 1) - field.at(k, -ring));
    }
    return flux;
}

ConvergenceTable green_refinement_study(std::span<const int> grid_sequence,
                                        double L, const FluidRockParams& fluid,
                                        double q, double tol) {
    if (grid_sequence.empty())
        throw std::invalid_argument("empty grid sequence");
    for (std::size_t s = 0; s < grid_sequence.size(); ++s) {
        if (grid_sequence[s] < 8)
            throw std::invalid_argument("grid sequence entries must be >= 8");
        if (s > 0 && grid_sequence[s] <= grid_sequence[s - 1])
            throw std::invalid_argument("grid sequence must be strictly increasing");
    }
    ConvergenceTable table;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int M : grid_sequence) {
        const GridSpec grid{L, M};
        // Nearest node to the probe point (L/4, L/8), off every symmetry axis.
        const int ip = static_cast<int>(std::lround(M / 4.0));
        const int jp = static_cast<int>(std::lround(M / 8.0));
        if (ip == 0 && jp == 0)
            throw std::invalid_argument("probe coincides with the source node");
        const PressureField field = solve(assemble(grid, fluid, q), tol);
        const double p_probe = field.at(ip, jp);
        const int half_ring = static_cast<int>(std::lround(M / 2.0));
        RefinementRow row{M, grid.delta(), p_probe, p_probe - prev,
                          contour_flux(field, fluid, half_ring)};
        table.rows.push_back(row);
        prev = p_probe;
    }
    return table;
}

OscillationCheck green_oscillation_check(double R_e, double delta) {
    if (!std::isfinite(R_e) || !std::isfinite(delta) || R_e <= 0.0 || delta <= 0.0)
        throw std::invalid_argument("radii must be positive and finite");
    if (delta >= R_e / 2)
        throw std::invalid_argument(
            "delta >= R_e/2: probe disc must fit well inside the domain");
    const double r0 = delta * peaceman_ratio;
    auto G = [R_e](double r) { return std::log(R_e / r) / (2 * pi); };
    return {std::fabs(4 * (G(delta) - G(r0))), r0};
}

OscillationCheck green_oscillation_check_fd(const PressureField& field,
                                            const FluidRockParams& fluid,
                                            double q, double delta) {
    if (q == 0.0 || !std::isfinite(q))
        throw std::invalid_argument("oscillation check needs a nonzero rate");
    const GridSpec& grid = field.grid();
    if (!std::isfinite(delta) || delta <= 0.0 || delta >= grid.L)
        throw std::invalid_argument("probe radius must satisfy 0 < delta < L");
    const double r0 = delta * peaceman_ratio;
    const double spacing = grid.delta();
    if (r0 < spacing)
        throw std::invalid_argument(
            "probe radius under-resolved: delta e^{-pi/2} is below one grid spacing");

    // Green-like normalization of the field, sampled on the +x axis with
    // log-linear interpolation between the bracketing nodes.
    const double alpha = fluid.alpha();
    auto G = [&](double r) {
        const int k = static_cast<int>(r / spacing); // k >= 1 by the guards above
        const double g_k = -field.at(k, 0) / (alpha * q);
        if (r == k * spacing) return g_k;
        const double g_k1 = -field.at(k + 1, 0) / (alpha * q);
        const double t = (std::log(r) - std::log(k * spacing)) /
                         (std::log((k + 1) * spacing) - std::log(k * spacing));
        return g_k + t * (g_k1 - g_k);
    };
    return {std::fabs(4 * (G(delta) - G(r0))), r0};
}

} // namespace wellblock::fd
