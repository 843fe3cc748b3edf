#include "wellblock/types.hpp"

#include <sstream>

namespace wellblock {

namespace {

bool all_finite(std::initializer_list<double> xs) {
    for (double x : xs)
        if (!std::isfinite(x)) return false;
    return true;
}

} // namespace

std::string ValidationReport::text() const {
    std::ostringstream os;
    for (const auto& v : violations) os << "violation: " << v << '\n';
    for (const auto& w : warnings) os << "warning: " << w << '\n';
    if (valid())
        os << "valid, reconstruction branch " << reconstruction_branch << '\n';
    return os.str();
}

ValidationReport validate_config(const FluidRockParams& fluid,
                                 const GridSpec& grid, const WellSpec& well) {
    if (!all_finite({fluid.mu, fluid.k, fluid.h, fluid.beta1, grid.L,
                     static_cast<double>(grid.M), well.r_w, well.theta, well.q}))
        throw std::invalid_argument("validate_config: NaN or infinite input");

    ValidationReport rep;
    auto violate = [&rep](const std::string& s) { rep.violations.push_back(s); };

    if (fluid.mu <= 0) violate("mu must be positive");
    if (fluid.k <= 0) violate("k must be positive");
    if (fluid.h <= 0) violate("h must be positive");
    if (fluid.beta1 < 0) violate("beta1 must be nonnegative");
    if (grid.L <= 0) violate("L must be positive");
    if (grid.M < 2) violate("M must be at least 2");
    if (well.r_w <= 0) violate("r_w must be positive");
    if (well.theta <= 0) violate("theta must be positive");

    const bool grid_ok = grid.L > 0 && grid.M >= 2;
    if (grid_ok && well.theta > 0) {
        const double delta = grid.delta();
        if (well.theta >= delta) {
            violate("theta >= delta (imaginary well must fit inside one block)");
        } else if (delta <= std::exp(pi / 2) * well.theta) {
            rep.warnings.push_back(
                "branch 2: theta < delta <= e^{pi/2} theta (strict sewing "
                "regime not met; bottom-hole reconstruction uses branch 2)");
            rep.reconstruction_branch = 2;
        } else {
            rep.reconstruction_branch = 1;
        }
    }
    if (well.q < 0 && fluid.beta1 > 0)
        rep.warnings.push_back(
            "negative rate with beta1 > 0: Forchheimer radius workflows "
            "require q >= 0");
    return rep;
}

PressureField::PressureField(const GridSpec& grid,
                             std::vector<double> node_values,
                             double residual_norm, int iterations)
    : grid_(grid), values_(std::move(node_values)),
      residual_norm_(residual_norm), iterations_(iterations) {
    const auto n = static_cast<std::size_t>(2 * grid_.M + 1);
    if (grid_.M < 2 || values_.size() != n * n)
        throw std::invalid_argument("PressureField: value count does not match grid");
}

} // namespace wellblock
