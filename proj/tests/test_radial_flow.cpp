#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "wellblock/radial_flow.hpp"

using namespace wellblock;
using namespace wellblock::radial;

namespace {
const double e1 = std::exp(1.0);
}

TEST_CASE("darcy drop over one decade of e at alpha = 2 pi is unity") {
    CHECK(darcy_drop(1.0, 2 * pi, {1.0, e1}) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("zero-width annulus carries no drop") {
    CHECK(darcy_drop(1.0, 1.0, {0.3, 0.3}) == 0.0);
}

TEST_CASE("darcy drop is antisymmetric under swapping radii") {
    CHECK(darcy_drop(2.0, 3.0, {0.2, 1.7}) ==
          doctest::Approx(-darcy_drop(2.0, 3.0, {1.7, 0.2})).epsilon(1e-15));
}

TEST_CASE("darcy drop rejects singular or negative radii") {
    CHECK_THROWS_AS(darcy_drop(1.0, 1.0, {0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(darcy_drop(1.0, 1.0, {-0.1, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(darcy_drop(1.0, 0.0, {0.1, 1.0}), std::invalid_argument);
}

TEST_CASE("darcy drops add over adjacent annuli") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.05, 5.0);
    for (int i = 0; i < 100; ++i) {
        double r[3] = {u(rng), u(rng), u(rng)};
        std::sort(r, r + 3);
        const double q = u(rng), alpha = u(rng);
        const double joint = darcy_drop(q, alpha, {r[0], r[2]});
        const double split = darcy_drop(q, alpha, {r[0], r[1]}) +
                             darcy_drop(q, alpha, {r[1], r[2]});
        CHECK(split == doctest::Approx(joint).epsilon(1e-13));
    }
}

TEST_CASE("profile evaluation is the drop relative to the reference point") {
    CHECK(darcy_profile(1.0, 1.0, 0.7, 0.7, 42.0) == 42.0);
    CHECK(darcy_profile(1.0, 2 * pi, e1 * 0.3, 0.3, 0.0) ==
          doctest::Approx(1.0).epsilon(1e-14));
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.05, 5.0);
    for (int i = 0; i < 100; ++i) {
        const double q = u(rng), alpha = u(rng), r1 = u(rng), r2 = u(rng);
        const double via_profile =
            darcy_profile(q, alpha, r2, r1, 0.0) - darcy_profile(q, alpha, r1, r1, 0.0);
        CHECK(via_profile ==
              doctest::Approx(darcy_drop(q, alpha, {r1, r2})).epsilon(1e-14));
    }
    CHECK_THROWS_AS(darcy_profile(1.0, 1.0, 0.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("forchheimer drop degenerates to darcy when beta vanishes") {
    const Annulus a{0.07, 2.3};
    CHECK(forchheimer_drop(1.4, 0.9, 0.0, a) == darcy_drop(1.4, 0.9, a));
}

TEST_CASE("forchheimer drop across a frozen annulus") {
    // ln(10)/(2 pi) + (1/(4 pi^2)) (10 - 1)
    CHECK(forchheimer_drop(1.0, 1.0, 1.0, {0.1, 1.0}) ==
          doctest::Approx(0.594440462634974).epsilon(1e-13));
    CHECK(forchheimer_drop(1.0, 1.0, 1.0, {0.4, 0.4}) == 0.0);
}

TEST_CASE("the quadratic term follows the sign of the rate") {
    const Annulus a{0.1, 1.0};
    CHECK(forchheimer_drop(-2.0, 1.0, 1.0, a) ==
          doctest::Approx(-forchheimer_drop(2.0, 1.0, 1.0, a)).epsilon(1e-15));
}

TEST_CASE("forchheimer drop exceeds darcy and is monotone in its arguments") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.1, 4.0);
    for (int i = 0; i < 100; ++i) {
        const double q = u(rng), alpha = u(rng), beta = u(rng);
        double r1 = u(rng), r2 = u(rng);
        if (r1 > r2) std::swap(r1, r2);
        r2 += 0.01;
        const Annulus a{r1, r2};
        const double base = forchheimer_drop(q, alpha, beta, a);
        CHECK(base > darcy_drop(q, alpha, a));
        CHECK(forchheimer_drop(q * 1.1, alpha, beta, a) > base);
        CHECK(forchheimer_drop(q, alpha, beta * 1.1, a) > base);
        CHECK(forchheimer_drop(q, alpha, beta, {r1, r2 * 1.1}) > base);
        CHECK(forchheimer_drop(q, alpha, beta, {r1 * 1.1, r2}) < base);
    }
}

TEST_CASE("rate inversion recovers the rate that produced a drop") {
    const Annulus a{0.1, 1.0};
    CHECK(rate_from_drop_forchheimer(0.0, 1.0, 1.0, a) == 0.0);
    const double b_lin = darcy_drop(1.0, 1.0, a);
    CHECK(rate_from_drop_forchheimer(b_lin, 1.0, 0.0, a) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rate_from_drop_forchheimer(0.594440462634974, 1.0, 1.0, a) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK_THROWS_AS(rate_from_drop_forchheimer(-0.5, 1.0, 1.0, a),
                    std::invalid_argument);
    CHECK_THROWS_AS(rate_from_drop_forchheimer(1.0, 1.0, 1.0, {1.0, 1.0}),
                    std::invalid_argument);

    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> logq(-6.0, 6.0), u(0.1, 4.0);
    for (int i = 0; i < 200; ++i) {
        const double q = std::pow(10.0, logq(rng));
        const double alpha = u(rng), beta = u(rng);
        double r1 = u(rng), r2 = u(rng);
        if (r1 > r2) std::swap(r1, r2);
        r2 += 0.01;
        const double drop = forchheimer_drop(q, alpha, beta, {r1, r2});
        const double back = rate_from_drop_forchheimer(drop, alpha, beta, {r1, r2});
        CHECK(back == doctest::Approx(q).epsilon(1e-10));
    }
}

TEST_CASE("bottom-hole reconstruction selects the proper branch") {
    // wide block: drop to r_w passes through the equivalent radius
    CHECK(reconstruct_pw_darcy(5.0, 1.0, 2 * pi, 1.0, 0.01) ==
          doctest::Approx(5.0 - 3.034373859193195).epsilon(1e-14));
    // no flow: flat pressure either way
    CHECK(reconstruct_pw_darcy(5.0, 0.0, 1.0, 1.0, 0.3) == 5.0);
    // at delta = e^{pi/2} r_w both branches give exactly p0
    const double r_w = 0.04;
    const double delta_eq = std::exp(pi / 2) * r_w;
    CHECK(reconstruct_pw_darcy(1.0, 2.0, 3.0, delta_eq, r_w) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // continuity across the branch switch
    const double lo = reconstruct_pw_darcy(1.0, 2.0, 3.0, delta_eq * (1 - 1e-9), r_w);
    const double hi = reconstruct_pw_darcy(1.0, 2.0, 3.0, delta_eq * (1 + 1e-9), r_w);
    CHECK(lo == doctest::Approx(hi).epsilon(1e-7));
    // narrow block branch evaluated directly
    CHECK(reconstruct_pw_darcy(0.0, 1.0, 1.0, 0.1, 0.05) ==
          doctest::Approx(0.25 - std::log(2.0) / (2 * pi)).epsilon(1e-14));
    CHECK_THROWS_AS(reconstruct_pw_darcy(0.0, 1.0, 1.0, 0.1, 0.2),
                    std::invalid_argument);
}

TEST_CASE("quadrature oracle reproduces a known integral and trivial cases") {
    CHECK(radial_ode_oracle(1.0, 2 * pi, 0.0, {1.0, e1}, 1000) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(radial_ode_oracle(0.0, 1.0, 1.0, {0.1, 1.0}, 100) == 0.0);
    CHECK_THROWS_AS(radial_ode_oracle(1.0, 1.0, 0.0, {0.1, 1.0}, 101),
                    std::invalid_argument);
}

TEST_CASE("quadrature error falls at fourth order when steps double") {
    const Annulus a{0.1, 1.0};
    const double exact = forchheimer_drop(1.0, 1.0, 1.0, a);
    const double e100 = std::fabs(radial_ode_oracle(1.0, 1.0, 1.0, a, 100) - exact);
    const double e200 = std::fabs(radial_ode_oracle(1.0, 1.0, 1.0, a, 200) - exact);
    CHECK(e100 / e200 >= 15.0);
}

TEST_CASE("closed forms agree with the quadrature oracle across random inputs") {
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> u(0.1, 4.0), r_lo(0.05, 0.5),
        ratio(1.5, 20.0);
    for (int i = 0; i < 50; ++i) {
        const double q = u(rng), alpha = u(rng), beta = u(rng);
        const double r1 = r_lo(rng), r2 = r1 * ratio(rng);
        const Annulus a{r1, r2};
        const double closed = forchheimer_drop(q, alpha, beta, a);
        const double quad = radial_ode_oracle(q, alpha, beta, a, 10000);
        CHECK(quad == doctest::Approx(closed).epsilon(1e-8));
        const double lin = darcy_drop(q, alpha, a);
        const double quad_lin = radial_ode_oracle(q, alpha, 0.0, a, 10000);
        CHECK(quad_lin == doctest::Approx(lin).epsilon(1e-8));
    }
}
