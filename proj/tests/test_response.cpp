#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "triamp/experiments.hpp"
#include "triamp/response.hpp"
#include "triamp/scattering.hpp"

using namespace triamp;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SystemParams rule_point(double f_g1, double f_ga = 2.0) {
    auto m = default_params_mhz();
    m["f_ga"] = f_ga;
    m["f_G1"] = f_g1;
    m["f_G2"] = g2_stability_rule(f_g1);
    return apply_amplification_conditions(params_from_megahertz(m));
}

std::vector<double> delay_grid(std::size_t n) {
    auto g = linspace(-1.0, 1.0, n);
    for (auto& w : g) w *= kTwoPi;
    return g;
}

double peak(const std::vector<double>& v) {
    double m = v[0];
    for (const double x : v) m = std::max(m, x);
    return m;
}

} // namespace

TEST_CASE("phase_of_t21: zero phase on resonance at the active operating point") {
    const SystemParams p = rule_point(2.0);
    // T21(0) is real positive under the conditions with C1 > C2 + 1
    const Complex t0 = t21_closed(p, 0.0);
    CHECK(t0.real() > 0.0);
    CHECK(std::abs(t0.imag()) < 1e-10 * t0.real());

    const auto grid = delay_grid(201);
    const auto theta = phase_of_t21(p, grid);
    // grid midpoint is omega = 0
    CHECK(std::abs(theta[100]) < 1e-10);
}

TEST_CASE("phase_of_t21: odd symmetry about resonance") {
    const SystemParams p = rule_point(5.0);
    const auto grid = delay_grid(401);
    const auto theta = phase_of_t21(p, grid);
    const std::size_t mid = grid.size() / 2;
    for (std::size_t k = 1; k <= mid; ++k) {
        const double left = theta[mid - k] - theta[mid];
        const double right = theta[mid + k] - theta[mid];
        CHECK(std::abs(left + right) < 1e-6);
    }
}

TEST_CASE("phase_of_t21: no wraps remain on the unwrapped output") {
    const SystemParams p = rule_point(5.0);
    const auto grid = delay_grid(2001);
    const auto theta = phase_of_t21(p, grid);
    for (std::size_t i = 1; i < theta.size(); ++i)
        CHECK(std::abs(theta[i] - theta[i - 1]) <= std::numbers::pi);
}

TEST_CASE("phase_of_t21: steeper dispersion with larger G1") {
    // slope of theta at resonance grows with coupling
    double prev_slope = 0.0;
    for (const double f_g1 : {2.0, 5.0, 10.0}) {
        const SystemParams p = rule_point(f_g1);
        const std::vector<double> g = {-0.001, 0.0, 0.001};
        const auto theta = phase_of_t21(p, g);
        const double slope = (theta[2] - theta[0]) / 0.002;
        CHECK(slope > prev_slope);
        prev_slope = slope;
    }
}

TEST_CASE("group_delay: grid value matches the analytic derivative at resonance") {
    for (const double f_g1 : {2.0, 5.0}) {
        const SystemParams p = rule_point(f_g1);
        const double analytic = oracles::analytic_delay(p, 0.0);

        const auto coarse = group_delay(p, delay_grid(2001));
        const auto fine = group_delay(p, delay_grid(4001));
        const double tau_coarse = coarse.delay[coarse.delay.size() / 2];
        const double tau_fine = fine.delay[fine.delay.size() / 2];

        CHECK(std::abs(tau_fine - analytic) < 0.01 * std::abs(analytic));
        // grid halving moves the estimate by under 1%
        CHECK(std::abs(tau_fine - tau_coarse) < 0.01 * std::abs(tau_fine));
    }
}

TEST_CASE("group_delay: active delay exceeds passive by over an order of magnitude") {
    const auto active = group_delay(rule_point(5.0, 2.0), delay_grid(2001));
    const auto passive = group_delay(rule_point(5.0, -2.0), delay_grid(2001));
    const double pa = peak(active.delay);
    const double pp = peak(passive.delay);
    CHECK(pp > 0.01); // passive OMIT delay, ~0.1 us scale
    CHECK(pa > 5.0 * pp);
}

TEST_CASE("group_delay: peak delay nondecreasing in G1") {
    double prev = 0.0;
    for (const double f_g1 : {2.0, 5.0, 10.0}) {
        const auto curve = group_delay(rule_point(f_g1), delay_grid(2001));
        const double pk = peak(curve.delay);
        CHECK(pk >= prev);
        prev = pk;
    }
}

TEST_CASE("group_delay: unit scaling divides delay by the rate factor") {
    const SystemParams p = rule_point(2.0);
    SystemParams scaled = p;
    const double s = 2.0;
    scaled.g_a *= s;
    scaled.kappa1 *= s;
    scaled.kappa2 *= s;
    scaled.kappa3 *= s;
    scaled.gamma_m *= s;
    scaled.G1 *= s;
    scaled.G2 *= s;
    scaled.G3 *= s;
    scaled.J *= s;

    auto grid = delay_grid(801);
    auto scaled_grid = grid;
    for (auto& w : scaled_grid) w *= s;
    const auto base = group_delay(p, grid);
    const auto fast = group_delay(scaled, scaled_grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(fast.delay[i] == doctest::Approx(base.delay[i] / s).epsilon(1e-8));
}

TEST_CASE("group_delay: grid too small raises") {
    const SystemParams p = rule_point(2.0);
    const std::vector<double> g = {0.0, 1.0};
    CHECK_THROWS_AS(group_delay(p, g), GridTooSmall);
}
