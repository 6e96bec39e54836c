#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "triamp/noisemodel.hpp"
#include "triamp/scattering.hpp"
#include "triamp/stability.hpp"

using namespace triamp;

namespace {

SystemParams rule_point(double f_g1, double n_m = 0.0, double eta = 1.0) {
    auto m = default_params_mhz();
    m["f_G1"] = f_g1;
    m["f_G2"] = g2_stability_rule(f_g1);
    m["n_m"] = n_m;
    m["eta1"] = m["eta2"] = m["eta3"] = eta;
    return apply_amplification_conditions(params_from_megahertz(m));
}

} // namespace

TEST_CASE("noise_weights layout") {
    SystemParams p = rule_point(2.0, 100.0);
    p.s_in = {0.25, 0.0, 0.5};
    const auto w = noise_weights(p);
    CHECK(w[0] == doctest::Approx(0.75));
    CHECK(w[1] == doctest::Approx(0.5));
    CHECK(w[2] == doctest::Approx(1.0));
    for (std::size_t i = 3; i < 7; ++i) CHECK(w[i] == 0.5);
    CHECK(w[7] == doctest::Approx(100.5));
}

TEST_CASE("output_spectrum_2: bare critically coupled cavity reflects vacuum") {
    auto m = default_params_mhz();
    m["f_G1"] = m["f_G2"] = m["f_G3"] = m["f_J"] = 0.0;
    m["f_ga"] = -m.at("f_kappa1");
    const SystemParams p = params_from_megahertz(m);
    CHECK(output_spectrum_2(p, 0.0) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("output_spectrum_2: identity with added noise and the probe term") {
    SystemParams p = rule_point(2.0, 100.0);
    p.s_in = {0.3, 0.0, 0.0};
    for (const double w : {0.0, 2.0, -4.5}) {
        const auto t = transmission_matrix(p, w);
        const double g_local = std::norm(t.matrix(1, 0));
        const double expected = (p.s_in[0] + 0.5) * g_local + g_local * added_noise(p, w);
        CHECK(output_spectrum_2(p, w) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("output_spectrum_2: linear in n_m through the mechanical channel") {
    SystemParams p = rule_point(2.0, 100.0);
    const double base = output_spectrum_2(p, 0.0);
    SystemParams doubled = p;
    doubled.n_m = 200.0;
    const auto t = transmission_matrix(p, 0.0);
    const double increment = std::norm(t.matrix(1, 7)) * 100.0;
    CHECK(output_spectrum_2(doubled, 0.0) - base == doctest::Approx(increment).epsilon(1e-9));
}

TEST_CASE("added_noise: resonant values against the closed form") {
    // Fig. 6 operating point
    const SystemParams p2 = rule_point(2.0, 100.0);
    CHECK(added_noise(p2, 0.0) == doctest::Approx(1.753).epsilon(1e-3));
    CHECK(added_noise(p2, 0.0) ==
          doctest::Approx(added_noise_resonant_closed(p2)).epsilon(1e-9));

    const SystemParams p10 = rule_point(10.0, 100.0);
    const double n10 = added_noise(p10, 0.0);
    CHECK(n10 > 1.50);
    CHECK(n10 < 1.55);
}

TEST_CASE("added_noise: closed-form agreement on random stable sets") {
    oracles::ParamSampler sampler(9001);
    int accepted = 0;
    int guard = 0;
    while (accepted < 50 && ++guard < 20000) {
        SystemParams p = sampler.candidate();
        // closed form requires eta = 1 and g_a = kappa1
        p.eta1 = p.eta2 = p.eta3 = 1.0;
        p.g_a = p.kappa1;
        p.n_m = sampler.uniform(0.0, 200.0);
        if (!stability_report(p).stable) continue;
        ++accepted;
        const double full = added_noise(p, 0.0);
        const double closed = added_noise_resonant_closed(p);
        CHECK(full == doctest::Approx(closed).epsilon(1e-9));
    }
    CHECK(accepted == 50);
}

TEST_CASE("added_noise_resonant_closed: direct substitutions") {
    // C1 = C2 = 1, n_m = 0 -> 1/8 + 1/2 + 1 = 1.625
    auto m = default_params_mhz();
    // C = 100 f^2 at the baseline rates (kappa = 2, gamma_m = 0.02), so
    // f_G = 0.1 gives C = 1
    m["f_G1"] = 0.1;
    m["f_G2"] = 0.1;
    SystemParams p = apply_amplification_conditions(params_from_megahertz(m));
    CHECK(added_noise_resonant_closed(p) == doctest::Approx(1.625).epsilon(1e-12));

    // shifting n_m by delta moves the result by exactly delta / C1
    SystemParams q = p;
    q.n_m = 37.0;
    CHECK(added_noise_resonant_closed(q) - added_noise_resonant_closed(p) ==
          doctest::Approx(37.0 / cooperativities(p).C1).epsilon(1e-12));
}

TEST_CASE("added_noise_resonant_closed: preconditions enforced") {
    SystemParams p = rule_point(2.0, 0.0, 0.75);
    CHECK_THROWS_AS(added_noise_resonant_closed(p), ConditionsNotApplied);

    SystemParams q = rule_point(2.0);
    q.g_a = 0.5 * q.kappa1;
    CHECK_THROWS_AS(added_noise_resonant_closed(q), ConditionsNotApplied);
}

TEST_CASE("added_noise: monotone suppression with coupling") {
    double prev = std::numeric_limits<double>::infinity();
    for (const double f_g1 : {2.0, 5.0, 10.0}) {
        const double n = added_noise(rule_point(f_g1, 100.0), 0.0);
        CHECK(n < prev);
        prev = n;
    }
}

TEST_CASE("added_noise: efficiency penalty") {
    double prev = 0.0;
    for (const double eta : {1.0, 0.75, 0.5}) {
        const double n = added_noise(rule_point(2.0, 100.0, eta), 0.0);
        CHECK(n > prev);
        prev = n;
    }
}

TEST_CASE("gain channel contribution vanishes in the passive limit") {
    auto m = default_params_mhz();
    m["f_ga"] = -m.at("f_kappa1");
    m["f_G1"] = 5.0;
    m["f_G2"] = g2_stability_rule(5.0);
    const SystemParams p = apply_amplification_conditions(params_from_megahertz(m));
    const auto t = transmission_matrix(p, 0.0);
    CHECK(std::norm(t.matrix(1, 6)) == 0.0);
}

TEST_CASE("added_noise: zero gain raises") {
    auto m = default_params_mhz();
    m["f_G1"] = 0.0; // no a1 -> b coupling, T21 = 0
    const SystemParams p = params_from_megahertz(m);
    CHECK_THROWS_AS(added_noise(p, 0.0), ZeroGain);
}
