#include "triamp/noisemodel.hpp"

#include <cmath>

#include "triamp/scattering.hpp"

namespace triamp {

std::array<double, 8> noise_weights(const SystemParams& p) {
    std::array<double, 8> w{};
    for (std::size_t i = 0; i < 3; ++i) w[i] = p.s_in[i] + 0.5;
    for (std::size_t i = 3; i < 7; ++i) w[i] = 0.5;
    w[7] = p.n_m + 0.5;
    return w;
}

double output_spectrum_2(const SystemParams& p, double omega) {
    const auto t = transmission_matrix(p, omega);
    const auto w = noise_weights(p);
    double s = 0.0;
    for (std::size_t i = 0; i < 8; ++i) s += w[i] * std::norm(t.matrix(1, i));
    return s;
}

double added_noise(const SystemParams& p, double omega) {
    const auto t = transmission_matrix(p, omega);
    const double gain_local = std::norm(t.matrix(1, 0));
    if (gain_local < 1e-15)
        throw ZeroGain("added_noise: |T21|^2 below floor at omega = " + std::to_string(omega));
    double s = 0.0;
    for (std::size_t i = 1; i < 7; ++i) s += 0.5 * std::norm(t.matrix(1, i));
    s += (p.n_m + 0.5) * std::norm(t.matrix(1, 7));
    return s / gain_local;
}

double added_noise_resonant_closed(const SystemParams& p) {
    validate(p);
    const auto check = [&](double eta, const char* name) {
        if (std::abs(eta - 1.0) > 1e-10)
            throw ConditionsNotApplied(std::string("added_noise_resonant_closed: ") + name +
                                       " must be 1");
    };
    check(p.eta1, "eta1");
    check(p.eta2, "eta2");
    check(p.eta3, "eta3");
    if (std::abs(p.g_a - p.kappa1) > 1e-10 * p.kappa1)
        throw ConditionsNotApplied("added_noise_resonant_closed: g_a must equal kappa1");
    if (!amplification_conditions_hold(p))
        throw ConditionsNotApplied(
            "added_noise_resonant_closed: directional amplification conditions not satisfied");

    const auto d = cooperativities(p);
    const double s = d.C1 + d.C2 - 1.0;
    return 0.5 * s * s / (4.0 * d.C1 * d.C2) + (p.n_m + 0.5) / d.C1 + 1.0;
}

} // namespace triamp
