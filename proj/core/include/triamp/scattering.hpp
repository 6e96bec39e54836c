// scattering.hpp - 8x8 transmission matrix, closed-form T12/T21, resonant
// gain, bandwidth, and gain-bandwidth product

#pragma once

#include "triamp/sysmodel.hpp"

namespace triamp {

struct TransmissionResult {
    double omega; // probe detuning, rad/us
    CMat matrix;  // 8x8
    static const std::array<const char*, 8>& channel_labels() { return kChannelLabels; }
};

// T(omega) = I + L^T (M + i omega I)^{-1} L
TransmissionResult transmission_matrix(const SystemParams& p, double omega);

// Denominator shared by the closed-form T12/T21, with
// Gamma1 = g_a/2 + i w, Gamma2 = -kappa2/2 + i w, Gamma3 = -kappa3/2 + i w,
// Gamma_m = -gamma_m/2 + i w.
Complex denominator_A(const SystemParams& p, double omega);

Complex t12_closed(const SystemParams& p, double omega);
Complex t21_closed(const SystemParams& p, double omega);

// Resonant T21 under the directional amplification conditions:
// 8 sqrt(eta1 eta2 kappa1 kappa2) G1 G2 /
//   (4 kappa2 G1^2 - 4 g_a G2^2 - g_a kappa2 gamma_m).
// Throws ConditionsNotApplied when p deviates from the conditions.
Complex resonant_t21(const SystemParams& p);

struct BandwidthResult {
    double closed_form;      // |kappa (C1 - C2 - 1) / (kappa/gamma_m - C1)|, kappa = kappa2
    bool closed_form_exact;  // true when g_a = kappa2 = kappa3 within 1e-6 relative
    double numeric;          // smallest |omega| with |T21|^2 at half its resonant value
};

BandwidthResult bandwidth(const SystemParams& p);

// P = Gamma * sqrt(G) from the closed-form bandwidth and the
// large-cooperativity gain 4 eta1 eta2 C1 C2 / (C1 - C2 - 1)^2.
double gain_bandwidth_product(const SystemParams& p);

struct GainSummary {
    Complex t21_resonant;
    double gain_linear;
    double gain_db;   // 10 log10(gain_linear)
    double bandwidth; // numeric half-power bandwidth, rad/us
    double gbp;       // closed-form gain-bandwidth product, rad/us
};

GainSummary gain(const SystemParams& p);

} // namespace triamp
