// noisemodel.hpp - output spectrum of cavity a2 and input-referred added
// noise of the amplifier

#pragma once

#include "triamp/sysmodel.hpp"

namespace triamp {

// Symmetrized per-channel spectral weights: channels 1-3 carry
// s_k,in + 1/2, channels 4-7 carry 1/2, channel 8 carries n_m + 1/2.
std::array<double, 8> noise_weights(const SystemParams& p);

// S_2,out(w) = sum_{i=1..3} (s_i,in + 1/2) |T_2i|^2
//            + (1/2) sum_{i=4..7} |T_2i|^2 + (n_m + 1/2) |T_28|^2
double output_spectrum_2(const SystemParams& p, double omega);

// N_2(w) = sum_{i=2..8} w_i |T_2i(w)|^2 / |T_21(w)|^2 with vacuum cavity
// channels and n_8 = n_m; probe fluxes are excluded. Normalized by the
// local gain |T_21(w)|^2 so it reduces to the resonant closed form at w=0.
double added_noise(const SystemParams& p, double omega);

// N_2(0) = (1/2)(C1 + C2 - 1)^2 / (4 C1 C2) + (n_m + 1/2)/C1 + 1,
// valid for eta = 1, g_a = kappa1 and the amplification conditions.
double added_noise_resonant_closed(const SystemParams& p);

} // namespace triamp
