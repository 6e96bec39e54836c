// sysmodel.hpp - amplifier parameter set, unit conversion, derived
// quantities, and the dynamical/input matrix builders
//
// Unit convention: SystemParams stores angular rates in rad/us. All
// user-facing values are f = rate/2pi in MHz; conversion happens only in
// params_from_megahertz / params_to_megahertz.

#pragma once

#include <array>
#include <map>
#include <string>

#include "triamp/complexmat.hpp"

namespace triamp {

// Mode order for the 4x4 dynamical matrix and channel order for the 8
// input/output channels. Frozen; every downstream module indexes by these.
inline constexpr std::array<const char*, 4> kModeLabels = {"a1", "a2", "a3", "b"};
inline constexpr std::array<const char*, 8> kChannelLabels = {
    "a1_in", "a2_in", "a3_in", "a1_in0", "a2_in0", "a3_in0", "a1_ing", "b_in"};

struct SystemParams {
    double g_a;     // effective gain rate of cavity a1, rad/us
    double kappa1;  // total decay rates, rad/us
    double kappa2;
    double kappa3;
    double eta1;    // coupling efficiencies kappa_ex/kappa
    double eta2;
    double eta3;
    double gamma_m; // mechanical damping, rad/us
    double G1;      // effective optomechanical couplings, rad/us
    double G2;
    double G3;
    double phi;     // coupling phase difference, rad
    double J;       // cavity-cavity hopping, rad/us
    double n_m;     // mechanical thermal occupation
    std::array<double, 3> s_in{}; // probe photon fluxes

    double kappa_ex(int k) const;
    double kappa_intrinsic(int k) const;
    double kappa(int k) const;
    double eta(int k) const;
    // raw gain g = g_a + kappa1; feeds the sqrt(g) noise channel
    double raw_gain() const { return g_a + kappa1; }
};

struct DerivedQuantities {
    double C1; // cooperativities 4 G_k^2 / (kappa_k gamma_m)
    double C2;
    double C3;
    double g;  // raw gain, rad/us
};

// Throws ValidationError naming the first violated invariant.
void validate(const SystemParams& p);

// Keys: f_ga, f_kappa1..3, eta1..3, f_gamma_m, f_G1..3, phi, f_J, n_m,
// s1_in..s3_in. Rates are given as f = rate/2pi in MHz; phi in rad; eta,
// n_m, s_in dimensionless. Missing keys fall back to the baseline defaults
// below; unknown keys are rejected.
SystemParams params_from_megahertz(const std::map<std::string, double>& raw);

std::map<std::string, double> params_to_megahertz(const SystemParams& p);

// Baseline parameter set in MHz convention: eta=1, f_ga=f_kappa1=f_kappa2=2,
// f_kappa3=3, f_gamma_m=0.02, f_G1=2 with the G2 rule and the directional
// amplification conditions applied, n_m=0, s_in=0.
const std::map<std::string, double>& default_params_mhz();

// Sets phi=-pi/2, J=sqrt(kappa2 kappa3)/2, G3=G2 kappa3/(2J); idempotent.
SystemParams apply_amplification_conditions(SystemParams p);

// True when phi/J/G3 already satisfy the directional amplification
// conditions to rel_tol.
bool amplification_conditions_hold(const SystemParams& p, double rel_tol = 1e-10);

// f_G2 = f_G1 - 0.1 sqrt(f_G1); throws NegativeCoupling when f_G1 < 0.01.
double g2_stability_rule(double f_g1);

DerivedQuantities cooperativities(const SystemParams& p);

// 4x4 dynamical matrix, mode order (a1, a2, a3, b).
CMat build_M(const SystemParams& p);

// 4x8 input matrix, channel order per kChannelLabels.
CMat build_L(const SystemParams& p);

} // namespace triamp
