#include "triamp/sysmodel.hpp"

#include <cmath>
#include <numbers>

#include "triamp/errors.hpp"

namespace triamp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double pick(const SystemParams& p, int k, double one, double two, double three) {
    switch (k) {
        case 1: return one;
        case 2: return two;
        case 3: return three;
        default:
            (void)p;
            throw ValidationError("cavity index must be 1, 2, or 3");
    }
}

} // namespace

double SystemParams::kappa(int k) const { return pick(*this, k, kappa1, kappa2, kappa3); }
double SystemParams::eta(int k) const { return pick(*this, k, eta1, eta2, eta3); }
double SystemParams::kappa_ex(int k) const { return eta(k) * kappa(k); }
double SystemParams::kappa_intrinsic(int k) const { return (1.0 - eta(k)) * kappa(k); }

void validate(const SystemParams& p) {
    const auto bad = [](const std::string& what) { throw ValidationError("invalid parameters: " + what); };
    for (int k = 1; k <= 3; ++k) {
        if (!(p.kappa(k) > 0.0)) bad("kappa" + std::to_string(k) + " must be > 0");
        if (!(p.eta(k) >= 0.0 && p.eta(k) <= 1.0)) bad("eta" + std::to_string(k) + " must lie in [0, 1]");
    }
    if (!(p.gamma_m > 0.0)) bad("gamma_m must be > 0");
    if (!(p.G1 >= 0.0)) bad("G1 must be >= 0");
    if (!(p.G2 >= 0.0)) bad("G2 must be >= 0");
    if (!(p.G3 >= 0.0)) bad("G3 must be >= 0");
    if (!(p.J >= 0.0)) bad("J must be >= 0");
    if (!(p.n_m >= 0.0)) bad("n_m must be >= 0");
    for (int k = 0; k < 3; ++k)
        if (!(p.s_in[static_cast<std::size_t>(k)] >= 0.0))
            bad("s" + std::to_string(k + 1) + "_in must be >= 0");
    if (!(p.g_a >= -p.kappa1)) bad("g_a must be >= -kappa1 (raw gain g = g_a + kappa1 must be >= 0)");
    if (!std::isfinite(p.phi)) bad("phi must be finite");
}

const std::map<std::string, double>& default_params_mhz() {
    static const std::map<std::string, double> defaults = [] {
        std::map<std::string, double> m;
        m["f_ga"] = 2.0;
        m["f_kappa1"] = 2.0;
        m["f_kappa2"] = 2.0;
        m["f_kappa3"] = 3.0;
        m["eta1"] = 1.0;
        m["eta2"] = 1.0;
        m["eta3"] = 1.0;
        m["f_gamma_m"] = 0.02;
        const double f_g1 = 2.0;
        const double f_g2 = f_g1 - 0.1 * std::sqrt(f_g1);
        const double f_j = std::sqrt(2.0 * 3.0) / 2.0;
        m["f_G1"] = f_g1;
        m["f_G2"] = f_g2;
        m["f_G3"] = f_g2 * 3.0 / (2.0 * f_j);
        m["phi"] = -std::numbers::pi / 2.0;
        m["f_J"] = f_j;
        m["n_m"] = 0.0;
        m["s1_in"] = 0.0;
        m["s2_in"] = 0.0;
        m["s3_in"] = 0.0;
        return m;
    }();
    return defaults;
}

SystemParams params_from_megahertz(const std::map<std::string, double>& raw) {
    const auto& defaults = default_params_mhz();
    for (const auto& [key, value] : raw) {
        if (defaults.find(key) == defaults.end())
            throw ValidationError("unknown parameter key: " + key);
        if (!std::isfinite(value)) throw ValidationError("non-finite value for key: " + key);
    }
    const auto get = [&](const char* key) {
        if (auto it = raw.find(key); it != raw.end()) return it->second;
        return defaults.at(key);
    };

    SystemParams p{};
    p.g_a = kTwoPi * get("f_ga");
    p.kappa1 = kTwoPi * get("f_kappa1");
    p.kappa2 = kTwoPi * get("f_kappa2");
    p.kappa3 = kTwoPi * get("f_kappa3");
    p.eta1 = get("eta1");
    p.eta2 = get("eta2");
    p.eta3 = get("eta3");
    p.gamma_m = kTwoPi * get("f_gamma_m");
    p.G1 = kTwoPi * get("f_G1");
    p.G2 = kTwoPi * get("f_G2");
    p.G3 = kTwoPi * get("f_G3");
    p.phi = get("phi");
    p.J = kTwoPi * get("f_J");
    p.n_m = get("n_m");
    p.s_in = {get("s1_in"), get("s2_in"), get("s3_in")};
    validate(p);
    return p;
}

std::map<std::string, double> params_to_megahertz(const SystemParams& p) {
    std::map<std::string, double> m;
    m["f_ga"] = p.g_a / kTwoPi;
    m["f_kappa1"] = p.kappa1 / kTwoPi;
    m["f_kappa2"] = p.kappa2 / kTwoPi;
    m["f_kappa3"] = p.kappa3 / kTwoPi;
    m["eta1"] = p.eta1;
    m["eta2"] = p.eta2;
    m["eta3"] = p.eta3;
    m["f_gamma_m"] = p.gamma_m / kTwoPi;
    m["f_G1"] = p.G1 / kTwoPi;
    m["f_G2"] = p.G2 / kTwoPi;
    m["f_G3"] = p.G3 / kTwoPi;
    m["phi"] = p.phi;
    m["f_J"] = p.J / kTwoPi;
    m["n_m"] = p.n_m;
    m["s1_in"] = p.s_in[0];
    m["s2_in"] = p.s_in[1];
    m["s3_in"] = p.s_in[2];
    return m;
}

SystemParams apply_amplification_conditions(SystemParams p) {
    if (!(p.kappa2 > 0.0 && p.kappa3 > 0.0))
        throw ValidationError("apply_amplification_conditions: kappa2 and kappa3 must be > 0");
    p.phi = -std::numbers::pi / 2.0;
    p.J = std::sqrt(p.kappa2 * p.kappa3) / 2.0;
    if (!(p.J > 0.0)) throw DegenerateCoupling("apply_amplification_conditions: J = 0");
    p.G3 = p.G2 * p.kappa3 / (2.0 * p.J);
    return p;
}

bool amplification_conditions_hold(const SystemParams& p, double rel_tol) {
    const double j_target = std::sqrt(p.kappa2 * p.kappa3) / 2.0;
    if (std::abs(p.phi + std::numbers::pi / 2.0) > rel_tol * std::numbers::pi) return false;
    if (std::abs(p.J - j_target) > rel_tol * j_target) return false;
    const double g3_target = p.G2 * p.kappa3 / (2.0 * j_target);
    return std::abs(p.G3 - g3_target) <= rel_tol * std::max(g3_target, p.kappa3);
}

double g2_stability_rule(double f_g1) {
    if (!(f_g1 >= 0.0)) throw NegativeCoupling("g2_stability_rule: f_G1 must be >= 0");
    const double f_g2 = f_g1 - 0.1 * std::sqrt(f_g1);
    // roundoff can push the f_G1 = 0.01 root a few ulp below zero
    if (f_g2 < -1e-12 * std::max(1.0, f_g1))
        throw NegativeCoupling("g2_stability_rule: rule yields negative G2 (f_G1 < 0.01)");
    return std::max(f_g2, 0.0);
}

DerivedQuantities cooperativities(const SystemParams& p) {
    DerivedQuantities d{};
    d.C1 = 4.0 * p.G1 * p.G1 / (p.kappa1 * p.gamma_m);
    d.C2 = 4.0 * p.G2 * p.G2 / (p.kappa2 * p.gamma_m);
    d.C3 = 4.0 * p.G3 * p.G3 / (p.kappa3 * p.gamma_m);
    d.g = p.raw_gain();
    return d;
}

CMat build_M(const SystemParams& p) {
    validate(p);
    const Complex i{0.0, 1.0};
    const Complex phase = std::exp(i * p.phi);

    CMat m(4, 4);
    m(0, 0) = p.g_a / 2.0;
    m(1, 1) = -p.kappa2 / 2.0;
    m(2, 2) = -p.kappa3 / 2.0;
    m(3, 3) = -p.gamma_m / 2.0;
    m(0, 3) = -i * p.G1;
    m(3, 0) = -i * p.G1;
    m(1, 2) = -i * p.J;
    m(2, 1) = -i * p.J;
    m(1, 3) = -i * p.G2;
    m(3, 1) = -i * p.G2;
    m(2, 3) = -i * p.G3 * std::conj(phase);
    m(3, 2) = -i * p.G3 * phase;
    return m;
}

CMat build_L(const SystemParams& p) {
    validate(p);
    CMat l(4, 8);
    l(0, 0) = std::sqrt(p.kappa_ex(1));
    l(1, 1) = std::sqrt(p.kappa_ex(2));
    l(2, 2) = std::sqrt(p.kappa_ex(3));
    l(0, 3) = std::sqrt(p.kappa_intrinsic(1));
    l(1, 4) = std::sqrt(p.kappa_intrinsic(2));
    l(2, 5) = std::sqrt(p.kappa_intrinsic(3));
    l(0, 6) = std::sqrt(p.raw_gain());
    l(3, 7) = std::sqrt(p.gamma_m);
    return l;
}

} // namespace triamp
