#include "triamp/scattering.hpp"

#include <cmath>

#include "triamp/numkernel.hpp"

namespace triamp {

namespace {

struct Gammas {
    Complex g1, g2, g3, gm;
};

Gammas gammas(const SystemParams& p, double omega) {
    const Complex iw{0.0, omega};
    return {p.g_a / 2.0 + iw, -p.kappa2 / 2.0 + iw, -p.kappa3 / 2.0 + iw, -p.gamma_m / 2.0 + iw};
}

double rate_scale(const SystemParams& p) {
    return std::max({std::abs(p.g_a), p.kappa1, p.kappa2, p.kappa3, p.gamma_m, p.G1, p.G2, p.G3, p.J});
}

Complex t_closed(const SystemParams& p, double omega, double phase_sign) {
    validate(p);
    const auto g = gammas(p, omega);
    const Complex a = denominator_A(p, omega);
    const double scale = rate_scale(p);
    if (std::abs(a) < 1e-280 * scale * scale * scale * scale)
        throw SingularAtFrequency("closed-form T: denominator underflow at omega = " + std::to_string(omega));
    const Complex i{0.0, 1.0};
    const Complex phase = std::exp(i * (phase_sign * p.phi));
    const double pref = std::sqrt(p.eta1 * p.eta2 * p.kappa1 * p.kappa2);
    return -(pref / a) * p.G1 * (p.G2 * g.g3 + i * p.J * p.G3 * phase);
}

} // namespace

TransmissionResult transmission_matrix(const SystemParams& p, double omega) {
    validate(p);
    const CMat m = build_M(p);
    const CMat l = build_L(p);
    CMat a = m;
    for (std::size_t i = 0; i < 4; ++i) a(i, i) += Complex{0.0, omega};
    CMat x(4, 8);
    try {
        x = lu_solve(a, l);
    } catch (const SingularMatrix& e) {
        throw SingularAtFrequency("transmission_matrix: (M + i omega I) singular at omega = " +
                                  std::to_string(omega) + " rad/us: " + e.what());
    }
    CMat t = CMat::identity(8) + l.transpose() * x;
    return {omega, std::move(t)};
}

Complex denominator_A(const SystemParams& p, double omega) {
    const auto g = gammas(p, omega);
    const Complex i{0.0, 1.0};
    const Complex inner = g.g2 * g.g3 * g.gm + g.g3 * p.G2 * p.G2 + g.g2 * p.G3 * p.G3 +
                          g.gm * p.J * p.J + 2.0 * i * p.G2 * p.G3 * p.J * std::cos(p.phi);
    return g.g1 * inner + p.G1 * p.G1 * (g.g2 * g.g3 + p.J * p.J);
}

Complex t12_closed(const SystemParams& p, double omega) { return t_closed(p, omega, +1.0); }
Complex t21_closed(const SystemParams& p, double omega) { return t_closed(p, omega, -1.0); }

Complex resonant_t21(const SystemParams& p) {
    validate(p);
    if (!amplification_conditions_hold(p))
        throw ConditionsNotApplied("resonant_t21: directional amplification conditions not satisfied");
    const double num = 8.0 * std::sqrt(p.eta1 * p.eta2 * p.kappa1 * p.kappa2) * p.G1 * p.G2;
    const double den = 4.0 * p.kappa2 * p.G1 * p.G1 - 4.0 * p.g_a * p.G2 * p.G2 -
                       p.g_a * p.kappa2 * p.gamma_m;
    const double scale = rate_scale(p);
    if (std::abs(den) < 1e-12 * scale * scale * scale)
        throw DivergentGain("resonant_t21: gain denominator vanishes (stability boundary)");
    return Complex{num / den, 0.0};
}

BandwidthResult bandwidth(const SystemParams& p) {
    validate(p);
    if (!amplification_conditions_hold(p))
        throw ConditionsNotApplied("bandwidth: directional amplification conditions not satisfied");

    BandwidthResult r{};
    const auto d = cooperativities(p);
    const double kappa = p.kappa2;
    r.closed_form = std::abs(kappa * (d.C1 - d.C2 - 1.0) / (kappa / p.gamma_m - d.C1));
    const double rel23 = std::abs(p.kappa2 - p.kappa3) / p.kappa2;
    const double rel_ga = std::abs(p.g_a - kappa) / kappa;
    r.closed_form_exact = rel23 <= 1e-6 && rel_ga <= 1e-6;

    const double peak = std::norm(t21_closed(p, 0.0));
    const double target = peak / 2.0;
    const double limit = 10.0 * p.kappa2;
    const double step = p.kappa2 / 2000.0;

    double found = -1.0;
    for (double sign : {+1.0, -1.0}) {
        double prev_w = 0.0;
        double prev_f = peak;
        bool bracketed = false;
        for (double w = step; w <= limit; w += step) {
            const double f = std::norm(t21_closed(p, sign * w));
            if ((prev_f - target) * (f - target) <= 0.0) {
                // bisect [prev_w, w]
                double lo = prev_w, hi = w;
                while ((hi - lo) > 1e-6 * std::max(hi, step)) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = std::norm(t21_closed(p, sign * mid));
                    if ((prev_f - target) * (fm - target) <= 0.0)
                        hi = mid;
                    else
                        lo = mid;
                }
                const double w_half = 0.5 * (lo + hi);
                if (found < 0.0 || w_half < found) found = w_half;
                bracketed = true;
                break;
            }
            prev_w = w;
            prev_f = f;
        }
        (void)bracketed;
    }
    if (found < 0.0)
        throw SearchBracketFailure("bandwidth: no half-power crossing within |omega| <= 10 kappa2");
    r.numeric = found;
    return r;
}

double gain_bandwidth_product(const SystemParams& p) {
    const auto d = cooperativities(p);
    const double delta = d.C1 - d.C2 - 1.0;
    if (std::abs(delta) < 1e-12 * std::max(1.0, d.C1))
        throw DivergentGain("gain_bandwidth_product: C1 - C2 - 1 vanishes");
    const double gain21 = 4.0 * p.eta1 * p.eta2 * d.C1 * d.C2 / (delta * delta);
    const auto bw = bandwidth(p);
    return bw.closed_form * std::sqrt(gain21);
}

GainSummary gain(const SystemParams& p) {
    GainSummary s{};
    s.t21_resonant = resonant_t21(p);
    const auto d = cooperativities(p);
    const double delta = d.C1 - d.C2 - 1.0;
    const bool ga_matched = std::abs(p.g_a - p.kappa1) <= 1e-10 * p.kappa1;
    if (ga_matched) {
        if (std::abs(delta) < 1e-12 * std::max(1.0, d.C1))
            throw DivergentGain("gain: C1 - C2 - 1 vanishes at g_a = kappa1");
        s.gain_linear = 4.0 * p.eta1 * p.eta2 * d.C1 * d.C2 / (delta * delta);
    } else {
        s.gain_linear = std::norm(s.t21_resonant);
    }
    s.gain_db = 10.0 * std::log10(s.gain_linear);
    s.bandwidth = bandwidth(p).numeric;
    s.gbp = gain_bandwidth_product(p);
    return s;
}

} // namespace triamp
