#include "triamp/stability.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "triamp/numkernel.hpp"

namespace triamp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMarginalBand = 1e-9; // rad/us

SystemParams with_couplings_mhz(SystemParams p, double f_g1, double f_g2) {
    p.G1 = kTwoPi * f_g1;
    p.G2 = kTwoPi * f_g2;
    p.G3 = p.G2 * p.kappa3 / (2.0 * p.J);
    return p;
}

bool stable_on_rule_line(const SystemParams& base, double f_g1) {
    const double f_g2 = g2_stability_rule(f_g1);
    const auto rep = stability_report(with_couplings_mhz(base, f_g1, f_g2));
    return rep.stable && !rep.marginal;
}

} // namespace

StabilityReport stability_report(const SystemParams& p) {
    validate(p);
    StabilityReport r{};
    r.eigenvalues = quartic_eigenvalues(build_M(p));
    double max_re = r.eigenvalues[0].real();
    for (const auto& ev : r.eigenvalues) max_re = std::max(max_re, ev.real());
    r.max_real_part = max_re;
    r.marginal = std::abs(max_re) < kMarginalBand;
    // marginal cells classified unstable: conservative at the gain boundary
    r.stable = max_re < 0.0 && !r.marginal;
    r.margin = -max_re;
    return r;
}

StabilityGrid stability_grid(const SystemParams& p, std::span<const double> g1_axis_mhz,
                             std::span<const double> g2_axis_mhz, bool apply_conditions) {
    if (g1_axis_mhz.empty() || g2_axis_mhz.empty())
        throw ValidationError("stability_grid: axes must be nonempty");
    for (std::size_t i = 1; i < g1_axis_mhz.size(); ++i)
        if (!(g1_axis_mhz[i] > g1_axis_mhz[i - 1]))
            throw ValidationError("stability_grid: g1 axis must be strictly increasing");
    for (std::size_t i = 1; i < g2_axis_mhz.size(); ++i)
        if (!(g2_axis_mhz[i] > g2_axis_mhz[i - 1]))
            throw ValidationError("stability_grid: g2 axis must be strictly increasing");

    SystemParams base = p;
    if (apply_conditions) {
        base.phi = -std::numbers::pi / 2.0;
        base.J = std::sqrt(base.kappa2 * base.kappa3) / 2.0;
    }

    StabilityGrid grid;
    grid.g1_mhz.assign(g1_axis_mhz.begin(), g1_axis_mhz.end());
    grid.g2_mhz.assign(g2_axis_mhz.begin(), g2_axis_mhz.end());
    grid.verdicts.resize(grid.g1_mhz.size() * grid.g2_mhz.size());
    grid.margins.resize(grid.verdicts.size());

    for (std::size_t i1 = 0; i1 < grid.g1_mhz.size(); ++i1) {
        for (std::size_t i2 = 0; i2 < grid.g2_mhz.size(); ++i2) {
            const std::size_t idx = grid.index(i1, i2);
            try {
                const auto rep =
                    stability_report(with_couplings_mhz(base, grid.g1_mhz[i1], grid.g2_mhz[i2]));
                grid.verdicts[idx] = rep.stable ? CellVerdict::Stable : CellVerdict::Unstable;
                grid.margins[idx] = rep.margin;
            } catch (const NoConvergence&) {
                grid.verdicts[idx] = CellVerdict::Indeterminate;
                grid.margins[idx] = std::numeric_limits<double>::quiet_NaN();
            }
        }
    }
    return grid;
}

double critical_g1(const SystemParams& p) {
    constexpr double lo_edge = 0.01;
    constexpr double hi_edge = 10.0;
    constexpr double tol = 1e-4;

    SystemParams base = apply_amplification_conditions(p);

    if (stable_on_rule_line(base, lo_edge)) return lo_edge;

    // coarse scan for the first stable point, then bisect the boundary
    double prev = lo_edge;
    double first_stable = -1.0;
    for (double f = lo_edge + 0.05; f <= hi_edge + 1e-12; f += 0.05) {
        if (stable_on_rule_line(base, f)) {
            first_stable = f;
            break;
        }
        prev = f;
    }
    if (first_stable < 0.0)
        throw NotFound("critical_g1: no stable point on the rule line within [0.01, 10] MHz");

    double lo = prev, hi = first_stable;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (stable_on_rule_line(base, mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

} // namespace triamp
