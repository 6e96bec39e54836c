// stability.hpp - eigenvalue stability verdicts and stability diagrams

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "triamp/sysmodel.hpp"

namespace triamp {

struct StabilityReport {
    std::array<Complex, 4> eigenvalues; // rad/us
    double max_real_part;               // rad/us
    bool stable;                        // max Re < 0 strictly
    bool marginal;                      // |max Re| < 1e-9 rad/us
    double margin;                      // -max_real_part
};

StabilityReport stability_report(const SystemParams& p);

enum class CellVerdict : std::uint8_t { Unstable = 0, Stable = 1, Indeterminate = 2 };

struct StabilityGrid {
    std::vector<double> g1_mhz; // axes, MHz
    std::vector<double> g2_mhz;
    std::vector<CellVerdict> verdicts; // row-major, rows indexed by g1
    std::vector<double> margins;       // rad/us

    std::size_t index(std::size_t i1, std::size_t i2) const { return i1 * g2_mhz.size() + i2; }
    CellVerdict verdict(std::size_t i1, std::size_t i2) const { return verdicts[index(i1, i2)]; }
};

// For each (G1, G2) cell, G3 is set to G2 kappa3 / (2J). When
// apply_conditions is true, phi and J are first reset to the directional
// amplification values. Cells where the eigenvalue iteration fails are
// flagged Indeterminate instead of aborting the grid.
StabilityGrid stability_grid(const SystemParams& p, std::span<const double> g1_axis_mhz,
                             std::span<const double> g2_axis_mhz, bool apply_conditions);

// Smallest stable f_G1 in [0.01, 10] MHz along the G2 stability rule line
// with the amplification conditions applied; bisection to 1e-4 MHz.
double critical_g1(const SystemParams& p);

} // namespace triamp
