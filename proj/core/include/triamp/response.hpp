// response.hpp - phase response and group delay of the transmitted probe

#pragma once

#include <span>
#include <vector>

#include "triamp/sysmodel.hpp"

namespace triamp {

struct DelayCurve {
    std::vector<double> omega; // rad/us, sorted
    std::vector<double> phase; // unwrapped rad
    std::vector<double> delay; // us
};

// arg T21 at each grid point, unwrapped. Throws PhaseUndefined when
// |T21| < 1e-15 anywhere on the grid.
std::vector<double> phase_of_t21(const SystemParams& p, std::span<const double> omega_grid);

// delay = d(theta)/d(omega) by centered differences; in us since omega is
// rad/us and theta is rad.
DelayCurve group_delay(const SystemParams& p, std::span<const double> omega_grid);

} // namespace triamp
