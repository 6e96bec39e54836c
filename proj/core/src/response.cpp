#include "triamp/response.hpp"

#include <cmath>

#include "triamp/numkernel.hpp"
#include "triamp/scattering.hpp"

namespace triamp {

std::vector<double> phase_of_t21(const SystemParams& p, std::span<const double> omega_grid) {
    if (omega_grid.empty()) throw ValidationError("phase_of_t21: empty grid");
    for (std::size_t i = 1; i < omega_grid.size(); ++i)
        if (!(omega_grid[i] > omega_grid[i - 1]))
            throw ValidationError("phase_of_t21: grid must be strictly increasing");

    std::vector<double> theta(omega_grid.size());
    for (std::size_t i = 0; i < omega_grid.size(); ++i) {
        const Complex t = t21_closed(p, omega_grid[i]);
        if (std::abs(t) < 1e-15)
            throw PhaseUndefined("phase_of_t21: |T21| below floor at omega = " +
                                 std::to_string(omega_grid[i]));
        theta[i] = std::arg(t);
    }
    return unwrap_phase(theta);
}

DelayCurve group_delay(const SystemParams& p, std::span<const double> omega_grid) {
    if (omega_grid.size() < 3) throw GridTooSmall("group_delay: need at least 3 grid points");
    DelayCurve c;
    c.omega.assign(omega_grid.begin(), omega_grid.end());
    c.phase = phase_of_t21(p, omega_grid);
    c.delay = central_diff(c.omega, c.phase);
    return c;
}

} // namespace triamp
