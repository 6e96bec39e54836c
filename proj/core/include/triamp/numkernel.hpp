// numkernel.hpp - complex linear solves, quartic eigenvalues, phase
// unwrapping, and finite differences for small dense systems

#pragma once

#include <array>
#include <span>
#include <vector>

#include "triamp/complexmat.hpp"

namespace triamp {

// Gaussian elimination with partial pivoting. Throws SingularMatrix when a
// pivot magnitude falls below 1e-14 times the largest initial entry.
CMat lu_solve(const CMat& a, const CMat& b);

CMat inverse(const CMat& a);

// Determinant via LU; shares the pivot threshold with lu_solve but returns 0
// instead of throwing for exactly singular input.
Complex determinant(const CMat& a);

// Coefficients of det(A - lambda I) for 4x4 A, ascending order:
// c[0] + c[1] lambda + c[2] lambda^2 + c[3] lambda^3 + c[4] lambda^4.
std::array<Complex, 5> characteristic_polynomial4(const CMat& a);

// Roots of the characteristic polynomial of a 4x4 matrix, sorted by
// (real, imag) so identical input yields identical output order.
// Durand-Kerner iteration with one Newton polish per root.
std::array<Complex, 4> quartic_eigenvalues(const CMat& a);

// First element preserved; successive differences mapped into (-pi, pi].
std::vector<double> unwrap_phase(std::span<const double> theta);

// Centered differences at interior points, one-sided at the endpoints.
// Exact for affine y. Throws GridTooSmall for fewer than 3 points.
std::vector<double> central_diff(std::span<const double> x, std::span<const double> y);

} // namespace triamp
