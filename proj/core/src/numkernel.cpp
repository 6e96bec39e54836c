#include "triamp/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace triamp {

namespace {

constexpr double kPivotRel = 1e-14;

void require_finite(const CMat& m, const char* who) {
    if (!m.all_finite()) throw NonFiniteValue(std::string(who) + ": non-finite entry in input");
}

// In-place factor-and-solve; a and b are working copies.
CMat solve_impl(CMat a, CMat b) {
    const std::size_t n = a.rows();
    const double scale = a.max_abs();
    const double threshold = kPivotRel * scale;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double mag = std::abs(a(r, col));
            if (mag > best) {
                best = mag;
                piv = r;
            }
        }
        if (best < threshold || best == 0.0)
            throw SingularMatrix("lu_solve: pivot below threshold at column " + std::to_string(col));
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a(col, j), a(piv, j));
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(col, j), b(piv, j));
        }
        const Complex inv_piv = 1.0 / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = a(r, col) * inv_piv;
            if (f == Complex{}) continue;
            a(r, col) = {};
            for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= f * a(col, j);
            for (std::size_t j = 0; j < b.cols(); ++j) b(r, j) -= f * b(col, j);
        }
    }
    // back substitution
    for (std::size_t ri = n; ri-- > 0;) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Complex s = b(ri, j);
            for (std::size_t k = ri + 1; k < n; ++k) s -= a(ri, k) * b(k, j);
            b(ri, j) = s / a(ri, ri);
        }
    }
    return b;
}

} // namespace

CMat lu_solve(const CMat& a, const CMat& b) {
    if (a.rows() != a.cols()) throw ValidationError("lu_solve: matrix must be square");
    if (a.cols() != b.rows()) throw ValidationError("lu_solve: dimension mismatch");
    require_finite(a, "lu_solve");
    require_finite(b, "lu_solve");
    CMat x = solve_impl(a, b);
    if (!x.all_finite()) throw NonFiniteValue("lu_solve: non-finite entry in result");
    return x;
}

CMat inverse(const CMat& a) {
    if (a.rows() != a.cols()) throw ValidationError("inverse: matrix must be square");
    return lu_solve(a, CMat::identity(a.rows()));
}

Complex determinant(const CMat& a) {
    if (a.rows() != a.cols()) throw ValidationError("determinant: matrix must be square");
    require_finite(a, "determinant");
    CMat u = a;
    const std::size_t n = u.rows();
    Complex det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(u(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double mag = std::abs(u(r, col));
            if (mag > best) {
                best = mag;
                piv = r;
            }
        }
        if (best == 0.0) return {};
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(u(col, j), u(piv, j));
            det = -det;
        }
        det *= u(col, col);
        const Complex inv_piv = 1.0 / u(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = u(r, col) * inv_piv;
            for (std::size_t j = col + 1; j < n; ++j) u(r, j) -= f * u(col, j);
        }
    }
    return det;
}

std::array<Complex, 5> characteristic_polynomial4(const CMat& a) {
    if (a.rows() != 4 || a.cols() != 4)
        throw ValidationError("characteristic_polynomial4: matrix must be 4x4");
    require_finite(a, "characteristic_polynomial4");

    // Newton's identities from power sums t_k = tr(A^k).
    CMat p = a;
    std::array<Complex, 5> t{}; // t[1..4]
    for (int k = 1; k <= 4; ++k) {
        Complex tr = 0.0;
        for (std::size_t i = 0; i < 4; ++i) tr += p(i, i);
        t[static_cast<std::size_t>(k)] = tr;
        if (k < 4) p = p * a;
    }
    const Complex e1 = t[1];
    const Complex e2 = (e1 * t[1] - t[2]) / 2.0;
    const Complex e3 = (e2 * t[1] - e1 * t[2] + t[3]) / 3.0;
    const Complex e4 = (e3 * t[1] - e2 * t[2] + e1 * t[3] - t[4]) / 4.0;

    // det(A - lambda I) = lambda^4 - e1 lambda^3 + e2 lambda^2 - e3 lambda + e4
    return {e4, -e3, e2, -e1, Complex{1.0}};
}

namespace {

Complex poly_eval(const std::array<Complex, 5>& c, Complex z) {
    Complex r = c[4];
    for (int k = 3; k >= 0; --k) r = r * z + c[static_cast<std::size_t>(k)];
    return r;
}

Complex poly_deriv(const std::array<Complex, 5>& c, Complex z) {
    Complex r = 4.0 * c[4];
    for (int k = 3; k >= 1; --k) r = r * z + static_cast<double>(k) * c[static_cast<std::size_t>(k)];
    return r;
}

} // namespace

std::array<Complex, 4> quartic_eigenvalues(const CMat& a) {
    if (a.rows() != 4 || a.cols() != 4)
        throw ValidationError("quartic_eigenvalues: matrix must be 4x4");
    require_finite(a, "quartic_eigenvalues");

    const double scale = a.max_abs();
    if (scale == 0.0) return {Complex{}, Complex{}, Complex{}, Complex{}};

    CMat b(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) b(i, j) = a(i, j) / scale;

    const auto c = characteristic_polynomial4(b);

    // Durand-Kerner with the standard non-symmetric seeds.
    std::array<Complex, 4> z;
    const Complex seed{0.4, 0.9};
    z[0] = seed;
    for (std::size_t k = 1; k < 4; ++k) z[k] = z[k - 1] * seed;

    constexpr int kMaxIter = 500;
    constexpr double kTol = 1e-12;
    bool converged = false;
    for (int it = 0; it < kMaxIter && !converged; ++it) {
        double max_step = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            Complex denom = 1.0;
            for (std::size_t j = 0; j < 4; ++j)
                if (j != i) denom *= z[i] - z[j];
            if (denom == Complex{}) denom = Complex{kTol, 0.0};
            const Complex step = poly_eval(c, z[i]) / denom;
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[i])));
        }
        converged = max_step < kTol;
    }
    if (!converged) throw NoConvergence("quartic_eigenvalues: root iteration did not converge");

    // one Newton polish per root
    for (auto& root : z) {
        const Complex d = poly_deriv(c, root);
        if (d != Complex{}) root -= poly_eval(c, root) / d;
    }

    for (auto& root : z) root *= scale;
    std::sort(z.begin(), z.end(), [](Complex l, Complex r) {
        if (l.real() != r.real()) return l.real() < r.real();
        return l.imag() < r.imag();
    });
    for (const auto& root : z)
        if (!is_finite(root)) throw NonFiniteValue("quartic_eigenvalues: non-finite root");
    return z;
}

std::vector<double> unwrap_phase(std::span<const double> theta) {
    if (theta.empty()) throw ValidationError("unwrap_phase: empty input");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> out(theta.size());
    out[0] = theta[0];
    double offset = 0.0;
    for (std::size_t i = 1; i < theta.size(); ++i) {
        if (!std::isfinite(theta[i])) throw NonFiniteValue("unwrap_phase: non-finite sample");
        double d = theta[i] - theta[i - 1];
        while (d > std::numbers::pi) {
            d -= two_pi;
            offset -= two_pi;
        }
        while (d <= -std::numbers::pi) {
            d += two_pi;
            offset += two_pi;
        }
        out[i] = theta[i] + offset;
    }
    return out;
}

std::vector<double> central_diff(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ValidationError("central_diff: size mismatch");
    if (x.size() < 3) throw GridTooSmall("central_diff: need at least 3 points");
    const std::size_t n = x.size();
    for (std::size_t i = 1; i < n; ++i)
        if (!(x[i] > x[i - 1])) throw ValidationError("central_diff: x must be strictly increasing");

    std::vector<double> d(n);
    d[0] = (y[1] - y[0]) / (x[1] - x[0]);
    for (std::size_t i = 1; i + 1 < n; ++i)
        d[i] = (y[i + 1] - y[i - 1]) / (x[i + 1] - x[i - 1]);
    d[n - 1] = (y[n - 1] - y[n - 2]) / (x[n - 1] - x[n - 2]);
    return d;
}

} // namespace triamp
