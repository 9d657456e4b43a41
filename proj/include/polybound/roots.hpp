#ifndef POLYBOUND_ROOTS_HPP
#define POLYBOUND_ROOTS_HPP

// Aberth-Ehrlich simultaneous root iteration. Serves as the independent
// verification oracle for every zero-inclusion bound: each returned root
// carries its residual |p(z_i)| so callers can judge convergence themselves.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "polybound/errors.hpp"
#include "polybound/polynomial.hpp"

namespace polybound {

struct RootSet {
    std::vector<Complex> roots;
    std::vector<double> residuals; // |p(z_i)|
    int iterations = 0;
    bool converged = false;
};

inline constexpr double kDefaultRootTol = 1e-12;
inline constexpr int kDefaultRootMaxIter = 1000;

inline RootSet find_roots(const Polynomial& p, double tol = kDefaultRootTol,
                          int max_iter = kDefaultRootMaxIter) {
    if (!(tol > 0.0))
        throw InputError("find_roots: tol must be positive");
    if (max_iter < 1)
        throw InputError("find_roots: max_iter must be positive");
    const std::size_t n = p.degree();

    RootSet rs;
    if (n == 1) {
        rs.roots = {-p.coeff(0)};
        rs.residuals = {std::abs(p.evaluate(rs.roots[0]))};
        rs.converged = true;
        return rs;
    }

    // Seeds equispaced inside the Cauchy disk, angle-offset to break the
    // symmetry of polynomials like z^n - c.
    double max_abs = 0.0;
    for (const Complex& c : p.low_coeffs()) max_abs = std::max(max_abs, std::abs(c));
    const double r0 = 0.8 * (1.0 + max_abs);
    rs.roots.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double ang = 2.0 * std::numbers::pi * double(k) / double(n) + 0.3;
        rs.roots[k] = r0 * Complex(std::cos(ang), std::sin(ang));
    }

    for (int iter = 1; iter <= max_iter; ++iter) {
        double max_step = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex& zi = rs.roots[i];
            const auto [pv, dv] = p.evaluate_with_derivative(zi);
            if (pv == Complex(0.0)) continue;
            Complex newton;
            if (dv == Complex(0.0)) {
                // Stationary point: nudge off it instead of dividing by zero.
                zi += Complex(1e-6, 1e-6) * (1.0 + std::abs(zi));
                max_step = std::max(max_step, 1e-6 * (1.0 + std::abs(zi)));
                continue;
            }
            newton = pv / dv;
            Complex repulsion(0.0);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                Complex diff = zi - rs.roots[j];
                if (diff == Complex(0.0)) diff = Complex(1e-14, 1e-14);
                repulsion += 1.0 / diff;
            }
            const Complex denom = 1.0 - newton * repulsion;
            const Complex w = (denom == Complex(0.0)) ? newton : newton / denom;
            zi -= w;
            max_step = std::max(max_step, std::abs(w));
        }
        rs.iterations = iter;
        if (max_step < tol) {
            rs.converged = true;
            break;
        }
    }

    rs.residuals.resize(n);
    for (std::size_t i = 0; i < n; ++i) rs.residuals[i] = std::abs(p.evaluate(rs.roots[i]));
    return rs;
}

inline double max_modulus(const RootSet& rs) {
    if (rs.roots.empty())
        throw InputError("max_modulus: empty root set");
    double m = 0.0;
    for (const Complex& z : rs.roots) m = std::max(m, std::abs(z));
    return m;
}

} // namespace polybound

#endif
