#ifndef POLYBOUND_BOUNDS_HPP
#define POLYBOUND_BOUNDS_HPP

// The seventeen zero-inclusion radii for a monic polynomial: nine classical
// bounds (Abdurakhmanov, Abu-Omar/Kittaneh, Bhunia/Bag/Paul, Cauchy,
// Carmichael/Mason, Fujii/Kubo, two Kittaneh bounds, Montel) and the eight
// bounds R1..R8 derived from numerical radius inequalities of the companion
// matrix. Every bound returns a radius R such that all zeros of p lie in
// |z| <= R.
//
// Two implementation notes, both validated against the published example
// tables (see tests):
//  - AK uses |a_{n-1}| (not squared) inside the quarter-square term; the
//    squared variant reproduces none of the published values.
//  - R5 is implemented exactly as published, with alpha = sqrt(sum |a_r|^2)
//    entering the first radical linearly. That version reproduces the
//    published table but, unlike the sqrt(|a_{n-1}|^2 + alpha^2) variant its
//    own derivation supports, it can undershoot the largest zero (take
//    z^2 - 4). The verification harness reports such soundness violations
//    rather than hiding them.

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "polybound/companion.hpp"
#include "polybound/errors.hpp"
#include "polybound/polynomial.hpp"
#include "polybound/radius.hpp"
#include "polybound/roots.hpp"

namespace polybound {

enum class BoundId { A, AK, BBP, C, CM, FK, K1, K2, M, R1, R2, R3, R4, R5, R6, R7, R8 };

// Canonical order: tie-breaking and report layout.
inline constexpr std::array<BoundId, 17> kAllBounds = {
    BoundId::A,  BoundId::AK, BoundId::BBP, BoundId::C,  BoundId::CM, BoundId::FK,
    BoundId::K1, BoundId::K2, BoundId::M,   BoundId::R1, BoundId::R2, BoundId::R3,
    BoundId::R4, BoundId::R5, BoundId::R6,  BoundId::R7, BoundId::R8};

inline const char* to_string(BoundId id) {
    switch (id) {
        case BoundId::A: return "A";
        case BoundId::AK: return "AK";
        case BoundId::BBP: return "BBP";
        case BoundId::C: return "C";
        case BoundId::CM: return "CM";
        case BoundId::FK: return "FK";
        case BoundId::K1: return "K1";
        case BoundId::K2: return "K2";
        case BoundId::M: return "M";
        case BoundId::R1: return "R1";
        case BoundId::R2: return "R2";
        case BoundId::R3: return "R3";
        case BoundId::R4: return "R4";
        case BoundId::R5: return "R5";
        case BoundId::R6: return "R6";
        case BoundId::R7: return "R7";
        case BoundId::R8: return "R8";
    }
    return "?";
}

// Minimum degree the formula's index ranges support.
inline std::size_t min_degree(BoundId id) {
    return id == BoundId::K2 ? 3 : 2;
}

namespace detail {

inline double cos_pi_over(std::size_t k) {
    return std::cos(std::numbers::pi / double(k));
}

// sum_{r=0}^{n-2} |a_r|^2 (everything below a_{n-1}).
inline double sum_sq_below_top(const Polynomial& p) {
    double s = 0.0;
    for (std::size_t r = 0; r + 1 < p.degree(); ++r) s += std::norm(p.coeff(r));
    return s;
}

// Coefficients of the shifted polynomial q(w) = p(w - a_{n-1}/n):
// alpha_r = sum_{k=r}^{n} C(k,r) (-a_{n-1}/n)^{k-r} a_k with a_n = 1,
// evaluated with a Pascal-recurrence binomial table.
inline std::vector<Complex> shifted_coefficients(const Polynomial& p) {
    const std::size_t n = p.degree();
    const Complex shift = -p.coeff(n - 1) / double(n);
    std::vector<std::vector<double>> choose(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        choose[k].assign(k + 1, 1.0);
        for (std::size_t r = 1; r < k; ++r)
            choose[k][r] = choose[k - 1][r - 1] + choose[k - 1][r];
    }
    std::vector<Complex> alpha(n + 1);
    for (std::size_t r = 0; r <= n; ++r) {
        Complex acc(0.0);
        Complex pw(1.0); // shift^{k-r}
        for (std::size_t k = r; k <= n; ++k) {
            acc += choose[k][r] * pw * p.coeff(k);
            pw *= shift;
        }
        alpha[r] = acc;
    }
    return alpha;
}

} // namespace detail

// The published BBP bracket is (1+a)^2 + 4a + 4 sqrt(a)(1+a); the radical's
// reach is typographically ambiguous, so both readings are implemented and
// the tests pick the reproducible one apart.
enum class BbpGrouping {
    RootOfAlphaOnly,     // ... + 4 sqrt(a) (1+a)
    RootOfAlphaTimesOnePlusAlpha, // ... + 4 sqrt(a (1+a))
};

inline double bbp_bound(const Polynomial& p, BbpGrouping grouping) {
    const std::size_t n = p.degree();
    if (n < 2)
        throw DomainError("bound BBP requires degree >= 2");
    const std::vector<Complex> shifted = detail::shifted_coefficients(p);
    double a = 0.0;
    for (std::size_t i = 0; i + 2 <= n; ++i) a += std::norm(shifted[i]);
    const double radical = grouping == BbpGrouping::RootOfAlphaOnly
                               ? 4.0 * std::sqrt(a) * (1.0 + a)
                               : 4.0 * std::sqrt(a * (1.0 + a));
    const double bracket = (1.0 + a) * (1.0 + a) + 4.0 * a + radical;
    return std::abs(p.coeff(n - 1)) / double(n) + detail::cos_pi_over(n) +
           0.5 * std::pow(bracket, 0.25);
}

inline double compute_bound(BoundId id, const Polynomial& p) {
    const std::size_t n = p.degree();
    if (n < min_degree(id))
        throw DomainError(std::string("bound ") + to_string(id) + " requires degree >= " +
                          std::to_string(min_degree(id)));

    const double top = std::abs(p.coeff(n - 1));
    switch (id) {
        case BoundId::A: {
            const double c = detail::cos_pi_over(n);
            const double tail = 1.0 + std::sqrt(detail::sum_sq_below_top(p));
            return 0.5 * (top + c + std::sqrt((top - c) * (top - c) + tail * tail));
        }
        case BoundId::AK: {
            double s = detail::sum_sq_below_top(p) + top * top;
            const double alpha = std::sqrt(s);
            const double half = 0.5 * (top + alpha);
            const double c = detail::cos_pi_over(n + 1);
            return std::sqrt(half * half + alpha + c * c);
        }
        case BoundId::BBP:
            return bbp_bound(p, BbpGrouping::RootOfAlphaOnly);
        case BoundId::C: {
            double m = 0.0;
            for (const Complex& c : p.low_coeffs()) m = std::max(m, std::abs(c));
            return 1.0 + m;
        }
        case BoundId::CM: {
            double s = 1.0;
            for (const Complex& c : p.low_coeffs()) s += std::norm(c);
            return std::sqrt(s);
        }
        case BoundId::FK: {
            double s = detail::sum_sq_below_top(p) + top * top;
            return detail::cos_pi_over(n + 1) + 0.5 * (std::sqrt(s) + top);
        }
        case BoundId::K1: {
            const double tail = 4.0 * std::sqrt(detail::sum_sq_below_top(p));
            return 0.5 * (top + 1.0 + std::sqrt((top - 1.0) * (top - 1.0) + tail));
        }
        case BoundId::K2: {
            const double c = detail::cos_pi_over(n);
            const double a2 = std::abs(p.coeff(n - 2));
            double s = 0.0;
            for (std::size_t j = 0; j + 2 < n; ++j) s += std::norm(p.coeff(j));
            return 0.5 * (top + c +
                          std::sqrt((top - c) * (top - c) + (a2 + 1.0) * (a2 + 1.0) + s));
        }
        case BoundId::M: {
            double s = 0.0;
            for (const Complex& c : p.low_coeffs()) s += std::abs(c);
            return std::max(1.0, s);
        }
        case BoundId::R1: {
            const double c = detail::cos_pi_over(n);
            const double s2 = detail::sum_sq_below_top(p);
            const double alpha = std::abs(p.coeff(n - 2)) + std::sqrt(s2);
            return 0.5 * (top + c + std::sqrt((top - c) * (top - c) + s2 + 1.0 + alpha));
        }
        case BoundId::R2: {
            const double c = detail::cos_pi_over(n);
            const double beta = detail::sum_sq_below_top(p);
            const double delta = std::abs(p.coeff(n - 2)) + std::sqrt(beta);
            const double bp1 = beta + 1.0;
            const double inner =
                std::max(bp1 * bp1 + 4.0 * std::norm(p.coeff(n - 2)), bp1 * bp1 + delta * delta);
            const double alpha1 = std::pow(0.125 * inner, 0.25);
            return 0.5 * (top + c + std::sqrt((top - c) * (top - c) + 4.0 * alpha1 * alpha1));
        }
        case BoundId::R3: {
            const double c = detail::cos_pi_over(n);
            const double alpha = std::sqrt(detail::sum_sq_below_top(p));
            return std::sqrt(top * top + 0.5 * alpha * (top + 0.5 * alpha)) +
                   std::sqrt(c * c + 0.5 * (c + 0.5));
        }
        case BoundId::R4: {
            const double c = detail::cos_pi_over(n);
            const double beta2 = detail::sum_sq_below_top(p);
            const double alpha = top * std::sqrt(beta2); // sqrt(sum |a_r a_{n-1}|^2)
            return std::sqrt(2.0 * top * top + 0.5 * (alpha + beta2)) +
                   std::sqrt(2.0 * c * c + 0.5);
        }
        case BoundId::R5: {
            const double c = detail::cos_pi_over(n);
            const double alpha = std::sqrt(detail::sum_sq_below_top(p));
            return 0.5 * (top + c + std::sqrt(top * top + alpha) + std::sqrt(c * c + 1.0));
        }
        case BoundId::R6: {
            const double a = companion_square_norm_bound(p);
            const double b = exact_companion_norm(p);
            return std::sqrt(0.25 * b * std::sqrt(a) + 0.25 * a + 0.5 * b * b);
        }
        case BoundId::R7: {
            const double a = companion_square_norm_bound(p);
            const double b = exact_companion_norm(p);
            return std::sqrt(0.5 * b * std::sqrt(a) + 0.25 * a + 0.25 * b * b);
        }
        case BoundId::R8: {
            const double a = companion_square_norm_bound(p);
            const double b = exact_companion_norm(p);
            return std::sqrt(0.75 * a + 0.25 * b * b);
        }
    }
    throw DomainError("compute_bound: unknown bound id");
}

struct BoundReport {
    Polynomial polynomial;
    std::vector<std::pair<BoundId, double>> entries; // canonical order
    std::vector<BoundId> skipped;                    // degree too low
    BoundId best = BoundId::A;
    std::optional<double> actual_max_modulus;        // from the Aberth oracle
};

inline BoundReport compute_all(const Polynomial& p, bool with_roots) {
    if (p.degree() < 2)
        throw DomainError("compute_all: degree must be at least 2");
    BoundReport report{p, {}, {}, BoundId::A, std::nullopt};
    double best_value = 0.0;
    bool have_best = false;
    for (BoundId id : kAllBounds) {
        if (p.degree() < min_degree(id)) {
            report.skipped.push_back(id);
            continue;
        }
        const double value = compute_bound(id, p);
        report.entries.emplace_back(id, value);
        if (!have_best || value < best_value) {
            best_value = value;
            report.best = id;
            have_best = true;
        }
    }
    if (with_roots)
        report.actual_max_modulus = max_modulus(find_roots(p));
    return report;
}

// w(C(p)): the quantity every R_k dominates. Degree 1 never reaches here;
// callers handle the single root -a_0 directly.
inline double numerical_radius_of_companion(const Polynomial& p,
                                            double tol = kDefaultRadiusTol) {
    return numerical_radius(companion_matrix(p).matrix, tol).value;
}

} // namespace polybound

#endif
