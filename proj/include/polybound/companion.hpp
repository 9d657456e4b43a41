#ifndef POLYBOUND_COMPANION_HPP
#define POLYBOUND_COMPANION_HPP

// Frobenius companion matrix of a monic polynomial, the closed form for its
// operator norm, and the closed-form upper bound on ||C(p)^2||. The
// eigenvalues of C(p) are exactly the zeros of p.

#include <cmath>
#include <cstddef>
#include <utility>

#include "polybound/errors.hpp"
#include "polybound/linalg.hpp"
#include "polybound/polynomial.hpp"

namespace polybound {

struct CompanionMatrix {
    ComplexMatrix matrix;
    Polynomial source;
};

// First row (-a_{n-1}, ..., -a_1, -a_0), ones on the subdiagonal.
inline CompanionMatrix companion_matrix(const Polynomial& p) {
    const std::size_t n = p.degree();
    if (n < 2)
        throw DomainError("companion_matrix: degree must be at least 2");
    ComplexMatrix m = ComplexMatrix::lower_shift(n);
    for (std::size_t j = 0; j < n; ++j) m(0, j) = -p.coeff(n - 1 - j);
    return {std::move(m), p};
}

namespace detail {

inline double sum_sq_low_coeffs(const Polynomial& p) {
    double s = 0.0;
    for (const Complex& c : p.low_coeffs()) s += std::norm(c);
    return s;
}

} // namespace detail

// ||C(p)|| = sqrt( (1 + S + sqrt((1 + S)^2 - 4|a_0|^2)) / 2 ), S = sum |a_r|^2.
inline double exact_companion_norm(const Polynomial& p) {
    if (p.degree() < 2)
        throw DomainError("exact_companion_norm: degree must be at least 2");
    const double s = detail::sum_sq_low_coeffs(p);
    const double inner = (1.0 + s) * (1.0 + s) - 4.0 * std::norm(p.coeff(0));
    return std::sqrt(0.5 * (1.0 + s + std::sqrt(std::max(inner, 0.0))));
}

// ||C(p)^2|| <= sqrt(1 + sum_r (|a_r|^2 + |b_r|^2)) with
// b_r = a_{n-1} a_r - a_{r-1}, a_{-1} = 0.
inline double companion_square_norm_bound(const Polynomial& p) {
    const std::size_t n = p.degree();
    if (n < 2)
        throw DomainError("companion_square_norm_bound: degree must be at least 2");
    const Complex top = p.coeff(n - 1);
    double s = 1.0;
    for (std::size_t r = 0; r < n; ++r) {
        const Complex b = top * p.coeff(r) - (r > 0 ? p.coeff(r - 1) : Complex(0.0));
        s += std::norm(p.coeff(r)) + std::norm(b);
    }
    return std::sqrt(s);
}

} // namespace polybound

#endif
