#ifndef POLYBOUND_POLYNOMIAL_HPP
#define POLYBOUND_POLYNOMIAL_HPP

// Monic complex polynomial p(z) = z^n + a_{n-1} z^{n-1} + ... + a_1 z + a_0.
// Coefficients are stored in ascending power order (a_0 first); the leading 1
// is implicit. Construction normalizes a non-monic input by dividing through
// by its leading coefficient.

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "polybound/errors.hpp"
#include "polybound/linalg.hpp"

namespace polybound {

enum class CoefficientOrder { Ascending, Descending };

class Polynomial {
  public:
    // `low_coeffs` are (a_0, ..., a_{n-1}) of an already monic polynomial.
    explicit Polynomial(std::vector<Complex> low_coeffs) : a_(std::move(low_coeffs)) {
        if (a_.empty())
            throw InputError("Polynomial: degree must be at least 1");
        for (const Complex& c : a_)
            if (!is_finite(c))
                throw InputError("Polynomial: non-finite coefficient");
    }

    std::size_t degree() const { return a_.size(); }

    // a_k for k < degree; the leading coefficient is 1 by construction.
    Complex coeff(std::size_t k) const { return k == degree() ? Complex(1.0) : a_[k]; }

    const std::vector<Complex>& low_coeffs() const { return a_; }

    Complex evaluate(Complex z) const {
        Complex v(1.0);
        for (std::size_t k = degree(); k-- > 0;) v = v * z + a_[k];
        return v;
    }

    // (p(z), p'(z)) in one Horner pass.
    std::pair<Complex, Complex> evaluate_with_derivative(Complex z) const {
        Complex v(1.0);
        Complex d(0.0);
        for (std::size_t k = degree(); k-- > 0;) {
            d = d * z + v;
            v = v * z + a_[k];
        }
        return {v, d};
    }

    friend bool operator==(const Polynomial& p, const Polynomial& q) {
        return p.a_ == q.a_;
    }

  private:
    std::vector<Complex> a_; // ascending, no leading coefficient
};

// Builds a monic polynomial from a full coefficient list (leading coefficient
// included). A non-unit leading coefficient divides through the rest.
inline Polynomial polynomial_from_coefficients(std::vector<Complex> raw,
                                               CoefficientOrder order) {
    if (raw.empty())
        throw InputError("polynomial: empty coefficient list");
    if (order == CoefficientOrder::Descending)
        std::reverse(raw.begin(), raw.end());
    for (const Complex& c : raw)
        if (!is_finite(c))
            throw InputError("polynomial: non-finite coefficient");
    const Complex lead = raw.back();
    if (lead == Complex(0.0))
        throw InputError("polynomial: leading coefficient is zero");
    raw.pop_back();
    if (raw.empty())
        throw InputError("polynomial: degree 0 is not a polynomial with zeros");
    if (lead != Complex(1.0))
        for (Complex& c : raw) c /= lead;
    return Polynomial(std::move(raw));
}

// z^n.
inline Polynomial monomial(std::size_t n) {
    if (n < 1) throw InputError("monomial: degree must be at least 1");
    return Polynomial(std::vector<Complex>(n, Complex(0.0)));
}

} // namespace polybound

#endif
