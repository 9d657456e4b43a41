#ifndef POLYBOUND_LINALG_HPP
#define POLYBOUND_LINALG_HPP

// Dense complex matrices, the norms used throughout, and a cyclic complex
// Jacobi eigensolver for Hermitian matrices. Everything here is value
// semantics on immutable data; all functions are pure and thread-safe.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polybound/errors.hpp"

namespace polybound {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Row-major dense complex matrix. Entries are validated as finite on
// construction; no NaN/Inf is admitted.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw ShapeError("ComplexMatrix: dimensions must be positive");
    }

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (rows == 0 || cols == 0)
            throw ShapeError("ComplexMatrix: dimensions must be positive");
        if (a_.size() != rows * cols)
            throw ShapeError("ComplexMatrix: entry count does not match shape");
        for (const Complex& z : a_)
            if (!is_finite(z))
                throw InputError("ComplexMatrix: non-finite entry");
    }

    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
        if (rows.size() == 0)
            throw ShapeError("ComplexMatrix: no rows");
        std::size_t cols = rows.begin()->size();
        std::vector<Complex> data;
        data.reserve(rows.size() * cols);
        for (const auto& r : rows) {
            if (r.size() != cols)
                throw ShapeError("ComplexMatrix: ragged rows");
            data.insert(data.end(), r.begin(), r.end());
        }
        return ComplexMatrix(rows.size(), cols, std::move(data));
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix zero(std::size_t rows, std::size_t cols) {
        return ComplexMatrix(rows, cols);
    }

    // L_n: ones on the subdiagonal, zero elsewhere.
    static ComplexMatrix lower_shift(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    Complex operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return a_; }
    Complex* data() { return a_.data(); }
    const Complex* data() const { return a_.data(); }

    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> a_;
};

inline ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw ShapeError("multiply: inner dimensions disagree (" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + ")");
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    return multiply(a, b);
}

inline ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("add: shapes disagree");
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j) + b(i, j);
    return c;
}

inline ComplexMatrix scale(Complex factor, const ComplexMatrix& a) {
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = factor * a(i, j);
    return c;
}

// Conjugate transpose.
inline ComplexMatrix adjoint(const ComplexMatrix& t) {
    ComplexMatrix c(t.cols(), t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j)
            c(j, i) = std::conj(t(i, j));
    return c;
}

// Re(T) = (T + T*)/2. Exactly Hermitian in floating point.
inline ComplexMatrix hermitian_part(const ComplexMatrix& t) {
    if (!t.square())
        throw ShapeError("hermitian_part: matrix must be square");
    ComplexMatrix c(t.rows(), t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i) {
        c(i, i) = Complex(t(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < t.rows(); ++j) {
            const Complex v = 0.5 * (t(i, j) + std::conj(t(j, i)));
            c(i, j) = v;
            c(j, i) = std::conj(v);
        }
    }
    return c;
}

// Im(T) = (T - T*)/(2i), the Hermitian matrix with T = Re(T) + i Im(T).
inline ComplexMatrix skew_part(const ComplexMatrix& t) {
    if (!t.square())
        throw ShapeError("skew_part: matrix must be square");
    ComplexMatrix c(t.rows(), t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i) {
        c(i, i) = Complex(t(i, i).imag(), 0.0);
        for (std::size_t j = i + 1; j < t.rows(); ++j) {
            // (t_ij - conj(t_ji)) / (2i)
            const Complex d = 0.5 * (t(i, j) - std::conj(t(j, i)));
            const Complex v(d.imag(), -d.real());
            c(i, j) = v;
            c(j, i) = std::conj(v);
        }
    }
    return c;
}

inline double frobenius_norm(const ComplexMatrix& t) {
    double s = 0.0;
    for (const Complex& z : t.entries()) s += std::norm(z);
    return std::sqrt(s);
}

struct HermitianSpectrum {
    std::vector<double> eigenvalues; // ascending
    double residual = 0.0;           // off-diagonal Frobenius mass at convergence
};

namespace detail {

// One cyclic sweep target: off-diagonal Frobenius mass below this fraction of
// the input's Frobenius norm counts as converged.
inline constexpr double kJacobiRelTol = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

inline double offdiag_frobenius(const Complex* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            s += std::norm(a[i * n + j]);
    return std::sqrt(2.0 * s);
}

// Cyclic complex Jacobi on a Hermitian matrix stored full (both triangles).
// Destroys `a`; leaves eigenvalues on the diagonal. Returns the off-diagonal
// mass at exit. Throws ConvergenceError after the sweep cap.
inline double jacobi_eigenvalues_inplace(Complex* a, std::size_t n, double fro) {
    if (n == 1) return 0.0;
    const double target = kJacobiRelTol * fro;
    double off = offdiag_frobenius(a, n);
    for (int sweep = 0; sweep < kJacobiMaxSweeps && off > target; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a[p * n + q];
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex phase = apq / mag;
                const Complex sp = s * std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const Complex akp = a[k * n + p];
                    const Complex akq = a[k * n + q];
                    const Complex np = c * akp - sp * akq;
                    const Complex nq = s * akp + c * std::conj(phase) * akq;
                    a[k * n + p] = np;
                    a[p * n + k] = std::conj(np);
                    a[k * n + q] = nq;
                    a[q * n + k] = std::conj(nq);
                }
                a[p * n + p] = app - t * mag;
                a[q * n + q] = aqq + t * mag;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
        off = offdiag_frobenius(a, n);
    }
    if (off > target)
        throw ConvergenceError("hermitian_eigenvalues: Jacobi sweep cap reached", off);
    return off;
}

inline HermitianSpectrum spectrum_from_diagonal(const Complex* a, std::size_t n, double off) {
    HermitianSpectrum sp;
    sp.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) sp.eigenvalues[i] = a[i * n + i].real();
    std::sort(sp.eigenvalues.begin(), sp.eigenvalues.end());
    sp.residual = off;
    return sp;
}

// Eigenvalues of a matrix that is Hermitian by construction (no check, no
// symmetrization). Workhorse for the radius sweep.
inline HermitianSpectrum hermitian_eigenvalues_unchecked(std::vector<Complex>& work,
                                                         std::size_t n) {
    double s = 0.0;
    for (const Complex& z : work) s += std::norm(z);
    const double fro = std::sqrt(s);
    if (fro == 0.0) return spectrum_from_diagonal(work.data(), n, 0.0);
    const double off = jacobi_eigenvalues_inplace(work.data(), n, fro);
    return spectrum_from_diagonal(work.data(), n, off);
}

} // namespace detail

// Eigenvalues of a Hermitian matrix, ascending. The input may be Hermitian
// only up to rounding (e.g. Re(e^{i theta} T) assembled in floating point);
// it is checked against 1e-12 * ||h||_F and then symmetrized exactly.
inline HermitianSpectrum hermitian_eigenvalues(const ComplexMatrix& h) {
    if (!h.square())
        throw ShapeError("hermitian_eigenvalues: matrix must be square");
    const std::size_t n = h.rows();
    const double fro = frobenius_norm(h);
    double dev = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            dev += std::norm(h(i, j) - std::conj(h(j, i)));
    if (std::sqrt(dev) > 1e-12 * fro)
        throw DomainError("hermitian_eigenvalues: matrix is not Hermitian");
    const ComplexMatrix sym = hermitian_part(h);
    std::vector<Complex> work(sym.entries());
    return detail::hermitian_eigenvalues_unchecked(work, n);
}

// Operator (spectral) norm: largest singular value, via the Hermitian
// eigenproblem on the smaller of T*T and TT*.
inline double spectral_norm(const ComplexMatrix& t) {
    const bool wide = t.cols() > t.rows();
    const ComplexMatrix star = adjoint(t);
    const ComplexMatrix gram = wide ? multiply(t, star) : multiply(star, t);
    std::vector<Complex> work(gram.entries());
    const HermitianSpectrum sp = detail::hermitian_eigenvalues_unchecked(work, gram.rows());
    const double lmax = sp.eigenvalues.empty() ? 0.0 : sp.eigenvalues.back();
    return std::sqrt(std::max(lmax, 0.0));
}

} // namespace polybound

#endif
