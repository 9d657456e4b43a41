#ifndef POLYBOUND_RADIUS_HPP
#define POLYBOUND_RADIUS_HPP

// Numerical radius w(T) of a square complex matrix through the Hermitian-part
// identity w(T) = sup_theta ||Re(e^{i theta} T)||, plus the Crawford number of
// Hermitian matrices.
//
// ||H_theta|| has period pi in theta and is continuous but not guaranteed
// unimodal, so the estimate samples a dense grid on [0, pi) and then zooms on
// the best bracket. The returned value is the largest evaluated sample and is
// therefore a certified lower bound on w(T); accuracy is reported through
// refinement_width rather than claimed as a two-sided certificate.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "polybound/errors.hpp"
#include "polybound/linalg.hpp"

namespace polybound {

struct RadiusEstimate {
    double value = 0.0;            // max evaluated ||H_theta||
    double theta_star = 0.0;       // argmax angle, in [0, pi)
    std::int64_t samples = 0;      // eigenvalue evaluations spent
    double refinement_width = 0.0; // final bracket width, < tol on return
};

inline constexpr double kDefaultRadiusTol = 1e-10;
inline constexpr int kRadiusGridSamples = 720;
inline constexpr int kRadiusZoomSamples = 32; // subintervals per zoom round
inline constexpr int kRadiusZoomShrink = 16;

namespace detail {

// Evaluates theta -> ||Re(e^{i theta} T)|| with all buffers preallocated.
// H_theta = cos(theta) Re(T) - sin(theta) Im(T).
class ThetaNormEvaluator {
  public:
    explicit ThetaNormEvaluator(const ComplexMatrix& t)
        : n_(t.rows()),
          re_(hermitian_part(t).entries()),
          im_(skew_part(t).entries()),
          work_(n_ * n_) {}

    std::size_t dim() const { return n_; }

    double operator()(double theta) {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        for (std::size_t i = 0; i < work_.size(); ++i)
            work_[i] = c * re_[i] - s * im_[i];
        const HermitianSpectrum sp = hermitian_eigenvalues_unchecked(work_, n_);
        return std::max(std::abs(sp.eigenvalues.front()), std::abs(sp.eigenvalues.back()));
    }

  private:
    std::size_t n_;
    std::vector<Complex> re_;
    std::vector<Complex> im_;
    std::vector<Complex> work_;
};

inline double wrap_to_half_period(double theta) {
    const double pi = std::numbers::pi;
    double t = std::fmod(theta, pi);
    if (t < 0.0) t += pi;
    return t;
}

} // namespace detail

// ||Re(e^{i theta} T)|| for a single angle; the quantity the sweep maximizes.
inline double theta_norm(const ComplexMatrix& t, double theta) {
    if (!t.square())
        throw ShapeError("theta_norm: matrix must be square");
    detail::ThetaNormEvaluator eval(t);
    return eval(theta);
}

// Numerical radius estimate. `initial_samples` is the grid density on
// [0, pi); the default matches kRadiusGridSamples. The inequality harness
// passes a denser grid for terms that appear on the right-hand side of an
// inequality, where an underestimate could fabricate violations.
inline RadiusEstimate numerical_radius_swept(const ComplexMatrix& t, double tol,
                                             int initial_samples) {
    if (!t.square())
        throw ShapeError("numerical_radius: matrix must be square");
    if (!(tol > 0.0))
        throw InputError("numerical_radius: tol must be positive");
    if (initial_samples < 2)
        throw InputError("numerical_radius: grid too coarse");
    const double pi = std::numbers::pi;

    // A 1x1 matrix has w = |t11|, attained where e^{i theta} t11 is real.
    if (t.rows() == 1) {
        const Complex z = t(0, 0);
        return {std::abs(z), detail::wrap_to_half_period(-std::arg(z)), 1, 0.0};
    }
    if (frobenius_norm(t) == 0.0) return {0.0, 0.0, 1, 0.0};

    detail::ThetaNormEvaluator eval(t);
    RadiusEstimate est;
    double best_val = -1.0;
    double best_theta = 0.0;
    const double step = pi / initial_samples;
    for (int k = 0; k < initial_samples; ++k) {
        const double theta = k * step;
        const double v = eval(theta);
        ++est.samples;
        if (v > best_val) {
            best_val = v;
            best_theta = theta;
        }
    }

    // Zoom: re-grid the bracket spanning the best sample +- one step, shrink
    // by kRadiusZoomShrink per round, stop once the bracket is below tol.
    double half_width = step;
    while (2.0 * half_width >= tol) {
        const double lo = best_theta - half_width;
        const double sub = 2.0 * half_width / kRadiusZoomSamples;
        double round_best_val = -1.0;
        double round_best_theta = lo;
        for (int k = 0; k <= kRadiusZoomSamples; ++k) {
            const double theta = lo + k * sub;
            const double v = eval(theta);
            ++est.samples;
            if (v > round_best_val) {
                round_best_val = v;
                round_best_theta = theta;
            }
        }
        if (round_best_val > best_val) {
            best_val = round_best_val;
        }
        best_theta = round_best_theta;
        half_width /= kRadiusZoomShrink;
    }

    est.value = best_val;
    est.theta_star = detail::wrap_to_half_period(best_theta);
    est.refinement_width = 2.0 * half_width;
    return est;
}

inline RadiusEstimate numerical_radius(const ComplexMatrix& t,
                                       double tol = kDefaultRadiusTol) {
    return numerical_radius_swept(t, tol, kRadiusGridSamples);
}

// Crawford number of a Hermitian matrix: distance of the spectral interval
// [lambda_min, lambda_max] from the origin (zero when it straddles 0).
inline double crawford_hermitian(const ComplexMatrix& h) {
    const HermitianSpectrum sp = hermitian_eigenvalues(h);
    const double lo = sp.eigenvalues.front();
    const double hi = sp.eigenvalues.back();
    if (lo <= 0.0 && 0.0 <= hi) return 0.0;
    return std::min(std::abs(lo), std::abs(hi));
}

} // namespace polybound

#endif
