#ifndef POLYBOUND_HARNESS_HPP
#define POLYBOUND_HARNESS_HPP

// Randomized verification of the operator inequalities behind the R-bounds:
// single-operator theorems, 2x2 block-matrix lemmas, the nilpotent equality
// chain, the norm sandwich, and spectral-radius domination on companion
// matrices. Every inequality is a proven theorem, so a reported violation
// always means an implementation bug; the suite exists to catch exactly that.
//
// All randomness is counter-based (splitmix64 over (seed, family, index)), so
// the trial stream is reproducible and independent of evaluation order, and
// trials can run on any number of threads without changing the report.
//
// Numerical radii that appear on the right-hand side of an inequality
// (w(T^2), w(CB), w(BC)) are computed with a ten-times finer sweep: the sweep
// is a lower bound, and underestimating an rhs term is the one way a correct
// implementation could fabricate a violation. Left-hand radii keep the
// default grid, where the same bias is harmless.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "polybound/bounds.hpp"
#include "polybound/companion.hpp"
#include "polybound/errors.hpp"
#include "polybound/linalg.hpp"
#include "polybound/polynomial.hpp"
#include "polybound/radius.hpp"
#include "polybound/roots.hpp"

namespace polybound::harness {

inline constexpr int kFineGridMultiplier = 10;

struct TrialConfig {
    std::uint64_t seed = 42;
    std::int64_t trials = 1000;
    int max_dim = 5;         // full matrix dimension per trial, in [1, 8]
    double magnitude = 2.0;  // entry scale
    double tol = 1e-9;       // violation slack
};

inline void validate(const TrialConfig& cfg) {
    if (cfg.trials < 0) throw InputError("verify: trials must be >= 0");
    if (cfg.max_dim < 1 || cfg.max_dim > 8)
        throw InputError("verify: max-dim must be in [1, 8]");
    if (!(cfg.magnitude > 0.0)) throw InputError("verify: magnitude must be positive");
    if (!(cfg.tol > 0.0)) throw InputError("verify: tol must be positive");
}

enum class Inequality {
    Thm21,
    Thm22,
    Thm23,
    Thm24,
    Thm25,
    Thm26,
    Lemma4,
    Lemma5,
    Lemma6,
    NilpotentRemark,
    NormSandwich,
    CompanionSpectralRadius,
    Thm22DominatesPaulBag,
};

inline constexpr int kInequalityCount = 13;

inline const char* to_string(Inequality iq) {
    switch (iq) {
        case Inequality::Thm21: return "thm_2_1";
        case Inequality::Thm22: return "thm_2_2";
        case Inequality::Thm23: return "thm_2_3";
        case Inequality::Thm24: return "thm_2_4";
        case Inequality::Thm25: return "thm_2_5";
        case Inequality::Thm26: return "thm_2_6";
        case Inequality::Lemma4: return "lemma_4";
        case Inequality::Lemma5: return "lemma_5";
        case Inequality::Lemma6: return "lemma_6";
        case Inequality::NilpotentRemark: return "nilpotent_remark";
        case Inequality::NormSandwich: return "norm_sandwich";
        case Inequality::CompanionSpectralRadius: return "companion_spectral_radius";
        case Inequality::Thm22DominatesPaulBag: return "thm_2_2_vs_paul_bag";
    }
    return "?";
}

struct InequalityStat {
    Inequality id{};
    std::int64_t trials = 0;
    std::int64_t violations = 0;
    double worst_margin = 0.0;      // most negative margin seen
    std::uint64_t worst_seed = 0;   // trial seed reproducing it
};

struct ViolationReport {
    TrialConfig config;
    std::vector<InequalityStat> stats; // one per Inequality, fixed order

    std::int64_t total_violations() const {
        std::int64_t v = 0;
        for (const auto& s : stats) v += s.violations;
        return v;
    }
};

// ---------------------------------------------------------------------------
// Counter-based randomness.

namespace rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Stream {
    std::uint64_t state;
    explicit Stream(std::uint64_t trial_seed) : state(trial_seed) {}

    std::uint64_t next_u64() { return state = splitmix64(state); }

    double uniform(double lo, double hi) {
        const double u = double(next_u64() >> 11) * 0x1.0p-53; // [0, 1)
        return lo + u * (hi - lo);
    }

    int uniform_int(int lo, int hi) { // inclusive
        return lo + int(next_u64() % std::uint64_t(hi - lo + 1));
    }

    Complex entry(double mag) { return {uniform(-mag, mag), uniform(-mag, mag)}; }
};

inline std::uint64_t trial_seed(std::uint64_t seed, int family, std::int64_t index) {
    return splitmix64(seed ^ splitmix64(0x100 * std::uint64_t(family) + 1) ^
                      splitmix64(0x517cc1b727220a95ULL + std::uint64_t(index)));
}

} // namespace rng

namespace gen {

inline ComplexMatrix dense(rng::Stream& g, int dim, double mag) {
    ComplexMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = g.entry(mag);
    return m;
}

inline ComplexMatrix dense_rect(rng::Stream& g, int rows, int cols, double mag) {
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = g.entry(mag);
    return m;
}

inline ComplexMatrix hermitian(rng::Stream& g, int dim, double mag) {
    return hermitian_part(dense(g, dim, mag));
}

inline ComplexMatrix scaled_unitary_diagonal(rng::Stream& g, int dim, double mag) {
    ComplexMatrix m(dim, dim);
    const double r = g.uniform(0.0, mag);
    for (int i = 0; i < dim; ++i) {
        const double phi = g.uniform(0.0, 2.0 * std::numbers::pi);
        m(i, i) = r * Complex(std::cos(phi), std::sin(phi));
    }
    return m;
}

// [[0, X], [0, 0]]: square-nilpotent by construction.
inline ComplexMatrix nilpotent_block(rng::Stream& g, int dim, double mag) {
    const int k = dim / 2;
    ComplexMatrix m(dim, dim);
    for (int i = 0; i < k; ++i)
        for (int j = k; j < dim; ++j) m(i, j) = g.entry(mag);
    return m;
}

inline Polynomial random_polynomial(rng::Stream& g, int degree, double mag) {
    std::vector<Complex> low(degree);
    for (Complex& c : low) c = g.entry(mag);
    return Polynomial(std::move(low));
}

// One square matrix, cycling structured families through the generic draws so
// equality cases (normal, nilpotent, companion) are exercised every run.
inline ComplexMatrix single_operator(rng::Stream& g, std::int64_t index, int max_dim,
                                     double mag) {
    switch (index % 5) {
        case 1: return hermitian(g, g.uniform_int(1, max_dim), mag);
        case 2: return scaled_unitary_diagonal(g, g.uniform_int(1, max_dim), mag);
        case 3:
            return companion_matrix(random_polynomial(g, g.uniform_int(2, std::max(2, max_dim)), mag))
                .matrix;
        case 4: return nilpotent_block(g, g.uniform_int(2, std::max(2, max_dim)), mag);
        default: return dense(g, g.uniform_int(1, max_dim), mag);
    }
}

struct Blocks {
    ComplexMatrix a, b, c, d;
};

// 2x2 operator-matrix blocks with n1 + n2 <= max_dim. Cycles generic draws
// with the off-diagonal "cross" shape and the companion split
// (a_{n-1} | first row tail / e_1 | L_{n-1}) that the R-bounds are built on.
inline Blocks block_operator(rng::Stream& g, std::int64_t index, int max_dim, double mag) {
    const int dim = g.uniform_int(2, std::max(2, max_dim));
    if (index % 3 == 2 && dim >= 2) {
        const Polynomial p = random_polynomial(g, dim, mag);
        const ComplexMatrix cm = companion_matrix(p).matrix;
        ComplexMatrix a(1, 1), b(1, dim - 1), c(dim - 1, 1), d(dim - 1, dim - 1);
        a(0, 0) = cm(0, 0);
        for (int j = 1; j < dim; ++j) b(0, j - 1) = cm(0, j);
        for (int i = 1; i < dim; ++i) c(i - 1, 0) = cm(i, 0);
        for (int i = 1; i < dim; ++i)
            for (int j = 1; j < dim; ++j) d(i - 1, j - 1) = cm(i, j);
        return {a, b, c, d};
    }
    const int n1 = g.uniform_int(1, dim - 1);
    const int n2 = dim - n1;
    Blocks blk{dense(g, n1, mag), dense_rect(g, n1, n2, mag), dense_rect(g, n2, n1, mag),
               dense(g, n2, mag)};
    if (index % 3 == 1) {
        blk.a = ComplexMatrix::zero(n1, n1); // pure off-diagonal shape
        blk.d = ComplexMatrix::zero(n2, n2);
    }
    return blk;
}

inline ComplexMatrix assemble(const Blocks& blk) {
    const std::size_t n1 = blk.a.rows();
    const std::size_t n2 = blk.d.rows();
    ComplexMatrix t(n1 + n2, n1 + n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) t(i, j) = blk.a(i, j);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) t(i, n1 + j) = blk.b(i, j);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n1; ++j) t(n1 + i, j) = blk.c(i, j);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) t(n1 + i, n1 + j) = blk.d(i, j);
    return t;
}

} // namespace gen

namespace detail {

inline double radius_value(const ComplexMatrix& t) {
    return numerical_radius(t).value;
}

// Finer sweep for radii on the right-hand side of an inequality.
inline double radius_value_fine(const ComplexMatrix& t) {
    return numerical_radius_swept(t, kDefaultRadiusTol,
                                  kRadiusGridSamples * kFineGridMultiplier)
        .value;
}

inline void require_conformable(const gen::Blocks& blk) {
    if (!blk.a.square() || !blk.d.square() || blk.b.rows() != blk.a.rows() ||
        blk.b.cols() != blk.d.cols() || blk.c.rows() != blk.d.rows() ||
        blk.c.cols() != blk.a.cols())
        throw ShapeError("block check: blocks do not form a square 2x2 operator matrix");
}

} // namespace detail

// ---------------------------------------------------------------------------
// Margin computations: each returns rhs - lhs; the inequality holds when the
// margin is >= -tol. The tol parameter is the slack its caller will apply;
// it does not change the computed margin.

// w^2(T) <= w(T^2) + min(||Re T||^2, ||Im T||^2)
inline double check_thm_2_1(const ComplexMatrix& t, double /*tol*/) {
    if (!t.square()) throw ShapeError("check_thm_2_1: matrix must be square");
    const double w = detail::radius_value(t);
    const double w2 = detail::radius_value_fine(multiply(t, t));
    const double re = spectral_norm(hermitian_part(t));
    const double im = spectral_norm(skew_part(t));
    return w2 + std::min(re * re, im * im) - w * w;
}

// w(T) <= (w(A)+w(D) + sqrt((w(A)-w(D))^2 + ||B||^2 + ||C||^2 + 2 w(CB))) / 2
inline double check_thm_2_2(const gen::Blocks& blk, double /*tol*/) {
    detail::require_conformable(blk);
    const double wa = detail::radius_value(blk.a);
    const double wd = detail::radius_value(blk.d);
    const double nb = spectral_norm(blk.b);
    const double nc = spectral_norm(blk.c);
    const double wcb = detail::radius_value_fine(multiply(blk.c, blk.b));
    const double rhs =
        0.5 * (wa + wd + std::sqrt((wa - wd) * (wa - wd) + nb * nb + nc * nc + 2.0 * wcb));
    return rhs - detail::radius_value(gen::assemble(blk));
}

// w(T) <= (w(A)+w(D) + sqrt((w(A)-w(D))^2 + 4 alpha_1^2)) / 2 with
// alpha_1 = ( max{ (||B||^2+||C||^2)^2 + 4w^2(BC),
//                  (||B||^2+||C||^2)^2 + 4w^2(CB) } / 8 )^{1/4}
inline double check_thm_2_3(const gen::Blocks& blk, double /*tol*/) {
    detail::require_conformable(blk);
    const double wa = detail::radius_value(blk.a);
    const double wd = detail::radius_value(blk.d);
    const double nb = spectral_norm(blk.b);
    const double nc = spectral_norm(blk.c);
    const double wbc = detail::radius_value_fine(multiply(blk.b, blk.c));
    const double wcb = detail::radius_value_fine(multiply(blk.c, blk.b));
    const double sq = (nb * nb + nc * nc) * (nb * nb + nc * nc);
    const double inner = std::max(sq + 4.0 * wbc * wbc, sq + 4.0 * wcb * wcb);
    const double alpha1 = std::pow(0.125 * inner, 0.25);
    const double rhs =
        0.5 * (wa + wd + std::sqrt((wa - wd) * (wa - wd) + 4.0 * alpha1 * alpha1));
    return rhs - detail::radius_value(gen::assemble(blk));
}

// w^2(T) <= ||T|| ||T^2||^{1/2} / 4 + ||T^2|| / 4 + ||T||^2 / 2
inline double check_thm_2_4(const ComplexMatrix& t, double /*tol*/) {
    if (!t.square()) throw ShapeError("check_thm_2_4: matrix must be square");
    const double w = detail::radius_value(t);
    const double nt = spectral_norm(t);
    const double nt2 = spectral_norm(multiply(t, t));
    return 0.25 * nt * std::sqrt(nt2) + 0.25 * nt2 + 0.5 * nt * nt - w * w;
}

// w^2(T) <= ||T|| ||T^2||^{1/2} / 2 + ||T^2|| / 4 + ||T||^2 / 4
inline double check_thm_2_5(const ComplexMatrix& t, double /*tol*/) {
    if (!t.square()) throw ShapeError("check_thm_2_5: matrix must be square");
    const double w = detail::radius_value(t);
    const double nt = spectral_norm(t);
    const double nt2 = spectral_norm(multiply(t, t));
    return 0.5 * nt * std::sqrt(nt2) + 0.25 * nt2 + 0.25 * nt * nt - w * w;
}

// w^2(T) <= 3 ||T^2|| / 4 + ||T||^2 / 4
inline double check_thm_2_6(const ComplexMatrix& t, double /*tol*/) {
    if (!t.square()) throw ShapeError("check_thm_2_6: matrix must be square");
    const double w = detail::radius_value(t);
    const double nt = spectral_norm(t);
    const double nt2 = spectral_norm(multiply(t, t));
    return 0.75 * nt2 + 0.25 * nt * nt - w * w;
}

// w(T) <= sqrt(w^2(A) + ||B||(w(A) + ||B||/2)/2) + (same in D, C)
inline double check_lemma_4(const gen::Blocks& blk, double /*tol*/) {
    detail::require_conformable(blk);
    const double wa = detail::radius_value(blk.a);
    const double wd = detail::radius_value(blk.d);
    const double nb = spectral_norm(blk.b);
    const double nc = spectral_norm(blk.c);
    const double rhs = std::sqrt(wa * wa + 0.5 * nb * (wa + 0.5 * nb)) +
                       std::sqrt(wd * wd + 0.5 * nc * (wd + 0.5 * nc));
    return rhs - detail::radius_value(gen::assemble(blk));
}

// w(T) <= sqrt(2w^2(A) + (||A*B|| + ||B||^2)/2) + sqrt(2w^2(D) + (||D*C|| + ||C||^2)/2)
inline double check_lemma_5(const gen::Blocks& blk, double /*tol*/) {
    detail::require_conformable(blk);
    const double wa = detail::radius_value(blk.a);
    const double wd = detail::radius_value(blk.d);
    const double nb = spectral_norm(blk.b);
    const double nc = spectral_norm(blk.c);
    const double nab = spectral_norm(multiply(adjoint(blk.a), blk.b));
    const double ndc = spectral_norm(multiply(adjoint(blk.d), blk.c));
    const double rhs = std::sqrt(2.0 * wa * wa + 0.5 * (nab + nb * nb)) +
                       std::sqrt(2.0 * wd * wd + 0.5 * (ndc + nc * nc));
    return rhs - detail::radius_value(gen::assemble(blk));
}

// w(T) <= (w(A) + w(D) + sqrt(w^2(A) + ||B||^2) + sqrt(w^2(D) + ||C||^2)) / 2
inline double check_lemma_6(const gen::Blocks& blk, double /*tol*/) {
    detail::require_conformable(blk);
    const double wa = detail::radius_value(blk.a);
    const double wd = detail::radius_value(blk.d);
    const double nb = spectral_norm(blk.b);
    const double nc = spectral_norm(blk.c);
    const double rhs = 0.5 * (wa + wd + std::sqrt(wa * wa + nb * nb) +
                              std::sqrt(wd * wd + nc * nc));
    return rhs - detail::radius_value(gen::assemble(blk));
}

inline double check_thm_2_2(const ComplexMatrix& a, const ComplexMatrix& b,
                            const ComplexMatrix& c, const ComplexMatrix& d, double tol) {
    return check_thm_2_2(gen::Blocks{a, b, c, d}, tol);
}

inline double check_thm_2_3(const ComplexMatrix& a, const ComplexMatrix& b,
                            const ComplexMatrix& c, const ComplexMatrix& d, double tol) {
    return check_thm_2_3(gen::Blocks{a, b, c, d}, tol);
}

inline double check_lemma_4(const ComplexMatrix& a, const ComplexMatrix& b,
                            const ComplexMatrix& c, const ComplexMatrix& d, double tol) {
    return check_lemma_4(gen::Blocks{a, b, c, d}, tol);
}

inline double check_lemma_5(const ComplexMatrix& a, const ComplexMatrix& b,
                            const ComplexMatrix& c, const ComplexMatrix& d, double tol) {
    return check_lemma_5(gen::Blocks{a, b, c, d}, tol);
}

inline double check_lemma_6(const ComplexMatrix& a, const ComplexMatrix& b,
                            const ComplexMatrix& c, const ComplexMatrix& d, double tol) {
    return check_lemma_6(gen::Blocks{a, b, c, d}, tol);
}

// For T = [[0, X], [0, 0]] (so T^2 = 0): w(T) = ||Re T|| = ||Im T|| and the
// Crawford numbers of both Hermitian parts vanish, with
// m(Re T) <= sqrt(w(T^2)) as the general form.
struct NilpotentRemarkMargins {
    double re_equality_gap = 0.0;  // | w(T) - ||Re T|| |
    double im_equality_gap = 0.0;  // | w(T) - ||Im T|| |
    double crawford_gap = 0.0;     // max(m(Re T), m(Im T)) - sqrt(w(T^2))

    double worst() const {
        return std::max({re_equality_gap, im_equality_gap, crawford_gap});
    }
};

inline NilpotentRemarkMargins check_nilpotent_remark(const ComplexMatrix& x, double /*tol*/) {
    const std::size_t k = x.rows();
    const std::size_t m = x.cols();
    ComplexMatrix t(k + m, k + m);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m; ++j) t(i, k + j) = x(i, j);

    const double w = detail::radius_value(t);
    const double re = spectral_norm(hermitian_part(t));
    const double im = spectral_norm(skew_part(t));
    const double mre = crawford_hermitian(hermitian_part(t));
    const double mim = crawford_hermitian(skew_part(t));
    const double w2 = detail::radius_value_fine(multiply(t, t)); // exactly zero matrix

    NilpotentRemarkMargins out;
    out.re_equality_gap = std::abs(w - re);
    out.im_equality_gap = std::abs(w - im);
    out.crawford_gap = std::max(mre, mim) - std::sqrt(w2);
    return out;
}

// ---------------------------------------------------------------------------
// Suite driver.

namespace detail {

inline double run_one_trial(Inequality family, rng::Stream& g, std::int64_t index,
                            const TrialConfig& cfg) {
    const int max_dim = cfg.max_dim;
    const double mag = cfg.magnitude;
    switch (family) {
        case Inequality::Thm21:
            return check_thm_2_1(gen::single_operator(g, index, max_dim, mag), cfg.tol);
        case Inequality::Thm22:
            return check_thm_2_2(gen::block_operator(g, index, max_dim, mag), cfg.tol);
        case Inequality::Thm23:
            return check_thm_2_3(gen::block_operator(g, index, max_dim, mag), cfg.tol);
        case Inequality::Thm24:
            return check_thm_2_4(gen::single_operator(g, index, max_dim, mag), cfg.tol);
        case Inequality::Thm25:
            return check_thm_2_5(gen::single_operator(g, index, max_dim, mag), cfg.tol);
        case Inequality::Thm26:
            return check_thm_2_6(gen::single_operator(g, index, max_dim, mag), cfg.tol);
        case Inequality::Lemma4:
            return check_lemma_4(gen::block_operator(g, index, max_dim, mag), cfg.tol);
        case Inequality::Lemma5:
            return check_lemma_5(gen::block_operator(g, index, max_dim, mag), cfg.tol);
        case Inequality::Lemma6:
            return check_lemma_6(gen::block_operator(g, index, max_dim, mag), cfg.tol);
        case Inequality::NilpotentRemark: {
            const int k = g.uniform_int(1, std::max(1, max_dim / 2));
            const ComplexMatrix x = gen::dense_rect(g, k, k, mag);
            // Equalities: margin is the negated worst deviation.
            return -check_nilpotent_remark(x, cfg.tol).worst();
        }
        case Inequality::NormSandwich: {
            const ComplexMatrix t = gen::single_operator(g, index, max_dim, mag);
            const double w = radius_value(t);
            const double nt = spectral_norm(t);
            return std::min(w - 0.5 * nt, nt - w);
        }
        case Inequality::CompanionSpectralRadius: {
            const int deg = g.uniform_int(2, std::max(2, max_dim));
            const Polynomial p = gen::random_polynomial(g, deg, mag);
            const double r = max_modulus(find_roots(p));
            return numerical_radius_of_companion(p) - r;
        }
        case Inequality::Thm22DominatesPaulBag: {
            const gen::Blocks blk = gen::block_operator(g, index, max_dim, mag);
            const double wa = radius_value(blk.a);
            const double wd = radius_value(blk.d);
            const double nb = spectral_norm(blk.b);
            const double nc = spectral_norm(blk.c);
            const double wcb = radius_value_fine(multiply(blk.c, blk.b));
            const double rhs22 = 0.5 * (wa + wd +
                                        std::sqrt((wa - wd) * (wa - wd) + nb * nb +
                                                  nc * nc + 2.0 * wcb));
            const double pb = 0.5 * (wa + wd +
                                     std::sqrt((wa - wd) * (wa - wd) +
                                               (nb + nc) * (nb + nc)));
            return pb - rhs22;
        }
    }
    throw DomainError("run_suite: unknown inequality family");
}

} // namespace detail

// Deterministic for a fixed config regardless of thread count: trial i
// belongs to family i % 13, draws from its own counter-based stream, and the
// merge (counts, lexicographic (margin, seed) minimum) is order-insensitive.
inline ViolationReport run_suite(const TrialConfig& cfg, unsigned threads = 0) {
    validate(cfg);
    ViolationReport report;
    report.config = cfg;
    report.stats.resize(kInequalityCount);
    for (int f = 0; f < kInequalityCount; ++f) {
        report.stats[f].id = static_cast<Inequality>(f);
        report.stats[f].worst_margin = std::numeric_limits<double>::infinity();
    }
    if (cfg.trials == 0) {
        for (auto& s : report.stats) s.worst_margin = 0.0;
        return report;
    }

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, 16);

    std::vector<std::vector<InequalityStat>> partial(
        threads, std::vector<InequalityStat>(kInequalityCount));
    for (auto& stats : partial)
        for (int f = 0; f < kInequalityCount; ++f) {
            stats[f].id = static_cast<Inequality>(f);
            stats[f].worst_margin = std::numeric_limits<double>::infinity();
        }

    auto worker = [&](unsigned tid) {
        for (std::int64_t i = tid; i < cfg.trials; i += threads) {
            const int family = int(i % kInequalityCount);
            const std::int64_t index = i / kInequalityCount;
            const std::uint64_t seed = rng::trial_seed(cfg.seed, family, index);
            rng::Stream g(seed);
            const double margin =
                detail::run_one_trial(static_cast<Inequality>(family), g, index, cfg);
            InequalityStat& st = partial[tid][family];
            ++st.trials;
            if (margin < -cfg.tol) ++st.violations;
            if (margin < st.worst_margin ||
                (margin == st.worst_margin && seed < st.worst_seed)) {
                st.worst_margin = margin;
                st.worst_seed = seed;
            }
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    for (const auto& stats : partial)
        for (int f = 0; f < kInequalityCount; ++f) {
            const InequalityStat& src = stats[f];
            InequalityStat& dst = report.stats[f];
            dst.trials += src.trials;
            dst.violations += src.violations;
            if (src.trials > 0 &&
                (src.worst_margin < dst.worst_margin ||
                 (src.worst_margin == dst.worst_margin && src.worst_seed < dst.worst_seed)))
                {
                    dst.worst_margin = src.worst_margin;
                    dst.worst_seed = src.worst_seed;
                }
        }
    for (auto& s : report.stats)
        if (s.trials == 0) s.worst_margin = 0.0;
    return report;
}

} // namespace polybound::harness

#endif
