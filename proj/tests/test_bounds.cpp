#include <catch2/catch.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "polybound/bounds.hpp"

using namespace polybound;

namespace {

Polynomial poly(std::initializer_list<double> descending) {
    std::vector<Complex> c;
    for (double v : descending) c.emplace_back(v, 0.0);
    return polynomial_from_coefficients(std::move(c), CoefficientOrder::Descending);
}

double bound(BoundId id, const Polynomial& p) { return compute_bound(id, p); }

Polynomial random_poly(std::mt19937_64& g, std::size_t degree, double mag) {
    std::uniform_real_distribution<double> u(-mag, mag);
    std::vector<Complex> low(degree);
    for (Complex& c : low) c = Complex(u(g), u(g));
    return Polynomial(std::move(low));
}

// Taylor shift q(w) = p(w + s) by the in-place Horner scheme; an independent
// route to the shifted coefficients the BBP bound is built on.
std::vector<Complex> taylor_shift(const Polynomial& p, Complex s) {
    const std::size_t n = p.degree();
    std::vector<Complex> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = p.coeff(k);
    for (std::size_t r = 0; r <= n; ++r)
        for (std::size_t k = n; k-- > r;) c[k] += s * c[k + 1];
    return c;
}

} // namespace

// The four polynomials whose bound tables are published to four decimals.
// All values are asserted at 1e-3 absolute (the tables mix truncation and
// rounding in the last digit).
TEST_CASE("published table: z^5+4z^4+z^3+z^2+z+1", "[bounds]") {
    const Polynomial p = poly({1, 4, 1, 1, 1, 1});
    CHECK(bound(BoundId::R1, p) == Approx(4.5365).margin(1e-3));
    CHECK(bound(BoundId::R2, p) == Approx(4.5509).margin(1e-3));
    CHECK(bound(BoundId::FK, p) == Approx(5.1020).margin(1e-3));
    CHECK(bound(BoundId::K1, p) == Approx(4.5615).margin(1e-3));
    CHECK(bound(BoundId::AK, p) == Approx(4.8131).margin(1e-3));
    CHECK(bound(BoundId::A, p) == Approx(4.5943).margin(1e-3));
}

TEST_CASE("published table: z^5+z^3+z+2", "[bounds]") {
    const Polynomial p = poly({1, 0, 1, 0, 1, 2});
    CHECK(bound(BoundId::R3, p) == Approx(2.3688).margin(1e-3));
    CHECK(bound(BoundId::C, p) == Approx(3.0).margin(1e-12));
    CHECK(bound(BoundId::M, p) == Approx(4.0).margin(1e-12));
    CHECK(bound(BoundId::CM, p) == Approx(2.6457).margin(1e-3));
    CHECK(bound(BoundId::R5, p) == Approx(1.8301).margin(1e-3));
    CHECK(bound(BoundId::FK, p) == Approx(2.0907).margin(1e-3));
    CHECK(bound(BoundId::A, p) == Approx(2.1760).margin(1e-3));
    CHECK(bound(BoundId::K1, p) == Approx(2.1430).margin(1e-3));
    CHECK(bound(BoundId::K2, p) == Approx(1.9580).margin(1e-3));
    CHECK(bound(BoundId::AK, p) == Approx(2.1678).margin(1e-3));
}

TEST_CASE("published table: z^5+z^3+z+5", "[bounds]") {
    const Polynomial p = poly({1, 0, 1, 0, 1, 5});
    CHECK(bound(BoundId::R4, p) == Approx(5.0192).margin(1e-3));
    CHECK(bound(BoundId::C, p) == Approx(6.0).margin(1e-12));
    CHECK(bound(BoundId::M, p) == Approx(7.0).margin(1e-12));
    CHECK(bound(BoundId::CM, p) == Approx(5.2915).margin(1e-3));
}

TEST_CASE("published table: z^5+2z^4+z^3+z^2+z+1", "[bounds]") {
    const Polynomial p = poly({1, 2, 1, 1, 1, 1});
    CHECK(bound(BoundId::R6, p) == Approx(2.7129).margin(1e-3));
    CHECK(bound(BoundId::R7, p) == Approx(2.6086).margin(1e-3));
    CHECK(bound(BoundId::R8, p) == Approx(2.4437).margin(1e-3));
    CHECK(bound(BoundId::A, p) == Approx(3.0183).margin(1e-3));
    CHECK(bound(BoundId::CM, p) == Approx(3.0).margin(1e-3));
    CHECK(bound(BoundId::C, p) == Approx(3.0).margin(1e-12));
    CHECK(bound(BoundId::FK, p) == Approx(3.2802).margin(1e-3));
    CHECK(bound(BoundId::K1, p) == Approx(3.0).margin(1e-3));
    CHECK(bound(BoundId::K2, p) == Approx(2.8552).margin(1e-3));
    CHECK(bound(BoundId::AK, p) == Approx(3.0670).margin(1e-3));

    // R8 is the smallest of the ids that table compares.
    const double r8 = bound(BoundId::R8, p);
    for (BoundId id : {BoundId::A, BoundId::CM, BoundId::C, BoundId::FK, BoundId::K1,
                       BoundId::K2, BoundId::AK, BoundId::R6, BoundId::R7})
        CHECK(r8 <= bound(id, p) + 1e-12);
}

TEST_CASE("monomial rows collapse to 1", "[bounds]") {
    for (std::size_t n : {2u, 3u, 7u}) {
        const Polynomial p = monomial(n);
        CHECK(bound(BoundId::C, p) == 1.0);
        CHECK(bound(BoundId::M, p) == 1.0);
        CHECK(bound(BoundId::CM, p) == 1.0);
    }
}

TEST_CASE("R8 of z^3+1 against the hand-evaluated recurrence", "[bounds]") {
    // a = (1, 0, 0): b_0 = 0, b_1 = -a_0 = -1, b_2 = 0, so
    // alpha = sqrt(1 + 1 + 1) = sqrt(3); beta = ||C(p)|| = 1 because that
    // companion matrix permutes basis vectors up to sign.
    const Polynomial p = poly({1, 0, 0, 1});
    const double expected = std::sqrt(0.75 * std::sqrt(3.0) + 0.25);
    CHECK(companion_square_norm_bound(p) == Approx(std::sqrt(3.0)).margin(1e-14));
    CHECK(exact_companion_norm(p) == Approx(1.0).margin(1e-14));
    CHECK(bound(BoundId::R8, p) == Approx(expected).margin(1e-13));
    CHECK(bound(BoundId::R8, p) >= 1.0); // max |zero| of z^3 + 1
}

TEST_CASE("degree preconditions name the offending bound", "[bounds]") {
    const Polynomial quad = poly({1, 1, 1});
    REQUIRE_THROWS_WITH(compute_bound(BoundId::K2, quad),
                        Catch::Contains("K2") && Catch::Contains("3"));
    for (BoundId id : kAllBounds)
        if (id != BoundId::K2) REQUIRE_NOTHROW(compute_bound(id, quad));
}

TEST_CASE("compute_all selects the best and flags skips", "[bounds]") {
    const Polynomial p = poly({1, 0, 1, 0, 1, 2});
    const BoundReport report = compute_all(p, /*with_roots=*/true);
    REQUIRE(report.entries.size() == 17);
    REQUIRE(report.best == BoundId::R5);
    REQUIRE(report.skipped.empty());
    REQUIRE(report.actual_max_modulus.has_value());
    REQUIRE(*report.actual_max_modulus < 1.8302);

    const Polynomial quad = poly({1, 1, 1});
    const BoundReport qr = compute_all(quad, false);
    REQUIRE(qr.entries.size() == 16);
    REQUIRE(qr.skipped == std::vector<BoundId>{BoundId::K2});
    REQUIRE_FALSE(qr.actual_max_modulus.has_value());

    REQUIRE_THROWS_AS(compute_all(poly({1, 1}), false), DomainError);
}

TEST_CASE("numerical radius of companion matrices", "[bounds]") {
    for (std::size_t n = 2; n <= 6; ++n)
        CHECK(numerical_radius_of_companion(monomial(n)) ==
              Approx(std::cos(std::numbers::pi / double(n + 1))).margin(1e-9));

    // z^2 - 1 has the Hermitian companion [[0,1],[1,0]].
    CHECK(numerical_radius_of_companion(poly({1, 0, -1})) == Approx(1.0).margin(1e-9));

    // Bracketed by the largest zero below and the sharpest bound above.
    const Polynomial p = poly({1, 0, 1, 0, 1, 2});
    const double w = numerical_radius_of_companion(p);
    CHECK(w >= max_modulus(find_roots(p)) - 1e-9);
    CHECK(w <= 1.8301 + 1e-3);
}

TEST_CASE("BBP groupings against an independent Taylor shift", "[bounds]") {
    const Polynomial p = poly({1, 4, 1, 1, 1, 1});

    // Shift by -a4/5 = -0.8; q(w) = p(w - 0.8) has no w^4 term.
    const std::size_t n = p.degree();
    const Complex s = -p.coeff(n - 1) / double(n);
    const std::vector<Complex> shifted = taylor_shift(p, s);
    CHECK(std::abs(shifted[4]) < 1e-12);
    CHECK(shifted[3].real() == Approx(-5.4).margin(1e-12));
    CHECK(shifted[0].real() == Approx(1.63872).margin(1e-12));

    double alpha = 0.0;
    for (std::size_t r = 0; r + 2 <= n; ++r) alpha += std::norm(shifted[r]);
    CHECK(alpha == Approx(133.26198).margin(1e-8));

    // Grouping A's bracket is the perfect square ((1+sqrt(alpha))^2)^2, so the
    // whole term collapses to (1 + sqrt(alpha))/2.
    const double closed_form = std::abs(p.coeff(4)) / 5.0 +
                               std::cos(std::numbers::pi / 5.0) +
                               0.5 * (1.0 + std::sqrt(alpha));
    CHECK(bbp_bound(p, BbpGrouping::RootOfAlphaOnly) ==
          Approx(closed_form).margin(1e-10));
    CHECK(bbp_bound(p, BbpGrouping::RootOfAlphaOnly) == Approx(7.8810).margin(1e-4));
    CHECK(bbp_bound(p, BbpGrouping::RootOfAlphaTimesOnePlusAlpha) ==
          Approx(7.4866).margin(1e-4));
    // Neither grouping lands on the published 7.2809; the acceptance suite
    // carries that comparison and reports the discrepancy.
}

TEST_CASE("R5 as published undershoots on z^2 - 4", "[bounds]") {
    // The first radical takes alpha = sqrt(sum |a_r|^2) linearly, which
    // reproduces the published table (1.8301 above) but is not a valid
    // inclusion radius in general: for z^2 - 4 it gives 3/2 while the zeros
    // sit at +-2. The variant its own derivation supports would square alpha
    // and give 5/2 here. The soundness sweeps report R5 for this reason.
    const Polynomial p = poly({1, 0, -4});
    const double r5 = bound(BoundId::R5, p);
    CHECK(r5 == Approx(1.5).margin(1e-12));
    CHECK(max_modulus(find_roots(p)) == Approx(2.0).margin(1e-10));
    CHECK(r5 < 2.0);
}

TEST_CASE("soundness of every bound except published R5", "[bounds]") {
    std::mt19937_64 g(51);
    std::uniform_int_distribution<std::size_t> deg(2, 10);
    for (int trial = 0; trial < 300; ++trial) {
        const Polynomial p = random_poly(g, deg(g), 5.0);
        const RootSet rs = find_roots(p);
        if (!rs.converged) continue;
        const double actual = max_modulus(rs);
        for (BoundId id : kAllBounds) {
            if (p.degree() < min_degree(id)) continue;
            if (id == BoundId::R5) continue; // documented published defect
            INFO("bound " << to_string(id) << " trial " << trial);
            REQUIRE(compute_bound(id, p) >= actual - 1e-6);
        }
    }
}

TEST_CASE("R1..R8 dominate the companion numerical radius (R5 excepted)", "[bounds]") {
    std::mt19937_64 g(52);
    std::uniform_int_distribution<std::size_t> deg(2, 7);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial p = random_poly(g, deg(g), 3.0);
        const double w = numerical_radius_of_companion(p);
        for (BoundId id : {BoundId::R1, BoundId::R2, BoundId::R3, BoundId::R4, BoundId::R6,
                           BoundId::R7, BoundId::R8}) {
            INFO("bound " << to_string(id) << " trial " << trial);
            REQUIRE(compute_bound(id, p) >= w - 1e-6);
        }
    }
}
