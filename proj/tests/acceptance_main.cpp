// Acceptance suite: runs every gate criterion end to end and prints one
// PASS/FAIL line per criterion. Exits with the number of failed criteria.
//
// Usage: polybound_acceptance <path-to-polybound-cli>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "polybound/bounds.hpp"
#include "polybound/harness.hpp"
#include "polybound/io.hpp"

using namespace polybound;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", criterion, pass ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Polynomial poly(std::initializer_list<double> descending) {
    std::vector<Complex> c;
    for (double v : descending) c.emplace_back(v, 0.0);
    return polynomial_from_coefficients(std::move(c), CoefficientOrder::Descending);
}

struct CommandResult {
    std::string output;
    int exit_code = -1;
};

CommandResult run_command(const std::string& cmd) {
    CommandResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) res.output.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

// ---------------------------------------------------------------------------

void criterion_1_table_reproduction() {
    const auto t0 = Clock::now();
    struct Row {
        Polynomial p;
        BoundId id;
        double expected;
    };
    const Polynomial p1 = poly({1, 4, 1, 1, 1, 1});
    const Polynomial p2 = poly({1, 0, 1, 0, 1, 2});
    const Polynomial p3 = poly({1, 0, 1, 0, 1, 5});
    const Polynomial p4 = poly({1, 2, 1, 1, 1, 1});
    const std::vector<Row> rows = {
        {p1, BoundId::R1, 4.5365},  {p1, BoundId::R2, 4.5509},
        {p1, BoundId::FK, 5.1020},  {p1, BoundId::K1, 4.5615},
        {p1, BoundId::AK, 4.8131},  {p1, BoundId::A, 4.5943},
        {p1, BoundId::BBP, 7.2809},
        {p2, BoundId::R3, 2.3688},  {p2, BoundId::C, 3.0},
        {p2, BoundId::M, 4.0},      {p2, BoundId::CM, 2.6457},
        {p2, BoundId::R5, 1.8301},  {p2, BoundId::FK, 2.0907},
        {p2, BoundId::A, 2.1760},   {p2, BoundId::K1, 2.1430},
        {p2, BoundId::K2, 1.9580},  {p2, BoundId::AK, 2.1678},
        {p3, BoundId::R4, 5.0192},  {p3, BoundId::C, 6.0},
        {p3, BoundId::M, 7.0},      {p3, BoundId::CM, 5.2915},
        {p4, BoundId::R6, 2.7129},  {p4, BoundId::R7, 2.6086},
        {p4, BoundId::R8, 2.4437},  {p4, BoundId::A, 3.0183},
        {p4, BoundId::CM, 3.0000},  {p4, BoundId::C, 3.0000},
        {p4, BoundId::FK, 3.2802},  {p4, BoundId::K1, 3.0000},
        {p4, BoundId::K2, 2.8552},  {p4, BoundId::AK, 3.0670},
    };

    int bad = 0;
    std::ostringstream detail;
    for (const Row& row : rows) {
        const double got = compute_bound(row.id, row.p);
        if (std::abs(got - row.expected) > 1e-3) {
            ++bad;
            detail << " [" << to_string(row.id) << " expected " << row.expected << " got "
                   << io::fixed4(got) << "]";
        }
    }
    const double dt = seconds_since(t0);
    std::ostringstream msg;
    msg << rows.size() - bad << "/" << rows.size() << " table values within 1e-3 in "
        << io::fixed4(dt) << "s" << detail.str();
    report(1, bad == 0 && dt < 1.0, msg.str());
}

void criterion_2_shift_radius() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (std::size_t n = 2; n <= 10; ++n) {
        const double w = numerical_radius(ComplexMatrix::lower_shift(n)).value;
        worst = std::max(worst, std::abs(w - std::cos(std::numbers::pi / double(n + 1))));
    }
    const double dt = seconds_since(t0);
    std::ostringstream msg;
    msg << "w(L_n) vs cos(pi/(n+1)) worst |err| = " << worst << " in " << io::fixed4(dt)
        << "s";
    report(2, worst < 1e-8 && dt < 5.0, msg.str());
}

void criterion_3_first_row_radius() {
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        harness::rng::Stream g(harness::rng::trial_seed(777, 3, trial));
        const int n = g.uniform_int(1, 8);
        ComplexMatrix m(n, n);
        double sumsq = 0.0;
        for (int j = 0; j < n; ++j) {
            m(0, j) = g.entry(3.0);
            sumsq += std::norm(m(0, j));
        }
        const double closed = 0.5 * (std::abs(m(0, 0)) + std::sqrt(sumsq));
        worst = std::max(worst, std::abs(numerical_radius(m).value - closed));
    }
    std::ostringstream msg;
    msg << "100 first-row matrices, worst |w - (|x1|+||x||)/2| = " << worst;
    report(3, worst < 1e-8, msg.str());
}

void criterion_4_norm_oracles() {
    double worst_norm = 0.0;
    double worst_square = -1e300;
    for (int trial = 0; trial < 500; ++trial) {
        harness::rng::Stream g(harness::rng::trial_seed(777, 4, trial));
        const int deg = g.uniform_int(2, 12);
        std::vector<Complex> low(deg);
        for (Complex& c : low) c = g.entry(5.0);
        const Polynomial p{std::move(low)};
        const ComplexMatrix cm = companion_matrix(p).matrix;
        worst_norm = std::max(worst_norm,
                              std::abs(exact_companion_norm(p) - spectral_norm(cm)));
        worst_square = std::max(worst_square, spectral_norm(multiply(cm, cm)) -
                                                  companion_square_norm_bound(p));
    }
    std::ostringstream msg;
    msg << "500 polynomials: worst |closed form - ||C||| = " << worst_norm
        << ", worst ||C^2|| - bound = " << worst_square;
    report(4, worst_norm < 1e-8 && worst_square <= 1e-9, msg.str());
}

void criterion_5_soundness_sweep() {
    const auto t0 = Clock::now();
    std::map<BoundId, int> root_violations;
    std::map<BoundId, int> radius_violations;
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        harness::rng::Stream g(harness::rng::trial_seed(777, 5, trial));
        const int deg = g.uniform_int(2, 10);
        std::vector<Complex> low(deg);
        for (Complex& c : low) c = g.entry(5.0);
        const Polynomial p{std::move(low)};
        const RootSet rs = find_roots(p);
        if (!rs.converged) continue;
        ++checked;
        const double actual = max_modulus(rs);
        const double wc = numerical_radius_of_companion(p);
        for (BoundId id : kAllBounds) {
            if (p.degree() < min_degree(id)) continue;
            const double value = compute_bound(id, p);
            if (value < actual - 1e-6) ++root_violations[id];
            const bool is_r = id >= BoundId::R1 && id <= BoundId::R8;
            if (is_r && value < wc - 1e-6) ++radius_violations[id];
        }
    }
    const double dt = seconds_since(t0);
    int total = 0;
    std::ostringstream detail;
    for (const auto& [id, count] : root_violations) {
        total += count;
        detail << " [" << to_string(id) << " under max|zero| x" << count << "]";
    }
    for (const auto& [id, count] : radius_violations) {
        total += count;
        detail << " [" << to_string(id) << " under w(C(p)) x" << count << "]";
    }
    std::ostringstream msg;
    msg << checked << " polynomials in " << io::fixed4(dt) << "s, " << total
        << " violations" << detail.str();
    report(5, total == 0 && dt < 60.0, msg.str());
}

CommandResult criterion_6_suite(const std::string& cli) {
    const std::string cmd = "'" + cli +
                            "' verify-ineq --seed 42 --trials 10000 --max-dim 6 "
                            "--tol 1e-9 --format json 2>/dev/null";
    const auto t0 = Clock::now();
    const CommandResult res = run_command(cmd);
    const double dt = seconds_since(t0);

    bool pass = res.exit_code == 0;
    std::ostringstream msg;
    msg << "verify-ineq 10000 trials in " << io::fixed4(dt) << "s, exit "
        << res.exit_code;
    long long violations = -1;
    try {
        const auto j = nlohmann::json::parse(res.output);
        violations = j.at("total_violations").get<long long>();
        msg << ", " << violations << " violations";
        pass = pass && violations == 0;
        const auto& ineqs = j.at("inequalities");
        pass = pass && ineqs.size() == std::size_t(harness::kInequalityCount);
        for (const auto& e : ineqs) {
            pass = pass && e.at("trials").get<long long>() > 0;
            if (e.at("inequality").get<std::string>() == "nilpotent_remark") {
                const double worst = e.at("worst_margin").get<double>();
                msg << ", nilpotent worst gap " << -worst;
                pass = pass && worst >= -1e-8; // equalities hold to 1e-8
            }
        }
    } catch (const std::exception& e) {
        msg << ", JSON parse failed: " << e.what();
        pass = false;
    }
    pass = pass && dt < 300.0;
    report(6, pass, msg.str());
    return res;
}

void criterion_7_bbp_grouping() {
    const Polynomial p = poly({1, 4, 1, 1, 1, 1});
    const double a = bbp_bound(p, BbpGrouping::RootOfAlphaOnly);
    const double b = bbp_bound(p, BbpGrouping::RootOfAlphaTimesOnePlusAlpha);
    const bool a_hits = std::abs(a - 7.2809) <= 1e-3;
    const bool b_hits = std::abs(b - 7.2809) <= 1e-3;
    std::ostringstream msg;
    msg << "grouping sqrt(a)(1+a) -> " << io::fixed4(a) << ", grouping sqrt(a(1+a)) -> "
        << io::fixed4(b) << " vs published 7.2809";
    report(7, a_hits != b_hits, msg.str());
}

void criterion_8_determinism(const std::string& cli, const CommandResult& first) {
    const std::string cmd = "'" + cli +
                            "' verify-ineq --seed 42 --trials 10000 --max-dim 6 "
                            "--tol 1e-9 --format json 2>/dev/null";
    const CommandResult second = run_command(cmd);
    const bool pass = second.exit_code == first.exit_code &&
                      !first.output.empty() && second.output == first.output;
    std::ostringstream msg;
    msg << "two identical-seed runs " << (pass ? "byte-identical" : "DIFFER") << " ("
        << first.output.size() << " bytes)";
    report(8, pass, msg.str());
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: polybound_acceptance <path-to-cli>\n");
        return 127;
    }
    const std::string cli = argv[1];

    criterion_1_table_reproduction();
    criterion_2_shift_radius();
    criterion_3_first_row_radius();
    criterion_4_norm_oracles();
    criterion_5_soundness_sweep();
    const CommandResult suite = criterion_6_suite(cli);
    criterion_7_bbp_grouping();
    criterion_8_determinism(cli, suite);

    std::printf("%d of 8 criteria failed\n", g_failures);
    return g_failures;
}
