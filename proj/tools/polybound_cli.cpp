// polybound: zero-inclusion radii, numerical radius, polynomial roots and the
// operator-inequality verification suite from one command line.
//
// Exit codes: 0 success, 1 input error, 2 numerical failure (non-convergence),
// 3 inequality violation detected by verify-ineq.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polybound/bounds.hpp"
#include "polybound/errors.hpp"
#include "polybound/harness.hpp"
#include "polybound/io.hpp"

namespace {

using namespace polybound;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitViolation = 3;

// POLYBOUND_TOL overrides a subcommand's default tolerance; an explicit
// --tol always wins.
double resolve_tol(const CLI::Option* opt, double flag_value, double fallback) {
    if (opt->count() > 0) return flag_value;
    if (const char* env = std::getenv("POLYBOUND_TOL")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            throw InputError(std::string("POLYBOUND_TOL is not a number: ") + env);
        }
    }
    return fallback;
}

void require_positive_tol(double tol) {
    if (!(tol > 0.0)) throw InputError("tol must be positive");
}

int cmd_bounds(const std::vector<std::string>& tokens, bool ascending, bool with_roots,
               io::OutputFormat format) {
    const Polynomial p = io::parse_polynomial(tokens, ascending);
    if (p.degree() == 1) {
        const Complex root = -p.coeff(0);
        if (format == io::OutputFormat::Json) {
            io::json j;
            j["degree"] = 1;
            j["root"] = {root.real(), root.imag()};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "degree 1: single zero at " << io::format_complex(root) << "\n";
        }
        return kExitOk;
    }
    const BoundReport report = compute_all(p, with_roots);
    std::cout << io::render_bound_report(report, format);
    return kExitOk;
}

int cmd_radius(const std::string& path, double tol, io::OutputFormat format) {
    require_positive_tol(tol);
    const ComplexMatrix m = io::read_matrix_file(path);
    if (!m.square()) throw InputError("radius: matrix must be square");
    const RadiusEstimate est = numerical_radius(m, tol);
    std::cout << io::render_radius(est, format);
    return kExitOk;
}

int cmd_roots(const std::vector<std::string>& tokens, bool ascending, double tol,
              int max_iter, io::OutputFormat format) {
    require_positive_tol(tol);
    const Polynomial p = io::parse_polynomial(tokens, ascending);
    const RootSet rs = find_roots(p, tol, max_iter);
    std::cout << io::render_roots(rs, format);
    return rs.converged ? kExitOk : kExitNumerical;
}

int cmd_verify(const harness::TrialConfig& cfg, io::OutputFormat format) {
    harness::validate(cfg);
    const harness::ViolationReport report = harness::run_suite(cfg);
    std::cout << io::render_suite_report(report, format);
    return report.total_violations() == 0 ? kExitOk : kExitViolation;
}

// One polynomial per line (same token syntax as `bounds`); emits one CSV row
// per (polynomial, bound) with the Aberth max modulus for tightness studies.
int cmd_compare_corpus(const std::string& path, bool ascending) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open corpus file '" + path + "'");
    std::cout << "line,polynomial,bound_id,value,is_best,tightness,actual_max_modulus\n";
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;
        Polynomial p = io::parse_polynomial(tokens, ascending);
        if (p.degree() < 2)
            throw InputError("corpus line " + std::to_string(lineno) +
                             ": degree must be at least 2");
        const BoundReport report = compute_all(p, /*with_roots=*/true);
        std::string poly;
        for (std::size_t i = 0; i < tokens.size(); ++i)
            poly += (i ? " " : "") + tokens[i];
        const double actual = *report.actual_max_modulus;
        for (const auto& [id, value] : report.entries) {
            std::cout << lineno << ",\"" << poly << "\"," << to_string(id) << ","
                      << io::full(value) << "," << (id == report.best ? "true" : "false")
                      << "," << io::full(value / actual) << "," << io::full(actual) << "\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial zero-localization toolkit"};
    app.require_subcommand(1);
    // Let global flags (--format, --ascending) appear after the subcommand.
    app.fallthrough();

    std::string format_name = "table";
    app.add_option("--format", format_name, "output format: table, csv or json")
        ->capture_default_str();
    bool ascending = false;
    app.add_flag("--ascending", ascending,
                 "coefficients are given lowest power first (default: leading first)");

    auto* sc_bounds = app.add_subcommand("bounds", "all zero-inclusion radii of a polynomial");
    std::vector<std::string> bound_tokens;
    sc_bounds->add_option("coefficients", bound_tokens, "polynomial coefficients")->required();
    bool with_roots = false;
    sc_bounds->add_flag("--with-roots", with_roots,
                        "also find the zeros and report per-bound tightness");

    auto* sc_radius = app.add_subcommand("radius", "numerical radius of a matrix file");
    std::string matrix_path;
    sc_radius->add_option("matrix", matrix_path, "matrix file")->required();
    double radius_tol = kDefaultRadiusTol;
    auto* radius_tol_opt = sc_radius->add_option("--tol", radius_tol, "bracket tolerance");

    auto* sc_roots = app.add_subcommand("roots", "all zeros via Aberth-Ehrlich iteration");
    std::vector<std::string> root_tokens;
    sc_roots->add_option("coefficients", root_tokens, "polynomial coefficients")->required();
    double roots_tol = kDefaultRootTol;
    auto* roots_tol_opt = sc_roots->add_option("--tol", roots_tol, "step tolerance");
    int max_iter = kDefaultRootMaxIter;
    sc_roots->add_option("--max-iter", max_iter, "iteration cap");

    auto* sc_verify =
        app.add_subcommand("verify-ineq", "randomized check of the radius inequalities");
    harness::TrialConfig cfg;
    cfg.trials = 1000;
    cfg.max_dim = 5;
    sc_verify->add_option("--seed", cfg.seed, "base seed")->capture_default_str();
    sc_verify->add_option("--trials", cfg.trials, "total trials")->capture_default_str();
    sc_verify->add_option("--max-dim", cfg.max_dim, "largest matrix dimension")
        ->capture_default_str();
    double verify_tol = 1e-9;
    auto* verify_tol_opt = sc_verify->add_option("--tol", verify_tol, "violation slack");

    auto* sc_corpus = app.add_subcommand(
        "compare-corpus", "CSV of every bound over a file of polynomials (one per line)");
    std::string corpus_path;
    sc_corpus->add_option("file", corpus_path, "corpus file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        const io::OutputFormat format = io::parse_format(format_name);
        if (sc_bounds->parsed()) return cmd_bounds(bound_tokens, ascending, with_roots, format);
        if (sc_radius->parsed())
            return cmd_radius(matrix_path,
                              resolve_tol(radius_tol_opt, radius_tol, kDefaultRadiusTol),
                              format);
        if (sc_roots->parsed())
            return cmd_roots(root_tokens, ascending,
                             resolve_tol(roots_tol_opt, roots_tol, kDefaultRootTol), max_iter,
                             format);
        if (sc_verify->parsed()) {
            cfg.tol = resolve_tol(verify_tol_opt, verify_tol, 1e-9);
            return cmd_verify(cfg, format);
        }
        if (sc_corpus->parsed()) return cmd_compare_corpus(corpus_path, ascending);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ConvergenceError& e) {
        std::cerr << "numerical failure: " << e.what() << " (residual " << e.residual << ")\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
