#ifndef POLYBOUND_IO_HPP
#define POLYBOUND_IO_HPP

// Parsing and report rendering for the command-line front end: complex
// coefficient tokens, the matrix file format, and the three output formats.
//
// Text tables print 4 decimals (round half to even, matching the published
// tables); CSV and JSON carry full precision. The CSV column contract for
// bound reports is `bound_id,value,is_best,tightness` and is stable.
//
// Matrix files: '#' starts a comment, the first data line is "rows cols",
// then rows*cols entries in row-major order, each "re" or "re,im".

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polybound/bounds.hpp"
#include "polybound/errors.hpp"
#include "polybound/harness.hpp"
#include "polybound/linalg.hpp"
#include "polybound/polynomial.hpp"
#include "polybound/radius.hpp"
#include "polybound/roots.hpp"

namespace polybound::io {

using json = nlohmann::ordered_json;

enum class OutputFormat { TextTable, Csv, Json };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "table" || s == "text" || s == "text-table") return OutputFormat::TextTable;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw InputError("unknown format '" + s + "' (expected table, csv or json)");
}

// --------------------------------------------------------------------------
// Number formatting.

// Full-precision rendering that round-trips through parsing.
inline std::string full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Fixed 4 decimals with ties rounded to even, the convention of the tables
// this tool reproduces. Comparisons always use unrounded values.
inline std::string fixed4(double v) {
    const double scaled = v * 10000.0;
    double r = std::nearbyint(scaled); // FE_TONEAREST: ties to even
    if (std::abs(scaled - std::trunc(scaled)) == 0.5) {
        const double down = std::trunc(scaled);
        r = (std::fmod(down, 2.0) == 0.0) ? down : down + (scaled > 0 ? 1.0 : -1.0);
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4f", r / 10000.0);
    return buf;
}

inline std::string format_complex(Complex z) {
    if (z.imag() == 0.0) return full(z.real());
    std::string s = full(z.real());
    s += (z.imag() < 0 ? "-" : "+");
    s += full(std::abs(z.imag()));
    s += "i";
    return s;
}

// --------------------------------------------------------------------------
// Token parsing.

namespace detail {

inline bool parse_double(const std::string& s, std::size_t& pos, double& out) {
    const char* begin = s.data() + pos;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc() || ptr == begin) return false;
    pos = std::size_t(ptr - s.data());
    return true;
}

} // namespace detail

// Accepts "1.5", "-2e3", "3i", "-i", "1+2i", "2.5-0.5i", ...
inline Complex parse_complex_token(const std::string& token) {
    if (token.empty()) throw InputError("empty number token");
    std::size_t pos = 0;
    auto fail = [&]() -> Complex {
        throw InputError("malformed number '" + token + "'");
    };

    auto parse_signed_part = [&](double& value, bool& is_imag) -> bool {
        if (pos >= token.size()) return false;
        std::size_t start = pos;
        double sign = 1.0;
        if (token[pos] == '+' || token[pos] == '-') {
            sign = token[pos] == '-' ? -1.0 : 1.0;
            ++pos;
        }
        if (pos < token.size() && (token[pos] == 'i' || token[pos] == 'I')) {
            ++pos; // bare "i" or "-i"
            value = sign;
            is_imag = true;
            return true;
        }
        double mag = 0.0;
        if (!detail::parse_double(token, pos, mag)) {
            pos = start;
            return false;
        }
        is_imag = false;
        if (pos < token.size() && (token[pos] == 'i' || token[pos] == 'I')) {
            ++pos;
            is_imag = true;
        }
        value = sign * mag;
        return true;
    };

    double first = 0.0;
    bool first_imag = false;
    if (!parse_signed_part(first, first_imag)) return fail();
    if (pos == token.size())
        return first_imag ? Complex(0.0, first) : Complex(first, 0.0);

    double second = 0.0;
    bool second_imag = false;
    if (!parse_signed_part(second, second_imag)) return fail();
    if (pos != token.size() || first_imag == second_imag) return fail();
    const double re = first_imag ? second : first;
    const double im = first_imag ? first : second;
    return {re, im};
}

// CLI default is descending order (leading coefficient first, the way
// polynomials are written); `ascending` flips it.
inline Polynomial parse_polynomial(const std::vector<std::string>& tokens, bool ascending) {
    if (tokens.empty()) throw InputError("no coefficients given");
    std::vector<Complex> coeffs;
    coeffs.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        try {
            coeffs.push_back(parse_complex_token(tokens[i]));
        } catch (const InputError& e) {
            throw InputError("coefficient " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return polynomial_from_coefficients(
        std::move(coeffs),
        ascending ? CoefficientOrder::Ascending : CoefficientOrder::Descending);
}

inline ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open matrix file '" + path + "'");
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    if (tokens.size() < 2) throw InputError("matrix file '" + path + "': missing header");
    std::size_t rows = 0, cols = 0;
    try {
        rows = std::stoul(tokens[0]);
        cols = std::stoul(tokens[1]);
    } catch (const std::exception&) {
        throw InputError("matrix file '" + path + "': bad dimension header");
    }
    if (rows == 0 || cols == 0)
        throw InputError("matrix file '" + path + "': dimensions must be positive");
    if (tokens.size() != 2 + rows * cols)
        throw InputError("matrix file '" + path + "': expected " +
                         std::to_string(rows * cols) + " entries, found " +
                         std::to_string(tokens.size() - 2));
    std::vector<Complex> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 2; i < tokens.size(); ++i) {
        std::string tok = tokens[i];
        const std::size_t comma = tok.find(',');
        if (comma == std::string::npos) {
            entries.push_back(parse_complex_token(tok));
        } else {
            const Complex re = parse_complex_token(tok.substr(0, comma));
            const Complex im = parse_complex_token(tok.substr(comma + 1));
            if (re.imag() != 0.0 || im.imag() != 0.0)
                throw InputError("matrix entry '" + tok + "': re,im parts must be real");
            entries.emplace_back(re.real(), im.real());
        }
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

// --------------------------------------------------------------------------
// Bound report rendering.

inline json polynomial_to_json(const Polynomial& p) {
    json j;
    j["degree"] = p.degree();
    json coeffs = json::array();
    for (std::size_t k = 0; k <= p.degree(); ++k) {
        const Complex c = p.coeff(k);
        coeffs.push_back({c.real(), c.imag()});
    }
    j["coefficients_ascending"] = std::move(coeffs);
    return j;
}

inline json bound_report_to_json(const BoundReport& r) {
    json j;
    j["polynomial"] = polynomial_to_json(r.polynomial);
    json entries = json::array();
    for (const auto& [id, value] : r.entries) {
        json e;
        e["bound_id"] = to_string(id);
        e["value"] = value;
        e["is_best"] = (id == r.best);
        if (r.actual_max_modulus)
            e["tightness"] = value / *r.actual_max_modulus;
        entries.push_back(std::move(e));
    }
    j["bounds"] = std::move(entries);
    json skipped = json::array();
    for (BoundId id : r.skipped) skipped.push_back(to_string(id));
    j["skipped"] = std::move(skipped);
    j["best"] = to_string(r.best);
    if (r.actual_max_modulus) j["actual_max_modulus"] = *r.actual_max_modulus;
    return j;
}

inline std::string render_bound_report_csv(const BoundReport& r) {
    std::string out = "bound_id,value,is_best,tightness\n";
    for (const auto& [id, value] : r.entries) {
        out += to_string(id);
        out += ',';
        out += full(value);
        out += ',';
        out += (id == r.best) ? "true" : "false";
        out += ',';
        if (r.actual_max_modulus) out += full(value / *r.actual_max_modulus);
        out += '\n';
    }
    return out;
}

inline std::string render_bound_report_table(const BoundReport& r) {
    auto sorted = r.entries;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.second < b.second; });
    std::ostringstream out;
    out << "bound    value";
    if (r.actual_max_modulus) out << "      tightness";
    out << "\n";
    for (const auto& [id, value] : sorted) {
        char line[128];
        if (r.actual_max_modulus) {
            std::snprintf(line, sizeof(line), "%-5s%10s  %12s%s\n", to_string(id),
                          fixed4(value).c_str(),
                          fixed4(value / *r.actual_max_modulus).c_str(),
                          id == r.best ? "  <- best" : "");
        } else {
            std::snprintf(line, sizeof(line), "%-5s%10s%s\n", to_string(id),
                          fixed4(value).c_str(), id == r.best ? "  <- best" : "");
        }
        out << line;
    }
    if (r.actual_max_modulus)
        out << "actual max |zero| = " << fixed4(*r.actual_max_modulus) << "\n";
    if (!r.skipped.empty()) {
        out << "skipped:";
        for (BoundId id : r.skipped)
            out << " " << to_string(id) << " (needs degree >= " << min_degree(id) << ")";
        out << "\n";
    }
    return out.str();
}

inline std::string render_bound_report(const BoundReport& r, OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv: return render_bound_report_csv(r);
        case OutputFormat::Json: return bound_report_to_json(r).dump(2) + "\n";
        default: return render_bound_report_table(r);
    }
}

// --------------------------------------------------------------------------
// Radius / roots / suite rendering.

inline std::string render_radius(const RadiusEstimate& est, OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv: {
            std::string out = "value,theta_star,refinement_width,samples\n";
            out += full(est.value) + "," + full(est.theta_star) + "," +
                   full(est.refinement_width) + "," + std::to_string(est.samples) + "\n";
            return out;
        }
        case OutputFormat::Json: {
            json j;
            j["value"] = est.value;
            j["theta_star"] = est.theta_star;
            j["refinement_width"] = est.refinement_width;
            j["samples"] = est.samples;
            return j.dump(2) + "\n";
        }
        default: {
            std::ostringstream out;
            out << "numerical radius  " << full(est.value) << "\n"
                << "theta*            " << full(est.theta_star) << "\n"
                << "refinement width  " << full(est.refinement_width) << "\n"
                << "samples           " << est.samples << "\n";
            return out.str();
        }
    }
}

inline std::string render_roots(const RootSet& rs, OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv: {
            std::string out = "index,re,im,modulus,residual\n";
            for (std::size_t i = 0; i < rs.roots.size(); ++i)
                out += std::to_string(i) + "," + full(rs.roots[i].real()) + "," +
                       full(rs.roots[i].imag()) + "," + full(std::abs(rs.roots[i])) + "," +
                       full(rs.residuals[i]) + "\n";
            return out;
        }
        case OutputFormat::Json: {
            json j;
            j["converged"] = rs.converged;
            j["iterations"] = rs.iterations;
            json roots = json::array();
            for (std::size_t i = 0; i < rs.roots.size(); ++i) {
                json e;
                e["re"] = rs.roots[i].real();
                e["im"] = rs.roots[i].imag();
                e["modulus"] = std::abs(rs.roots[i]);
                e["residual"] = rs.residuals[i];
                roots.push_back(std::move(e));
            }
            j["roots"] = std::move(roots);
            j["max_modulus"] = max_modulus(rs);
            return j.dump(2) + "\n";
        }
        default: {
            std::ostringstream out;
            for (std::size_t i = 0; i < rs.roots.size(); ++i)
                out << format_complex(rs.roots[i]) << "   (|z| = " << fixed4(std::abs(rs.roots[i]))
                    << ", residual " << full(rs.residuals[i]) << ")\n";
            out << (rs.converged ? "converged" : "NOT converged") << " after "
                << rs.iterations << " iterations; max |z| = " << full(max_modulus(rs)) << "\n";
            return out.str();
        }
    }
}

inline json suite_report_to_json(const harness::ViolationReport& r) {
    json j;
    j["seed"] = r.config.seed;
    j["trials"] = r.config.trials;
    j["max_dim"] = r.config.max_dim;
    j["magnitude"] = r.config.magnitude;
    j["tol"] = r.config.tol;
    json stats = json::array();
    for (const auto& s : r.stats) {
        json e;
        e["inequality"] = harness::to_string(s.id);
        e["trials"] = s.trials;
        e["violations"] = s.violations;
        e["worst_margin"] = s.worst_margin;
        e["worst_seed"] = s.worst_seed;
        stats.push_back(std::move(e));
    }
    j["inequalities"] = std::move(stats);
    j["total_violations"] = r.total_violations();
    return j;
}

inline std::string render_suite_report(const harness::ViolationReport& r, OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv: {
            std::string out = "inequality,trials,violations,worst_margin,worst_seed\n";
            for (const auto& s : r.stats)
                out += std::string(harness::to_string(s.id)) + "," + std::to_string(s.trials) +
                       "," + std::to_string(s.violations) + "," + full(s.worst_margin) + "," +
                       std::to_string(s.worst_seed) + "\n";
            return out;
        }
        case OutputFormat::Json:
            return suite_report_to_json(r).dump(2) + "\n";
        default: {
            std::ostringstream out;
            char line[160];
            std::snprintf(line, sizeof(line), "%-28s%8s%12s%14s  %s\n", "inequality", "trials",
                          "violations", "worst", "seed");
            out << line;
            for (const auto& s : r.stats) {
                std::snprintf(line, sizeof(line), "%-28s%8lld%12lld%14.3e  %llu\n",
                              harness::to_string(s.id), (long long)s.trials,
                              (long long)s.violations, s.worst_margin,
                              (unsigned long long)s.worst_seed);
                out << line;
            }
            out << "total violations: " << r.total_violations() << "\n";
            return out.str();
        }
    }
}

} // namespace polybound::io

#endif
