// muntzkit: certified approximation and monomial-span density toolkit.
//
// One binary, seven subcommand groups.  Every report is deterministic:
// identical inputs produce byte-identical output (stable key order, 17
// significant digits for doubles).  Exit codes: 0 success, 2 rejected
// input or usage error, 1 internal certificate failure.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "muntzkit/constructive.hpp"
#include "muntzkit/density.hpp"
#include "muntzkit/errors.hpp"
#include "muntzkit/exponents.hpp"
#include "muntzkit/gram.hpp"
#include "muntzkit/polynomial.hpp"
#include "muntzkit/primes.hpp"
#include "muntzkit/rational.hpp"
#include "muntzkit/report_io.hpp"
#include "muntzkit/weierstrass.hpp"

namespace {

using muntzkit::condition_class_name;
using muntzkit::Csv;
using muntzkit::evaluation_error;
using muntzkit::ExponentSequence;
using muntzkit::format_double;
using muntzkit::format_long;
using muntzkit::GeneralizedPolynomial;
using muntzkit::Grid;
using muntzkit::Json;
using muntzkit::Rational;
using muntzkit::rational_from_string;
using muntzkit::rational_to_string;
using muntzkit::rejected_input;
using muntzkit::render_table;
using muntzkit::Term;

// ============================================================
// Small parsing helpers
// ============================================================

enum class Format { json, csv, table };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "table") return Format::table;
    throw rejected_input("unknown format '" + s + "' (expected json, csv, or table)");
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

double parse_double(const std::string& s) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw rejected_input("not a number: '" + s + "'");
        return v;
    } catch (const rejected_input&) {
        throw;
    } catch (const std::invalid_argument&) {
        throw rejected_input("not a number: '" + s + "'");
    } catch (const std::out_of_range&) {
        throw rejected_input("number out of range: '" + s + "'");
    }
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

std::vector<double> parse_double_list(const std::string& s) {
    const std::string stripped = strip_spaces(s);
    if (stripped.empty()) throw rejected_input("expected a comma-separated list of numbers");
    std::vector<double> out;
    for (const std::string& part : split_commas(stripped)) {
        if (part.empty()) throw rejected_input("empty entry in list '" + s + "'");
        out.push_back(parse_double(part));
    }
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    const std::string stripped = strip_spaces(s);
    if (stripped.empty()) throw rejected_input("expected a comma-separated list of rationals");
    std::vector<Rational> out;
    for (const std::string& part : split_commas(stripped)) {
        if (part.empty()) throw rejected_input("empty entry in list '" + s + "'");
        out.push_back(rational_from_string(part));
    }
    return out;
}

// Term list "c:lambda[,c:lambda...]" on the unit interval.
GeneralizedPolynomial parse_poly(const std::string& s) {
    const std::string stripped = strip_spaces(s);
    if (stripped.empty()) throw rejected_input("expected a term list 'c:lambda[,c:lambda...]'");
    std::vector<Term> terms;
    for (const std::string& part : split_commas(stripped)) {
        const std::size_t colon = part.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 >= part.size())
            throw rejected_input("malformed term '" + part + "' (expected c:lambda)");
        terms.push_back({parse_double(part.substr(0, colon)), parse_double(part.substr(colon + 1))});
    }
    return GeneralizedPolynomial(std::move(terms), {0.0, 1.0});
}

// ============================================================
// Sequence micro-grammar:  "i" | "a*i+b" | "i^k" | "primes" | "@file.csv"
// plus bare constants (density table only).
// ============================================================

struct SeqSpec {
    enum class Kind { constant, affine, power, primes, file };
    Kind kind = Kind::constant;
    double a = 1.0;
    double b = 0.0;
    double k = 1.0;
    double value = 0.0;
    std::string path;
    std::string text; // original, stripped
};

SeqSpec parse_seq_spec(const std::string& raw) {
    SeqSpec spec;
    spec.text = strip_spaces(raw);
    const std::string& s = spec.text;
    if (s.empty()) throw rejected_input("empty sequence descriptor");

    if (s == "primes") {
        spec.kind = SeqSpec::Kind::primes;
        return spec;
    }
    if (s.front() == '@') {
        if (s.size() == 1) throw rejected_input("missing file path after '@'");
        spec.kind = SeqSpec::Kind::file;
        spec.path = s.substr(1);
        return spec;
    }
    if (s.find('^') != std::string::npos) {
        if (s.rfind("i^", 0) != 0)
            throw rejected_input("malformed power descriptor '" + s + "' (expected i^k)");
        spec.kind = SeqSpec::Kind::power;
        spec.k = parse_double(s.substr(2));
        return spec;
    }
    const std::size_t ipos = s.find('i');
    if (ipos != std::string::npos) {
        spec.kind = SeqSpec::Kind::affine;
        const std::string prefix = s.substr(0, ipos);
        const std::string suffix = s.substr(ipos + 1);
        if (prefix.empty()) {
            spec.a = 1.0;
        } else {
            if (prefix.back() != '*')
                throw rejected_input("malformed affine descriptor '" + s + "' (expected a*i+b)");
            spec.a = parse_double(prefix.substr(0, prefix.size() - 1));
        }
        if (suffix.empty()) {
            spec.b = 0.0;
        } else {
            if (suffix.front() != '+' && suffix.front() != '-')
                throw rejected_input("malformed affine descriptor '" + s + "' (expected a*i+b)");
            spec.b = parse_double(suffix);
        }
        return spec;
    }
    spec.kind = SeqSpec::Kind::constant;
    spec.value = parse_double(s);
    return spec;
}

std::vector<double> read_csv_values(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw rejected_input("cannot open sequence file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw rejected_input("sequence file is empty: " + path);
    {
        // Header row is mandatory: the first cell must not parse as a number.
        const std::string first_cell = strip_spaces(split_commas(line).front());
        bool numeric = false;
        try {
            std::size_t used = 0;
            (void)std::stod(first_cell, &used);
            numeric = (used == first_cell.size());
        } catch (const std::exception&) {
            numeric = false;
        }
        if (numeric)
            throw rejected_input("sequence file must start with a header row: " + path);
    }
    std::vector<double> values;
    while (std::getline(in, line)) {
        const std::string cell = strip_spaces(split_commas(line).front());
        if (cell.empty()) continue;
        values.push_back(parse_double(cell));
    }
    if (values.empty()) throw rejected_input("sequence file has no data rows: " + path);
    return values;
}

ExponentSequence make_exponent_sequence(const SeqSpec& spec, std::optional<long> start,
                                        const std::string& tail_text) {
    if (!tail_text.empty() && spec.kind != SeqSpec::Kind::file)
        throw rejected_input("--tail applies only to @file sequences");
    switch (spec.kind) {
        case SeqSpec::Kind::constant:
            throw rejected_input("a constant sequence repeats its exponent; constants are valid "
                                 "only for 'density table'");
        case SeqSpec::Kind::affine:
            return ExponentSequence::affine(spec.a, spec.b, start.value_or(0));
        case SeqSpec::Kind::power:
            return ExponentSequence::power(spec.k, start.value_or(1));
        case SeqSpec::Kind::primes:
            if (start) throw rejected_input("--start is not meaningful for the primes family");
            return ExponentSequence::primes();
        case SeqSpec::Kind::file: {
            if (start) throw rejected_input("--start applies to symbolic families, not @file lists");
            std::vector<double> head = read_csv_values(spec.path);
            if (tail_text.empty()) return ExponentSequence::explicit_list(std::move(head));
            const SeqSpec tail_spec = parse_seq_spec(tail_text);
            if (tail_spec.kind == SeqSpec::Kind::file || tail_spec.kind == SeqSpec::Kind::constant)
                throw rejected_input("--tail must be a symbolic family (a*i+b, i^k, or primes)");
            return ExponentSequence::with_tail(std::move(head),
                                               make_exponent_sequence(tail_spec, std::nullopt, ""));
        }
    }
    throw rejected_input("unreachable sequence kind");
}

// Raw term values for the product/sum table; indices run start, start+1, ...
// (default start 1, so row 1 is the term at index 1).
std::vector<double> make_table_values(const SeqSpec& spec, std::optional<long> start, long n_max) {
    if (n_max < 1) throw rejected_input("--n-max must be at least 1");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n_max));
    switch (spec.kind) {
        case SeqSpec::Kind::constant:
            for (long i = 0; i < n_max; ++i) values.push_back(spec.value);
            return values;
        case SeqSpec::Kind::affine: {
            const long s = start.value_or(1);
            for (long i = 0; i < n_max; ++i)
                values.push_back(spec.a * static_cast<double>(s + i) + spec.b);
            return values;
        }
        case SeqSpec::Kind::power: {
            const long s = start.value_or(1);
            for (long i = 0; i < n_max; ++i)
                values.push_back(std::pow(static_cast<double>(s + i), spec.k));
            return values;
        }
        case SeqSpec::Kind::primes: {
            if (start) throw rejected_input("--start is not meaningful for the primes family");
            long bound = 64;
            std::vector<long> primes = muntzkit::primes::primes_up_to(bound);
            while (static_cast<long>(primes.size()) < n_max && bound < 10000000) {
                bound = std::min(bound * 4, 10000000L);
                primes = muntzkit::primes::primes_up_to(bound);
            }
            if (static_cast<long>(primes.size()) < n_max)
                throw rejected_input("requested more primes than the sieve ceiling provides");
            for (long i = 0; i < n_max; ++i) values.push_back(static_cast<double>(primes[i]));
            return values;
        }
        case SeqSpec::Kind::file: {
            if (start) throw rejected_input("--start applies to symbolic families, not @file lists");
            std::vector<double> all = read_csv_values(spec.path);
            if (static_cast<long>(all.size()) < n_max)
                throw rejected_input("sequence file has only " +
                                     format_long(static_cast<long>(all.size())) + " values");
            all.resize(static_cast<std::size_t>(n_max));
            return all;
        }
    }
    throw rejected_input("unreachable sequence kind");
}

// ============================================================
// Output plumbing
// ============================================================

void deliver(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::string resolved = output_path;
    if (resolved.front() != '/') {
        const char* dir = std::getenv("MUNTZKIT_OUTPUT_DIR");
        if (dir != nullptr && *dir != '\0') resolved = std::string(dir) + "/" + resolved;
    }
    std::ofstream out(resolved, std::ios::binary);
    if (!out) throw rejected_input("cannot open output file: " + resolved);
    out << text;
    out.flush();
    if (!out) throw rejected_input("failed writing output file: " + resolved);
}

std::string join_semicolons(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(';');
        out += format_double(values[i]);
    }
    return out;
}

Json doubles_array(const std::vector<double>& values) {
    Json arr = Json::array();
    for (double v : values) arr.push(v);
    return arr;
}

std::string format_condition(double estimate) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", estimate);
    return std::string("gram condition estimate ") + buf + " (1-norm)";
}

// Key/value report rendered in the three formats; the workhorse for scalar
// reports.  `fields` drives json, `flat` drives csv (single row) and table.
std::string render_scalar_report(const std::vector<std::pair<std::string, Json>>& fields,
                                 const std::vector<std::pair<std::string, std::string>>& flat,
                                 Format format) {
    if (format == Format::json) {
        Json obj = Json::object();
        for (const auto& [key, value] : fields) obj.add(key, value);
        return obj.dump();
    }
    if (format == Format::csv) {
        std::vector<std::string> header, row;
        for (const auto& [key, value] : flat) {
            header.push_back(key);
            row.push_back(value);
        }
        Csv csv(header);
        csv.add_row(row);
        return csv.str();
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, value] : flat) rows.push_back({key, value});
    return render_table({"field", "value"}, rows);
}

std::string render_distance(const muntzkit::gram::DistanceReport& report, Format format) {
    std::vector<std::pair<std::string, Json>> fields;
    fields.emplace_back("q", Json::number(report.q));
    fields.emplace_back("lambdas", doubles_array(report.exponents));
    fields.emplace_back("delta", Json::number(report.delta));
    fields.emplace_back("method", Json::string(report.method));
    fields.emplace_back("condition_note", Json::string(report.condition_note));

    std::vector<std::pair<std::string, std::string>> flat;
    flat.emplace_back("q", format_double(report.q));
    flat.emplace_back("lambdas", join_semicolons(report.exponents));
    flat.emplace_back("delta", format_double(report.delta));
    flat.emplace_back("method", report.method);
    flat.emplace_back("condition_note", report.condition_note);
    return render_scalar_report(fields, flat, format);
}

std::string render_certificate(const muntzkit::weierstrass::ErrorCertificate& cert,
                               std::optional<double> half_width, Format format) {
    std::vector<std::pair<std::string, Json>> fields;
    fields.emplace_back("n", Json::integer(cert.n));
    if (half_width) fields.emplace_back("a", Json::number(*half_width));
    fields.emplace_back("analytic_bound", Json::number(cert.analytic_bound));
    fields.emplace_back("grid_estimate", Json::number(cert.grid_estimate));
    fields.emplace_back("violations", doubles_array(cert.violations));

    std::vector<std::pair<std::string, std::string>> flat;
    flat.emplace_back("n", format_long(cert.n));
    if (half_width) flat.emplace_back("a", format_double(*half_width));
    flat.emplace_back("analytic_bound", format_double(cert.analytic_bound));
    flat.emplace_back("grid_estimate", format_double(cert.grid_estimate));
    flat.emplace_back("violations", join_semicolons(cert.violations));
    return render_scalar_report(fields, flat, format);
}

// Tabular report: json wraps the rows (as objects keyed by `columns`) under
// "rows" after the metadata; csv and table render the rows directly.
std::string render_rows(const std::vector<std::pair<std::string, Json>>& meta,
                        const std::vector<std::string>& columns,
                        const std::vector<std::vector<Json>>& json_rows,
                        const std::vector<std::vector<std::string>>& text_rows, Format format) {
    if (format == Format::json) {
        Json obj = Json::object();
        for (const auto& [key, value] : meta) obj.add(key, value);
        Json rows = Json::array();
        for (const auto& row : json_rows) {
            Json item = Json::object();
            for (std::size_t i = 0; i < columns.size(); ++i) item.add(columns[i], row[i]);
            rows.push(std::move(item));
        }
        obj.add("rows", std::move(rows));
        return obj.dump();
    }
    if (format == Format::csv) {
        Csv csv(columns);
        for (const auto& row : text_rows) csv.add_row(row);
        return csv.str();
    }
    return render_table(columns, text_rows);
}

// ============================================================
// Subcommand runners
// ============================================================

long checked_grid_size(long grid_size) {
    if (grid_size < 2) throw rejected_input("--grid-size must be at least 2");
    return grid_size;
}

void run_approx_sqrt(int n, long grid_size, Format format, const std::string& output) {
    const Grid grid = Grid::uniform(0.0, 1.0, static_cast<std::size_t>(checked_grid_size(grid_size)));
    const auto cert = muntzkit::weierstrass::sqrt_error_certificate(n, grid);
    deliver(render_certificate(cert, std::nullopt, format), output);
}

void run_approx_abs(double a, int n, long grid_size, Format format, const std::string& output) {
    const muntzkit::weierstrass::AbsApproximant approx(a, n);
    const Grid grid = Grid::uniform(-a, a, static_cast<std::size_t>(checked_grid_size(grid_size)));
    const auto cert = approx.certificate(grid);
    deliver(render_certificate(cert, a, format), output);
}

void run_lattice(const std::string& f_text, const std::string& g_text, int n, long grid_size,
                 Format format, const std::string& output) {
    const GeneralizedPolynomial f = parse_poly(f_text);
    const GeneralizedPolynomial g = parse_poly(g_text);
    const Grid grid = Grid::uniform(0.0, 1.0, static_cast<std::size_t>(checked_grid_size(grid_size)));
    const auto pair = muntzkit::weierstrass::lattice_max_min(f, g, n, grid);

    double max_err = 0.0;
    double min_err = 0.0;
    for (double x : grid.points()) {
        const double fv = f.evaluate(x);
        const double gv = g.evaluate(x);
        max_err = std::max(max_err, std::fabs(pair.upper(x) - std::max(fv, gv)));
        min_err = std::max(min_err, std::fabs(pair.lower(x) - std::min(fv, gv)));
    }

    std::vector<std::pair<std::string, Json>> fields;
    fields.emplace_back("n", Json::integer(pair.n));
    fields.emplace_back("a", Json::number(pair.a));
    fields.emplace_back("analytic_bound", Json::number(pair.analytic_bound));
    fields.emplace_back("max_sup_error", Json::number(max_err));
    fields.emplace_back("min_sup_error", Json::number(min_err));

    std::vector<std::pair<std::string, std::string>> flat;
    flat.emplace_back("n", format_long(pair.n));
    flat.emplace_back("a", format_double(pair.a));
    flat.emplace_back("analytic_bound", format_double(pair.analytic_bound));
    flat.emplace_back("max_sup_error", format_double(max_err));
    flat.emplace_back("min_sup_error", format_double(min_err));
    deliver(render_scalar_report(fields, flat, format), output);
}

void reject_negative_exponents(double q, const std::vector<double>& lambdas, bool allow_negative) {
    if (allow_negative) return;
    if (q < 0.0) throw rejected_input("negative q rejected by default; pass --allow-negative");
    for (double lam : lambdas)
        if (lam < 0.0)
            throw rejected_input("negative exponents rejected by default; pass --allow-negative");
}

void run_dist_span(double q, const std::string& lambdas_text, bool allow_negative, Format format,
                   const std::string& output) {
    const std::vector<double> lambdas = parse_double_list(lambdas_text);
    reject_negative_exponents(q, lambdas, allow_negative);
    const auto report = muntzkit::gram::distance_to_span(q, lambdas);
    deliver(render_distance(report, format), output);
}

void run_dist_gram_oracle(const std::string& q_text, const std::string& lambdas_text,
                          bool allow_negative, Format format, const std::string& output) {
    const Rational q = rational_from_string(strip_spaces(q_text));
    const std::vector<Rational> lambdas = parse_rational_list(lambdas_text);
    std::vector<double> approx_lambdas;
    approx_lambdas.reserve(lambdas.size());
    for (const Rational& lam : lambdas) approx_lambdas.push_back(muntzkit::rational_to_double(lam));
    reject_negative_exponents(muntzkit::rational_to_double(q), approx_lambdas, allow_negative);

    const auto report = muntzkit::gram::distance_via_gram_ratio(q, lambdas);
    deliver(render_distance(report, format), output);
}

void run_dist_profile(double q, const std::string& seq_text, std::optional<long> start,
                      const std::string& tail, long n_max, Format format,
                      const std::string& output) {
    const ExponentSequence seq = make_exponent_sequence(parse_seq_spec(seq_text), start, tail);
    const auto rows = muntzkit::density::distance_profile(q, seq, n_max);

    std::vector<std::pair<std::string, Json>> meta;
    meta.emplace_back("q", Json::number(q));
    meta.emplace_back("sequence", Json::string(seq.describe()));
    std::vector<std::vector<Json>> json_rows;
    std::vector<std::vector<std::string>> text_rows;
    for (const auto& row : rows) {
        json_rows.push_back({Json::integer(row.n), Json::number(row.delta)});
        text_rows.push_back({format_long(row.n), format_double(row.delta)});
    }
    deliver(render_rows(meta, {"n", "delta"}, json_rows, text_rows, format), output);
}

void run_density_check(const std::string& seq_text, std::optional<long> start,
                       const std::string& tail, long n_max, Format format,
                       const std::string& output) {
    const ExponentSequence seq = make_exponent_sequence(parse_seq_spec(seq_text), start, tail);
    const auto verdict = muntzkit::density::density_check(seq, n_max);

    if (format == Format::csv) {
        Csv csv({"n", "lambda", "classical_sum", "full_sum"});
        for (const auto& row : verdict.evidence)
            csv.add_row({format_long(row.n), format_double(row.lambda),
                         format_double(row.classical_sum), format_double(row.full_sum)});
        deliver(csv.str(), output);
        return;
    }
    if (format == Format::json) {
        Json obj = Json::object();
        obj.add("sequence", verdict.sequence);
        obj.add("classical_condition", condition_class_name(verdict.classical_condition));
        obj.add("full_condition", condition_class_name(verdict.full_condition));
        obj.add("verdict", muntzkit::density::verdict_name(verdict.verdict));
        Json evidence = Json::array();
        for (const auto& row : verdict.evidence) {
            Json item = Json::object();
            item.add("n", Json::integer(row.n));
            item.add("lambda", row.lambda);
            item.add("classical_sum", row.classical_sum);
            item.add("full_sum", row.full_sum);
            evidence.push(std::move(item));
        }
        obj.add("evidence", std::move(evidence));
        deliver(obj.dump(), output);
        return;
    }
    std::string text = render_table(
        {"field", "value"},
        {{"sequence", verdict.sequence},
         {"classical_condition", condition_class_name(verdict.classical_condition)},
         {"full_condition", condition_class_name(verdict.full_condition)},
         {"verdict", muntzkit::density::verdict_name(verdict.verdict)}});
    text += "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : verdict.evidence)
        rows.push_back({format_long(row.n), format_double(row.lambda),
                        format_double(row.classical_sum), format_double(row.full_sum)});
    text += render_table({"n", "lambda", "classical_sum", "full_sum"}, rows);
    deliver(text, output);
}

void run_density_table(const std::string& seq_text, std::optional<long> start, long n_max,
                       Format format, const std::string& output) {
    const SeqSpec spec = parse_seq_spec(seq_text);
    const std::vector<double> values = make_table_values(spec, start, n_max);
    const auto rows = muntzkit::density::product_sum_table(values);

    std::vector<std::pair<std::string, Json>> meta;
    meta.emplace_back("sequence", Json::string(spec.text));
    std::vector<std::vector<Json>> json_rows;
    std::vector<std::vector<std::string>> text_rows;
    for (const auto& row : rows) {
        json_rows.push_back(
            {Json::integer(row.n), Json::number(row.product), Json::number(row.sum)});
        text_rows.push_back(
            {format_long(row.n), format_double(row.product), format_double(row.sum)});
    }
    deliver(render_rows(meta, {"n", "product", "sum"}, json_rows, text_rows, format), output);
}

void run_muntz_construct(double q, const std::string& lambdas_text, long grid_size, Format format,
                         const std::string& output) {
    const std::vector<double> lambdas = parse_double_list(lambdas_text);
    const auto approx = muntzkit::constructive::qn_coefficients(q, lambdas);
    const Grid grid = Grid::uniform(0.0, 1.0, static_cast<std::size_t>(checked_grid_size(grid_size)));
    double grid_sup = 0.0;
    for (double x : grid.points())
        grid_sup = std::max(grid_sup, std::fabs(approx.evaluate(x)));

    std::vector<std::pair<std::string, Json>> fields;
    fields.emplace_back("q", Json::number(approx.q));
    fields.emplace_back("lambdas", doubles_array(approx.exponents));
    fields.emplace_back("coefficients", doubles_array(approx.coefficients));
    fields.emplace_back("bound", Json::number(approx.bound));
    fields.emplace_back("grid_sup", Json::number(grid_sup));

    std::vector<std::pair<std::string, std::string>> flat;
    flat.emplace_back("q", format_double(approx.q));
    flat.emplace_back("lambdas", join_semicolons(approx.exponents));
    flat.emplace_back("coefficients", join_semicolons(approx.coefficients));
    flat.emplace_back("bound", format_double(approx.bound));
    flat.emplace_back("grid_sup", format_double(grid_sup));
    deliver(render_scalar_report(fields, flat, format), output);
}

void run_muntz_report(double q, const std::string& seq_text, std::optional<long> start,
                      const std::string& tail, long n_max, long grid_size, Format format,
                      const std::string& output) {
    const ExponentSequence seq = make_exponent_sequence(parse_seq_spec(seq_text), start, tail);
    const Grid grid = Grid::uniform(0.0, 1.0, static_cast<std::size_t>(checked_grid_size(grid_size)));
    const auto rows = muntzkit::constructive::qn_convergence_report(q, seq, n_max, grid);

    std::vector<std::pair<std::string, Json>> meta;
    meta.emplace_back("q", Json::number(q));
    meta.emplace_back("sequence", Json::string(seq.describe()));
    std::vector<std::vector<Json>> json_rows;
    std::vector<std::vector<std::string>> text_rows;
    for (const auto& row : rows) {
        json_rows.push_back(
            {Json::integer(row.n), Json::number(row.bound), Json::number(row.grid_sup)});
        text_rows.push_back(
            {format_long(row.n), format_double(row.bound), format_double(row.grid_sup)});
    }
    deliver(render_rows(meta, {"n", "bound", "grid_sup"}, json_rows, text_rows, format), output);
}

void run_primes_euler(long n, bool exact, Format format, const std::string& output) {
    if (format == Format::csv) {
        // CSV is the sweep table: one row per threshold from 2 to n.
        const auto reports = muntzkit::primes::euler_sweep(n, exact);
        Csv csv({"n", "harmonic", "product_plus", "product_minus", "basel"});
        for (const auto& r : reports)
            csv.add_row({format_long(r.n), format_double(r.harmonic),
                         format_double(r.product_plus), format_double(r.product_minus),
                         format_double(r.basel)});
        deliver(csv.str(), output);
        return;
    }

    const auto report = muntzkit::primes::euler_report(n, exact);
    std::vector<std::pair<std::string, Json>> fields;
    std::vector<std::pair<std::string, std::string>> flat;
    const std::string mode = report.exact_mode ? "exact" : "float";
    fields.emplace_back("n", Json::integer(report.n));
    fields.emplace_back("mode", Json::string(mode));
    fields.emplace_back("harmonic", Json::number(report.harmonic));
    fields.emplace_back("product_plus", Json::number(report.product_plus));
    fields.emplace_back("product_minus", Json::number(report.product_minus));
    fields.emplace_back("basel", Json::number(report.basel));
    fields.emplace_back("inequality_holds", Json::boolean(report.inequality_holds));
    flat.emplace_back("n", format_long(report.n));
    flat.emplace_back("mode", mode);
    flat.emplace_back("harmonic", format_double(report.harmonic));
    flat.emplace_back("product_plus", format_double(report.product_plus));
    flat.emplace_back("product_minus", format_double(report.product_minus));
    flat.emplace_back("basel", format_double(report.basel));
    flat.emplace_back("inequality_holds", report.inequality_holds ? "true" : "false");
    if (report.exact_mode) {
        fields.emplace_back("harmonic_exact", Json::string(rational_to_string(*report.harmonic_exact)));
        fields.emplace_back("product_plus_exact",
                            Json::string(rational_to_string(*report.product_plus_exact)));
        fields.emplace_back("product_minus_exact",
                            Json::string(rational_to_string(*report.product_minus_exact)));
        fields.emplace_back("basel_exact", Json::string(rational_to_string(*report.basel_exact)));
        flat.emplace_back("harmonic_exact", rational_to_string(*report.harmonic_exact));
        flat.emplace_back("product_plus_exact", rational_to_string(*report.product_plus_exact));
        flat.emplace_back("product_minus_exact", rational_to_string(*report.product_minus_exact));
        flat.emplace_back("basel_exact", rational_to_string(*report.basel_exact));
    }
    deliver(render_scalar_report(fields, flat, format), output);
}

void run_primes_span(double q, long n, Format format, const std::string& output) {
    const auto report = muntzkit::primes::prime_exponent_distance(q, n);
    deliver(render_distance(report, format), output);
}

void run_project(const std::string& moments_text, const std::string& lambdas_text,
                 std::optional<double> norm2, Format format, const std::string& output) {
    const std::vector<double> moments = parse_double_list(moments_text);
    const std::vector<double> lambdas = parse_double_list(lambdas_text);
    const auto result = muntzkit::gram::project_l2(moments, lambdas, norm2);

    // Coefficients aligned with the sorted exponent list (the fit's
    // canonical form drops exact zeros, so look each exponent up).
    std::vector<double> sorted = lambdas;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> coefficients(sorted.size(), 0.0);
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (const Term& term : result.fit.terms())
            if (term.lambda == sorted[i]) {
                coefficients[i] = term.c;
                break;
            }

    std::vector<std::pair<std::string, Json>> fields;
    fields.emplace_back("lambdas", doubles_array(sorted));
    fields.emplace_back("coefficients", doubles_array(coefficients));
    fields.emplace_back("residual2", result.residual_squared
                                         ? Json::number(*result.residual_squared)
                                         : Json::null());
    fields.emplace_back("condition_note", Json::string(format_condition(result.condition_estimate)));

    std::vector<std::pair<std::string, std::string>> flat;
    flat.emplace_back("lambdas", join_semicolons(sorted));
    flat.emplace_back("coefficients", join_semicolons(coefficients));
    flat.emplace_back("residual2",
                      result.residual_squared ? format_double(*result.residual_squared) : "");
    flat.emplace_back("condition_note", format_condition(result.condition_estimate));
    deliver(render_scalar_report(fields, flat, format), output);
}

// ============================================================
// Wiring
// ============================================================

struct CommonOpts {
    std::string format = "json";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format: json, csv, or table")
        ->capture_default_str();
    cmd->add_option("--output", opts.output,
                    "Write the report to this file instead of standard output; relative paths "
                    "go under $MUNTZKIT_OUTPUT_DIR when that is set");
}

constexpr const char* kSequenceHelp =
    "Sequence descriptor: 'i', 'a*i+b', 'i^k', 'primes', or '@file.csv' "
    "(CSV needs a header row; values in the first column)";

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified polynomial approximation, exact span distances, and density "
                 "diagnostics for monomial systems on [0,1]"};
    app.require_subcommand(1);

    // ---- approx ----
    auto* approx = app.add_subcommand("approx", "Certified square-root and absolute-value "
                                                "approximants");
    approx->require_subcommand(1);

    struct {
        int n = 1;
        long grid_size = 1001;
        CommonOpts common;
    } sqrt_opts;
    auto* approx_sqrt = approx->add_subcommand(
        "sqrt", "Iterate toward sqrt(t) on [0,1] and certify the error bound 2/n");
    approx_sqrt->add_option("--n", sqrt_opts.n, "Iteration count (>= 1)")->required();
    approx_sqrt->add_option("--grid-size", sqrt_opts.grid_size, "Certificate grid points")
        ->capture_default_str();
    add_common(approx_sqrt, sqrt_opts.common);
    approx_sqrt->callback([&] {
        run_approx_sqrt(sqrt_opts.n, sqrt_opts.grid_size, parse_format(sqrt_opts.common.format),
                        sqrt_opts.common.output);
    });

    struct {
        double a = 1.0;
        int n = 1;
        long grid_size = 1001;
        CommonOpts common;
    } abs_opts;
    auto* approx_abs = approx->add_subcommand(
        "abs", "Even polynomial approximant of |t| on [-a,a] with bound 2a/n");
    approx_abs->add_option("--a", abs_opts.a, "Half-width of the interval (> 0)")->required();
    approx_abs->add_option("--n", abs_opts.n, "Iteration count (>= 1)")->required();
    approx_abs->add_option("--grid-size", abs_opts.grid_size, "Certificate grid points")
        ->capture_default_str();
    add_common(approx_abs, abs_opts.common);
    approx_abs->callback([&] {
        run_approx_abs(abs_opts.a, abs_opts.n, abs_opts.grid_size,
                       parse_format(abs_opts.common.format), abs_opts.common.output);
    });

    // ---- lattice ----
    auto* lattice = app.add_subcommand("lattice", "Max/min approximants via the half-sum "
                                                  "absolute-value identity");
    lattice->require_subcommand(1);
    struct {
        std::string f, g;
        int n = 1;
        long grid_size = 1001;
        CommonOpts common;
    } lattice_opts;
    auto* lattice_maxmin = lattice->add_subcommand(
        "maxmin", "Approximate max{f,g} and min{f,g} for integer-exponent polynomials on [0,1]");
    lattice_maxmin->add_option("--f", lattice_opts.f, "First polynomial, 'c:lambda[,c:lambda...]'")
        ->required();
    lattice_maxmin->add_option("--g", lattice_opts.g, "Second polynomial, same format")->required();
    lattice_maxmin->add_option("--n", lattice_opts.n, "Iteration count (>= 1)")->required();
    lattice_maxmin->add_option("--grid-size", lattice_opts.grid_size, "Measurement grid points")
        ->capture_default_str();
    add_common(lattice_maxmin, lattice_opts.common);
    lattice_maxmin->callback([&] {
        run_lattice(lattice_opts.f, lattice_opts.g, lattice_opts.n, lattice_opts.grid_size,
                    parse_format(lattice_opts.common.format), lattice_opts.common.output);
    });

    // ---- dist ----
    auto* dist = app.add_subcommand("dist", "L2[0,1] distances from x^q to monomial spans");
    dist->require_subcommand(1);

    struct {
        double q = 0.0;
        std::string lambdas;
        bool allow_negative = false;
        CommonOpts common;
    } span_opts;
    auto* dist_span = dist->add_subcommand("span", "Closed-form distance to span{x^lambda_i}");
    dist_span->add_option("--q", span_opts.q, "Target exponent")->required();
    dist_span->add_option("--lambdas", span_opts.lambdas, "Comma-separated span exponents "
                                                          "(empty span not allowed here)")
        ->required();
    dist_span->add_flag("--allow-negative", span_opts.allow_negative,
                        "Permit exponents in (-1/2, 0), which are rejected by default");
    add_common(dist_span, span_opts.common);
    dist_span->callback([&] {
        run_dist_span(span_opts.q, span_opts.lambdas, span_opts.allow_negative,
                      parse_format(span_opts.common.format), span_opts.common.output);
    });

    struct {
        std::string q;
        std::string lambdas;
        bool allow_negative = false;
        CommonOpts common;
    } oracle_opts;
    auto* dist_oracle = dist->add_subcommand(
        "gram-oracle", "Exact rational distance via the determinant ratio (spans up to 7)");
    dist_oracle->add_option("--q", oracle_opts.q, "Target exponent as a rational, e.g. 3 or 5/2")
        ->required();
    dist_oracle->add_option("--lambdas", oracle_opts.lambdas,
                            "Comma-separated rational span exponents")
        ->required();
    dist_oracle->add_flag("--allow-negative", oracle_opts.allow_negative,
                          "Permit exponents in (-1/2, 0), which are rejected by default");
    add_common(dist_oracle, oracle_opts.common);
    dist_oracle->callback([&] {
        run_dist_gram_oracle(oracle_opts.q, oracle_opts.lambdas, oracle_opts.allow_negative,
                             parse_format(oracle_opts.common.format), oracle_opts.common.output);
    });

    struct {
        double q = 0.0;
        std::string sequence;
        std::string tail;
        long start = 0;
        long n_max = 0;
        CommonOpts common;
    } profile_opts;
    auto* dist_profile = dist->add_subcommand(
        "profile", "Distance decay d(x^q, span of the first n+1 exponents) for n = 0..n-max");
    dist_profile->add_option("--q", profile_opts.q, "Target exponent (> 0)")->required();
    dist_profile->add_option("--sequence", profile_opts.sequence, kSequenceHelp)->required();
    auto* profile_start =
        dist_profile->add_option("--start", profile_opts.start,
                                 "First index for symbolic families (default: 0 affine, 1 power)");
    dist_profile->add_option("--tail", profile_opts.tail,
                             "Symbolic tail family continuing an @file list");
    dist_profile->add_option("--n-max", profile_opts.n_max, "Last row index (>= 0)")->required();
    add_common(dist_profile, profile_opts.common);
    dist_profile->callback([&] {
        run_dist_profile(profile_opts.q, profile_opts.sequence,
                         profile_start->count() ? std::optional<long>(profile_opts.start)
                                                : std::nullopt,
                         profile_opts.tail, profile_opts.n_max,
                         parse_format(profile_opts.common.format), profile_opts.common.output);
    });

    // ---- density ----
    auto* density = app.add_subcommand("density", "Density verdicts and the product/series table");
    density->require_subcommand(1);

    struct {
        std::string sequence;
        std::string tail;
        long start = 0;
        long n_max = 20;
        CommonOpts common;
    } check_opts;
    auto* density_check = density->add_subcommand(
        "check", "Decide density of span{x^lambda_i} in C[0,1] for a sequence family");
    density_check->add_option("--sequence", check_opts.sequence, kSequenceHelp)->required();
    auto* check_start =
        density_check->add_option("--start", check_opts.start,
                                  "First index for symbolic families (default: 0 affine, 1 power)");
    density_check->add_option("--tail", check_opts.tail,
                              "Symbolic tail family continuing an @file list");
    density_check->add_option("--n-max", check_opts.n_max, "Evidence rows to report")
        ->capture_default_str();
    add_common(density_check, check_opts.common);
    density_check->callback([&] {
        run_density_check(check_opts.sequence,
                          check_start->count() ? std::optional<long>(check_opts.start)
                                               : std::nullopt,
                          check_opts.tail, check_opts.n_max,
                          parse_format(check_opts.common.format), check_opts.common.output);
    });

    struct {
        std::string sequence;
        long start = 0;
        long n_max = 0;
        CommonOpts common;
    } table_opts;
    auto* density_table = density->add_subcommand(
        "table", "Partial products prod(1 - 1/a_i) against partial sums sum 1/a_i");
    density_table->add_option("--sequence", table_opts.sequence,
                              "Term descriptor: a constant, 'a*i+b', 'i^k', 'primes', or "
                              "'@file.csv'; every term must exceed 1")
        ->required();
    auto* table_start = density_table->add_option(
        "--start", table_opts.start, "First index for symbolic families (default 1)");
    density_table->add_option("--n-max", table_opts.n_max, "Number of rows (>= 1)")->required();
    add_common(density_table, table_opts.common);
    density_table->callback([&] {
        run_density_table(table_opts.sequence,
                          table_start->count() ? std::optional<long>(table_opts.start)
                                               : std::nullopt,
                          table_opts.n_max, parse_format(table_opts.common.format),
                          table_opts.common.output);
    });

    // ---- muntz ----
    auto* muntz = app.add_subcommand("muntz", "Explicit span approximants of x^q with certified "
                                              "sup bounds");
    muntz->require_subcommand(1);

    struct {
        double q = 0.0;
        std::string lambdas;
        long grid_size = 1001;
        CommonOpts common;
    } construct_opts;
    auto* muntz_construct = muntz->add_subcommand(
        "construct", "Coefficients and bound of the residual Q_n for explicit exponents");
    muntz_construct->add_option("--q", construct_opts.q, "Target exponent (> 0)")->required();
    muntz_construct
        ->add_option("--lambdas", construct_opts.lambdas,
                     "Comma-separated exponents, positive, strictly increasing, none equal to q")
        ->required();
    muntz_construct->add_option("--grid-size", construct_opts.grid_size, "Sup-estimate grid points")
        ->capture_default_str();
    add_common(muntz_construct, construct_opts.common);
    muntz_construct->callback([&] {
        run_muntz_construct(construct_opts.q, construct_opts.lambdas, construct_opts.grid_size,
                            parse_format(construct_opts.common.format),
                            construct_opts.common.output);
    });

    struct {
        double q = 0.0;
        std::string sequence;
        std::string tail;
        long start = 0;
        long n_max = 0;
        long grid_size = 1001;
        CommonOpts common;
    } report_opts;
    auto* muntz_report = muntz->add_subcommand(
        "report", "Level-by-level bound and measured sup of the residual sequence");
    muntz_report->add_option("--q", report_opts.q, "Target exponent (> 0)")->required();
    muntz_report->add_option("--sequence", report_opts.sequence, kSequenceHelp)->required();
    auto* report_start =
        muntz_report->add_option("--start", report_opts.start,
                                 "First index for symbolic families (default: 0 affine, 1 power)");
    muntz_report->add_option("--tail", report_opts.tail,
                             "Symbolic tail family continuing an @file list");
    muntz_report->add_option("--n-max", report_opts.n_max, "Last level (>= 0)")->required();
    muntz_report->add_option("--grid-size", report_opts.grid_size, "Sup-estimate grid points")
        ->capture_default_str();
    add_common(muntz_report, report_opts.common);
    muntz_report->callback([&] {
        run_muntz_report(report_opts.q, report_opts.sequence,
                         report_start->count() ? std::optional<long>(report_opts.start)
                                               : std::nullopt,
                         report_opts.tail, report_opts.n_max, report_opts.grid_size,
                         parse_format(report_opts.common.format), report_opts.common.output);
    });

    // ---- primes ----
    auto* primes = app.add_subcommand("primes", "Prime-reciprocal diagnostics and prime-exponent "
                                                "span distances");
    primes->require_subcommand(1);

    struct {
        long n = 0;
        bool exact = false;
        CommonOpts common;
    } euler_opts;
    auto* primes_euler = primes->add_subcommand(
        "euler", "Harmonic sum, prime products, square sum, and the trapping inequality; "
                 "csv format emits the full sweep 2..n");
    primes_euler->add_option("--n", euler_opts.n, "Threshold (>= 2)")->required();
    primes_euler->add_flag("--exact", euler_opts.exact,
                           "Exact rational arithmetic (guarded at n <= 1000)");
    add_common(primes_euler, euler_opts.common);
    primes_euler->callback([&] {
        run_primes_euler(euler_opts.n, euler_opts.exact, parse_format(euler_opts.common.format),
                         euler_opts.common.output);
    });

    struct {
        double q = 0.0;
        long n = 0;
        CommonOpts common;
    } pspan_opts;
    auto* primes_span = primes->add_subcommand(
        "span", "Distance from x^q to span{1, x^p : p prime <= n}");
    primes_span->add_option("--q", pspan_opts.q, "Target exponent (> 0, not a prime)")->required();
    primes_span->add_option("--n", pspan_opts.n, "Prime threshold")->required();
    add_common(primes_span, pspan_opts.common);
    primes_span->callback([&] {
        run_primes_span(pspan_opts.q, pspan_opts.n, parse_format(pspan_opts.common.format),
                        pspan_opts.common.output);
    });

    // ---- project ----
    struct {
        std::string moments;
        std::string lambdas;
        double norm2 = 0.0;
        CommonOpts common;
    } project_opts;
    auto* project = app.add_subcommand(
        "project", "L2 projection onto a monomial span from caller-supplied moments");
    project->add_option("--moments", project_opts.moments,
                        "Comma-separated target moments <g, x^lambda_i>")
        ->required();
    project->add_option("--lambdas", project_opts.lambdas, "Comma-separated span exponents")
        ->required();
    auto* norm_opt = project->add_option("--norm2", project_opts.norm2,
                                         "<g,g>, enabling the residual^2 field");
    add_common(project, project_opts.common);
    project->callback([&] {
        run_project(project_opts.moments, project_opts.lambdas,
                    norm_opt->count() ? std::optional<double>(project_opts.norm2) : std::nullopt,
                    parse_format(project_opts.common.format), project_opts.common.output);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return 2;
    } catch (const muntzkit::rejected_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const muntzkit::evaluation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const muntzkit::certificate_failure& e) {
        std::cerr << "certificate failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
