#include "muntzkit/gram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <sstream>

#include "muntzkit/errors.hpp"
#include "muntzkit/report_io.hpp"

namespace muntzkit::gram {

namespace {

constexpr std::size_t kBruteForceLimit = 8;
constexpr std::size_t kLogSpaceThreshold = 30;
constexpr std::size_t kConditionNoteLimit = 32;
constexpr double kConditionLimit = 1e14;

void validate_exponent(double lambda) {
    if (!std::isfinite(lambda) || lambda <= -0.5)
        throw rejected_input("exponents must be finite and exceed -1/2");
}

void validate_distinct(const std::vector<double>& exponents) {
    std::vector<double> sorted = exponents;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw rejected_input("exponents must be pairwise distinct");
}

// Sorts values ascending and reports the parity sign of the permutation.
int sort_with_parity(std::vector<double>& v) {
    int sign = 1;
    // Insertion sort; inputs are small and each adjacent swap flips parity.
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = i; j > 0 && v[j] < v[j - 1]; --j) {
            std::swap(v[j], v[j - 1]);
            sign = -sign;
        }
    return sign;
}

// Dense LU solve with partial pivoting; returns false on exact singularity.
bool lu_solve(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double>& x) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(a[i][k]) > std::fabs(a[pivot][k])) pivot = i;
        if (a[pivot][k] == 0.0) return false;
        std::swap(a[pivot], a[k]);
        std::swap(b[pivot], b[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = a[i][k] / a[k][k];
            a[i][k] = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= m * a[k][j];
            b[i] -= m * b[k];
        }
    }
    x.assign(n, 0.0);
    for (std::size_t ii = n; ii-- > 0;) {
        double acc = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) acc -= a[ii][j] * x[j];
        x[ii] = acc / a[ii][ii];
    }
    return true;
}

double matrix_norm1(const std::vector<std::vector<double>>& a) {
    double best = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) col += std::fabs(a[i][j]);
        best = std::max(best, col);
    }
    return best;
}

// 1-norm condition estimate via the explicit inverse (column solves);
// returns +inf when the matrix is numerically singular.
double condition_estimate_1norm(const std::vector<std::vector<double>>& a) {
    const std::size_t n = a.size();
    double inv_norm = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> e(n, 0.0), x;
        e[j] = 1.0;
        if (!lu_solve(a, e, x)) return std::numeric_limits<double>::infinity();
        double col = 0.0;
        for (double v : x) col += std::fabs(v);
        inv_norm = std::max(inv_norm, col);
    }
    return matrix_norm1(a) * inv_norm;
}

// Determinant of a rational matrix: clear each row's denominators, run
// integer fraction-free (Bareiss) elimination, then divide the scaling back
// out.  Exact at every step.
Rational rational_determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    mpz_class scale(1);
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class row_lcm(1);
        for (std::size_t j = 0; j < n; ++j) {
            mpz_class den = m[i][j].get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), row_lcm.get_mpz_t(), den.get_mpz_t());
            row_lcm = row_lcm / g * den;
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Rational scaled = m[i][j] * Rational(row_lcm);
            a[i][j] = scaled.get_num(); // denominator is 1 after scaling
        }
        scale *= row_lcm;
    }

    int sign = 1;
    mpz_class prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { pivot = i; break; }
            if (a[pivot][k] == 0) return Rational(0);
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rational det(a[n - 1][n - 1] * sign, scale);
    det.canonicalize();
    return det;
}

std::vector<std::vector<Rational>> rational_gram_matrix(const std::vector<Rational>& exponents) {
    const Rational minus_half(-1, 2);
    for (const Rational& lam : exponents)
        if (lam <= minus_half) throw rejected_input("exponents must exceed -1/2");
    const std::size_t n = exponents.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational entry(1);
            entry /= exponents[i] + exponents[j] + 1;
            m[i][j] = entry;
        }
    return m;
}

std::string gram_condition_note(const std::vector<double>& sorted_exponents) {
    if (sorted_exponents.empty()) return "empty span";
    if (sorted_exponents.size() > kConditionNoteLimit)
        return "condition estimate skipped (span larger than " +
               format_long(static_cast<long>(kConditionNoteLimit)) + ")";
    const GramMatrix g(sorted_exponents);
    const double kappa = condition_estimate_1norm(g.dense());
    if (!std::isfinite(kappa)) return "gram matrix numerically singular";
    std::ostringstream os;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", kappa);
    os << "gram condition estimate " << buf << " (1-norm)";
    return os.str();
}

} // namespace

// ============================================================
// GramMatrix and inner products
// ============================================================

GramMatrix::GramMatrix(std::vector<double> exps) : exponents(std::move(exps)) {
    for (double lam : exponents) validate_exponent(lam);
}

double GramMatrix::entry(std::size_t i, std::size_t j) const {
    return 1.0 / (exponents.at(i) + exponents.at(j) + 1.0);
}

std::vector<std::vector<double>> GramMatrix::dense() const {
    std::vector<std::vector<double>> m(size(), std::vector<double>(size()));
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) m[i][j] = entry(i, j);
    return m;
}

double l2_inner_product(const GeneralizedPolynomial& p, const GeneralizedPolynomial& q) {
    long double acc = 0.0L;
    for (const Term& a : p.terms())
        for (const Term& b : q.terms())
            acc += static_cast<long double>(a.c) * b.c / (a.lambda + b.lambda + 1.0);
    return static_cast<double>(acc);
}

double l2_norm(const GeneralizedPolynomial& p) {
    return std::sqrt(std::max(0.0, l2_inner_product(p, p)));
}

// ============================================================
// Cauchy determinant
// ============================================================

SignedLogValue cauchy_log_determinant(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw rejected_input("x and y must have equal length");
    if (x.empty()) throw rejected_input("cauchy determinant needs at least one entry");
    for (double v : x)
        if (!std::isfinite(v)) throw rejected_input("cauchy entries must be finite");
    for (double v : y)
        if (!std::isfinite(v)) throw rejected_input("cauchy entries must be finite");

    std::vector<double> xs = x, ys = y;
    int sign = sort_with_parity(xs) * sort_with_parity(ys);
    const std::size_t n = xs.size();

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (xs[i] + ys[j] == 0.0)
                throw rejected_input("cauchy matrix has a pole: x + y = 0 at some pair");

    SignedLogValue out;
    long double log_acc = 0.0L;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double fx = xs[j] - xs[i]; // >= 0 after sorting
            const double fy = ys[j] - ys[i];
            if (fx == 0.0 || fy == 0.0) return out; // sign 0: determinant vanishes
            log_acc += std::log(static_cast<long double>(fx)) + std::log(static_cast<long double>(fy));
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double s = xs[i] + ys[j];
            if (s < 0.0) sign = -sign;
            log_acc -= std::log(std::fabs(static_cast<long double>(s)));
        }
    out.sign = sign;
    out.log_abs = static_cast<double>(log_acc);
    return out;
}

double cauchy_determinant(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw rejected_input("x and y must have equal length");
    if (x.size() > kLogSpaceThreshold) {
        const SignedLogValue v = cauchy_log_determinant(x, y);
        return v.sign * std::exp(v.log_abs);
    }

    if (x.empty()) throw rejected_input("cauchy determinant needs at least one entry");
    for (double v : x)
        if (!std::isfinite(v)) throw rejected_input("cauchy entries must be finite");
    for (double v : y)
        if (!std::isfinite(v)) throw rejected_input("cauchy entries must be finite");

    std::vector<double> xs = x, ys = y;
    int sign = sort_with_parity(xs) * sort_with_parity(ys);
    const std::size_t n = xs.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (xs[i] + ys[j] == 0.0)
                throw rejected_input("cauchy matrix has a pole: x + y = 0 at some pair");

    long double num = 1.0L;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            num *= static_cast<long double>(xs[j] - xs[i]) * (ys[j] - ys[i]);
    long double den = 1.0L;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) den *= xs[i] + ys[j];
    return static_cast<double>(sign * num / den);
}

Rational gram_determinant_bruteforce(const std::vector<Rational>& exponents) {
    if (exponents.size() > kBruteForceLimit)
        throw rejected_input("exact determinant limited to " + format_long(kBruteForceLimit) +
                             " exponents");
    if (exponents.empty()) throw rejected_input("exact determinant needs at least one exponent");
    return rational_determinant(rational_gram_matrix(exponents));
}

// ============================================================
// Distances
// ============================================================

DistanceReport distance_to_span(double q, const std::vector<double>& exponents) {
    validate_exponent(q);
    for (double lam : exponents) validate_exponent(lam);
    validate_distinct(exponents);

    std::vector<double> sorted = exponents;
    std::sort(sorted.begin(), sorted.end());

    long double delta = 1.0L / std::sqrt(2.0L * q + 1.0L);
    for (double lam : sorted) delta *= std::fabs(static_cast<long double>(q) - lam) / (q + lam + 1.0);

    DistanceReport report;
    report.q = q;
    report.exponents = sorted;
    report.delta = static_cast<double>(delta);
    report.method = "closed-form";
    report.condition_note = gram_condition_note(sorted);
    return report;
}

Rational distance_squared_gram_ratio(const Rational& q, const std::vector<Rational>& exponents) {
    if (exponents.size() + 1 > kBruteForceLimit)
        throw rejected_input("exact route limited to " + format_long(kBruteForceLimit - 1) +
                             " span exponents");
    std::vector<Rational> with_target = exponents;
    with_target.push_back(q);
    const Rational numerator = rational_determinant(rational_gram_matrix(with_target));
    Rational denominator(1);
    if (!exponents.empty()) denominator = rational_determinant(rational_gram_matrix(exponents));
    if (denominator == 0) throw rejected_input("span Gram determinant vanished (repeated exponents?)");
    Rational ratio = numerator / denominator;
    ratio.canonicalize();
    return ratio;
}

DistanceReport distance_via_gram_ratio(const Rational& q, const std::vector<Rational>& exponents) {
    const Rational delta_sq = distance_squared_gram_ratio(q, exponents);
    DistanceReport report;
    report.q = rational_to_double(q);
    report.exponents.reserve(exponents.size());
    for (const Rational& lam : exponents) report.exponents.push_back(rational_to_double(lam));
    std::sort(report.exponents.begin(), report.exponents.end());
    report.delta = std::sqrt(std::max(0.0, rational_to_double(delta_sq)));
    report.method = "brute-force-rational";
    report.condition_note = "exact rational determinant ratio";
    return report;
}

// ============================================================
// Projection
// ============================================================

ProjectionResult project_l2(const std::vector<double>& target_moments,
                            const std::vector<double>& exponents,
                            std::optional<double> target_norm_squared) {
    if (target_moments.size() != exponents.size())
        throw rejected_input("one moment per exponent is required");
    if (exponents.empty()) throw rejected_input("projection span must be nonempty");
    for (double lam : exponents) validate_exponent(lam);
    validate_distinct(exponents);
    for (double m : target_moments)
        if (!std::isfinite(m)) throw rejected_input("target moments must be finite");

    const GramMatrix g(exponents);
    const auto dense = g.dense();
    const double kappa = condition_estimate_1norm(dense);
    if (!(kappa < kConditionLimit)) {
        // Name the most suspicious pair: the two closest exponents.
        std::vector<double> sorted = exponents;
        std::sort(sorted.begin(), sorted.end());
        std::size_t arg = 0;
        double best_gap = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
            if (sorted[i + 1] - sorted[i] < best_gap) {
                best_gap = sorted[i + 1] - sorted[i];
                arg = i;
            }
        std::string pair = sorted.size() > 1
                               ? " (closest exponents " + format_double(sorted[arg]) + " and " +
                                     format_double(sorted[arg + 1]) + ")"
                               : "";
        throw ill_conditioned("gram system condition estimate exceeds 1e14; refusing to solve" + pair);
    }

    std::vector<double> coeffs;
    if (!lu_solve(dense, target_moments, coeffs))
        throw ill_conditioned("gram system is numerically singular");

    std::vector<Term> terms;
    terms.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) terms.push_back({coeffs[i], exponents[i]});

    ProjectionResult out{GeneralizedPolynomial(std::move(terms), {0.0, 1.0}), std::nullopt, kappa};
    if (target_norm_squared) {
        long double dot = 0.0L;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            dot += static_cast<long double>(coeffs[i]) * target_moments[i];
        out.residual_squared = static_cast<double>(*target_norm_squared - dot);
    }
    return out;
}

} // namespace muntzkit::gram
