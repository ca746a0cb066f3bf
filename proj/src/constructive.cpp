#include "muntzkit/constructive.hpp"

#include <algorithm>
#include <cmath>

#include "muntzkit/errors.hpp"
#include "muntzkit/report_io.hpp"

namespace muntzkit::constructive {

namespace {

void validate_target(double q) {
    if (!(q > 0.0) || !std::isfinite(q)) throw rejected_input("q must be positive and finite");
}

void validate_exponents(double q, const std::vector<double>& exponents) {
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        const double lam = exponents[i];
        if (!(lam > 0.0) || !std::isfinite(lam))
            throw rejected_input("exponent " + format_long(static_cast<long>(i)) +
                                 " must be positive and finite");
        if (lam == q)
            throw rejected_input("exponent " + format_double(lam) +
                                 " equals q; the recursion divides by lambda - q");
        if (i > 0 && !(exponents[i - 1] < lam))
            throw rejected_input("exponents must be strictly increasing");
    }
}

// Extends the coefficient vector by one exponent: every earlier a_i is
// rescaled by (lambda - q)/(lambda - lambda_i), and the new coefficient
// tops the total back up to 1 (the residual vanishes at x = 1).
void extend_coefficients(std::vector<long double>& a, double q,
                         const std::vector<double>& exponents, std::size_t k) {
    const long double lam = exponents[k];
    long double total = 0.0L;
    for (std::size_t i = 0; i < k; ++i) {
        a[i] *= (lam - q) / (lam - exponents[i]);
        total += a[i];
    }
    a.push_back(1.0L - total);
}

} // namespace

// ============================================================
// MuntzApproximant
// ============================================================

double MuntzApproximant::evaluate(double x) const {
    if (!(x >= 0.0 && x <= 1.0) || !std::isfinite(x))
        throw rejected_input("evaluation point must lie in [0, 1]");
    long double acc = std::pow(static_cast<long double>(x), static_cast<long double>(q));
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        acc -= static_cast<long double>(coefficients[i]) *
               std::pow(static_cast<long double>(x), static_cast<long double>(exponents[i]));
    return static_cast<double>(acc);
}

GeneralizedPolynomial MuntzApproximant::to_polynomial() const {
    std::vector<Term> terms;
    terms.reserve(coefficients.size() + 1);
    terms.push_back({1.0, q});
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        terms.push_back({-coefficients[i], exponents[i]});
    return GeneralizedPolynomial(std::move(terms), {0.0, 1.0});
}

// ============================================================
// Coefficient recurrence
// ============================================================

MuntzApproximant qn_coefficients(double q, const std::vector<double>& exponents) {
    validate_target(q);
    validate_exponents(q, exponents);

    std::vector<long double> a;
    a.reserve(exponents.size());
    long double bound = 1.0L;
    for (std::size_t k = 0; k < exponents.size(); ++k) {
        extend_coefficients(a, q, exponents, k);
        bound *= std::fabs(1.0L - q / exponents[k]);
    }

    MuntzApproximant out;
    out.q = q;
    out.exponents = exponents;
    out.coefficients.reserve(a.size());
    for (long double v : a) out.coefficients.push_back(static_cast<double>(v));
    out.bound = static_cast<double>(bound);
    return out;
}

// ============================================================
// Integral-recursion oracle
// ============================================================

QnOracle::QnOracle(double q, std::vector<double> exponents, double x_min, int grid_points)
    : q_(q), lambdas_(std::move(exponents)) {
    validate_target(q);
    validate_exponents(q, lambdas_);
    if (!(x_min > 0.0 && x_min < 1.0)) throw rejected_input("x_min must lie in (0, 1)");
    if (grid_points < 16) throw rejected_input("oracle memo grid needs at least 16 points");

    // Nodes uniform in log x: an exponential sum has bounded derivatives of
    // every order in u = log x, so quintic interpolation converges cleanly.
    const std::size_t m = static_cast<std::size_t>(grid_points);
    const double u_lo = std::log(x_min);
    grid_.resize(m);
    for (std::size_t j = 0; j < m; ++j)
        grid_[j] = u_lo * (1.0 - static_cast<double>(j) / (m - 1));
    grid_.back() = 0.0;

    previous_.resize(m);
    for (std::size_t j = 0; j < m; ++j) previous_[j] = std::exp(q_ * grid_[j]); // Q_0 = x^q

    if (lambdas_.empty()) return;

    std::vector<double> tails(m, 0.0);
    for (std::size_t level = 1; level <= lambdas_.size(); ++level) {
        const double lam = lambdas_[level - 1];
        tails[m - 1] = 0.0;
        for (std::size_t j = m - 1; j-- > 0;) {
            const int stencil = static_cast<int>(std::clamp<long>(static_cast<long>(j) - 2, 0,
                                                                  static_cast<long>(m) - 6));
            tails[j] = tails[j + 1] + panel_integral(grid_[j], grid_[j + 1], stencil, lam);
        }
        if (level < lambdas_.size()) {
            for (std::size_t j = 0; j < m; ++j)
                previous_[j] = (lam - q_) * std::exp(lam * grid_[j]) * tails[j];
        } else {
            tails_ = tails; // previous_ still holds the level below the last
        }
    }
}

// Quintic Lagrange interpolation of the memoized level at u, using the six
// nodes starting at stencil_left.
double QnOracle::interpolate_previous(double u, int stencil_left) const {
    double result = 0.0;
    for (int a = 0; a < 6; ++a) {
        double basis = 1.0;
        for (int b = 0; b < 6; ++b) {
            if (b == a) continue;
            basis *= (u - grid_[stencil_left + b]) /
                     (grid_[stencil_left + a] - grid_[stencil_left + b]);
        }
        result += basis * previous_[stencil_left + a];
    }
    return result;
}

// integral over [u_lo, u_hi] of Q_prev(e^u) * e^{-lambda u} du, which is the
// tail integrand after substituting t = e^u.
double QnOracle::panel_integral(double lo, double hi, int stencil_left,
                                double weight_exponent) const {
    if (!(hi > lo)) return 0.0;
    const GaussLegendreTable& table = gauss_legendre_table(12);
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    long double acc = 0.0L;
    for (std::size_t k = 0; k < table.nodes.size(); ++k) {
        const double u = center + half * table.nodes[k];
        acc += static_cast<long double>(table.weights[k]) * interpolate_previous(u, stencil_left) *
               std::exp(-weight_exponent * u);
    }
    return static_cast<double>(half * acc);
}

double QnOracle::operator()(double x) const {
    if (lambdas_.empty()) {
        if (!(x >= 0.0 && x <= 1.0)) throw rejected_input("evaluation point must lie in [0, 1]");
        return std::pow(x, q_);
    }
    const double lo = std::exp(grid_.front());
    if (!(x >= lo && x <= 1.0))
        throw rejected_input("oracle evaluation point must lie in [" + format_double(lo) +
                             ", 1]; the memo grid does not reach further down");
    const double u = std::min(std::log(x), 0.0);
    const std::size_t m = grid_.size();

    // Panel containing u.
    std::size_t j = static_cast<std::size_t>(
        std::upper_bound(grid_.begin(), grid_.end(), u) - grid_.begin());
    if (j == 0) j = 1;
    if (j >= m) j = m - 1;
    const std::size_t left = j - 1;

    const double lam = lambdas_.back();
    const int stencil = static_cast<int>(std::clamp<long>(static_cast<long>(left) - 2, 0,
                                                          static_cast<long>(m) - 6));
    const double tail = tails_[j] + panel_integral(u, grid_[j], stencil, lam);
    return (lam - q_) * std::exp(lam * u) * tail;
}

double qn_oracle(double q, const std::vector<double>& exponents, double x) {
    return QnOracle(q, exponents)(x);
}

// ============================================================
// Convergence table
// ============================================================

std::vector<ConvergenceRow> qn_convergence_report(double q, const ExponentSequence& seq,
                                                  long n_max, const Grid& g) {
    validate_target(q);
    if (n_max < 0) throw rejected_input("n_max must be nonnegative");
    if (!(g.front() >= 0.0 && g.back() <= 1.0))
        throw rejected_input("grid must lie inside [0, 1]");

    std::vector<double> vals;
    if (n_max >= 1) vals = seq.values(n_max - 1);
    for (double lam : vals)
        if (!(lam > 0.0))
            throw rejected_input("sequence must be strictly positive here (a leading zero "
                                 "exponent cannot enter the recursion)");
    validate_exponents(q, vals);

    const std::vector<double>& points = g.points();
    std::vector<double> target_pow(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) target_pow[j] = std::pow(points[j], q);

    std::vector<ConvergenceRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max) + 1);

    double sup0 = 0.0;
    for (double v : target_pow) sup0 = std::max(sup0, std::fabs(v));
    rows.push_back({0, 1.0, sup0});

    std::vector<long double> a;
    std::vector<std::vector<double>> columns; // columns[i][j] = points[j]^{lambda_i}
    long double bound = 1.0L;
    for (long n = 1; n <= n_max; ++n) {
        const std::size_t k = static_cast<std::size_t>(n - 1);
        extend_coefficients(a, q, vals, k);
        bound *= std::fabs(1.0L - q / vals[k]);

        columns.emplace_back(points.size());
        for (std::size_t j = 0; j < points.size(); ++j)
            columns.back()[j] = std::pow(points[j], vals[k]);

        double sup = 0.0;
        for (std::size_t j = 0; j < points.size(); ++j) {
            long double value = target_pow[j];
            for (std::size_t i = 0; i <= k; ++i) value -= a[i] * columns[i][j];
            sup = std::max(sup, static_cast<double>(std::fabs(value)));
        }

        const double bound_d = static_cast<double>(bound);
        if (sup > bound_d + 1e-9)
            throw certificate_failure("residual bound violated at level " + format_long(n) +
                                      ": grid sup " + format_double(sup) + " exceeds " +
                                      format_double(bound_d));
        rows.push_back({n, bound_d, sup});
    }
    return rows;
}

} // namespace muntzkit::constructive
