#include "muntzkit/weierstrass.hpp"

#include <cmath>

#include "muntzkit/errors.hpp"
#include "muntzkit/report_io.hpp"

namespace muntzkit::weierstrass {

namespace {

constexpr double kBoundarySlack = 1e-12;

double run_recursion(int n, double t) {
    double p = 0.0;
    for (int k = 0; k < n; ++k) p += 0.5 * (t - p * p);
    return p;
}

// Numeric slack for pointwise certificate checks: each recursion step can
// contribute a few ulps, so the allowance scales with n.
double pointwise_slack(int n) { return 1e-12 * std::max(1, n); }

} // namespace

// ============================================================
// SqrtIterate
// ============================================================

SqrtIterate::SqrtIterate(int n) : n_(n) {
    if (n < 0) throw rejected_input("iteration level must be >= 0");
    if (n == 0 || n > coefficient_cutoff) return;
    RationalPoly p; // p_0 = 0
    const RationalPoly t = RationalPoly::monomial(Rational(1), 1);
    const Rational half(1, 2);
    for (int k = 0; k < n; ++k) p = p + (t - p * p).scaled(half);
    exact_coefficients_ = p.coefficients();
}

double SqrtIterate::operator()(double t) const {
    if (!std::isfinite(t) || t < -kBoundarySlack || t > 1.0 + kBoundarySlack)
        throw rejected_input("sqrt iterate expects t in [0, 1]");
    t = std::min(std::max(t, 0.0), 1.0);
    return run_recursion(n_, t);
}

const std::vector<Rational>& SqrtIterate::exact_coefficients() const {
    if (n_ > coefficient_cutoff)
        throw rejected_input("coefficients are not materialized above level " +
                             format_long(coefficient_cutoff));
    return exact_coefficients_;
}

GeneralizedPolynomial SqrtIterate::to_polynomial() const {
    const std::vector<Rational>& coeffs = exact_coefficients();
    std::vector<Term> terms;
    terms.reserve(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        terms.push_back({rational_to_double(coeffs[k]), static_cast<double>(k)});
    return GeneralizedPolynomial(std::move(terms), {0.0, 1.0});
}

ErrorCertificate sqrt_error_certificate(int n, const Grid& grid) {
    if (n < 1) throw rejected_input("certificate needs n >= 1");
    if (grid.front() < 0.0 || grid.back() > 1.0)
        throw rejected_input("certificate grid must lie in [0, 1]");
    ErrorCertificate cert;
    cert.n = n;
    cert.analytic_bound = 2.0 / n;
    cert.grid = grid.points();
    const double slack = pointwise_slack(n);
    for (double t : grid.points()) {
        const double s = std::sqrt(t);
        const double err = s - run_recursion(n, t);
        const double envelope = 2.0 * s / (2.0 + n * s);
        if (err < -slack || err > envelope + slack) cert.violations.push_back(t);
        cert.grid_estimate = std::max(cert.grid_estimate, err);
    }
    if (!cert.violations.empty())
        throw certificate_failure("sqrt iterate violated its pointwise envelope at " +
                                  format_long(static_cast<long>(cert.violations.size())) +
                                  " grid point(s), first at t = " + format_double(cert.violations.front()));
    return cert;
}

// ============================================================
// AbsApproximant
// ============================================================

AbsApproximant::AbsApproximant(double a, int n) : a_(a), n_(n) {
    if (!std::isfinite(a) || a <= 0.0) throw rejected_input("half-width a must be positive");
    if (n < 1) throw rejected_input("approximation level must be >= 1");
}

double AbsApproximant::operator()(double t) const {
    if (!std::isfinite(t)) throw rejected_input("evaluation point must be finite");
    const double u = (t / a_) * (t / a_);
    return a_ * run_recursion(n_, std::min(u, 1.0));
}

ErrorCertificate AbsApproximant::certificate(const Grid& grid) const {
    if (grid.front() < -a_ || grid.back() > a_)
        throw rejected_input("certificate grid must lie in [-a, a]");
    ErrorCertificate cert;
    cert.n = n_;
    cert.analytic_bound = analytic_bound();
    cert.grid = grid.points();
    const double slack = pointwise_slack(n_) * std::max(a_, 1.0);
    for (double t : grid.points()) {
        const double err = std::fabs(std::fabs(t) - (*this)(t));
        if (err > cert.analytic_bound + slack) cert.violations.push_back(t);
        cert.grid_estimate = std::max(cert.grid_estimate, err);
    }
    if (!cert.violations.empty())
        throw certificate_failure("absolute-value approximant exceeded its bound at " +
                                  format_long(static_cast<long>(cert.violations.size())) +
                                  " grid point(s), first at t = " + format_double(cert.violations.front()));
    return cert;
}

// ============================================================
// lattice_max_min
// ============================================================

LatticePair lattice_max_min(const GeneralizedPolynomial& f, const GeneralizedPolynomial& g,
                            int n, const Grid& grid) {
    if (n < 1) throw rejected_input("approximation level must be >= 1");
    for (const auto* p : {&f, &g})
        for (const Term& t : p->terms())
            if (t.lambda != std::floor(t.lambda))
                throw rejected_input("lattice operations require integer exponents");
    if (f.domain().lo != g.domain().lo || f.domain().hi != g.domain().hi)
        throw rejected_input("lattice operations require matching domains");

    const GeneralizedPolynomial diff = f - g;
    const double a = sup_norm_estimate(diff, grid);

    LatticePair out;
    out.n = n;
    out.a = a;
    if (a == 0.0) {
        out.analytic_bound = 0.0;
        auto mean = [f, g](double x) { return 0.5 * (f.evaluate(x) + g.evaluate(x)); };
        out.upper = mean;
        out.lower = mean;
        return out;
    }
    out.analytic_bound = a / n;
    const AbsApproximant abs_n(a, n);
    out.upper = [f, g, abs_n](double x) {
        const double fx = f.evaluate(x), gx = g.evaluate(x);
        return 0.5 * (fx + gx + abs_n(fx - gx));
    };
    out.lower = [f, g, abs_n](double x) {
        const double fx = f.evaluate(x), gx = g.evaluate(x);
        return 0.5 * (fx + gx - abs_n(fx - gx));
    };
    return out;
}

} // namespace muntzkit::weierstrass
