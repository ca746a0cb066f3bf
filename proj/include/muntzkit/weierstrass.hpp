#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "muntzkit/polynomial.hpp"
#include "muntzkit/rational.hpp"

namespace muntzkit::weierstrass {

// ============================================================
// Square-root iteration on [0, 1]:
//
//   p_0(t) = 0,    p_{n+1}(t) = p_n(t) + (t - p_n(t)^2) / 2
//
// Every p_n is a polynomial with dyadic-rational coefficients satisfying
//
//   0 <= sqrt(t) - p_n(t) <= 2*sqrt(t) / (2 + n*sqrt(t)) <= 2/n,
//
// which is the pointwise envelope the certificates check.  p_n has degree
// 2^(n-1) for n >= 1, so dense coefficients are materialized (exactly, via
// rational arithmetic) only up to the cutoff below; beyond it the iterate
// is evaluated by running the recursion pointwise.
// ============================================================
class SqrtIterate {
public:
    static constexpr int coefficient_cutoff = 12;

    explicit SqrtIterate(int n);

    int level() const { return n_; }

    // Pointwise recursion; t must lie in [0, 1] (a hair of slack is
    // tolerated and clamped for callers sitting on the boundary).
    double operator()(double t) const;

    bool has_coefficients() const { return !exact_coefficients_.empty() || n_ == 0; }
    // Exact dyadic coefficients of p_n, ascending by degree.  Empty for
    // n = 0 (the zero polynomial); absent above the cutoff.
    const std::vector<Rational>& exact_coefficients() const;
    // Double-rounded view of the materialized coefficients.
    GeneralizedPolynomial to_polynomial() const;

private:
    int n_ = 0;
    std::vector<Rational> exact_coefficients_;
};

// Pointwise-checked error certificate for an approximation family.  The
// grid estimate is the observed maximum error over the grid (a lower bound
// for the true sup norm); the analytic bound is the proved one.  Violations
// lists the grid points where the pointwise guarantee failed beyond numeric
// slack -- producing one throws certificate_failure, so a surviving
// certificate always has it empty.
struct ErrorCertificate {
    int n = 0;
    double analytic_bound = 0.0;
    double grid_estimate = 0.0;
    std::vector<double> grid;
    std::vector<double> violations;
};

// Checks  0 <= sqrt(t) - p_n(t) <= 2*sqrt(t)/(2 + n*sqrt(t))  at every grid
// point (grid inside [0, 1], n >= 1) and reports analytic_bound = 2/n.
ErrorCertificate sqrt_error_certificate(int n, const Grid& grid);

// ============================================================
// Absolute-value approximant on [-a, a]:  q_n(t) = a * p_n(t^2 / a^2),
// an even polynomial with  | |t| - q_n(t) | <= 2a/n  and  q_n(0) = 0.
// ============================================================
class AbsApproximant {
public:
    AbsApproximant(double a, int n);

    double half_width() const { return a_; }
    int level() const { return n_; }
    double analytic_bound() const { return 2.0 * a_ / n_; }

    // Defined for |t| <= a; the inner ratio is clamped to 1 beyond that so
    // off-certificate evaluations degrade gracefully instead of diverging.
    double operator()(double t) const;

    // Checks | |t| - q_n(t) | <= 2a/n at every grid point in [-a, a].
    ErrorCertificate certificate(const Grid& grid) const;

private:
    double a_;
    int n_;
};

// ============================================================
// Lattice operations via the half-sum identities
//
//   max{f,g} = (f + g + |f-g|)/2,   min{f,g} = (f + g - |f-g|)/2,
//
// with |.| replaced by an AbsApproximant of half-width a, where a is the
// grid sup-norm estimate of f-g.  Results are evaluators, not expanded
// polynomials: composing a degree-2^(n-1) iterate symbolically would be
// enormous, while pointwise composition is exact to rounding.
// ============================================================
struct LatticePair {
    std::function<double(double)> upper; // approximates max{f,g}
    std::function<double(double)> lower; // approximates min{f,g}
    double a = 0.0;                      // sup-norm estimate of f-g
    double analytic_bound = 0.0;         // a/n, the half-sum halves 2a/n
    int n = 0;
};

// f and g must have integer exponents and identical domains.  On the grid
// used for the estimate, the uniform error of both evaluators is at most
// a/n.  When the grid estimate of f-g vanishes the exact half-sum is
// returned with a zero bound.
LatticePair lattice_max_min(const GeneralizedPolynomial& f, const GeneralizedPolynomial& g,
                            int n, const Grid& grid);

} // namespace muntzkit::weierstrass
