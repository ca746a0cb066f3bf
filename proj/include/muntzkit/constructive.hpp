#pragma once

#include <cmath>
#include <vector>

#include "muntzkit/exponents.hpp"
#include "muntzkit/polynomial.hpp"
#include "muntzkit/quadrature.hpp"

namespace muntzkit::constructive {

// ============================================================
// Explicit residual sequence witnessing density of a monomial span:
//   Q_0(x) = x^q,
//   Q_n(x) = (lambda_n - q) x^{lambda_n} * integral_x^1 Q_{n-1}(t) t^{-1-lambda_n} dt,
// which stays of the form  Q_n(x) = x^q - sum_i a_{n,i} x^{lambda_i}
// and satisfies the certified bound  ||Q_n||_inf <= prod_i |1 - q/lambda_i|.
// When the reciprocal sum of the exponents diverges, the bound drives the
// sup norm to zero, so x^q is approximated explicitly from the span.
// ============================================================

struct MuntzApproximant {
    double q = 0.0;
    std::vector<double> exponents;     // lambda_1 .. lambda_n, ascending
    std::vector<double> coefficients;  // a_{n,i} matching exponents
    double bound = 1.0;                // prod |1 - q/lambda_i|

    // Q_n(x) = x^q - sum a_i x^{lambda_i}; accepts x in [0, 1].
    double evaluate(double x) const;

    // Q_n as a generalized polynomial on [0,1] (term x^q plus the negated
    // span terms) for inner-product work.
    GeneralizedPolynomial to_polynomial() const;
};

// Closed coefficient recurrence, integrating the recursion term by term:
// appending lambda_n rescales every earlier coefficient by
// (lambda_n - q)/(lambda_n - lambda_i) and the new coefficient tops the
// sum back up to 1 (equivalently Q_n(1) = 0).  Exponents must be positive,
// strictly increasing, and distinct from q.  Accumulated in extended
// precision; the recurrence cancels when exponents cluster.
MuntzApproximant qn_coefficients(double q, const std::vector<double>& exponents);

// ============================================================
// Independent evaluation route: runs the integral recursion numerically,
// level by level, memoizing each level on a fine grid of [x_min, 1] and
// integrating a local polynomial interpolant of the previous level.
// Deliberately shares no algebra with qn_coefficients so the two can
// check each other.  Accuracy target 1e-8 for n <= 6.
// ============================================================
class QnOracle {
public:
    // grid_points nodes covering [x_min, 1], uniform in log x.
    QnOracle(double q, std::vector<double> exponents, double x_min = 0.01,
             int grid_points = 4001);

    // Q_n(x) for x in [x_min, 1] (below x_min the memo grid cannot answer).
    double operator()(double x) const;

    double x_min() const { return std::exp(grid_.front()); }

private:
    double panel_integral(double lo, double hi, int stencil_left, double weight_exponent) const;
    double interpolate_previous(double t, int stencil_left) const;

    double q_ = 0.0;
    std::vector<double> lambdas_;
    std::vector<double> grid_;      // ascending nodes, last = 1
    std::vector<double> previous_;  // Q_{n-1} at the nodes
    std::vector<double> tails_;     // integral_{g_j}^1 Q_{n-1}(t) t^{-1-lambda_n} dt
};

// One-shot oracle evaluation (builds the memo grid internally).
double qn_oracle(double q, const std::vector<double>& exponents, double x);

// ============================================================
// Convergence table: bound and measured grid sup, level by level.
// ============================================================

struct ConvergenceRow {
    long n = 0;
    double bound = 1.0;
    double grid_sup = 0.0;
};

// Rows n = 0..n_max; row n uses the first n sequence values as exponents.
// The sequence must be positive and strictly increasing with q absent.
// Every row checks grid_sup <= bound + 1e-9 and a violation throws a
// certificate failure (that inequality is a theorem, so a breach is a bug).
std::vector<ConvergenceRow> qn_convergence_report(double q, const ExponentSequence& seq,
                                                  long n_max, const Grid& g);

} // namespace muntzkit::constructive
