#pragma once

#include <string>
#include <vector>

namespace muntzkit {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

// Finite ordered point set used for grid estimates and certificates.
class Grid {
public:
    // Points must be finite and strictly increasing.
    explicit Grid(std::vector<double> points);

    // count >= 2 evenly spaced points with both endpoints included.
    static Grid uniform(double lo, double hi, std::size_t count);

    const std::vector<double>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    double front() const { return points_.front(); }
    double back() const { return points_.back(); }

private:
    std::vector<double> points_;
};

// ============================================================
// Generalized polynomial: a finite sum  sum_k c_k * x^(lambda_k)  with real
// exponents lambda_k > -1/2 (the square-integrable range on [0,1]).
//
// Canonical form: terms sorted by strictly increasing exponent, duplicate
// exponents merged, zero coefficients dropped.  Evaluation sums terms in
// increasing-exponent order so results are reproducible run to run.
// ============================================================
struct Term {
    double c = 0.0;
    double lambda = 0.0;
};

class GeneralizedPolynomial {
public:
    // Canonicalizes the term list.  If any exponent is non-integer the
    // domain must not extend below zero.
    explicit GeneralizedPolynomial(std::vector<Term> terms, Interval domain = {0.0, 1.0});
    GeneralizedPolynomial() : GeneralizedPolynomial(std::vector<Term>{}) {}

    const std::vector<Term>& terms() const { return terms_; }
    const Interval& domain() const { return domain_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // Conventions at x = 0: x^0 contributes its coefficient (0^0 := 1),
    // positive exponents contribute 0, and negative exponents are a domain
    // violation.  x outside the domain is also rejected.
    double evaluate(double x) const;

    // Termwise arithmetic; both operands must share a domain.
    GeneralizedPolynomial operator+(const GeneralizedPolynomial& other) const;
    GeneralizedPolynomial operator-(const GeneralizedPolynomial& other) const;
    GeneralizedPolynomial scaled(double factor) const;

    // JSON array of {"c": ..., "lambda": ...} objects, exponent-sorted,
    // doubles rendered with 17 significant digits.
    std::string to_json() const;

private:
    std::vector<Term> terms_;
    Interval domain_;
};

// Maximum of |p| over the grid, which must lie inside p's domain.  This is
// a lower bound for the true sup norm; certificates treat it as such.
double sup_norm_estimate(const GeneralizedPolynomial& p, const Grid& grid);

} // namespace muntzkit
