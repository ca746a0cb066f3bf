#pragma once

#include <optional>
#include <string>
#include <vector>

#include "muntzkit/polynomial.hpp"
#include "muntzkit/rational.hpp"

namespace muntzkit::gram {

// ============================================================
// L2[0,1] geometry of monomials.  The whole module leans on the moment
// identity  <x^a, x^b> = 1/(a+b+1)  for a, b > -1/2, which makes Gram
// matrices of monomial spans Cauchy-structured and their determinants
// available in closed form.
// ============================================================

// Gram matrix of monomials x^lambda_i: entries 1/(lambda_i + lambda_j + 1).
struct GramMatrix {
    explicit GramMatrix(std::vector<double> exponents);
    std::size_t size() const { return exponents.size(); }
    double entry(std::size_t i, std::size_t j) const;
    std::vector<std::vector<double>> dense() const;
    std::vector<double> exponents;
};

// <p, q> over [0,1] via the moment identity (both arguments keep their
// exponents above -1/2 by construction, so every pairwise sum is > -1).
double l2_inner_product(const GeneralizedPolynomial& p, const GeneralizedPolynomial& q);
double l2_norm(const GeneralizedPolynomial& p);

// det [ 1/(x_i + y_j) ]  =  prod_{i<j} (x_j-x_i)(y_j-y_i) / prod_{i,j} (x_i+y_j).
//
// Entries are sorted internally (tracking the permutation sign), so the
// factors never cancel and swapping two inputs flips the sign exactly.
// Above 30x30 the product is accumulated in log space with a separate sign
// to dodge overflow.
double cauchy_determinant(const std::vector<double>& x, const std::vector<double>& y);

// log|det| plus sign (0 when the determinant vanishes); the building block
// behind the large-n path above.
struct SignedLogValue {
    double log_abs = 0.0;
    int sign = 0;
};
SignedLogValue cauchy_log_determinant(const std::vector<double>& x, const std::vector<double>& y);

// Exact Gram determinant for rational exponents, limited to 8x8: row
// denominators are cleared and the integer matrix is reduced by
// fraction-free (Bareiss) elimination.  Deliberately independent of the
// closed form so the two routes can check each other.
Rational gram_determinant_bruteforce(const std::vector<Rational>& exponents);

// ============================================================
// Distance from x^q to span{ x^lambda_1, ..., x^lambda_n } in L2[0,1].
// ============================================================
struct DistanceReport {
    double q = 0.0;
    std::vector<double> exponents;
    double delta = 0.0;
    std::string method;
    std::string condition_note;
};

// Production path, the closed form
//   delta = 1/sqrt(2q+1) * prod_i |q - lambda_i| / (q + lambda_i + 1).
// Exponents must be pairwise distinct and > -1/2 (an empty span is allowed
// and yields the norm of x^q).  delta is 0 exactly when q appears among
// the exponents.
DistanceReport distance_to_span(double q, const std::vector<double>& exponents);

// Exact-arithmetic route: delta^2 = G(span, x^q) / G(span) as a ratio of
// Gram determinants, everything rational until the caller takes a root.
// Limited by the 8x8 brute-force determinant.
Rational distance_squared_gram_ratio(const Rational& q, const std::vector<Rational>& exponents);

// Report wrapper over the exact route (delta = sqrt of the exact ratio).
DistanceReport distance_via_gram_ratio(const Rational& q, const std::vector<Rational>& exponents);

// ============================================================
// L2 projection onto a monomial span from target moments.
// ============================================================
struct ProjectionResult {
    GeneralizedPolynomial fit;
    // <g,g> - <g, fit>, present when the caller supplied <g,g>.
    std::optional<double> residual_squared;
    double condition_estimate = 0.0;
};

// Solves the normal equations G c = m for the span's Gram matrix G.  The
// 1-norm condition estimate is always computed first; beyond 1e14 the
// solve is refused (ill_conditioned) naming the closest exponent pair.
ProjectionResult project_l2(const std::vector<double>& target_moments,
                            const std::vector<double>& exponents,
                            std::optional<double> target_norm_squared = std::nullopt);

} // namespace muntzkit::gram
