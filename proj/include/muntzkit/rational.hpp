#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace muntzkit {

// Exact rational arithmetic.  GMP's canonical mpq type does the heavy
// lifting; everything algorithmic built on top of it lives in this project.
using Rational = mpq_class;

// Parses "p/q", an integer, or a finite decimal ("2.5" becomes 5/2 exactly).
// Throws rejected_input on malformed text or zero denominators.
Rational rational_from_string(const std::string& text);

// Canonical "p/q" rendering ("p" when the denominator is 1).
std::string rational_to_string(const Rational& r);

inline double rational_to_double(const Rational& r) { return r.get_d(); }

// ============================================================
// Dense univariate polynomial over the rationals.
//
// Coefficients are stored ascending by degree with trailing zeros trimmed,
// so degree() is exact.  Only the handful of operations the exact routes
// need are provided.
// ============================================================
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);

    static RationalPoly monomial(const Rational& c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    // Coefficient of x^k (zero when k exceeds the degree).
    Rational coefficient(std::size_t k) const;

    Rational evaluate(const Rational& x) const;

    RationalPoly operator+(const RationalPoly& other) const;
    RationalPoly operator-(const RationalPoly& other) const;
    RationalPoly operator*(const RationalPoly& other) const;
    RationalPoly scaled(const Rational& factor) const;

    bool operator==(const RationalPoly& other) const { return coeffs_ == other.coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

} // namespace muntzkit
