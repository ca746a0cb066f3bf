#include "muntzkit/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "muntzkit/errors.hpp"
#include "muntzkit/report_io.hpp"

namespace muntzkit {

namespace {

bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

} // namespace

// ============================================================
// Grid
// ============================================================

Grid::Grid(std::vector<double> points) : points_(std::move(points)) {
    if (points_.empty()) throw rejected_input("grid must contain at least one point");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i])) throw rejected_input("grid points must be finite");
        if (i > 0 && points_[i] <= points_[i - 1])
            throw rejected_input("grid points must be strictly increasing");
    }
}

Grid Grid::uniform(double lo, double hi, std::size_t count) {
    if (!(std::isfinite(lo) && std::isfinite(hi)) || !(lo < hi))
        throw rejected_input("uniform grid needs finite lo < hi");
    if (count < 2) throw rejected_input("uniform grid needs at least two points");
    std::vector<double> pts(count);
    const double h = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) pts[i] = lo + h * static_cast<double>(i);
    pts.front() = lo;
    pts.back() = hi; // endpoints exactly, independent of rounding in the stride
    return Grid(std::move(pts));
}

// ============================================================
// GeneralizedPolynomial
// ============================================================

GeneralizedPolynomial::GeneralizedPolynomial(std::vector<Term> terms, Interval domain)
    : domain_(domain) {
    if (!(std::isfinite(domain.lo) && std::isfinite(domain.hi)) || !(domain.lo <= domain.hi))
        throw rejected_input("polynomial domain must satisfy lo <= hi");
    for (const Term& t : terms) {
        if (!std::isfinite(t.c) || !std::isfinite(t.lambda))
            throw rejected_input("polynomial terms must be finite");
        if (t.lambda <= -0.5)
            throw rejected_input("exponents must exceed -1/2");
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.lambda < b.lambda; });
    for (const Term& t : terms) {
        if (!terms_.empty() && terms_.back().lambda == t.lambda)
            terms_.back().c += t.c;
        else
            terms_.push_back(t);
    }
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const Term& t) { return t.c == 0.0; }),
                 terms_.end());
    const bool all_integer = std::all_of(terms_.begin(), terms_.end(),
                                         [](const Term& t) { return is_integer(t.lambda); });
    if (!all_integer && domain_.lo < 0.0)
        throw rejected_input("non-integer exponents require a domain contained in [0, inf)");
}

double GeneralizedPolynomial::evaluate(double x) const {
    if (!std::isfinite(x)) throw rejected_input("evaluation point must be finite");
    if (x < domain_.lo || x > domain_.hi)
        throw rejected_input("evaluation point outside the polynomial domain");
    double acc = 0.0;
    if (x == 0.0) {
        for (const Term& t : terms_) {
            if (t.lambda < 0.0)
                throw rejected_input("x = 0 is outside the domain of a negative exponent");
            if (t.lambda == 0.0) acc += t.c; // 0^0 := 1
        }
        return acc;
    }
    for (const Term& t : terms_) acc += t.c * std::pow(x, t.lambda);
    return acc;
}

GeneralizedPolynomial GeneralizedPolynomial::operator+(const GeneralizedPolynomial& other) const {
    if (domain_.lo != other.domain_.lo || domain_.hi != other.domain_.hi)
        throw rejected_input("polynomial arithmetic requires matching domains");
    std::vector<Term> merged = terms_;
    merged.insert(merged.end(), other.terms_.begin(), other.terms_.end());
    return GeneralizedPolynomial(std::move(merged), domain_);
}

GeneralizedPolynomial GeneralizedPolynomial::operator-(const GeneralizedPolynomial& other) const {
    return *this + other.scaled(-1.0);
}

GeneralizedPolynomial GeneralizedPolynomial::scaled(double factor) const {
    if (!std::isfinite(factor)) throw rejected_input("scale factor must be finite");
    std::vector<Term> out = terms_;
    for (Term& t : out) t.c *= factor;
    return GeneralizedPolynomial(std::move(out), domain_);
}

std::string GeneralizedPolynomial::to_json() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << ", ";
        os << "{\"c\": " << format_double(terms_[i].c)
           << ", \"lambda\": " << format_double(terms_[i].lambda) << '}';
    }
    os << ']';
    return os.str();
}

double sup_norm_estimate(const GeneralizedPolynomial& p, const Grid& grid) {
    if (grid.front() < p.domain().lo || grid.back() > p.domain().hi)
        throw rejected_input("grid extends beyond the polynomial domain");
    double best = 0.0;
    for (double x : grid.points()) {
        const double v = p.evaluate(x);
        if (!std::isfinite(v))
            throw evaluation_error("non-finite polynomial value at x = " + format_double(x));
        best = std::max(best, std::fabs(v));
    }
    return best;
}

} // namespace muntzkit
