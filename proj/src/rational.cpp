#include "muntzkit/rational.hpp"

#include <algorithm>
#include <cctype>

#include "muntzkit/errors.hpp"

namespace muntzkit {

namespace {

bool is_integer_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + i, s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

Rational rational_from_string(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw rejected_input("empty rational literal");

    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!is_integer_text(num) || !is_integer_text(den))
            throw rejected_input("malformed rational literal '" + text + "' (expected p/q)");
        const mpz_class num_z(num);
        const mpz_class den_z(den);
        if (den_z == 0) throw rejected_input("zero denominator in '" + text + "'");
        Rational r{num_z, den_z};
        r.canonicalize();
        return r;
    }

    const auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        const std::size_t frac_len = s.size() - dot - 1;
        if (digits == "+" || digits == "-" || digits.empty() || !is_integer_text(digits))
            throw rejected_input("malformed decimal literal '" + text + "'");
        mpz_class den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        Rational r(mpz_class(digits), den);
        r.canonicalize();
        return r;
    }

    if (!is_integer_text(s)) throw rejected_input("malformed rational literal '" + text + "'");
    return Rational(mpz_class(s));
}

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// ============================================================
// RationalPoly
// ============================================================

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return RationalPoly(std::move(v));
}

Rational RationalPoly::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational RationalPoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPoly RationalPoly::operator+(const RationalPoly& other) const {
    std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator-(const RationalPoly& other) const {
    return *this + other.scaled(Rational(-1));
}

RationalPoly RationalPoly::operator*(const RationalPoly& other) const {
    if (is_zero() || other.is_zero()) return RationalPoly();
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::scaled(const Rational& factor) const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c *= factor;
    return RationalPoly(std::move(out));
}

void RationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

} // namespace muntzkit
