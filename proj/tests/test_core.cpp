#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "muntzkit/errors.hpp"
#include "muntzkit/exponents.hpp"
#include "muntzkit/polynomial.hpp"
#include "muntzkit/quadrature.hpp"
#include "muntzkit/rational.hpp"
#include "muntzkit/report_io.hpp"

using namespace muntzkit;

TEST_SUITE("core") {

TEST_CASE("polynomial canonicalization merges, sorts, and drops zeros") {
    GeneralizedPolynomial p({{1.0, 2.0}, {3.0, 0.0}, {2.0, 2.0}, {0.0, 5.0}});
    REQUIRE(p.term_count() == 2);
    CHECK(p.terms()[0].lambda == 0.0);
    CHECK(p.terms()[0].c == 3.0);
    CHECK(p.terms()[1].lambda == 2.0);
    CHECK(p.terms()[1].c == 3.0);

    // Rebuilding from the canonical terms is the identity.
    GeneralizedPolynomial again(p.terms());
    CHECK(again.terms()[0].c == p.terms()[0].c);
    CHECK(again.terms()[1].c == p.terms()[1].c);
    CHECK(again.term_count() == p.term_count());
}

TEST_CASE("evaluation conventions at zero") {
    GeneralizedPolynomial p({{3.0, 0.0}, {5.0, 2.0}});
    CHECK(p.evaluate(0.0) == 3.0); // 0^0 contributes, positive powers vanish

    GeneralizedPolynomial fractional({{1.0, -0.25}});
    CHECK_THROWS_AS(fractional.evaluate(0.0), rejected_input);
    CHECK(fractional.evaluate(1.0) == doctest::Approx(1.0));
}

TEST_CASE("evaluation outside the domain is rejected") {
    GeneralizedPolynomial p({{1.0, 1.0}}, {0.0, 1.0});
    CHECK_THROWS_AS(p.evaluate(1.5), rejected_input);
    CHECK_THROWS_AS(p.evaluate(-0.5), rejected_input);
}

TEST_CASE("non-integer exponents cannot have a domain below zero") {
    CHECK_THROWS_AS(GeneralizedPolynomial({{1.0, 0.5}}, {-1.0, 1.0}), rejected_input);
    CHECK_NOTHROW(GeneralizedPolynomial({{1.0, 2.0}}, {-1.0, 1.0}));
    CHECK_THROWS_AS(GeneralizedPolynomial({{1.0, -0.5}}), rejected_input);
}

TEST_CASE("arithmetic requires matching domains and is termwise") {
    GeneralizedPolynomial p({{1.0, 1.0}});
    GeneralizedPolynomial q({{2.0, 1.0}, {1.0, 0.0}});
    const auto sum = p + q;
    CHECK(sum.evaluate(0.5) == doctest::Approx(0.5 + 1.0 + 1.0));
    const auto diff = q - q;
    CHECK(diff.is_zero());

    GeneralizedPolynomial other_domain({{1.0, 1.0}}, {0.0, 2.0});
    CHECK_THROWS_AS(p + other_domain, rejected_input);
}

TEST_CASE("sup norm estimate picks the grid maximum of the absolute value") {
    // |x^2 - x/8| on [0,1] peaks at x = 1 with value 7/8; the 1001-point
    // uniform grid contains the endpoint, so the estimate is exact there.
    GeneralizedPolynomial p({{1.0, 2.0}, {-0.125, 1.0}});
    const Grid grid = Grid::uniform(0.0, 1.0, 1001);
    CHECK(sup_norm_estimate(p, grid) == 0.875);

    const Grid outside = Grid::uniform(0.0, 2.0, 11);
    CHECK_THROWS_AS(sup_norm_estimate(p, outside), rejected_input);
}

TEST_CASE("polynomial JSON rendering is exact and ordered") {
    GeneralizedPolynomial p({{-0.5, 2.0}, {1.0, 1.0}});
    CHECK(p.to_json() == "[{\"c\": 1, \"lambda\": 1}, {\"c\": -0.5, \"lambda\": 2}]");
}

TEST_CASE("grid construction validates its points") {
    CHECK_THROWS_AS(Grid({1.0, 0.5}), rejected_input);
    CHECK_THROWS_AS(Grid({0.0, 0.0}), rejected_input);
    CHECK_THROWS_AS(Grid::uniform(0.0, 1.0, 1), rejected_input);
    CHECK_THROWS_AS(Grid::uniform(1.0, 0.0, 5), rejected_input);

    const Grid g = Grid::uniform(0.0, 1.0, 3);
    REQUIRE(g.size() == 3);
    CHECK(g.points()[0] == 0.0);
    CHECK(g.points()[1] == 0.5);
    CHECK(g.points()[2] == 1.0);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);
}

TEST_CASE("quadrature integrates simple monomials to machine precision") {
    const double half = integrate([](double x) { return x; }, 0.0, 1.0);
    CHECK(half == doctest::Approx(0.5).epsilon(1e-12));

    // <x^3, x^4> as an integral of the product.
    const double eighth = integrate([](double x) { return std::pow(x, 7.0); }, 0.0, 1.0);
    CHECK(eighth == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("graded mesh handles an integrable endpoint singularity") {
    QuadratureConfig config;
    config.singular_exponent = -0.4;
    const double v = integrate([](double x) { return std::pow(x, -0.4); }, 0.0, 1.0, config);
    CHECK(v == doctest::Approx(5.0 / 3.0).epsilon(1e-8));
}

TEST_CASE("moment identity holds across random exponent pairs") {
    std::mt19937 rng(20240815);
    std::uniform_real_distribution<double> draw(-0.4, 20.0);
    std::vector<double> sums = {-0.8, -0.5, -0.1, 0.3, 0.7, 1.5}; // forced low end
    for (int trial = 0; trial < 40; ++trial) sums.push_back(draw(rng) + draw(rng));
    for (const double s : sums) {
        if (s <= -0.99) continue;
        QuadratureConfig config;
        // Below s = 2 the integrand's higher derivatives blow up at 0, so a
        // uniform mesh stalls near 1e-7; the graded mesh restores full
        // precision there (and is required for s < 0).
        if (s < 2.0) config.singular_exponent = s;
        const double got = integrate([s](double x) { return std::pow(x, s); }, 0.0, 1.0, config);
        const double expected = 1.0 / (s + 1.0);
        CHECK(std::fabs(got - expected) <= 1e-10 * std::fabs(expected));
    }
}

TEST_CASE("gauss-legendre nodes integrate polynomials of matching degree exactly") {
    const GaussLegendreTable& table = gauss_legendre_table(6);
    REQUIRE(table.nodes.size() == 6);
    long double weight_sum = 0.0L;
    long double moment10 = 0.0L; // integral of t^10 over [-1,1] = 2/11
    for (std::size_t i = 0; i < table.nodes.size(); ++i) {
        weight_sum += table.weights[i];
        moment10 += table.weights[i] * std::pow(static_cast<long double>(table.nodes[i]), 10.0L);
    }
    CHECK(static_cast<double>(weight_sum) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(static_cast<double>(moment10) == doctest::Approx(2.0 / 11.0).epsilon(1e-13));

    CHECK_THROWS_AS(gauss_legendre_table(1), rejected_input);
    CHECK_THROWS_AS(gauss_legendre_table(257), rejected_input);
}

TEST_CASE("quadrature rejects bad bounds and non-finite samples") {
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, -1.0, 1.0), rejected_input);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 1.0), rejected_input);
    CHECK_THROWS_AS(integrate([](double x) { return std::sqrt(x - 2.0); }, 0.0, 1.0),
                    evaluation_error);
}

TEST_CASE("rational parsing covers integers, fractions, and decimals") {
    CHECK(rational_from_string("3") == Rational(3));
    CHECK(rational_from_string("-7/2") == Rational(-7, 2));
    CHECK(rational_from_string("2.5") == Rational(5, 2));
    CHECK(rational_from_string(" 1 / 3 ") == Rational(1, 3));
    CHECK(rational_to_string(Rational(5, 2)) == "5/2");
    Rational two(4, 2); // GMP keeps num/den as given until told otherwise
    two.canonicalize();
    CHECK(rational_to_string(two) == "2");
    CHECK_THROWS_AS(rational_from_string("1/0"), rejected_input);
    CHECK_THROWS_AS(rational_from_string("abc"), rejected_input);
    CHECK_THROWS_AS(rational_from_string(""), rejected_input);
}

TEST_CASE("rational polynomials multiply and evaluate exactly") {
    // (1 + x)^2 = 1 + 2x + x^2
    RationalPoly one_plus_x({Rational(1), Rational(1)});
    const RationalPoly square = one_plus_x * one_plus_x;
    CHECK(square.degree() == 2);
    CHECK(square.coefficient(0) == Rational(1));
    CHECK(square.coefficient(1) == Rational(2));
    CHECK(square.coefficient(2) == Rational(1));
    CHECK(square.evaluate(Rational(1, 2)) == Rational(9, 4));
    CHECK((square - square).is_zero());
}

TEST_CASE("affine and power families emit the advertised values") {
    CHECK(ExponentSequence::affine(2.0, 1.0).values(3) == std::vector<double>{1, 3, 5, 7});
    CHECK(ExponentSequence::affine(1.0, 0.0, 1).values(2) == std::vector<double>{1, 2, 3});
    CHECK(ExponentSequence::power(2.0, 2).values(2) == std::vector<double>{4, 9, 16});
    CHECK(ExponentSequence::primes().values(5) == std::vector<double>{0, 2, 3, 5, 7, 11});
}

TEST_CASE("explicit lists are validated and bounded") {
    const auto seq = ExponentSequence::explicit_list({0.0, 0.5, 2.0});
    CHECK(seq.values(2) == std::vector<double>{0.0, 0.5, 2.0});
    CHECK_THROWS_AS(seq.values(3), rejected_input); // list exhausted

    CHECK_THROWS_AS(ExponentSequence::explicit_list({}), rejected_input);
    CHECK_THROWS_AS(ExponentSequence::explicit_list({-1.0}), rejected_input);
    CHECK_THROWS_AS(ExponentSequence::explicit_list({1.0, 1.0}), rejected_input);
    CHECK_THROWS_AS(ExponentSequence::explicit_list({1.0, 0.0}), rejected_input);
}

TEST_CASE("a symbolic tail continues an explicit head") {
    const auto seq =
        ExponentSequence::with_tail({0.5, 0.9}, ExponentSequence::affine(1.0, 0.0, 1));
    CHECK(seq.values(4) == std::vector<double>{0.5, 0.9, 1.0, 2.0, 3.0});
    CHECK(seq.classical_condition() == ConditionClass::diverges);

    CHECK_THROWS_AS(
        ExponentSequence::with_tail({1.0}, ExponentSequence::explicit_list({2.0})),
        rejected_input);
}

TEST_CASE("divergence classes are decided symbolically") {
    CHECK(ExponentSequence::affine(3.0, 2.0).classical_condition() == ConditionClass::diverges);
    CHECK(ExponentSequence::power(0.5).classical_condition() == ConditionClass::diverges);
    CHECK(ExponentSequence::power(1.0).classical_condition() == ConditionClass::diverges);
    CHECK(ExponentSequence::power(2.0).classical_condition() == ConditionClass::converges);
    CHECK(ExponentSequence::primes().classical_condition() == ConditionClass::diverges);
    CHECK(ExponentSequence::explicit_list({1.0}).classical_condition() ==
          ConditionClass::inconclusive);
    CHECK(ExponentSequence::power(2.0).full_condition() == ConditionClass::converges);

    CHECK(condition_class_name(ConditionClass::diverges) == "diverges");
    CHECK(condition_class_name(ConditionClass::converges) == "converges");
    CHECK(condition_class_name(ConditionClass::inconclusive) == "inconclusive");
}

TEST_CASE("family constructors reject degenerate parameters") {
    CHECK_THROWS_AS(ExponentSequence::affine(0.0, 1.0), rejected_input);
    CHECK_THROWS_AS(ExponentSequence::affine(-1.0, 0.0), rejected_input);
    CHECK_THROWS_AS(ExponentSequence::power(0.0), rejected_input);
    CHECK_THROWS_AS(ExponentSequence::affine(1.0, 0.0, -1), rejected_input);
    // affine(1, -2) would emit negative values; values() must notice.
    CHECK_THROWS_AS(ExponentSequence::affine(1.0, -2.0).values(1), rejected_input);
}

TEST_CASE("double formatting is faithful and stable") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-0.125) == "-0.125");
    CHECK(format_long(-42L) == "-42");
    CHECK_THROWS(format_double(std::numeric_limits<double>::quiet_NaN()));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const double x = std::ldexp(static_cast<double>(rng()) - 9.2e18, -40);
        if (!std::isfinite(x)) continue;
        CHECK(std::stod(format_double(x)) == x); // round-trip faithfulness
    }
}

TEST_CASE("json documents render with stable layout") {
    Json obj = Json::object();
    obj.add("a", 1L);
    Json arr = Json::array();
    arr.push(1.0);
    arr.push(2.5);
    obj.add("b", std::move(arr));
    obj.add("c", "x\"y");
    CHECK(obj.dump() == "{\n  \"a\": 1,\n  \"b\": [1, 2.5],\n  \"c\": \"x\\\"y\"\n}\n");
    CHECK(Json::object().dump() == "{}\n");
}

TEST_CASE("csv rows carry the header and reject width mismatches") {
    Csv csv({"n", "delta"});
    csv.add_row({"0", "0.5"});
    CHECK(csv.str() == "n,delta\n0,0.5\n");
    CHECK_THROWS(csv.add_row({"only-one"}));
}

TEST_CASE("text tables right-align each column") {
    const std::string t = render_table({"n", "value"}, {{"1", "10"}, {"20", "3"}});
    CHECK(t == " n  value\n 1     10\n20      3\n");
}

} // TEST_SUITE
