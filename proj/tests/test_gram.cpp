#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "muntzkit/errors.hpp"
#include "muntzkit/gram.hpp"
#include "muntzkit/polynomial.hpp"
#include "muntzkit/rational.hpp"

using namespace muntzkit;
using namespace muntzkit::gram;

TEST_SUITE("gram") {

TEST_CASE("gram matrix exposes the moment entries") {
    const GramMatrix g({0.0, 1.0, 2.0});
    REQUIRE(g.size() == 3);
    CHECK(g.entry(0, 0) == 1.0);
    CHECK(g.entry(0, 1) == 0.5);
    CHECK(g.entry(1, 2) == 0.25);
    CHECK(g.entry(2, 2) == 0.2);
    const auto dense = g.dense();
    CHECK(dense[1][0] == dense[0][1]); // symmetric by construction

    // Repeated exponents build a (singular) matrix; distinctness is only a
    // requirement where something is inverted or divided, not here.
    const GramMatrix repeated({1.0, 1.0});
    CHECK(repeated.entry(0, 1) == repeated.entry(0, 0));

    CHECK_THROWS_AS(GramMatrix({-0.5}), rejected_input);
}

TEST_CASE("inner products reduce to moments") {
    const GeneralizedPolynomial x({{1.0, 1.0}});
    const GeneralizedPolynomial x2({{1.0, 2.0}});
    CHECK(l2_inner_product(x, x2) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(l2_norm(x) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));

    // <1 - x, 1 - x> = 1 - 2/2 + 1/3 = 1/3
    const GeneralizedPolynomial one_minus_x({{1.0, 0.0}, {-1.0, 1.0}});
    CHECK(l2_norm(one_minus_x) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("exact determinants reproduce the classical hilbert values") {
    CHECK(gram_determinant_bruteforce({Rational(0)}) == Rational(1));
    CHECK(gram_determinant_bruteforce({Rational(0), Rational(1)}) == Rational(1, 12));
    CHECK(gram_determinant_bruteforce({Rational(0), Rational(1), Rational(2)}) ==
          Rational(1, 2160));
    CHECK(gram_determinant_bruteforce({Rational(0), Rational(1), Rational(2), Rational(3)}) ==
          Rational(1, 6048000));

    std::vector<Rational> nine;
    for (int i = 0; i < 9; ++i) nine.emplace_back(i);
    CHECK_THROWS_AS(gram_determinant_bruteforce(nine), rejected_input);
    CHECK_THROWS_AS(gram_determinant_bruteforce({}), rejected_input);
}

TEST_CASE("closed-form determinant agrees with hand values and flips sign on swaps") {
    CHECK(cauchy_determinant({1.0, 2.0}, {1.0, 2.0}) == doctest::Approx(1.0 / 72.0).epsilon(1e-15));

    // Swapping two rows negates the determinant exactly: the implementation
    // sorts with a tracked parity, so both calls share every factor.
    const double plain = cauchy_determinant({0.5, 1.25, 3.0}, {0.5, 2.0, 2.75});
    const double swapped = cauchy_determinant({1.25, 0.5, 3.0}, {0.5, 2.0, 2.75});
    CHECK(swapped == -plain);

    // Repeated entry: two equal rows, determinant exactly zero.
    CHECK(cauchy_determinant({1.0, 1.0, 2.0}, {0.5, 1.5, 2.5}) == 0.0);
    CHECK(cauchy_log_determinant({1.0, 1.0, 2.0}, {0.5, 1.5, 2.5}).sign == 0);

    CHECK_THROWS_AS(cauchy_determinant({1.0, 2.0}, {-1.0, 3.0}), rejected_input); // pole at 1 + (-1)
    CHECK_THROWS_AS(cauchy_determinant({1.0}, {1.0, 2.0}), rejected_input);
    CHECK_THROWS_AS(cauchy_determinant({}, {}), rejected_input);
}

TEST_CASE("plain and log-space determinant routes agree") {
    std::vector<double> x, y;
    for (int i = 0; i < 10; ++i) {
        x.push_back(0.5 + i);
        y.push_back(0.75 + i);
    }
    const double plain = cauchy_determinant(x, y);
    const auto logged = cauchy_log_determinant(x, y);
    REQUIRE(logged.sign != 0);
    CHECK(logged.sign * std::exp(logged.log_abs) ==
          doctest::Approx(plain).epsilon(1e-10));
}

TEST_CASE("log route is invariant under opposite shifts of the two node sets") {
    // Entries 1/(x_i + y_j) only see the sums, so x -> x + c, y -> y - c is
    // an exact symmetry of the matrix; at size 35 this exercises the
    // log-space path (the dense product would overflow).
    const double c = 3.25;
    std::vector<double> x, y, xs, ys;
    for (int i = 0; i < 35; ++i) {
        const double xi = 0.5 + 0.5 * i;
        const double yi = 0.6 + 0.45 * i;
        x.push_back(xi);
        y.push_back(yi);
        xs.push_back(xi + c);
        ys.push_back(yi - c);
    }
    const auto base = cauchy_log_determinant(x, y);
    const auto shifted = cauchy_log_determinant(xs, ys);
    REQUIRE(base.sign != 0);
    CHECK(shifted.sign == base.sign);
    CHECK(shifted.log_abs == doctest::Approx(base.log_abs).epsilon(1e-9));
}

TEST_CASE("closed form matches the exact determinant on gram-shaped input") {
    // The Gram matrix of {x^l} has entries 1/(l_i + l_j + 1), i.e. a Cauchy
    // matrix with x = y = l + 1/2; the two routes share no code.
    const double closed = cauchy_determinant({0.5, 1.5, 2.5}, {0.5, 1.5, 2.5});
    const double exact =
        rational_to_double(gram_determinant_bruteforce({Rational(0), Rational(1), Rational(2)}));
    CHECK(closed == doctest::Approx(exact).epsilon(1e-12));

    std::mt19937 rng(911);
    std::uniform_int_distribution<int> numer(32, 640); // lambda = k/64 in [0.5, 10]
    for (int trial = 0; trial < 60; ++trial) {
        std::set<int> ks;
        const int n = 2 + trial % 5;
        while (static_cast<int>(ks.size()) < n) ks.insert(numer(rng));
        std::vector<Rational> lambdas;
        std::vector<double> nodes;
        for (int k : ks) {
            Rational lam(k, 64);
            lam.canonicalize();
            lambdas.push_back(lam);
            nodes.push_back(rational_to_double(lam) + 0.5);
        }
        const double via_closed = cauchy_determinant(nodes, nodes);
        const double via_exact = rational_to_double(gram_determinant_bruteforce(lambdas));
        CHECK(std::fabs(via_closed - via_exact) <= 1e-9 * std::fabs(via_exact));
    }
}

TEST_CASE("distance formula reproduces hand-computed values") {
    const auto d1 = distance_to_span(1.0, {0.0});
    CHECK(d1.delta == doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-15));
    CHECK(d1.method == "closed-form");

    const auto d2 = distance_to_span(2.0, {0.0, 1.0});
    CHECK(d2.delta == doctest::Approx(1.0 / (6.0 * std::sqrt(5.0))).epsilon(1e-15));
    CHECK(d2.exponents == std::vector<double>{0.0, 1.0});

    const auto empty = distance_to_span(1.0, {});
    CHECK(empty.delta == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(empty.condition_note == "empty span");

    // q inside the span collapses the product factor to zero exactly.
    CHECK(distance_to_span(1.5, {0.5, 1.5, 3.0}).delta == 0.0);

    CHECK_THROWS_AS(distance_to_span(-0.5, {0.0}), rejected_input);
    CHECK_THROWS_AS(distance_to_span(1.0, {2.0, 2.0}), rejected_input);
}

TEST_CASE("larger spans can only get closer") {
    const double d0 = distance_to_span(3.0, {0.0}).delta;
    const double d1 = distance_to_span(3.0, {0.0, 1.0}).delta;
    const double d2 = distance_to_span(3.0, {0.0, 1.0, 2.0}).delta;
    CHECK(d0 > d1);
    CHECK(d1 > d2);
    CHECK(d2 > 0.0);
}

TEST_CASE("exact distance ratio matches the closed form") {
    const Rational ratio = distance_squared_gram_ratio(Rational(2), {Rational(0), Rational(1)});
    CHECK(ratio == Rational(1, 180)); // (1/(6*sqrt(5)))^2

    CHECK(distance_squared_gram_ratio(Rational(1), {}) == Rational(1, 3));

    const auto report = distance_via_gram_ratio(Rational(2), {Rational(0), Rational(1)});
    CHECK(report.delta == doctest::Approx(1.0 / (6.0 * std::sqrt(5.0))).epsilon(1e-15));
    CHECK(report.method == "brute-force-rational");
    CHECK(report.condition_note == "exact rational determinant ratio");

    std::vector<Rational> eight;
    for (int i = 0; i < 8; ++i) eight.emplace_back(i);
    CHECK_THROWS_AS(distance_squared_gram_ratio(Rational(9), eight), rejected_input);
}

TEST_CASE("projection recovers the best approximation of x^2 by a line") {
    // Moments of x^2 against {1, x} are 1/3 and 1/4; the projection is
    // x - 1/6 with squared residual 1/5 - 11/180... = 1/180.
    const auto result = project_l2({1.0 / 3.0, 0.25}, {0.0, 1.0}, 0.2);
    REQUIRE(result.fit.term_count() == 2);
    CHECK(result.fit.terms()[0].c == doctest::Approx(-1.0 / 6.0).epsilon(1e-12));
    CHECK(result.fit.terms()[1].c == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.fit.evaluate(0.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    REQUIRE(result.residual_squared.has_value());
    CHECK(*result.residual_squared == doctest::Approx(1.0 / 180.0).epsilon(1e-9));
    CHECK(result.condition_estimate > 1.0);
}

TEST_CASE("projection residual equals the distance formula squared") {
    const double q = 3.0;
    const std::vector<double> span = {0.0, 1.0, 2.0};
    std::vector<double> moments;
    for (double lam : span) moments.push_back(1.0 / (q + lam + 1.0));
    const auto result = project_l2(moments, span, 1.0 / (2.0 * q + 1.0));
    const double delta = distance_to_span(q, span).delta;
    REQUIRE(result.residual_squared.has_value());
    CHECK(*result.residual_squared == doctest::Approx(delta * delta).epsilon(1e-12));
}

TEST_CASE("near-coincident exponents are refused with the pair named") {
    try {
        project_l2({1.0, 1.0}, {0.0, 1e-7});
        FAIL("expected ill_conditioned");
    } catch (const ill_conditioned& e) {
        CHECK(std::string(e.what()).find("closest exponents") != std::string::npos);
    }

    CHECK_THROWS_AS(project_l2({1.0}, {0.0, 1.0}), rejected_input);
    CHECK_THROWS_AS(project_l2({}, {}), rejected_input);
}

} // TEST_SUITE
