#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"

#include "muntzkit/density.hpp"
#include "muntzkit/errors.hpp"
#include "muntzkit/exponents.hpp"
#include "muntzkit/gram.hpp"

using namespace muntzkit;
using namespace muntzkit::density;

TEST_SUITE("density") {

TEST_CASE("product rows telescope for a_i = i + 1") {
    // prod_{i=1..n} (1 - 1/(i+1)) = prod (i/(i+1)) = 1/(n+1).
    std::vector<double> a;
    for (int i = 1; i <= 50; ++i) a.push_back(i + 1.0);
    const auto rows = product_sum_table(a);
    REQUIRE(rows.size() == 50);
    CHECK(rows.front().n == 1);
    CHECK(rows.front().product == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(rows.back().n == 50);
    CHECK(rows.back().product == doctest::Approx(1.0 / 51.0).epsilon(1e-12));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].product < rows[i - 1].product); // strictly shrinking
        CHECK(rows[i].sum > rows[i - 1].sum);         // strictly growing
    }
}

TEST_CASE("product rows telescope for squares") {
    // prod_{i=2..m} (1 - 1/i^2) = (m+1)/(2m) by the (i-1)(i+1)/i^2 collapse;
    // with k terms the last index is m = k + 1.
    std::vector<double> a;
    for (int i = 2; i <= 31; ++i) a.push_back(static_cast<double>(i) * i);
    const auto rows = product_sum_table(a);
    REQUIRE(rows.size() == 30);
    const int k = 30;
    CHECK(rows.back().product == doctest::Approx((k + 2.0) / (2.0 * (k + 1.0))).epsilon(1e-12));
    CHECK(rows.back().product > 0.5); // converging product stays bounded away from 0
}

TEST_CASE("geometric terms drive the sum to 1") {
    std::vector<double> a;
    for (int k = 1; k <= 10; ++k) a.push_back(std::pow(2.0, k)); // 1/a_i sums to 1 - 2^-10
    const auto rows = product_sum_table(a);
    CHECK(rows.back().sum == doctest::Approx(1.0 - 1.0 / 1024.0).epsilon(1e-14));
}

TEST_CASE("product table rejects terms at or below 1") {
    CHECK_THROWS_WITH_AS(product_sum_table({2.0, 1.0}), doctest::Contains("term 2 must exceed 1"),
                         rejected_input);
    CHECK_THROWS_AS(product_sum_table({}), rejected_input);
}

TEST_CASE("verdicts follow the symbolic family, not the partial sums") {
    CHECK(density_check(ExponentSequence::affine(1.0, 0.0, 1), 3).verdict == Verdict::dense);
    CHECK(density_check(ExponentSequence::power(2.0, 2), 3).verdict == Verdict::not_dense);
    CHECK(density_check(ExponentSequence::primes(), 3).verdict == Verdict::dense);
    CHECK(density_check(ExponentSequence::explicit_list({1.0, 2.0, 3.0, 4.0}), 3).verdict ==
          Verdict::inconclusive);

    // A finite head cannot change what the tail decides.
    const auto tailed = ExponentSequence::with_tail({0.25, 0.75},
                                                    ExponentSequence::power(3.0, 1));
    CHECK(density_check(tailed, 3).verdict == Verdict::not_dense);

    CHECK(std::string(verdict_name(Verdict::dense)) == "dense");
    CHECK(std::string(verdict_name(Verdict::not_dense)) == "not-dense");
    CHECK(std::string(verdict_name(Verdict::inconclusive)) == "inconclusive");
}

TEST_CASE("evidence rows accumulate both partial sums") {
    const auto out = density_check(ExponentSequence::primes(), 3);
    REQUIRE(out.evidence.size() == 4); // n = 0..3
    CHECK(out.evidence[0].lambda == 0.0);
    CHECK(out.evidence[1].lambda == 2.0);
    CHECK(out.evidence[2].lambda == 3.0);
    CHECK(out.evidence[3].lambda == 5.0);

    // classical: the leading zero contributes nothing, then 1/2, 1/3, 1/5.
    CHECK(out.evidence[0].classical_sum == 0.0);
    CHECK(out.evidence[1].classical_sum == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(out.evidence[2].classical_sum == doctest::Approx(0.5 + 1.0 / 3.0).epsilon(1e-15));
    CHECK(out.evidence[3].classical_sum ==
          doctest::Approx(0.5 + 1.0 / 3.0 + 0.2).epsilon(1e-15));

    // full: lambda/(lambda^2+1) handles the zero term naturally.
    CHECK(out.evidence[0].full_sum == 0.0);
    CHECK(out.evidence[1].full_sum == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(out.evidence[2].full_sum == doctest::Approx(0.4 + 0.3).epsilon(1e-15));
    CHECK(out.evidence[3].full_sum == doctest::Approx(0.7 + 5.0 / 26.0).epsilon(1e-15));

    CHECK(out.classical_condition == ConditionClass::diverges);
    CHECK(out.verdict == Verdict::dense);
    CHECK_THROWS_AS(density_check(ExponentSequence::primes(), -1), rejected_input);
}

TEST_CASE("distance profile shrinks strictly while the span grows") {
    const auto rows = distance_profile(0.5, ExponentSequence::affine(1.0, 0.0, 1), 10);
    REQUIRE(rows.size() == 11);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].n == static_cast<long>(i));
        if (i > 0) CHECK(rows[i].delta < rows[i - 1].delta);
    }
    CHECK(rows.back().delta > 0.0);
}

TEST_CASE("profile rows agree with the standalone distance computation") {
    const ExponentSequence seq = ExponentSequence::primes();
    const auto rows = distance_profile(1.5, seq, 5);
    for (const auto& row : rows) {
        const auto direct = gram::distance_to_span(1.5, seq.values(row.n));
        CHECK(row.delta == direct.delta); // same code path, bit-identical
    }
}

TEST_CASE("a colliding target is rejected with its index") {
    CHECK_THROWS_WITH_AS(distance_profile(3.0, ExponentSequence::affine(1.0, 0.0, 1), 4),
                         doctest::Contains("collides with sequence value at index 2"),
                         rejected_input);
    CHECK_THROWS_AS(distance_profile(-1.0, ExponentSequence::primes(), 2), rejected_input);
    CHECK_THROWS_AS(distance_profile(0.5, ExponentSequence::primes(), -1), rejected_input);
}

} // TEST_SUITE
