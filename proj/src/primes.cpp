#include "muntzkit/primes.hpp"

#include <algorithm>
#include <cmath>

#include "muntzkit/errors.hpp"
#include "muntzkit/report_io.hpp"

namespace muntzkit::primes {

namespace {

constexpr long kSieveCeiling = 10000000;

std::vector<bool> sieve(long n) {
    if (n < 0) throw rejected_input("sieve bound must be nonnegative");
    if (n > kSieveCeiling)
        throw rejected_input("sieve bound exceeds the 10^7 ceiling");
    std::vector<bool> is_prime(static_cast<std::size_t>(n) + 1, true);
    if (n >= 0) is_prime[0] = false;
    if (n >= 1) is_prime[1] = false;
    for (long p = 2; p * p <= n; ++p)
        if (is_prime[static_cast<std::size_t>(p)])
            for (long m = p * p; m <= n; m += p) is_prime[static_cast<std::size_t>(m)] = false;
    return is_prime;
}

struct FloatEulerState {
    long double harmonic = 0.0L;
    long double basel = 0.0L;
    long double log_plus = 0.0L;  // log prod (1 + 1/p)
    long double log_minus = 0.0L; // log prod (1 - 1/p)

    void add(long i, bool i_is_prime) {
        harmonic += 1.0L / i;
        basel += 1.0L / (static_cast<long double>(i) * i);
        if (i_is_prime) {
            log_plus += std::log1p(1.0L / i);
            log_minus += std::log1p(-1.0L / i);
        }
    }
    bool inequality_holds() const {
        return harmonic <= std::exp(log_plus) * basel;
    }
};

struct ExactEulerState {
    Rational harmonic = 0;
    Rational basel = 0;
    Rational product_plus = 1;
    Rational product_minus = 1;

    void add(long i, bool i_is_prime) {
        harmonic += Rational(1, i);
        basel += Rational(1, i) * Rational(1, i);
        if (i_is_prime) {
            product_plus *= Rational(i + 1, i);
            product_minus *= Rational(i - 1, i);
        }
    }
    bool inequality_holds() const { return harmonic <= product_plus * basel; }
};

constexpr long kExactGuard = 1000;

void check_euler_preconditions(long n, bool exact) {
    if (n < 2) throw rejected_input("n must be at least 2");
    if (exact && n > kExactGuard)
        throw rejected_input("exact mode is guarded at n <= " + format_long(kExactGuard) +
                             "; use float mode beyond it");
}

} // namespace

std::vector<long> primes_up_to(long n) {
    const std::vector<bool> is_prime = sieve(std::max(n, 0L));
    std::vector<long> out;
    for (long p = 2; p <= n; ++p)
        if (is_prime[static_cast<std::size_t>(p)]) out.push_back(p);
    return out;
}

EulerReport euler_report(long n, bool exact) {
    check_euler_preconditions(n, exact);
    const std::vector<bool> is_prime = sieve(n);

    EulerReport report;
    report.n = n;
    report.exact_mode = exact;

    if (exact) {
        ExactEulerState state;
        for (long i = 1; i <= n; ++i) state.add(i, is_prime[static_cast<std::size_t>(i)]);
        report.harmonic = rational_to_double(state.harmonic);
        report.basel = rational_to_double(state.basel);
        report.product_plus = rational_to_double(state.product_plus);
        report.product_minus = rational_to_double(state.product_minus);
        report.inequality_holds = state.inequality_holds();
        report.harmonic_exact = state.harmonic;
        report.basel_exact = state.basel;
        report.product_plus_exact = state.product_plus;
        report.product_minus_exact = state.product_minus;
    } else {
        FloatEulerState state;
        for (long i = 1; i <= n; ++i) state.add(i, is_prime[static_cast<std::size_t>(i)]);
        report.harmonic = static_cast<double>(state.harmonic);
        report.basel = static_cast<double>(state.basel);
        report.product_plus = static_cast<double>(std::exp(state.log_plus));
        report.product_minus = static_cast<double>(std::exp(state.log_minus));
        report.inequality_holds = state.inequality_holds();
    }
    return report;
}

std::vector<EulerReport> euler_sweep(long n_max, bool exact) {
    check_euler_preconditions(n_max, exact);
    const std::vector<bool> is_prime = sieve(n_max);
    std::vector<EulerReport> reports;
    reports.reserve(static_cast<std::size_t>(n_max - 1));

    if (exact) {
        ExactEulerState state;
        state.add(1, false);
        for (long i = 2; i <= n_max; ++i) {
            state.add(i, is_prime[static_cast<std::size_t>(i)]);
            EulerReport report;
            report.n = i;
            report.exact_mode = true;
            report.harmonic = rational_to_double(state.harmonic);
            report.basel = rational_to_double(state.basel);
            report.product_plus = rational_to_double(state.product_plus);
            report.product_minus = rational_to_double(state.product_minus);
            report.inequality_holds = state.inequality_holds();
            report.harmonic_exact = state.harmonic;
            report.basel_exact = state.basel;
            report.product_plus_exact = state.product_plus;
            report.product_minus_exact = state.product_minus;
            reports.push_back(std::move(report));
        }
    } else {
        FloatEulerState state;
        state.add(1, false);
        for (long i = 2; i <= n_max; ++i) {
            state.add(i, is_prime[static_cast<std::size_t>(i)]);
            EulerReport report;
            report.n = i;
            report.exact_mode = false;
            report.harmonic = static_cast<double>(state.harmonic);
            report.basel = static_cast<double>(state.basel);
            report.product_plus = static_cast<double>(std::exp(state.log_plus));
            report.product_minus = static_cast<double>(std::exp(state.log_minus));
            report.inequality_holds = state.inequality_holds();
            reports.push_back(std::move(report));
        }
    }
    return reports;
}

std::optional<long> inequality_sweep(long n_max, bool exact) {
    check_euler_preconditions(n_max, exact);
    const std::vector<bool> is_prime = sieve(n_max);

    if (exact) {
        ExactEulerState state;
        state.add(1, false);
        for (long i = 2; i <= n_max; ++i) {
            state.add(i, is_prime[static_cast<std::size_t>(i)]);
            if (!state.inequality_holds()) return i;
        }
    } else {
        FloatEulerState state;
        state.add(1, false);
        for (long i = 2; i <= n_max; ++i) {
            state.add(i, is_prime[static_cast<std::size_t>(i)]);
            if (!state.inequality_holds()) return i;
        }
    }
    return std::nullopt;
}

gram::DistanceReport prime_exponent_distance(double q, long n) {
    if (!(q > 0.0) || !std::isfinite(q)) throw rejected_input("q must be positive and finite");
    if (q == std::floor(q) && q >= 2.0 && q <= static_cast<double>(kSieveCeiling)) {
        const long qi = static_cast<long>(q);
        const std::vector<bool> is_prime = sieve(qi);
        if (is_prime[static_cast<std::size_t>(qi)])
            throw rejected_input("q = " + format_long(qi) +
                                 " is prime and collides with the span exponents");
    }
    std::vector<double> exponents{0.0};
    for (long p : primes_up_to(n)) exponents.push_back(static_cast<double>(p));
    return gram::distance_to_span(q, exponents);
}

double moment_vanishing_residual(const MomentProvider& f, long n) {
    if (!f.moment || !f.norm_squared) throw rejected_input("moment provider is incomplete");
    std::vector<double> exponents{0.0};
    for (long p : primes_up_to(n)) exponents.push_back(static_cast<double>(p));
    std::vector<double> moments;
    moments.reserve(exponents.size());
    for (double lam : exponents) moments.push_back(f.moment(lam));
    const auto projection = gram::project_l2(moments, exponents, f.norm_squared());
    return std::max(0.0, *projection.residual_squared);
}

} // namespace muntzkit::primes
