#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "muntzkit/gram.hpp"
#include "muntzkit/rational.hpp"

namespace muntzkit::primes {

// ============================================================
// The elementary route to "the prime reciprocal series diverges": the
// harmonic sum is trapped under (product over primes of 1+1/p) times the
// convergent square sum, so the prime product must blow up.  This module
// computes all four quantities (exactly or in floating point), checks the
// inequality, and feeds prime exponent sets to the distance machinery.
// ============================================================

// All primes <= n, ascending.  Guarded at 10^7 (desk scale).
std::vector<long> primes_up_to(long n);

struct EulerReport {
    long n = 0;
    bool exact_mode = false;
    double harmonic = 0.0;      // sum_{i<=n} 1/i
    double product_plus = 0.0;  // prod_{p<=n} (1 + 1/p)
    double product_minus = 0.0; // prod_{p<=n} (1 - 1/p)
    double basel = 0.0;         // sum_{i<=n} 1/i^2
    bool inequality_holds = false; // harmonic <= product_plus * basel
    // Present in exact mode only.
    std::optional<Rational> harmonic_exact, product_plus_exact, product_minus_exact, basel_exact;
};

// n >= 2.  Exact mode runs in rational arithmetic (guarded at n <= 1000);
// float mode accumulates the products in log space.
EulerReport euler_report(long n, bool exact);

// One report per threshold n = 2..n_max, computed incrementally (a single
// pass, not n_max independent reports).
std::vector<EulerReport> euler_sweep(long n_max, bool exact);

// Checks the inequality for every n in 2..n_max incrementally; returns the
// first violating n, or nothing when it holds throughout (as it must).
std::optional<long> inequality_sweep(long n_max, bool exact);

// Distance from x^q to span{1, x^p : p prime <= n} in L2[0,1].
// q must be positive and not a prime integer (a prime q collides with the
// span and the distance is identically zero from that threshold on).
gram::DistanceReport prime_exponent_distance(double q, long n);

// Caller-supplied access to a target function's inner products; the
// implementations typically run quadrature.
struct MomentProvider {
    std::function<double(double)> moment; // lambda -> <f, x^lambda>
    std::function<double()> norm_squared; // <f, f>
};

// Residual^2 of the L2 projection of f onto span{1, x^p : p <= n}.
// Density of the prime span means this tends to 0 for every continuous f;
// a function with vanishing mean and prime moments would keep residual^2
// pinned at <f,f>, which is the contradiction the diagnostic surfaces.
double moment_vanishing_residual(const MomentProvider& f, long n);

} // namespace muntzkit::primes
