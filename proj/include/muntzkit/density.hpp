#pragma once

#include <string>
#include <vector>

#include "muntzkit/exponents.hpp"

namespace muntzkit::density {

// ============================================================
// Density diagnostics for monomial exponent sequences: the classical
// criterion (sum of reciprocals diverges) and the unrestricted variant
// (sum of lambda/(lambda^2+1) diverges), plus the product/series
// equivalence that powers both.
// ============================================================

// One row of the product/series comparison: after n terms,
// product = prod_{i<=n} (1 - 1/a_i) and sum = sum_{i<=n} 1/a_i.
// The product tends to 0 exactly when the sum diverges.
struct ProductSumRow {
    long n = 0;
    double product = 0.0;
    double sum = 0.0;
};

// Rows n = 1..a.size().  Every a_i must exceed 1 (rejected naming the
// 1-based index otherwise).  Products are accumulated in log space.
std::vector<ProductSumRow> product_sum_table(const std::vector<double>& a);

// ============================================================
// Density verdicts.
// ============================================================

enum class Verdict { dense, not_dense, inconclusive };
const char* verdict_name(Verdict v);

// Partial sums alongside each exponent: classical_sum skips any leading
// zero exponent; full_sum accumulates lambda/(lambda^2+1).
struct EvidenceRow {
    long n = 0;
    double lambda = 0.0;
    double classical_sum = 0.0;
    double full_sum = 0.0;
};

struct DensityVerdict {
    std::string sequence;
    ConditionClass classical_condition = ConditionClass::inconclusive;
    ConditionClass full_condition = ConditionClass::inconclusive;
    Verdict verdict = Verdict::inconclusive;
    std::vector<EvidenceRow> evidence;
};

// Decides density of span{ x^{lambda_i} } in C[0,1] for the sequence.
// The verdict is settled symbolically per family (partial sums can never
// prove divergence); explicit finite lists come back inconclusive unless
// a tail descriptor decides them.  Evidence rows cover n = 0..n_max.
DensityVerdict density_check(const ExponentSequence& seq, long n_max);

// ============================================================
// Distance decay profile.
// ============================================================

struct ProfileRow {
    long n = 0;
    double delta = 0.0;
};

// delta_n = L2 distance from x^q to span{ x^{lambda_0}, ..., x^{lambda_n} }
// for n = 0..n_max.  Nonincreasing in n since the span only grows.
// q must be positive and must not collide with any of the first n_max+1
// sequence values (the distance would be identically zero from there on).
std::vector<ProfileRow> distance_profile(double q, const ExponentSequence& seq, long n_max);

} // namespace muntzkit::density
