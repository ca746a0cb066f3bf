#pragma once

#include <string>
#include <vector>

namespace muntzkit {

// Divergence class of a positive series attached to an exponent sequence.
enum class ConditionClass { diverges, converges, inconclusive };

std::string condition_class_name(ConditionClass c);

// ============================================================
// Exponent sequences lambda_0, lambda_1, ... feeding the density
// diagnostics and distance profiles.
//
// Emitted values must be pairwise distinct and positive, except that the
// very first value may be 0 (the constant function's exponent).  Symbolic
// families carry their divergence class with them, so density verdicts are
// decided analytically rather than from truncated numerics:
//
//   affine a*i+b  (a > 0)      sum 1/lambda_i diverges
//   power  i^k    (k > 0)      diverges iff k <= 1
//   primes 0,2,3,5,...         diverges
//   explicit lists             inconclusive (finitely many values say
//                              nothing); attach a symbolic tail to decide
// ============================================================
class ExponentSequence {
public:
    enum class Kind { explicit_list, affine, power, primes, explicit_with_tail };

    static ExponentSequence explicit_list(std::vector<double> values);
    // lambda_i = a*(start+i) + b
    static ExponentSequence affine(double a, double b, long start = 0);
    // lambda_i = (start+i)^k
    static ExponentSequence power(double k, long start = 1);
    // 0, 2, 3, 5, 7, ...
    static ExponentSequence primes();
    // Finite head followed, for verdict purposes, by the tail family.  The
    // tail also supplies numeric values past the head.
    static ExponentSequence with_tail(std::vector<double> head, ExponentSequence tail);

    // lambda_0 .. lambda_n (n+1 values).  Throws rejected_input when an
    // explicit list runs out or a family would emit an invalid value.
    std::vector<double> values(long n) const;

    Kind kind() const { return kind_; }
    // Divergence of sum 1/lambda_i (lambda_0 = 0 excluded).
    ConditionClass classical_condition() const;
    // Divergence of sum lambda_i / (lambda_i^2 + 1).
    ConditionClass full_condition() const;

    std::string describe() const;

private:
    ExponentSequence() = default;

    Kind kind_ = Kind::explicit_list;
    std::vector<double> list_;
    double a_ = 0.0, b_ = 0.0, k_ = 0.0;
    long start_ = 0;
    std::vector<ExponentSequence> tail_; // 0 or 1 elements
};

} // namespace muntzkit
