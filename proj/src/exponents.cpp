#include "muntzkit/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "muntzkit/errors.hpp"
#include "muntzkit/report_io.hpp"

namespace muntzkit {

namespace {

// Small incremental prime enumerator for sequence values.  The sieve-based
// bulk generator lives with the prime-span operations; this one only has to
// hand out the first few hundred primes for profiles and tables.
long next_prime_after(long p) {
    long c = p < 2 ? 2 : p + 1;
    for (;; ++c) {
        if (c < 4) return c;
        if (c % 2 == 0) continue;
        bool composite = false;
        for (long d = 3; d * d <= c; d += 2)
            if (c % d == 0) { composite = true; break; }
        if (!composite) return c;
    }
}

void validate_emitted(const std::vector<double>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) throw rejected_input("sequence produced a non-finite exponent");
        if (i == 0) {
            if (v[i] < 0.0) throw rejected_input("sequence exponents must be nonnegative");
        } else if (v[i] <= 0.0) {
            throw rejected_input("only the leading exponent may be zero");
        }
    }
    std::vector<double> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw rejected_input("sequence exponents must be pairwise distinct");
}

} // namespace

std::string condition_class_name(ConditionClass c) {
    switch (c) {
        case ConditionClass::diverges: return "diverges";
        case ConditionClass::converges: return "converges";
        default: return "inconclusive";
    }
}

ExponentSequence ExponentSequence::explicit_list(std::vector<double> values) {
    ExponentSequence s;
    s.kind_ = Kind::explicit_list;
    s.list_ = std::move(values);
    if (s.list_.empty()) throw rejected_input("explicit exponent list must be nonempty");
    validate_emitted(s.list_);
    return s;
}

ExponentSequence ExponentSequence::affine(double a, double b, long start) {
    if (!(std::isfinite(a) && std::isfinite(b)) || a <= 0.0)
        throw rejected_input("affine family needs finite slope a > 0");
    if (start < 0) throw rejected_input("sequence start index must be >= 0");
    ExponentSequence s;
    s.kind_ = Kind::affine;
    s.a_ = a;
    s.b_ = b;
    s.start_ = start;
    return s;
}

ExponentSequence ExponentSequence::power(double k, long start) {
    if (!std::isfinite(k) || k <= 0.0) throw rejected_input("power family needs exponent k > 0");
    if (start < 0) throw rejected_input("sequence start index must be >= 0");
    ExponentSequence s;
    s.kind_ = Kind::power;
    s.k_ = k;
    s.start_ = start;
    return s;
}

ExponentSequence ExponentSequence::primes() {
    ExponentSequence s;
    s.kind_ = Kind::primes;
    return s;
}

ExponentSequence ExponentSequence::with_tail(std::vector<double> head, ExponentSequence tail) {
    if (head.empty()) throw rejected_input("explicit head must be nonempty");
    if (tail.kind_ == Kind::explicit_list || tail.kind_ == Kind::explicit_with_tail)
        throw rejected_input("tail descriptor must be a symbolic family");
    ExponentSequence s;
    s.kind_ = Kind::explicit_with_tail;
    s.list_ = std::move(head);
    s.tail_.push_back(std::move(tail));
    validate_emitted(s.list_);
    return s;
}

std::vector<double> ExponentSequence::values(long n) const {
    if (n < 0) throw rejected_input("sequence index must be >= 0");
    const std::size_t count = static_cast<std::size_t>(n) + 1;
    std::vector<double> out;
    out.reserve(count);
    switch (kind_) {
        case Kind::explicit_list:
            if (count > list_.size())
                throw rejected_input("explicit list has only " + format_long(static_cast<long>(list_.size())) +
                                     " values");
            out.assign(list_.begin(), list_.begin() + static_cast<long>(count));
            break;
        case Kind::affine:
            for (std::size_t i = 0; i < count; ++i)
                out.push_back(a_ * static_cast<double>(start_ + static_cast<long>(i)) + b_);
            break;
        case Kind::power:
            for (std::size_t i = 0; i < count; ++i)
                out.push_back(std::pow(static_cast<double>(start_ + static_cast<long>(i)), k_));
            break;
        case Kind::primes: {
            long p = 0;
            out.push_back(0.0);
            while (out.size() < count) {
                p = next_prime_after(p);
                out.push_back(static_cast<double>(p));
            }
            break;
        }
        case Kind::explicit_with_tail: {
            out = list_;
            if (out.size() > count) out.resize(count);
            long tail_index = 0;
            while (out.size() < count) {
                const auto tail_vals = tail_.front().values(tail_index);
                out.push_back(tail_vals.back());
                ++tail_index;
            }
            break;
        }
    }
    validate_emitted(out);
    return out;
}

ConditionClass ExponentSequence::classical_condition() const {
    switch (kind_) {
        case Kind::affine: return ConditionClass::diverges;
        case Kind::power: return k_ <= 1.0 ? ConditionClass::diverges : ConditionClass::converges;
        case Kind::primes: return ConditionClass::diverges;
        case Kind::explicit_with_tail: return tail_.front().classical_condition();
        default: return ConditionClass::inconclusive;
    }
}

ConditionClass ExponentSequence::full_condition() const {
    // Every symbolic family here increases to infinity, where the terms
    // lambda/(lambda^2+1) and 1/lambda diverge or converge together.
    return classical_condition();
}

std::string ExponentSequence::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::explicit_list:
            os << "explicit(" << list_.size() << " values)";
            break;
        case Kind::affine:
            os << "affine(" << format_double(a_) << "*i";
            if (b_ > 0.0) os << "+" << format_double(b_);
            if (b_ < 0.0) os << format_double(b_);
            os << ", start=" << start_ << ")";
            break;
        case Kind::power:
            os << "power(i^" << format_double(k_) << ", start=" << start_ << ")";
            break;
        case Kind::primes:
            os << "primes";
            break;
        case Kind::explicit_with_tail:
            os << "explicit(" << list_.size() << " values)+tail[" << tail_.front().describe() << "]";
            break;
    }
    return os.str();
}

} // namespace muntzkit
