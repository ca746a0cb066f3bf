#include "muntzkit/density.hpp"

#include <cmath>

#include "muntzkit/errors.hpp"
#include "muntzkit/gram.hpp"
#include "muntzkit/report_io.hpp"

namespace muntzkit::density {

std::vector<ProductSumRow> product_sum_table(const std::vector<double>& a) {
    if (a.empty()) throw rejected_input("product/sum table needs at least one term");
    std::vector<ProductSumRow> rows;
    rows.reserve(a.size());
    long double log_product = 0.0L;
    long double sum = 0.0L;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double ai = a[i];
        if (!(ai > 1.0) || !std::isfinite(ai))
            throw rejected_input("term " + format_long(static_cast<long>(i + 1)) +
                                 " must exceed 1 (got " + format_double(ai) + ")");
        log_product += std::log1p(-1.0L / ai);
        sum += 1.0L / ai;
        rows.push_back({static_cast<long>(i + 1), static_cast<double>(std::exp(log_product)),
                        static_cast<double>(sum)});
    }
    return rows;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::dense: return "dense";
        case Verdict::not_dense: return "not-dense";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

DensityVerdict density_check(const ExponentSequence& seq, long n_max) {
    if (n_max < 0) throw rejected_input("n_max must be nonnegative");

    DensityVerdict out;
    out.sequence = seq.describe();
    out.classical_condition = seq.classical_condition();
    out.full_condition = seq.full_condition();
    switch (out.classical_condition) {
        case ConditionClass::diverges: out.verdict = Verdict::dense; break;
        case ConditionClass::converges: out.verdict = Verdict::not_dense; break;
        case ConditionClass::inconclusive: out.verdict = Verdict::inconclusive; break;
    }

    const std::vector<double> lambdas = seq.values(n_max);
    out.evidence.reserve(lambdas.size());
    long double classical = 0.0L;
    long double full = 0.0L;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const double lam = lambdas[i];
        if (lam > 0.0) classical += 1.0L / lam;
        full += static_cast<long double>(lam) / (static_cast<long double>(lam) * lam + 1.0L);
        out.evidence.push_back({static_cast<long>(i), lam, static_cast<double>(classical),
                                static_cast<double>(full)});
    }
    return out;
}

std::vector<ProfileRow> distance_profile(double q, const ExponentSequence& seq, long n_max) {
    if (!(q > 0.0) || !std::isfinite(q)) throw rejected_input("q must be positive and finite");
    if (n_max < 0) throw rejected_input("n_max must be nonnegative");

    const std::vector<double> lambdas = seq.values(n_max);
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        if (lambdas[i] == q)
            throw rejected_input("q = " + format_double(q) + " collides with sequence value at index " +
                                 format_long(static_cast<long>(i)) +
                                 "; the distance is identically zero from there on");

    std::vector<ProfileRow> rows;
    rows.reserve(lambdas.size());
    std::vector<double> span;
    span.reserve(lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        span.push_back(lambdas[i]);
        const auto report = gram::distance_to_span(q, span);
        rows.push_back({static_cast<long>(i), report.delta});
    }
    return rows;
}

} // namespace muntzkit::density
