#include "muntzkit/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "muntzkit/errors.hpp"
#include "muntzkit/report_io.hpp"

namespace muntzkit {

namespace {

GaussLegendreTable build_table(int n) {
    GaussLegendreTable t;
    t.nodes.resize(static_cast<std::size_t>(n));
    t.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Chebyshev-flavored initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 64; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        t.nodes[static_cast<std::size_t>(i)] = x;
        t.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return t;
}

double panel_sum(const std::function<double(double)>& f, double a, double b,
                 const GaussLegendreTable& table) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    long double acc = 0.0L;
    for (std::size_t i = 0; i < table.nodes.size(); ++i) {
        const double x = mid + half * table.nodes[i];
        const double v = f(x);
        if (!std::isfinite(v))
            throw evaluation_error("non-finite sample value at x = " + format_double(x));
        acc += static_cast<long double>(table.weights[i]) * v;
    }
    return static_cast<double>(acc * half);
}

} // namespace

const GaussLegendreTable& gauss_legendre_table(int n) {
    if (n < 2 || n > 256) throw rejected_input("Gauss-Legendre size must be in [2, 256]");
    static std::map<int, GaussLegendreTable> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_table(n)).first;
    return it->second;
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureConfig& config) {
    if (!(std::isfinite(lo) && std::isfinite(hi))) throw rejected_input("integration bounds must be finite");
    if (lo < 0.0) throw rejected_input("integration lower bound must be >= 0");
    if (!(lo < hi)) throw rejected_input("integration needs lo < hi");
    if (config.panels < 1) throw rejected_input("panel count must be positive");
    if (!(config.grading_ratio > 0.0 && config.grading_ratio < 1.0))
        throw rejected_input("grading ratio must lie in (0, 1)");

    const GaussLegendreTable& table = gauss_legendre_table(config.points_per_panel);

    std::vector<double> edges;
    if (config.singular_exponent && lo == 0.0) {
        const double alpha = *config.singular_exponent;
        if (!(alpha > -1.0))
            throw rejected_input("singular exponent must exceed -1 for an integrable endpoint");
        // Grow the graded mesh until the innermost panel's share of the
        // mass, ~ratio^(panels*(1+alpha)), sits below double precision.
        int panels = config.panels;
        const double per_panel = (1.0 + alpha) * std::log(1.0 / config.grading_ratio);
        const int needed = static_cast<int>(std::ceil(16.0 * std::log(10.0) / per_panel)) + 1;
        panels = std::min(std::max(panels, needed), 4096);
        edges.resize(static_cast<std::size_t>(panels) + 1);
        edges[0] = 0.0;
        for (int k = 1; k <= panels; ++k)
            edges[static_cast<std::size_t>(k)] = hi * std::pow(config.grading_ratio, panels - k);
        edges.back() = hi;
    } else {
        const int panels = config.panels;
        edges.resize(static_cast<std::size_t>(panels) + 1);
        for (int k = 0; k <= panels; ++k)
            edges[static_cast<std::size_t>(k)] = lo + (hi - lo) * (static_cast<double>(k) / panels);
        edges.front() = lo;
        edges.back() = hi;
    }

    long double total = 0.0L;
    for (std::size_t k = 0; k + 1 < edges.size(); ++k)
        total += panel_sum(f, edges[k], edges[k + 1], table);
    return static_cast<double>(total);
}

} // namespace muntzkit
