#pragma once

#include <functional>
#include <optional>

namespace muntzkit {

// Composite Gauss-Legendre scheme description.
//
// Default: 64 nodes per panel across 32 uniform panels.  When
// singular_exponent is set (the integrand behaves like x^alpha near 0 for
// some alpha in (-1, 0)) and the interval starts at 0, the panels are
// instead graded geometrically toward 0 with the given ratio, and the panel
// count is raised, if needed, until the innermost panel carries less than
// ~1e-16 of the relative mass.  Nodes are open, so the integrand is never
// sampled at 0 itself.
struct QuadratureConfig {
    int points_per_panel = 64;
    int panels = 32;
    double grading_ratio = 0.25;
    std::optional<double> singular_exponent;
};

// Integral of f over [lo, hi] with lo >= 0.  Every sample is checked; a
// non-finite value raises evaluation_error naming the sample point.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureConfig& config = {});

// Nodes and weights for n-point Gauss-Legendre on [-1, 1], computed by
// Newton iteration on the Legendre recurrence and cached per n.
struct GaussLegendreTable {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendreTable& gauss_legendre_table(int n);

} // namespace muntzkit
