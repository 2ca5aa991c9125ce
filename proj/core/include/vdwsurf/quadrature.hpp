#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vdwsurf {

struct QuadratureSpec {
    double rel_tol = 1e-9;  ///< relative agreement between successive estimates
    int max_doublings = 16; ///< node-count doublings before giving up
    int base_nodes = 32;    ///< nodes of the first estimate, >= 8
};

/// Thrown when the doubling sequence fails to settle; carries the last two
/// estimates so the caller can see how far apart they still were.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double last, double previous)
        : std::runtime_error(what), last_estimate(last), previous_estimate(previous) {}

    double last_estimate;
    double previous_estimate;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};

/// Rule of the given order, computed once per order and cached
/// (thread-safe). Nodes come out ascending; weights sum to 2.
const GaussRule& gauss_legendre(int order);

/// Integral of f over [0, inf). The half line is compactified through
/// xi = t / (1 - t) and the unit interval is covered with composite
/// Gauss-Legendre panels. The total node count doubles until two successive
/// estimates agree to spec.rel_tol (relative to the larger magnitude; exact
/// zeros therefore converge immediately). Intended for the smooth, decaying
/// imaginary-axis integrands of this library; it is not an adaptive
/// general-purpose integrator.
double halfline_integral(const std::function<double(double)>& f,
                         const QuadratureSpec& spec = {});

}  // namespace vdwsurf
