#include "vdwsurf/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace vdwsurf {

namespace {

GaussRule compute_gauss_legendre(int n) {
    // Newton iteration on the Legendre polynomial, seeded with the Chebyshev
    // estimate; symmetric pairs are filled together.
    GaussRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    int mid = (n + 1) / 2;
    for (int i = 0; i < mid; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.x[i] = -x;
        rule.x[n - 1 - i] = x;
        rule.w[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.w[n - 1 - i] = rule.w[i];
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    static std::map<int, GaussRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

namespace {

// One composite estimate with total_nodes spread over equal panels in t,
// where xi = t/(1-t) maps [0,1) onto the half line.
double estimate(const std::function<double(double)>& f, int total_nodes) {
    int order = total_nodes < 16 ? total_nodes : 16;
    int panels = total_nodes / order;
    const GaussRule& rule = gauss_legendre(order);
    double h = 1.0 / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        double a = p * h;
        for (int k = 0; k < order; ++k) {
            double t = a + 0.5 * h * (rule.x[k] + 1.0);
            double one_m = 1.0 - t;
            double xi = t / one_m;
            sum += 0.5 * h * rule.w[k] * f(xi) / (one_m * one_m);
        }
    }
    return sum;
}

}  // namespace

double halfline_integral(const std::function<double(double)>& f,
                         const QuadratureSpec& spec) {
    if (!(spec.rel_tol > 0.0))
        throw std::invalid_argument("halfline_integral: rel_tol must be > 0");
    if (spec.base_nodes < 8)
        throw std::invalid_argument("halfline_integral: base_nodes must be >= 8");
    if (spec.max_doublings < 1)
        throw std::invalid_argument("halfline_integral: max_doublings must be >= 1");

    int n = spec.base_nodes;
    double prev = estimate(f, n);
    double cur = prev;
    for (int k = 0; k < spec.max_doublings; ++k) {
        n *= 2;
        cur = estimate(f, n);
        double scale = std::max(std::abs(cur), std::abs(prev));
        if (std::abs(cur - prev) <= spec.rel_tol * scale) return cur;
        if (k + 1 < spec.max_doublings) prev = cur;
    }
    throw QuadratureError("halfline_integral: no convergence after " +
                              std::to_string(spec.max_doublings) + " doublings (" +
                              std::to_string(n) + " nodes)",
                          cur, prev);
}

}  // namespace vdwsurf
