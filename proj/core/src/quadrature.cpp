#include "aniso/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace aniso {

namespace {

GaussLegendre compute_gauss_legendre(int n)
{
    if (n < 1)
        throw std::invalid_argument("gauss_legendre: order must be >= 1");

    GaussLegendre rule;
    rule.x.resize(n);
    rule.w.resize(n);

    // Newton iteration on P_n, seeded with the Chebyshev-like estimate.
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence: p2 -> P_n(x), p1 -> P_{n-1}(x)
            double p2 = 1.0;
            double p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p0 = p1;
                p1 = p2;
                p2 = ((2.0 * j + 1.0) * x * p1 - j * p0) / (j + 1.0);
            }
            dp = n * (x * p2 - p1) / (x * x - 1.0);
            const double dx = p2 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        rule.x[i] = -x;
        rule.x[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.w[i] = w;
        rule.w[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        rule.x[n / 2] = 0.0;
    return rule;
}

}  // namespace

const GaussLegendre& gauss_legendre(int n)
{
    static std::mutex mutex;
    static std::map<int, GaussLegendre> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

PanelRule composite_gauss_legendre(double a, double b, int n_panels, int points_per_panel)
{
    if (!(b > a))
        throw std::invalid_argument("composite_gauss_legendre: empty interval");
    if (n_panels < 1 || points_per_panel < 1)
        throw std::invalid_argument("composite_gauss_legendre: non-positive rule size");

    const GaussLegendre& gl = gauss_legendre(points_per_panel);
    const double width = (b - a) / n_panels;

    PanelRule rule;
    rule.nodes.reserve(static_cast<std::size_t>(n_panels) * points_per_panel);
    rule.weights.reserve(rule.nodes.capacity());
    for (int p = 0; p < n_panels; ++p) {
        const double lo = a + p * width;
        const double mid = lo + 0.5 * width;
        for (int j = 0; j < points_per_panel; ++j) {
            rule.nodes.push_back(mid + 0.5 * width * gl.x[j]);
            rule.weights.push_back(0.5 * width * gl.w[j]);
        }
    }
    return rule;
}

std::vector<double> phi_nodes(int n)
{
    if (n < 1)
        throw std::invalid_argument("phi_nodes: need at least one node");
    std::vector<double> phis(n);
    for (int j = 0; j < n; ++j)
        phis[j] = 2.0 * std::numbers::pi * j / n;
    return phis;
}

double pairwise_sum(std::span<const double> values)
{
    if (values.size() <= 8) {
        double s = 0.0;
        for (double v : values)
            s += v;
        return s;
    }
    const std::size_t mid = values.size() / 2;
    return pairwise_sum(values.first(mid)) + pairwise_sum(values.subspan(mid));
}

}  // namespace aniso
