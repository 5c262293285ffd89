#pragma once

#include <span>
#include <vector>

namespace aniso {

/// Gauss-Legendre rule on the reference interval [-1, 1].
struct GaussLegendre {
    std::vector<double> x;
    std::vector<double> w;
};

/// Nodes and weights for an n-point Gauss-Legendre rule (cached per n).
const GaussLegendre& gauss_legendre(int n);

/// Composite panel rule: n_panels equal panels on [a, b], each carrying an
/// n-point Gauss-Legendre rule mapped into the panel. Nodes are strictly
/// inside the panels, so the endpoints a and b are never evaluated.
struct PanelRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

PanelRule composite_gauss_legendre(double a, double b, int n_panels, int points_per_panel);

/// Uniform azimuthal grid phi_j = 2*pi*j/n, j = 0..n-1. The matching
/// trapezoid weight is 2*pi/n for every node; on periodic trigonometric
/// polynomials of degree < n this rule is exact.
std::vector<double> phi_nodes(int n);

/// Deterministic pairwise summation. Independent of thread count and,
/// unlike a plain left fold, keeps rounding error at O(log n) ulps.
double pairwise_sum(std::span<const double> values);

}  // namespace aniso
