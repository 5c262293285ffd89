#pragma once

#include <vector>

namespace aniso {

/// Cubic interpolating spline with not-a-knot end conditions.
/// Requires at least 4 strictly increasing abscissae; on exactly-cubic data
/// the interpolant reproduces the cubic (and its derivative) to roundoff.
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y);

    double value(double x) const;
    double derivative(double x) const;

    double x_front() const { return x_.front(); }
    double x_back() const { return x_.back(); }

private:
    std::size_t interval(double x) const;

    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_;  // second derivatives at the knots
};

}  // namespace aniso
