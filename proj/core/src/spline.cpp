#include "aniso/spline.hpp"

#include <algorithm>
#include <stdexcept>

namespace aniso {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y))
{
    const std::size_t n = x_.size();
    if (n < 4)
        throw std::invalid_argument("CubicSpline: not-a-knot rule needs at least 4 samples");
    if (y_.size() != n)
        throw std::invalid_argument("CubicSpline: size mismatch");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(x_[i] < x_[i + 1]))
            throw std::invalid_argument("CubicSpline: abscissae must be strictly increasing");

    std::vector<double> h(n - 1), d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        d[i] = (y_[i + 1] - y_[i]) / h[i];
    }

    // Solve for the knot second derivatives M_1..M_{n-2}; M_0 and M_{n-1}
    // follow from third-derivative continuity at the first and last
    // interior knots (not-a-knot).
    const std::size_t m = n - 2;
    std::vector<double> lower(m), diag(m), upper(m), rhs(m);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const std::size_t r = i - 1;
        lower[r] = h[i - 1] / 6.0;
        diag[r] = (h[i - 1] + h[i]) / 3.0;
        upper[r] = h[i] / 6.0;
        rhs[r] = d[i] - d[i - 1];
    }
    {
        const double r0 = h[0] / h[1];
        diag[0] += h[0] * (1.0 + r0) / 6.0;
        upper[0] = (h[1] * h[1] - h[0] * h[0]) / (6.0 * h[1]);
        const double s0 = h[n - 2] / h[n - 3];
        diag[m - 1] += h[n - 2] * (1.0 + s0) / 6.0;
        lower[m - 1] = (h[n - 3] * h[n - 3] - h[n - 2] * h[n - 2]) / (6.0 * h[n - 3]);
    }

    // Thomas elimination.
    for (std::size_t r = 1; r < m; ++r) {
        const double w = lower[r] / diag[r - 1];
        diag[r] -= w * upper[r - 1];
        rhs[r] -= w * rhs[r - 1];
    }
    m_.assign(n, 0.0);
    m_[n - 2] = rhs[m - 1] / diag[m - 1];
    for (std::size_t r = m - 1; r-- > 0;)
        m_[r + 1] = (rhs[r] - upper[r] * m_[r + 2]) / diag[r];

    m_[0] = m_[1] + (h[0] / h[1]) * (m_[1] - m_[2]);
    m_[n - 1] = m_[n - 2] + (h[n - 2] / h[n - 3]) * (m_[n - 2] - m_[n - 3]);
}

std::size_t CubicSpline::interval(double x) const
{
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = (it == x_.begin()) ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
    return std::min(i, x_.size() - 2);
}

double CubicSpline::value(double x) const
{
    const std::size_t i = interval(x);
    const double h = x_[i + 1] - x_[i];
    const double t = x - x_[i];
    const double di = (y_[i + 1] - y_[i]) / h;
    const double b = di - h * (2.0 * m_[i] + m_[i + 1]) / 6.0;
    return y_[i] + t * (b + t * (0.5 * m_[i] + t * (m_[i + 1] - m_[i]) / (6.0 * h)));
}

double CubicSpline::derivative(double x) const
{
    const std::size_t i = interval(x);
    const double h = x_[i + 1] - x_[i];
    const double t = x - x_[i];
    const double di = (y_[i + 1] - y_[i]) / h;
    const double b = di - h * (2.0 * m_[i] + m_[i + 1]) / 6.0;
    return b + t * (m_[i] + t * (m_[i + 1] - m_[i]) / (2.0 * h));
}

}  // namespace aniso
