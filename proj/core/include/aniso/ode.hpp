#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace aniso {

/// Thrown when the adaptive step size underflows (stiffness or a
/// singularity in the right-hand side); carries the failing eta.
class OdeError : public std::runtime_error {
public:
    OdeError(const std::string& what, double eta)
        : std::runtime_error(what + " at eta = " + std::to_string(eta)), eta_(eta)
    {
    }
    double eta() const { return eta_; }

private:
    double eta_;
};

struct OdeStats {
    std::size_t n_accepted = 0;
    std::size_t n_rejected = 0;
    std::size_t n_rhs = 0;
    double mean_step(double t0, double t1) const
    {
        return n_accepted ? (t1 - t0) / static_cast<double>(n_accepted) : 0.0;
    }
};

/// One accepted step with endpoint derivatives; enough for cubic Hermite
/// interpolation anywhere inside [t0, t1].
template <std::size_t N>
struct OdeStep {
    double t0, t1;
    std::array<double, N> y0, y1, f0, f1;
};

/// Cubic Hermite evaluation of an accepted step at t in [step.t0, step.t1].
template <std::size_t N>
std::array<double, N> hermite_eval(const OdeStep<N>& step, double t)
{
    const double h = step.t1 - step.t0;
    const double s = (t - step.t0) / h;
    const double s2 = s * s;
    const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
    const double h10 = s * (1.0 - s) * (1.0 - s);
    const double h01 = s2 * (3.0 - 2.0 * s);
    const double h11 = s2 * (s - 1.0);
    std::array<double, N> y;
    for (std::size_t i = 0; i < N; ++i)
        y[i] = h00 * step.y0[i] + h * h10 * step.f0[i] + h01 * step.y1[i] + h * h11 * step.f1[i];
    return y;
}

namespace detail {
// Dormand-Prince 5(4) tableau.
inline constexpr double a21 = 1.0 / 5.0;
inline constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
inline constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
inline constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                        a54 = -212.0 / 729.0;
inline constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                        a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
inline constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                        a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
inline constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
inline constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                        e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
}  // namespace detail

/// Adaptive Dormand-Prince 5(4) driver: 5th-order propagation with an
/// embedded 4th-order error estimate (FSAL); absolute and relative
/// tolerance both equal to tol. The driver lands exactly on every time in
/// `stops` (sorted ascending, inside (t0, t1]) and on t1; `on_stop(t, y)`
/// fires at those points. `on_step` receives every accepted step, for
/// observers and dense output. Either callback may be a no-op lambda.
template <std::size_t N, class Rhs, class OnStop, class OnStep>
OdeStats integrate(Rhs&& rhs, double t0, double t1, std::array<double, N>& y, double tol,
                   std::span<const double> stops, OnStop&& on_stop, OnStep&& on_step)
{
    using namespace detail;
    if (!(t1 > t0))
        throw std::invalid_argument("integrate: need t1 > t0");
    if (!(tol > 0.0))
        throw std::invalid_argument("integrate: tolerance must be positive");

    constexpr double safety = 0.9;
    constexpr double min_shrink = 0.2;  // bounds on the step-size ratio
    constexpr double max_grow = 5.0;
    const double eps = std::numeric_limits<double>::epsilon();

    OdeStats stats;
    double t = t0;
    std::array<double, N> k1, k2, k3, k4, k5, k6, k7, ytmp, ynew;

    rhs(t, y, k1);
    ++stats.n_rhs;

    // Initial step from the magnitudes of y and f; the controller refines it.
    double h_free;
    {
        double ny = 0.0, nf = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double sc = tol + tol * std::abs(y[i]);
            ny += (y[i] / sc) * (y[i] / sc);
            nf += (k1[i] / sc) * (k1[i] / sc);
        }
        h_free = (nf > 1e-20 && ny > 1e-20) ? 0.01 * std::sqrt(ny / nf) : 1e-6;
        h_free = std::min(h_free, t1 - t0);
    }

    std::size_t next_stop = 0;
    while (next_stop < stops.size() && stops[next_stop] <= t0)
        ++next_stop;

    const std::size_t max_steps = 200'000'000;
    std::size_t steps = 0;

    while (t < t1) {
        const double target = (next_stop < stops.size() && stops[next_stop] <= t1)
                                  ? stops[next_stop]
                                  : t1;
        bool clipped = false;
        double h = h_free;
        // Land exactly on the target; absorb a sliver-sized following step.
        if (t + 1.01 * h >= target) {
            h = target - t;
            clipped = true;
        }

        if (++steps > max_steps)
            throw OdeError("integrate: step budget exhausted", t);
        if (h < 16.0 * eps * std::max(1.0, std::abs(t)))
            throw OdeError("integrate: step size underflow", t);

        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * a21 * k1[i];
        rhs(t + c2 * h, ytmp, k2);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, ytmp, k3);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, ytmp, k4);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, ytmp, k5);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        rhs(t + h, ytmp, k6);
        for (std::size_t i = 0; i < N; ++i)
            ynew[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
        rhs(t + h, ynew, k7);
        stats.n_rhs += 6;

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double ee =
                h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc = tol + tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err += (ee / sc) * (ee / sc);
        }
        err = std::sqrt(err / N);

        if (err > 1.0) {
            ++stats.n_rejected;
            h_free = h * std::max(min_shrink, safety * std::pow(err, -0.2));
            continue;
        }

        // Accepted.
        ++stats.n_accepted;
        const double t_new = clipped ? target : t + h;
        on_step(OdeStep<N>{t, t_new, y, ynew, k1, k7});

        t = t_new;
        y = ynew;
        k1 = k7;  // FSAL

        if (clipped && next_stop < stops.size() && target == stops[next_stop]) {
            on_stop(t, y);
            ++next_stop;
        }

        const double grow = (err > 1e-30)
                                ? std::min(max_grow, std::max(min_shrink, safety * std::pow(err, -0.2)))
                                : max_grow;
        // A clipped step must not shrink the controller's free estimate.
        h_free = std::max(h_free, h * grow);
    }
    return stats;
}

}  // namespace aniso
