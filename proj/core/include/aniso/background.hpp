#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "aniso/spline.hpp"

namespace aniso {

/// Comoving wavevector in spherical form. k is the radial wavenumber,
/// theta the polar angle from the third axis, phi the azimuth.
struct Mode {
    double k = 1.0;
    double theta = 0.0;
    double phi = 0.0;

    /// Unit direction (sin t cos p, sin t sin p, cos t).
    std::array<double, 3> direction() const
    {
        const double st = std::sin(theta);
        return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
    }

    std::array<double, 3> wavevector() const
    {
        auto d = direction();
        return {k * d[0], k * d[1], k * d[2]};
    }
};

enum class ModelKind { Static, PowerLaw, Exponential, TanhStep, Tabulated };

struct ScaleFactors {
    std::array<double, 3> alpha;
    std::array<double, 3> alpha_dot;
};

/// Homogeneous anisotropic background: three axis scale factors
/// alpha_i(eta) with analytic eta-derivatives. Immutable after
/// construction and safe to share across threads.
class BackgroundModel {
public:
    static BackgroundModel make_static(const std::array<double, 3>& c);
    /// alpha_i = (eta/eta_ref)^{q_i}; defined for eta on the same side of
    /// zero as eta_ref.
    static BackgroundModel make_power_law(const std::array<double, 3>& q, double eta_ref);
    /// alpha_i = exp(lambda_i * eta).
    static BackgroundModel make_exponential(const std::array<double, 3>& lambda);
    /// alpha_i = A_i + B_i * tanh(rho * eta), A_i > |B_i| >= 0, rho > 0.
    static BackgroundModel make_tanh_step(const std::array<double, 3>& A,
                                          const std::array<double, 3>& B, double rho);
    /// Cubic (not-a-knot) interpolation of sampled alpha_i over a strictly
    /// increasing eta grid; derivative taken from the interpolant.
    static BackgroundModel make_tabulated(std::vector<double> eta,
                                          std::array<std::vector<double>, 3> alpha);

    ModelKind kind() const { return kind_; }

    /// Scale factors and analytic derivatives at eta.
    /// Throws std::domain_error if any alpha_i(eta) <= 0 and
    /// std::out_of_range outside a tabulated grid.
    ScaleFactors eval(double eta) const;

    /// Largest eta-interval on which the model may be evaluated.
    std::pair<double, double> window() const;

    /// True when the three axes coincide for all eta.
    bool isotropic() const;

    /// Same model with the axes permuted: axis i of the result is axis
    /// perm[i] of *this.
    BackgroundModel permuted_axes(const std::array<int, 3>& perm) const;

    std::string describe() const;

private:
    BackgroundModel() = default;

    ModelKind kind_ = ModelKind::Static;
    std::array<double, 3> p0_{};  // c / q / lambda / A
    std::array<double, 3> p1_{};  // B
    double scalar_ = 0.0;         // eta_ref / rho
    std::array<CubicSpline, 3> spline_{};
    std::pair<double, double> table_window_{0.0, 0.0};
};

/// Geometric mean scale a = (a1 a2 a3)^(1/3).
double mean_scale(const std::array<double, 3>& alpha);

/// Expansion rates C_i = alpha_dot_i / alpha_i.
std::array<double, 3> expansion_rates(const std::array<double, 3>& alpha,
                                      const std::array<double, 3>& alpha_dot);

/// Anisotropy scalar: sum of squared pairwise differences of the expansion
/// rates. Zero exactly when the expansion is isotropic.
double anisotropy_Q(const std::array<double, 3>& C);

/// Direction-dependent inverse scale
/// mu = sqrt(sin^2 t cos^2 p / a1^2 + sin^2 t sin^2 p / a2^2 + cos^2 t / a3^2);
/// reduces to 1/a in the isotropic limit.
double direction_mu(const std::array<double, 3>& alpha, double theta, double phi);

/// Effective mode frequency K0 = sqrt(k^2 + m^2 g^2).
/// Throws std::domain_error for the k = m = 0 zero mode.
double effective_frequency(double k, double m, double g);

/// Everything the evolution equations need at one (eta, direction):
/// the scale factors, the mean scale a, the direction scale mu, the
/// frequency K0, g = a/mu, expansion rates C_i, anisotropy Q, and the
/// two couplings W = mu_dot/mu + K0_dot/K0 and Wt = Q/(mu K0).
struct GeometryAtTime {
    double eta;
    std::array<double, 3> alpha;
    std::array<double, 3> alpha_dot;
    std::array<double, 3> C;
    double a;
    double mu;
    double K0;
    double g;
    double Q;
    double W;
    double Wt;
};

/// Precomputed per-mode context: fixes the squared direction cosines once,
/// then evaluates GeometryAtTime cheaply along eta. All derivatives are
/// chain-rule analytic; finite differences appear only in tests.
class ModeGeometry {
public:
    ModeGeometry(const BackgroundModel& model, const Mode& mode, double mass);

    GeometryAtTime at(double eta) const;

    double mass() const { return mass_; }
    double k() const { return k_; }

private:
    const BackgroundModel* model_;
    double k_;
    double mass_;
    std::array<double, 3> dir_sq_;  // squared direction cosines
};

/// One-shot evaluation of all geometric quantities for (model, mode, m, eta).
GeometryAtTime couplings(const BackgroundModel& model, const Mode& mode, double mass, double eta);

}  // namespace aniso
