#include "aniso/background.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace aniso {

namespace {

void require(bool ok, const char* what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

}  // namespace

BackgroundModel BackgroundModel::make_static(const std::array<double, 3>& c)
{
    for (double ci : c)
        require(ci > 0.0, "static model: scale factors must be positive");
    BackgroundModel m;
    m.kind_ = ModelKind::Static;
    m.p0_ = c;
    return m;
}

BackgroundModel BackgroundModel::make_power_law(const std::array<double, 3>& q, double eta_ref)
{
    require(eta_ref != 0.0, "power-law model: reference eta must be nonzero");
    BackgroundModel m;
    m.kind_ = ModelKind::PowerLaw;
    m.p0_ = q;
    m.scalar_ = eta_ref;
    return m;
}

BackgroundModel BackgroundModel::make_exponential(const std::array<double, 3>& lambda)
{
    BackgroundModel m;
    m.kind_ = ModelKind::Exponential;
    m.p0_ = lambda;
    return m;
}

BackgroundModel BackgroundModel::make_tanh_step(const std::array<double, 3>& A,
                                                const std::array<double, 3>& B, double rho)
{
    for (int i = 0; i < 3; ++i)
        require(A[i] > std::abs(B[i]), "tanh-step model: need A_i > |B_i| >= 0");
    require(rho > 0.0, "tanh-step model: steepness must be positive");
    BackgroundModel m;
    m.kind_ = ModelKind::TanhStep;
    m.p0_ = A;
    m.p1_ = B;
    m.scalar_ = rho;
    return m;
}

BackgroundModel BackgroundModel::make_tabulated(std::vector<double> eta,
                                                std::array<std::vector<double>, 3> alpha)
{
    require(eta.size() >= 4, "tabulated model: need at least 4 samples");
    for (const auto& a : alpha) {
        require(a.size() == eta.size(), "tabulated model: column length mismatch");
        for (double v : a)
            require(v > 0.0, "tabulated model: sampled scale factors must be positive");
    }
    BackgroundModel m;
    m.kind_ = ModelKind::Tabulated;
    m.table_window_ = {eta.front(), eta.back()};
    for (int i = 0; i < 3; ++i)
        m.spline_[i] = CubicSpline(eta, alpha[i]);
    return m;
}

ScaleFactors BackgroundModel::eval(double eta) const
{
    ScaleFactors s{};
    switch (kind_) {
    case ModelKind::Static:
        s.alpha = p0_;
        s.alpha_dot = {0.0, 0.0, 0.0};
        break;
    case ModelKind::PowerLaw: {
        const double r = eta / scalar_;
        if (!(r > 0.0))
            throw std::domain_error("power-law background undefined at eta = " + std::to_string(eta));
        for (int i = 0; i < 3; ++i) {
            s.alpha[i] = std::pow(r, p0_[i]);
            s.alpha_dot[i] = p0_[i] * s.alpha[i] / eta;
        }
        break;
    }
    case ModelKind::Exponential:
        for (int i = 0; i < 3; ++i) {
            s.alpha[i] = std::exp(p0_[i] * eta);
            s.alpha_dot[i] = p0_[i] * s.alpha[i];
        }
        break;
    case ModelKind::TanhStep: {
        const double th = std::tanh(scalar_ * eta);
        const double sech2 = 1.0 - th * th;
        for (int i = 0; i < 3; ++i) {
            s.alpha[i] = p0_[i] + p1_[i] * th;
            s.alpha_dot[i] = p1_[i] * scalar_ * sech2;
        }
        break;
    }
    case ModelKind::Tabulated:
        if (eta < table_window_.first || eta > table_window_.second)
            throw std::out_of_range("tabulated background queried at eta = " + std::to_string(eta) +
                                    " outside grid [" + std::to_string(table_window_.first) + ", " +
                                    std::to_string(table_window_.second) + "]");
        for (int i = 0; i < 3; ++i) {
            s.alpha[i] = spline_[i].value(eta);
            s.alpha_dot[i] = spline_[i].derivative(eta);
        }
        break;
    }
    for (double a : s.alpha)
        if (!(a > 0.0))
            throw std::domain_error("background scale factor non-positive at eta = " + std::to_string(eta));
    return s;
}

std::pair<double, double> BackgroundModel::window() const
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    switch (kind_) {
    case ModelKind::PowerLaw:
        return scalar_ > 0.0 ? std::pair{0.0, inf} : std::pair{-inf, 0.0};
    case ModelKind::Tabulated:
        return table_window_;
    default:
        return {-inf, inf};
    }
}

bool BackgroundModel::isotropic() const
{
    switch (kind_) {
    case ModelKind::Static:
    case ModelKind::PowerLaw:
    case ModelKind::Exponential:
        return p0_[0] == p0_[1] && p0_[1] == p0_[2];
    case ModelKind::TanhStep:
        return p0_[0] == p0_[1] && p0_[1] == p0_[2] && p1_[0] == p1_[1] && p1_[1] == p1_[2];
    case ModelKind::Tabulated:
        return false;
    }
    return false;
}

BackgroundModel BackgroundModel::permuted_axes(const std::array<int, 3>& perm) const
{
    BackgroundModel m = *this;
    for (int i = 0; i < 3; ++i) {
        m.p0_[i] = p0_[perm[i]];
        m.p1_[i] = p1_[perm[i]];
        if (kind_ == ModelKind::Tabulated)
            m.spline_[i] = spline_[perm[i]];
    }
    return m;
}

std::string BackgroundModel::describe() const
{
    std::ostringstream os;
    switch (kind_) {
    case ModelKind::Static:
        os << "static(" << p0_[0] << ", " << p0_[1] << ", " << p0_[2] << ")";
        break;
    case ModelKind::PowerLaw:
        os << "power_law(q = " << p0_[0] << ", " << p0_[1] << ", " << p0_[2]
           << "; eta_ref = " << scalar_ << ")";
        break;
    case ModelKind::Exponential:
        os << "exponential(" << p0_[0] << ", " << p0_[1] << ", " << p0_[2] << ")";
        break;
    case ModelKind::TanhStep:
        os << "tanh_step(A = " << p0_[0] << ", " << p0_[1] << ", " << p0_[2] << "; B = " << p1_[0]
           << ", " << p1_[1] << ", " << p1_[2] << "; rho = " << scalar_ << ")";
        break;
    case ModelKind::Tabulated:
        os << "tabulated(eta in [" << table_window_.first << ", " << table_window_.second << "])";
        break;
    }
    return os.str();
}

double mean_scale(const std::array<double, 3>& alpha)
{
    for (double a : alpha)
        if (!(a > 0.0))
            throw std::domain_error("mean_scale: scale factors must be positive");
    return std::cbrt(alpha[0] * alpha[1] * alpha[2]);
}

std::array<double, 3> expansion_rates(const std::array<double, 3>& alpha,
                                      const std::array<double, 3>& alpha_dot)
{
    std::array<double, 3> c{};
    for (int i = 0; i < 3; ++i) {
        if (!(alpha[i] > 0.0))
            throw std::domain_error("expansion_rates: scale factors must be positive");
        c[i] = alpha_dot[i] / alpha[i];
    }
    return c;
}

double anisotropy_Q(const std::array<double, 3>& C)
{
    const double d01 = C[0] - C[1];
    const double d12 = C[1] - C[2];
    const double d02 = C[0] - C[2];
    return d01 * d01 + d12 * d12 + d02 * d02;
}

double direction_mu(const std::array<double, 3>& alpha, double theta, double phi)
{
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    const double cp = std::cos(phi);
    const double sp = std::sin(phi);
    const double d0 = st * cp, d1 = st * sp, d2 = ct;
    double mu2 = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double d = (i == 0) ? d0 : (i == 1) ? d1 : d2;
        if (!(alpha[i] > 0.0))
            throw std::domain_error("direction_mu: scale factors must be positive");
        mu2 += d * d / (alpha[i] * alpha[i]);
    }
    return std::sqrt(mu2);
}

double effective_frequency(double k, double m, double g)
{
    if (k == 0.0 && m == 0.0)
        throw std::domain_error("effective_frequency: zero mode (k = 0, m = 0) has no frequency");
    return std::hypot(k, m * g);
}

ModeGeometry::ModeGeometry(const BackgroundModel& model, const Mode& mode, double mass)
    : model_(&model), k_(mode.k), mass_(mass)
{
    const auto d = mode.direction();
    dir_sq_ = {d[0] * d[0], d[1] * d[1], d[2] * d[2]};
}

GeometryAtTime ModeGeometry::at(double eta) const
{
    const ScaleFactors s = model_->eval(eta);

    GeometryAtTime geo;
    geo.eta = eta;
    geo.alpha = s.alpha;
    geo.alpha_dot = s.alpha_dot;
    geo.C = expansion_rates(s.alpha, s.alpha_dot);
    geo.a = mean_scale(s.alpha);
    geo.Q = anisotropy_Q(geo.C);

    // mu^2 = sum_i d_i^2 / a_i^2 and its logarithmic derivative.
    double mu2 = 0.0;
    double mu2_rate = 0.0;  // sum_i (d_i^2 / a_i^2) C_i
    for (int i = 0; i < 3; ++i) {
        const double term = dir_sq_[i] / (s.alpha[i] * s.alpha[i]);
        mu2 += term;
        mu2_rate += term * geo.C[i];
    }
    geo.mu = std::sqrt(mu2);
    const double mu_log_dot = -mu2_rate / mu2;  // mu_dot / mu

    const double a_log_dot = (geo.C[0] + geo.C[1] + geo.C[2]) / 3.0;  // a_dot / a
    geo.g = geo.a / geo.mu;
    const double g_log_dot = a_log_dot - mu_log_dot;

    geo.K0 = effective_frequency(k_, mass_, geo.g);
    const double mg = mass_ * geo.g;
    const double K0_log_dot = (mg * mg / (geo.K0 * geo.K0)) * g_log_dot;  // K0_dot / K0

    geo.W = mu_log_dot + K0_log_dot;
    geo.Wt = geo.Q / (geo.mu * geo.K0);
    return geo;
}

GeometryAtTime couplings(const BackgroundModel& model, const Mode& mode, double mass, double eta)
{
    return ModeGeometry(model, mode, mass).at(eta);
}

}  // namespace aniso
