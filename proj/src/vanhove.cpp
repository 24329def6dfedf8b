#include "xyness/vanhove.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "xyness/quadrature.hpp"

namespace xyness {

namespace {
constexpr double pi = std::numbers::pi;

Eigen::MatrixXd functional_calculus(const SampleSpectrum& s, const std::vector<double>& values)
{
    const Eigen::Map<const Eigen::VectorXd> v(values.data(), Eigen::Index(values.size()));
    return s.eigenvectors * v.asDiagonal() * s.eigenvectors.transpose();
}
} // namespace

cplx reservoir_correlation(double beta, double t, double tol)
{
    if (!(tol > 0.0))
        throw std::invalid_argument("reservoir_correlation: tolerance must be positive");
    // e = cos(theta) removes the square-root endpoints
    const int panels = std::max(1, int(std::ceil(4.0 * std::abs(t))));
    std::vector<double> pts(panels + 1);
    for (int j = 0; j <= panels; ++j)
        pts[j] = pi * j / panels;
    auto weight = [beta](double th) {
        const double s = std::sin(th);
        return s * s * planck_density(beta, std::cos(th));
    };
    const double scale = 2.0 / pi;
    const double re = integrate([&](double th) { return weight(th) * std::cos(t * std::cos(th)); }, pts, tol / scale).value;
    const double im = integrate([&](double th) { return weight(th) * std::sin(t * std::cos(th)); }, pts, tol / scale).value;
    return {scale * re, scale * im};
}

double laplace_real(double beta, double eps)
{
    if (!(std::abs(eps) < 1.0))
        return 0.0;
    return 2.0 * std::sqrt((1.0 - eps) * (1.0 + eps)) * planck_density(beta, eps);
}

double laplace_imag(double beta, double eps, double tol)
{
    auto g = [beta](double e) { return std::sqrt(std::max(0.0, (1.0 - e) * (1.0 + e))) * planck_density(beta, e); };
    const double scale = 2.0 / pi;
    if (!(std::abs(eps) < 1.0))
        return scale * integrate([&](double e) { return g(e) / (e - eps); }, -1.0, 1.0, tol / scale).value;
    // subtract the pole: PV int g/(e-eps) = int (g(e)-g(eps))/(e-eps) + g(eps) log((1-eps)/(1+eps))
    const double ge = g(eps);
    auto f = [&](double e) { return e == eps ? 0.0 : (g(e) - ge) / (e - eps); };
    const double smooth = integrate(f, std::vector<double>{-1.0, eps, 1.0}, tol / scale).value;
    return scale * (smooth + ge * std::log((1.0 - eps) / (1.0 + eps)));
}

double psi_hat(double beta, double eps)
{
    return 2.0 * laplace_real(beta, eps);
}

DaviesRates davies_rates(const ModelConfig& cfg)
{
    const SampleSpectrum s = sample_eigensystem(cfg.n());
    DaviesRates r;
    r.eigenvalues = s.eigenvalues;
    r.omega = s.omega;
    for (double e : s.eigenvalues) {
        r.psi0.emplace_back(laplace_real(0.0, e), laplace_imag(0.0, e));
        r.pump_left.push_back(laplace_real(cfg.beta_l(), e));
        r.pump_right.push_back(laplace_real(cfg.beta_r(), e));
    }
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i)
        r.gamma.push_back(r.psi0[i].real() * r.omega[i]);
    return r;
}

Eigen::MatrixXd vanhove_density(const ModelConfig& cfg)
{
    const SampleSpectrum s = sample_eigensystem(cfg.n());
    std::vector<double> occ;
    for (double e : s.eigenvalues)
        occ.push_back(0.5 * (planck_density(cfg.beta_l(), e) + planck_density(cfg.beta_r(), e)));
    return functional_calculus(s, occ);
}

TransientDensity transient_density(const SampleSpectrum& s, double beta_l, double beta_r, double t)
{
    if (!(t >= 0.0))
        throw std::invalid_argument("transient_density: t must be nonnegative");
    TransientDensity out;
    out.t = t;
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
        const double e = s.eigenvalues[i];
        const double re0 = laplace_real(0.0, e);
        // both leads decay at the same rate
        const double gamma = re0 * s.omega[i];
        const double ratio = (laplace_real(beta_l, e) + laplace_real(beta_r, e)) / (2.0 * re0);
        const double decay = std::exp(-2.0 * t * gamma);
        out.coefficients.push_back(0.5 * decay + ratio * 0.5 * (1.0 - decay));
    }
    // offset from 1/2 so that t = 0 gives exactly I/2
    std::vector<double> shifted;
    for (double c : out.coefficients)
        shifted.push_back(c - 0.5);
    const Eigen::Index ns = Eigen::Index(s.eigenvalues.size());
    out.matrix = 0.5 * Eigen::MatrixXd::Identity(ns, ns) + functional_calculus(s, shifted);
    return out;
}

TransientDensity transient_density(const ModelConfig& cfg, double t)
{
    return transient_density(sample_eigensystem(cfg.n()), cfg.beta_l(), cfg.beta_r(), t);
}

double ep_vanhove(const ModelConfig& cfg)
{
    const SampleSpectrum s = sample_eigensystem(cfg.n());
    std::vector<double> vals;
    for (double e : s.eigenvalues)
        vals.push_back(s0_function(cfg, std::clamp(e, -1.0, 1.0)));
    const double tr = functional_calculus(s, vals).trace();
    return 2.0 * cfg.delta() / (cfg.n_s() + 1) * tr;
}

EffectiveCouplingReport effective_coupling_check(const ModelConfig& cfg)
{
    if (cfg.n() > max_effective_coupling_n)
        throw std::invalid_argument("effective_coupling_check: subset enumeration limited to n <= 5");
    const SampleSpectrum s = sample_eigensystem(cfg.n());
    const int ns = cfg.n_s();
    std::vector<double> levels(std::size_t(1) << ns);
    for (std::size_t mask = 0; mask < levels.size(); ++mask) {
        double sum = 0.0;
        for (int i = 0; i < ns; ++i)
            if (mask & (std::size_t(1) << i))
                sum += s.eigenvalues[i];
        levels[mask] = sum;
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                 levels.end());
    std::vector<double> freqs;
    freqs.reserve(levels.size() * levels.size());
    for (double a : levels)
        for (double b : levels)
            freqs.push_back(a - b);
    std::sort(freqs.begin(), freqs.end());
    freqs.erase(std::unique(freqs.begin(), freqs.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                freqs.end());

    EffectiveCouplingReport rep;
    rep.one_particle_energies = s.eigenvalues;
    for (double w : freqs) {
        // differences landing on the band edge up to rounding are band-edge frequencies
        if (std::abs(std::abs(w) - 1.0) < 1e-12)
            w = std::copysign(1.0, w);
        BohrFrequencyRow row{w, psi_hat(cfg.beta_l(), w), psi_hat(cfg.beta_r(), w), false};
        row.positive = row.psi_hat_left > 0.0 && row.psi_hat_right > 0.0;
        rep.pass = rep.pass && row.positive;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace xyness
