#include "xyness/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "xyness/quadrature.hpp"
#include "xyness/scattering.hpp"
#include "xyness/spectral.hpp"

namespace xyness {

namespace {
constexpr double pi = std::numbers::pi;

void check_tol(double tol)
{
    if (!(tol > 0.0))
        throw std::invalid_argument("tolerance must be positive");
}
} // namespace

std::string to_string(IntegralForm f)
{
    return f == IntegralForm::momentum ? "momentum" : "energy";
}

double DCoefficients::ell(double l) const
{
    return sigma_n0 - 2.0 * l * l * sigma_n1 * eps;
}

double DCoefficients::L(double l) const
{
    const double l2 = l * l;
    return d0 + d2 * l2 + d4p * l2 * l2;
}

double DCoefficients::R(double l) const
{
    const double l2 = l * l;
    return d4 + d6 * l2 + d8 * l2 * l2 - d4p;
}

double DCoefficients::D(double l) const
{
    const double l2 = l * l;
    return d0 + l2 * (d2 + l2 * (d4 + l2 * (d6 + l2 * d8)));
}

DCoefficients d_coefficients(const ModelConfig& cfg, double k)
{
    const int n = cfg.n();
    const double n0 = 2.0 * n + 2, n1 = 2.0 * n + 1, n2 = 2.0 * n;
    const double s0 = std::sin(n0 * k), s1 = std::sin(n1 * k), s2 = std::sin(n2 * k);
    const double eps = std::cos(k), eps2 = std::cos(2.0 * k);
    const double sk = std::sin(k);
    DCoefficients d;
    d.N = 4.0 * sk * sk * sk * sk * s_function(cfg, std::abs(eps));
    d.d0 = s0 * s0;
    d.d2 = -4.0 * s0 * s1 * eps;
    d.d4 = 2.0 * s0 * s2 * eps2 + 4.0 * s1 * s1;
    d.d4p = 4.0 * s1 * s1 * eps * eps;
    d.d6 = -4.0 * s1 * s2 * eps;
    d.d8 = s2 * s2;
    d.sigma_n0 = s0;
    d.sigma_n1 = s1;
    d.eps = eps;
    return d;
}

double momentum_integrand(const ModelConfig& cfg, double k)
{
    // N/D -> S(1)/Q(1) = 0 at k = 0, pi where both vanish like sin^4
    if (std::abs(std::sin(k)) < 1e-7)
        return 0.0;
    const DCoefficients d = d_coefficients(cfg, k);
    if (d.N == 0.0)
        return 0.0;
    return d.N / d.D(cfg.lambda());
}

std::vector<double> momentum_breakpoints(const ModelConfig& cfg)
{
    const int n0 = 2 * cfg.n() + 2;
    std::vector<double> pts{0.0, pi};
    for (int x = 1; x < n0; ++x)
        pts.push_back(x * pi / n0);
    const double l = std::abs(cfg.lambda());
    if (l > 0.0 && l < 0.05) {
        const double w = std::max(10.0 * l * l, 1e-4);
        for (int x = 1; x < n0; ++x) {
            const double kx = x * pi / n0;
            if (kx - w > 0.0)
                pts.push_back(kx - w);
            if (kx + w < pi)
                pts.push_back(kx + w);
        }
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

CurrentResult current_micro(const ModelConfig& cfg, double tol)
{
    check_tol(tol);
    CurrentResult r;
    r.form = IntegralForm::momentum;
    const double l = cfg.lambda();
    if (l == 0.0 || cfg.delta() == 0.0)
        return r;
    const double scale = l * l * l * l / (2.0 * pi);
    const QuadResult q = integrate([&](double k) { return momentum_integrand(cfg, k); },
                                   momentum_breakpoints(cfg), tol / scale);
    r.current = scale * q.value;
    r.error = scale * q.error;
    return r;
}

CurrentResult current_micro_energy(const ModelConfig& cfg, double tol)
{
    check_tol(tol);
    CurrentResult r;
    r.form = IntegralForm::energy;
    const double l = cfg.lambda();
    if (l == 0.0 || cfg.delta() == 0.0)
        return r;
    const int n0 = 2 * cfg.n() + 2;
    std::vector<double> pts{0.0, 1.0};
    const double w = (std::abs(l) < 0.05) ? std::max(10.0 * l * l, 1e-4) : 0.0;
    for (int x = 1; 2 * x < n0; ++x) {
        const double kx = x * pi / n0;
        pts.push_back(std::cos(kx));
        if (w > 0.0) {
            for (double kk : {kx - w, kx + w})
                if (kk > 0.0 && kk < 0.5 * pi)
                    pts.push_back(std::cos(kk));
        }
    }
    const double bl = cfg.beta_l(), br = cfg.beta_r();
    auto f = [&](double e) { return e * planck_difference(bl, br, e) / q_lambda(cfg, e); };
    const double scale = l * l * l * l / pi;
    const QuadResult q = integrate(f, pts, tol / scale);
    r.current = scale * q.value;
    r.error = scale * q.error;
    return r;
}

EntropyReport ep_micro(const ModelConfig& cfg, double tol)
{
    EntropyReport rep;
    const CurrentResult m = current_micro(cfg, tol);
    const CurrentResult e = current_micro_energy(cfg, tol);
    rep.current_micro = m.current;
    rep.quad_error = m.error;
    rep.form_used = m.form;
    rep.path_gap = std::abs(m.current - e.current);
    rep.ep_micro = 2.0 * cfg.delta() * m.current;
    rep.ep_second_order = ep_second_order(cfg);
    return rep;
}

double ep_second_order(const ModelConfig& cfg)
{
    const int ns = cfg.n_s();
    double sum = 0.0;
    for (int i = 1; i <= ns; ++i)
        sum += s0_function(cfg, dispersion(cfg.k(i)));
    return 2.0 * cfg.delta() / (ns + 1) * sum;
}

double ep_second_order_half_sum(const ModelConfig& cfg)
{
    const int n = cfg.n();
    if (n == 0)
        throw std::invalid_argument("half-sum form requires n > 0");
    double sum = 0.0;
    for (int i = 1; i <= n; ++i)
        sum += s0_function(cfg, dispersion(cfg.k(i)));
    return 2.0 * cfg.delta() / (n + 1) * sum;
}

double ep_second_order_limit(double beta_l, double beta_r, double tol)
{
    check_tol(tol);
    const double beta = 0.5 * (beta_r + beta_l), delta = 0.5 * (beta_r - beta_l);
    if (delta == 0.0)
        return 0.0;
    auto f = [&](double k) {
        const double e = std::cos(k), s = std::abs(std::sin(k));
        const double ch = std::cosh(0.5 * beta * e), sh = std::sinh(0.5 * delta * e);
        return e * s * s * s * std::sinh(delta * e) / (ch * ch + sh * sh);
    };
    const double scale = delta / pi;
    return scale * integrate(f, std::vector<double>{0.0, 0.5 * pi, pi}, tol / scale).value;
}

double second_order_via_limit_formula(const ModelConfig& cfg)
{
    const int n0 = 2 * cfg.n() + 2;
    double sum = 0.0;
    for (int x = -(n0 - 1); x <= n0 - 1; ++x) {
        if (x == 0)
            continue;
        const DCoefficients d = d_coefficients(cfg, x * pi / n0);
        sum += d.N / std::sqrt(d.R(0.0));
    }
    return 2.0 * cfg.delta() * sum / (4.0 * n0);
}

} // namespace xyness
