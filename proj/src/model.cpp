#include "xyness/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace xyness {

ModelConfig::ModelConfig(int n, double lambda, double beta_l, double beta_r)
    : n_(n), lambda_(lambda), beta_l_(beta_l), beta_r_(beta_r)
{
    if (n < 0)
        throw std::invalid_argument("n must be nonnegative, got " + std::to_string(n));
    if (!std::isfinite(lambda))
        throw std::invalid_argument("lambda must be finite");
    if (!(beta_l > 0.0) || !(beta_l <= beta_r) || !std::isfinite(beta_r))
        throw std::invalid_argument("require 0 < beta_l <= beta_r < inf");
}

double ModelConfig::k(int i) const
{
    return i * std::numbers::pi / (n_s() + 1);
}

double dispersion(double k)
{
    return std::cos(k);
}

double planck_density(double beta, double e)
{
    const double x = beta * e;
    if (x > 0.0) {
        const double t = std::exp(-x);
        return t / (1.0 + t);
    }
    return 1.0 / (1.0 + std::exp(x));
}

double planck_difference(double beta_l, double beta_r, double e)
{
    return planck_density(beta_l, e) - planck_density(beta_r, e);
}

cplx edge_function(double e)
{
    if (std::abs(e) <= 1.0)
        return {e, std::sqrt((1.0 - e) * (1.0 + e))};
    const double r = std::sqrt((std::abs(e) - 1.0) * (std::abs(e) + 1.0));
    return {e - std::copysign(r, e), 0.0};
}

namespace {
void require_band(double e, const char* what)
{
    if (!(std::abs(e) <= 1.0))
        throw std::domain_error(std::string(what) + ": |e| must be <= 1");
}
} // namespace

double s_function(const ModelConfig& cfg, double e)
{
    require_band(e, "s_function");
    return e * std::sqrt((1.0 - e) * (1.0 + e)) * planck_difference(cfg.beta_l(), cfg.beta_r(), e);
}

double s0_function(const ModelConfig& cfg, double e)
{
    require_band(e, "s0_function");
    return (1.0 - e) * (1.0 + e) * s_function(cfg, e);
}

cplx ipow(cplx z, unsigned m)
{
    cplx r{1.0, 0.0};
    while (m) {
        if (m & 1u)
            r *= z;
        z *= z;
        m >>= 1u;
    }
    return r;
}

} // namespace xyness
