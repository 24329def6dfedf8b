#pragma once

#include <limits>
#include <string>
#include <vector>

#include "xyness/model.hpp"

namespace xyness {

constexpr double default_tol = 1e-9;

enum class IntegralForm { momentum, energy };
std::string to_string(IntegralForm f);

struct CurrentResult {
    double current = 0.0;
    double error = 0.0;
    IntegralForm form = IntegralForm::momentum;
};

struct EntropyReport {
    double ep_micro = 0.0;
    double current_micro = 0.0;
    double ep_second_order = 0.0;
    double ep_vanhove = std::numeric_limits<double>::quiet_NaN();
    double quad_error = 0.0; // on the current
    IntegralForm form_used = IntegralForm::momentum;
    double path_gap = 0.0;   // |J_momentum - J_energy|
};

// J = (lambda^4/2) int dk/2pi N(k)/D(k) over (-pi, pi)
CurrentResult current_micro(const ModelConfig& cfg, double tol = default_tol);
// J = (lambda^4/pi) int_0^1 e (rho_L - rho_R)/Q(e) de
CurrentResult current_micro_energy(const ModelConfig& cfg, double tol = default_tol);

EntropyReport ep_micro(const ModelConfig& cfg, double tol = default_tol);

double ep_second_order(const ModelConfig& cfg);
// 2 delta/(n+1) sum_{i<=n} S0(eps_i), valid for n > 0
double ep_second_order_half_sum(const ModelConfig& cfg);
// n -> infinity value of ep_second_order
double ep_second_order_limit(double beta_l, double beta_r, double tol = default_tol);

struct DCoefficients {
    double N = 0.0;
    double d0 = 0.0, d2 = 0.0, d4 = 0.0, d4p = 0.0, d6 = 0.0, d8 = 0.0;
    double sigma_n0 = 0.0, sigma_n1 = 0.0, eps = 0.0;

    double ell(double lambda) const;
    double L(double lambda) const;
    double R(double lambda) const;
    double D(double lambda) const;
};

DCoefficients d_coefficients(const ModelConfig& cfg, double k);

// 2 delta * lim J/lambda^2 from the peak sum over k_x = x pi/n0
double second_order_via_limit_formula(const ModelConfig& cfg);

// Momentum-space breakpoints on [0, pi] used by current_micro.
std::vector<double> momentum_breakpoints(const ModelConfig& cfg);

// N(k)/D(k), the momentum-space integrand
double momentum_integrand(const ModelConfig& cfg, double k);

} // namespace xyness
