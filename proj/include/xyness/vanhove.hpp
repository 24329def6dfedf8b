#pragma once

#include <vector>

#include <Eigen/Dense>

#include "xyness/model.hpp"
#include "xyness/spectral.hpp"

namespace xyness {

// psi^beta(t) = (2/pi) int_{-1}^{1} sqrt(1-e^2) rho_beta(e) exp(i t e) de
cplx reservoir_correlation(double beta, double t, double tol = 1e-12);

// Re Psi^beta(i eps) = 2 sqrt(1-eps^2) rho_beta(eps) in the band, 0 outside.
double laplace_real(double beta, double eps);

// Im Psi^beta(i eps) = (2/pi) PV int sqrt(1-e^2) rho_beta(e)/(e - eps) de
double laplace_imag(double beta, double eps, double tol = 1e-11);

// psi-hat = 2 * laplace_real
double psi_hat(double beta, double eps);

struct DaviesRates {
    std::vector<double> eigenvalues;
    std::vector<cplx> psi0;          // Psi^0(i eps_i)
    std::vector<double> omega;       // Omega_i, same for both leads
    std::vector<double> pump_left;   // Re Psi^{beta_L}(i eps_i)
    std::vector<double> pump_right;  // Re Psi^{beta_R}(i eps_i)
    std::vector<double> gamma;       // Re Psi^0(i eps_i) Omega_i
};

DaviesRates davies_rates(const ModelConfig& cfg);

// 1/2 [rho_{beta_L}(h_S) + rho_{beta_R}(h_S)] in the site basis
Eigen::MatrixXd vanhove_density(const ModelConfig& cfg);

struct TransientDensity {
    double t = 0.0;
    Eigen::MatrixXd matrix;
    std::vector<double> coefficients; // weight of each projector pi_i
};

TransientDensity transient_density(const ModelConfig& cfg, double t);
// Lower-level form; accepts beta_l = beta_r = 0.
TransientDensity transient_density(const SampleSpectrum& spec, double beta_l, double beta_r, double t);

double ep_vanhove(const ModelConfig& cfg);

struct BohrFrequencyRow {
    double frequency;
    double psi_hat_left;
    double psi_hat_right;
    bool positive;
};

struct EffectiveCouplingReport {
    std::vector<double> one_particle_energies;
    std::vector<BohrFrequencyRow> rows;
    bool pass = true;
};

constexpr int max_effective_coupling_n = 5;

EffectiveCouplingReport effective_coupling_check(const ModelConfig& cfg);

} // namespace xyness
