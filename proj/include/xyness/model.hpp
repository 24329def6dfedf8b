#pragma once

#include <complex>

namespace xyness {

using cplx = std::complex<double>;

// Physical parameters of the open chain: sample {-n..n}, coupling lambda,
// lead inverse temperatures 0 < beta_l <= beta_r.
class ModelConfig {
public:
    ModelConfig(int n, double lambda, double beta_l, double beta_r);

    int n() const { return n_; }
    double lambda() const { return lambda_; }
    double beta_l() const { return beta_l_; }
    double beta_r() const { return beta_r_; }

    int n_s() const { return 2 * n_ + 1; }
    double beta() const { return 0.5 * (beta_r_ + beta_l_); }
    double delta() const { return 0.5 * (beta_r_ - beta_l_); }
    // sample momentum k_i = i pi / (n_S + 1), i = 1..n_S
    double k(int i) const;

    ModelConfig with_lambda(double lambda) const { return {n_, lambda, beta_l_, beta_r_}; }
    ModelConfig with_n(int n) const { return {n, lambda_, beta_l_, beta_r_}; }

    bool operator==(const ModelConfig&) const = default;

private:
    int n_;
    double lambda_;
    double beta_l_;
    double beta_r_;
};

double dispersion(double k);

// Fermi density 1/(1+exp(beta e)), overflow safe.
double planck_density(double beta, double e);

// rho_L(e) - rho_R(e) without forming the two densities separately.
double planck_difference(double beta_l, double beta_r, double e);

// E(e) = e + i sqrt(1-e^2) in the band, e - sign(e) sqrt(e^2-1) outside.
cplx edge_function(double e);

double s_function(const ModelConfig& cfg, double e);
double s0_function(const ModelConfig& cfg, double e);

// Integer power by repeated squaring.
cplx ipow(cplx z, unsigned m);

} // namespace xyness
