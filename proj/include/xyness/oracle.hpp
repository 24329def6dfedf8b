#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "xyness/model.hpp"

namespace xyness {

struct OracleGuardError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Finite chain on {-L..L}; index of site x is x + L.
struct Lattice {
    int L = 0;
    int n = 0;
    double lambda = 1.0;
    Eigen::VectorXd diag;
    Eigen::VectorXd offdiag; // offdiag(i) couples sites i-L and i-L+1
    Eigen::MatrixXd density;

    int index(int x) const { return x + L; }
    Eigen::MatrixXd hamiltonian() const;
};

// Lead temperatures are taken as given, so beta_l > beta_r is allowed here.
Lattice build_lattice(int n, double lambda, double beta_l, double beta_r, int L);
Lattice build_lattice(const ModelConfig& cfg, int L);

struct OracleRun {
    int L = 0;
    double dt = 0.0;
    double T = 0.0;
    std::vector<double> times;
    std::vector<double> currents;
    std::vector<double> running_cesaro;
    double cesaro = 0.0;
    double reference = 0.0;
    double deviation = 0.0;          // |cesaro - reference|
    double relative_deviation = 0.0; // deviation/|reference|, NaN when reference = 0
    double trace_drift = 0.0;
};

// Time series of J(t) = (lambda/2) Im (e^{ith} d_n, rho e^{ith} d_{n+2}) on [0, T]
// and its trapezoid Cesaro mean. `reference` is left at zero.
OracleRun run_oracle_raw(int n, double lambda, double beta_l, double beta_r, int L, double T, double dt);

// Same, with the closed-form current as reference.
OracleRun run_oracle(const ModelConfig& cfg, int L, double T, double dt = 0.1, double ref_tol = 1e-11);

struct ConvergenceRow {
    int L;
    double T;
    double cesaro;
    double reference;
    double deviation;
    double relative_deviation;
};

// One run per (L, T) pair; lists must have equal length.
std::vector<ConvergenceRow> convergence_study(const ModelConfig& cfg, const std::vector<int>& Ls,
                                              const std::vector<double>& Ts, double dt = 0.1);

} // namespace xyness
