#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "xyness/model.hpp"

namespace xyness {

// Eigensystem of the sample Hamiltonian on sites x = -n..n.
// Column i-1 of eigenvectors is phi_i, row x+n is the site x.
struct SampleSpectrum {
    std::vector<double> eigenvalues; // eps_1 > eps_2 > ... > eps_{n_S}
    Eigen::MatrixXd eigenvectors;
    std::vector<double> omega; // |phi_i(+-n)|^2
};

SampleSpectrum sample_eigensystem(int n);

// Same eigensystem from a generic symmetric tridiagonal solver, sorted like the
// closed form and sign-fixed so that phi_i(-n) > 0.
SampleSpectrum sample_eigensystem_numeric(int n);

struct DecoupledError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// (1 - lambda^2) E^{2n+2} + sigma (lambda^2 E^2 - 1)
double point_spectrum_factor(int n, double lambda, int sigma, double E);

// Eigenvalues |e| > 1 of the coupled one-particle Hamiltonian, ascending.
// Throws DecoupledError at lambda = 0.
std::vector<double> coupled_point_spectrum(const ModelConfig& cfg);

// Bracketed roots of one factor on E in (lo, hi), scanned on `grid` cells.
std::vector<double> point_spectrum_roots(int n, double lambda, int sigma,
                                         double lo = 1e-9, double hi = 1.0 - 1e-9,
                                         int grid = 4000);

} // namespace xyness
