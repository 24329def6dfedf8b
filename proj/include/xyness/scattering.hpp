#pragma once

#include <array>
#include <stdexcept>

#include <Eigen/Dense>

#include "xyness/model.hpp"

namespace xyness {

using Mat4 = Eigen::Matrix<cplx, 4, 4>;
using Vec4 = Eigen::Matrix<cplx, 4, 1>;

struct BandEdgeError : std::domain_error {
    using std::domain_error::domain_error;
};
struct SingularSigmaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int max_scattering_n = 64;

// Lattice resolvent matrix element between delta_0 and delta_x,
// boundary value e - i0 in the band, real for |e| > 1.
cplx resolvent_amplitude(double e, int x);

// Coupling sites: first = [-n, -(n+1), n+1, n], second = [-(n+1), -n, n, n+1].
std::array<int, 4> coupling_sites_first(int n);
std::array<int, 4> coupling_sites_second(int n);

// Sigma assembled from its 2x2 blocks (|e| < 1).
Mat4 sigma_matrix(const ModelConfig& cfg, double e);
// delta_ij + (lambda-1)/2 * amplitude(second_j - first_i); any |e| != 1.
Mat4 sigma_matrix_entrywise(const ModelConfig& cfg, double e);

struct SigmaSystem {
    Mat4 sigma;
    cplx delta_det;
    Mat4 inverse;
    cplx a, b, c, d, e, f;
};

SigmaSystem sigma_inverse(const ModelConfig& cfg, double e);

struct Ingredients {
    Vec4 xi;
    Vec4 eta;
};

Ingredients ingredient_vectors(const ModelConfig& cfg, double e, int x);
Mat4 theta_matrix(const ModelConfig& cfg, double e);

enum class EtaSite { n, n_plus_2 };

// Closed form of Sigma^{-1} eta_x for x = n, n+2.
Vec4 solved_eta(const ModelConfig& cfg, double e, EtaSite site);
// Same, selecting the site by value; throws for x not in {n, n+2}.
Vec4 solved_eta(const ModelConfig& cfg, double e, int x);

struct CoefficientSet {
    std::array<cplx, 9> p;
    std::array<double, 9> q;
};

CoefficientSet coefficient_functions(const ModelConfig& cfg, double e);

// q_0, q_2, ..., q_8 (odd slots zero) written through sines of k.
std::array<double, 9> q_coefficients_trig(int n, double k);

// |Delta_lambda(e)|^2
double q_lambda(const ModelConfig& cfg, double e);

// P_{lambda,1..4}
std::array<cplx, 4> p_factors(const ModelConfig& cfg, double e);

} // namespace xyness
