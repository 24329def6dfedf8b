#include "xyness/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace xyness {

SampleSpectrum sample_eigensystem(int n)
{
    if (n < 0)
        throw std::invalid_argument("sample_eigensystem: n < 0");
    const int ns = 2 * n + 1;
    const double norm = std::sqrt(2.0 / (ns + 1));
    SampleSpectrum s;
    s.eigenvalues.resize(ns);
    s.omega.resize(ns);
    s.eigenvectors.resize(ns, ns);
    for (int i = 1; i <= ns; ++i) {
        const double k = i * std::numbers::pi / (ns + 1);
        s.eigenvalues[i - 1] = std::cos(k);
        for (int x = -n; x <= n; ++x)
            s.eigenvectors(x + n, i - 1) = norm * std::sin((x + n + 1) * k);
        // phi_i(n) and phi_i(-n) have equal modulus
        const double edge = s.eigenvectors(0, i - 1);
        s.omega[i - 1] = edge * edge;
    }
    return s;
}

SampleSpectrum sample_eigensystem_numeric(int n)
{
    const int ns = 2 * n + 1;
    SampleSpectrum s;
    s.eigenvalues.resize(ns);
    s.omega.resize(ns);
    if (ns == 1) {
        s.eigenvalues[0] = 0.0;
        s.eigenvectors = Eigen::MatrixXd::Ones(1, 1);
        s.omega[0] = 1.0;
        return s;
    }
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(ns);
    Eigen::VectorXd off = Eigen::VectorXd::Constant(ns - 1, 0.5);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
    s.eigenvectors.resize(ns, ns);
    for (int i = 0; i < ns; ++i) {
        const int src = ns - 1 - i; // Eigen sorts ascending
        s.eigenvalues[i] = es.eigenvalues()(src);
        Eigen::VectorXd v = es.eigenvectors().col(src);
        if (v(0) < 0)
            v = -v;
        s.eigenvectors.col(i) = v;
        s.omega[i] = v(0) * v(0);
    }
    return s;
}

double point_spectrum_factor(int n, double lambda, int sigma, double E)
{
    const double l2 = lambda * lambda;
    return (1.0 - l2) * std::pow(E, 2 * n + 2) + sigma * (l2 * E * E - 1.0);
}

std::vector<double> point_spectrum_roots(int n, double lambda, int sigma, double lo, double hi, int grid)
{
    std::vector<double> roots;
    auto f = [&](double E) { return point_spectrum_factor(n, lambda, sigma, E); };
    double a = lo, fa = f(a);
    for (int j = 1; j <= grid; ++j) {
        const double b = lo + (hi - lo) * j / grid;
        const double fb = f(b);
        if (fa == 0.0) {
            roots.push_back(a);
        } else if (fa * fb < 0.0) {
            double x0 = a, x1 = b, f0 = fa;
            for (int it = 0; it < 200 && x1 - x0 > 1e-17; ++it) {
                const double m = 0.5 * (x0 + x1);
                const double fm = f(m);
                if (fm == 0.0) {
                    x0 = x1 = m;
                    break;
                }
                if ((fm < 0.0) == (f0 < 0.0)) {
                    x0 = m;
                    f0 = fm;
                } else {
                    x1 = m;
                }
            }
            roots.push_back(0.5 * (x0 + x1));
        }
        a = b;
        fa = fb;
    }
    return roots;
}

std::vector<double> coupled_point_spectrum(const ModelConfig& cfg)
{
    if (cfg.lambda() == 0.0)
        throw DecoupledError("coupled_point_spectrum: lambda = 0 decouples the sample; use sample_eigensystem");
    std::vector<double> out;
    for (int sigma : {-1, 1}) {
        for (double E : point_spectrum_roots(cfg.n(), cfg.lambda(), sigma)) {
            const double e = 0.5 * (E + 1.0 / E);
            out.push_back(e);
            out.push_back(-e);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace xyness
