#include "xyness/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "xyness/entropy.hpp"

namespace xyness {

namespace {

Eigen::MatrixXd chain_density(int m, double beta)
{
    if (m == 1)
        return Eigen::MatrixXd::Constant(1, 1, planck_density(beta, 0.0));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(Eigen::VectorXd::Zero(m), Eigen::VectorXd::Constant(m - 1, 0.5),
                              Eigen::ComputeEigenvectors);
    Eigen::VectorXd occ(m);
    for (int i = 0; i < m; ++i)
        occ(i) = planck_density(beta, es.eigenvalues()(i));
    return es.eigenvectors() * occ.asDiagonal() * es.eigenvectors().transpose();
}

} // namespace

Eigen::MatrixXd Lattice::hamiltonian() const
{
    const int N = int(diag.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(N, N);
    for (int i = 0; i < N; ++i)
        h(i, i) = diag(i);
    for (int i = 0; i + 1 < N; ++i)
        h(i, i + 1) = h(i + 1, i) = offdiag(i);
    return h;
}

Lattice build_lattice(int n, double lambda, double beta_l, double beta_r, int L)
{
    if (n < 0 || L <= n + 2)
        throw OracleGuardError("build_lattice: need L > n + 2 (L = " + std::to_string(L) + ")");
    Lattice lat;
    lat.L = L;
    lat.n = n;
    lat.lambda = lambda;
    const int N = 2 * L + 1;
    lat.diag = Eigen::VectorXd::Zero(N);
    lat.offdiag = Eigen::VectorXd::Constant(N - 1, 0.5);
    lat.offdiag(lat.index(-n - 1)) = 0.5 * lambda; // bond (-n-1, -n)
    lat.offdiag(lat.index(n)) = 0.5 * lambda;      // bond (n, n+1)

    lat.density = Eigen::MatrixXd::Zero(N, N);
    const int lead = L - n; // sites per lead
    lat.density.block(0, 0, lead, lead) = chain_density(lead, beta_l);
    for (int x = -n; x <= n; ++x)
        lat.density(lat.index(x), lat.index(x)) = 0.5;
    lat.density.block(lat.index(n + 1), lat.index(n + 1), lead, lead) = chain_density(lead, beta_r);
    return lat;
}

Lattice build_lattice(const ModelConfig& cfg, int L)
{
    return build_lattice(cfg.n(), cfg.lambda(), cfg.beta_l(), cfg.beta_r(), L);
}

OracleRun run_oracle_raw(int n, double lambda, double beta_l, double beta_r, int L, double T, double dt)
{
    if (!(dt > 0.0) || !(T > 0.0))
        throw OracleGuardError("run_oracle: T and dt must be positive");
    if (T > L)
        throw OracleGuardError("run_oracle: horizon T must not exceed L (recurrence guard)");
    const Lattice lat = build_lattice(n, lambda, beta_l, beta_r, L);
    const int N = int(lat.diag.size());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(lat.diag, lat.offdiag, Eigen::ComputeEigenvectors);
    const Eigen::VectorXd& w = es.eigenvalues();
    const Eigen::MatrixXd& V = es.eigenvectors();
    const Eigen::MatrixXd rho = V.transpose() * (lat.density * V);
    const Eigen::VectorXd a = V.row(lat.index(n)).transpose();
    const Eigen::VectorXd b = V.row(lat.index(n + 2)).transpose();

    OracleRun run;
    run.L = L;
    run.T = T;
    const int steps = std::max(1, int(std::lround(T / dt)));
    run.dt = T / steps;
    run.trace_drift = std::abs(rho.trace() - lat.density.trace());
    run.times.resize(steps + 1);
    run.currents.resize(steps + 1);

    constexpr int chunk = 256;
    Eigen::MatrixXd cr(N, chunk), ci(N, chunk), pr(N, chunk), pi(N, chunk);
    for (int j0 = 0; j0 <= steps; j0 += chunk) {
        const int m = std::min(chunk, steps + 1 - j0);
        for (int j = 0; j < m; ++j) {
            const double t = (j0 + j) * run.dt;
            for (int k = 0; k < N; ++k) {
                const double c = std::cos(w(k) * t), s = std::sin(w(k) * t);
                cr(k, j) = c;
                ci(k, j) = s;
                pr(k, j) = b(k) * c;
                pi(k, j) = b(k) * s;
            }
        }
        const Eigen::MatrixXd zr = rho * pr.leftCols(m);
        const Eigen::MatrixXd zi = rho * pi.leftCols(m);
        for (int j = 0; j < m; ++j) {
            // Im sum_k conj(a_k e^{i w_k t}) z_k
            double acc = 0.0;
            for (int k = 0; k < N; ++k)
                acc += a(k) * (cr(k, j) * zi(k, j) - ci(k, j) * zr(k, j));
            run.times[j0 + j] = (j0 + j) * run.dt;
            run.currents[j0 + j] = 0.5 * lambda * acc;
        }
    }

    run.running_cesaro.resize(steps + 1);
    run.running_cesaro[0] = run.currents[0];
    double integral = 0.0;
    for (int j = 1; j <= steps; ++j) {
        integral += 0.5 * run.dt * (run.currents[j - 1] + run.currents[j]);
        run.running_cesaro[j] = integral / run.times[j];
    }
    run.cesaro = run.running_cesaro[steps];
    run.deviation = std::abs(run.cesaro - run.reference);
    run.relative_deviation = std::numeric_limits<double>::quiet_NaN();
    return run;
}

OracleRun run_oracle(const ModelConfig& cfg, int L, double T, double dt, double ref_tol)
{
    OracleRun run = run_oracle_raw(cfg.n(), cfg.lambda(), cfg.beta_l(), cfg.beta_r(), L, T, dt);
    run.reference = current_micro(cfg, ref_tol).current;
    run.deviation = std::abs(run.cesaro - run.reference);
    run.relative_deviation = run.reference != 0.0 ? run.deviation / std::abs(run.reference)
                                                  : std::numeric_limits<double>::quiet_NaN();
    return run;
}

std::vector<ConvergenceRow> convergence_study(const ModelConfig& cfg, const std::vector<int>& Ls,
                                              const std::vector<double>& Ts, double dt)
{
    if (Ls.empty() || Ls.size() != Ts.size())
        throw std::invalid_argument("convergence_study: L and T lists must be nonempty and of equal length");
    std::vector<ConvergenceRow> rows;
    for (std::size_t i = 0; i < Ls.size(); ++i) {
        const OracleRun r = run_oracle(cfg, Ls[i], Ts[i], dt);
        rows.push_back({Ls[i], Ts[i], r.cesaro, r.reference, r.deviation, r.relative_deviation});
    }
    return rows;
}

} // namespace xyness
