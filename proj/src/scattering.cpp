#include "xyness/scattering.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace xyness {

namespace {

const cplx I{0.0, 1.0};

cplx band_edge(double e)
{
    if (!(std::abs(e) < 1.0))
        throw BandEdgeError("energy must satisfy |e| < 1, got " + std::to_string(e));
    return edge_function(e);
}

void check_n(int n)
{
    if (n < 0 || n > max_scattering_n)
        throw std::invalid_argument("scattering formulas support 0 <= n <= 64");
}

// powers of E needed by the closed forms
struct Powers {
    cplx E, E2, g1, g2; // g1 = 1-E^2, g2 = (1-E^2)^2
    int n;
    cplx pw(int m) const { return m >= 0 ? ipow(E, unsigned(m)) : ipow(std::conj(E), unsigned(-m)); }
    cplx one_minus(int m) const { return 1.0 - pw(m); }
};

Powers powers(int n, double e)
{
    Powers p;
    p.E = band_edge(e);
    p.E2 = p.E * p.E;
    p.g1 = 1.0 - p.E2;
    p.g2 = p.g1 * p.g1;
    p.n = n;
    return p;
}

} // namespace

cplx resolvent_amplitude(double e, int x)
{
    if (std::abs(e) == 1.0)
        throw BandEdgeError("resolvent amplitude has a pole at |e| = 1");
    const cplx E = edge_function(e);
    return -2.0 * ipow(E, unsigned(std::abs(x) + 1)) / (1.0 - E * E);
}

std::array<int, 4> coupling_sites_first(int n)
{
    return {-n, -(n + 1), n + 1, n};
}

std::array<int, 4> coupling_sites_second(int n)
{
    return {-(n + 1), -n, n, n + 1};
}

Mat4 sigma_matrix_entrywise(const ModelConfig& cfg, double e)
{
    check_n(cfg.n());
    const auto d1 = coupling_sites_first(cfg.n());
    const auto d2 = coupling_sites_second(cfg.n());
    const double c = 0.5 * (cfg.lambda() - 1.0);
    Mat4 s;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            s(i, j) = (i == j ? 1.0 : 0.0) + c * resolvent_amplitude(e, d2[j] - d1[i]);
    return s;
}

Mat4 sigma_matrix(const ModelConfig& cfg, double e)
{
    check_n(cfg.n());
    const Powers P = powers(cfg.n(), e);
    const double l = cfg.lambda();
    const int n = cfg.n();
    Eigen::Matrix2cd A, B, s1;
    A << 1.0 - l * P.E2, (1.0 - l) * P.E, (1.0 - l) * P.E, 1.0 - l * P.E2;
    A /= P.g1;
    B << 1.0, P.E, P.E, P.E2;
    B *= (1.0 - l) * P.pw(2 * n + 1) / P.g1;
    s1 << 0.0, 1.0, 1.0, 0.0;
    Mat4 s;
    s.topLeftCorner<2, 2>() = A;
    s.topRightCorner<2, 2>() = B;
    s.bottomLeftCorner<2, 2>() = s1 * B * s1;
    s.bottomRightCorner<2, 2>() = A;
    return s;
}

SigmaSystem sigma_inverse(const ModelConfig& cfg, double e)
{
    check_n(cfg.n());
    const Powers P = powers(cfg.n(), e);
    const int n = cfg.n();
    const double l = cfg.lambda(), l2 = l * l, l3 = l2 * l, l4 = l2 * l2;
    const cplx E = P.E, E2 = P.E2, E3 = E2 * E, E4 = E2 * E2;
    const cplx u0 = P.one_minus(4 * n + 4) / P.g2;
    const cplx u1 = P.one_minus(4 * n + 2) / P.g2;
    const cplx u2 = P.one_minus(4 * n) / P.g2;

    SigmaSystem s;
    s.sigma = sigma_matrix(cfg, e);
    s.delta_det = u0 - 2.0 * E2 * u1 * l2 + E4 * u2 * l4;
    if (std::abs(s.delta_det) < 1e-13)
        throw SingularSigmaError("Delta_lambda vanishes at e = " + std::to_string(e));
    s.a = u0 - E2 * u1 * (l + l2) + E4 * u2 * l3;
    s.b = -E * u1 * (1.0 - l) + E3 * u2 * (l2 - l3);
    s.c = -E * u0 * (1.0 - l) + E3 * u1 * (l2 - l3);
    s.d = -P.pw(2 * n + 1) / P.g1 * (1.0 - l);
    s.e = -P.pw(2 * n + 2) / P.g1 * (l - l2);
    s.f = -P.pw(2 * n + 3) / P.g1 * (l2 - l3);

    Eigen::Matrix2cd M, N, s1;
    M << s.a, s.b, s.c, s.a;
    N << s.d, s.e, s.e, s.f;
    s1 << 0.0, 1.0, 1.0, 0.0;
    s.inverse.topLeftCorner<2, 2>() = M;
    s.inverse.topRightCorner<2, 2>() = N;
    s.inverse.bottomLeftCorner<2, 2>() = s1 * N * s1;
    s.inverse.bottomRightCorner<2, 2>() = s1 * M * s1;
    s.inverse /= s.delta_det;
    return s;
}

Ingredients ingredient_vectors(const ModelConfig& cfg, double e, int x)
{
    check_n(cfg.n());
    const Powers P = powers(cfg.n(), e);
    const int n = cfg.n();
    const double rp = planck_density(cfg.beta() + cfg.delta(), e);
    const double rm = planck_density(cfg.beta() - cfg.delta(), e);
    const cplx pref = P.E / (std::numbers::pi * I * P.g1);
    const std::array<int, 4> m{x + n + 1, x + n, x - n, x - n - 1};
    Ingredients out;
    for (int i = 0; i < 4; ++i)
        out.xi(i) = pref * (rp * P.pw(m[i]) + rm * P.pw(-m[i]));
    const std::array<int, 4> a{std::abs(x + n), std::abs(x + n + 1), std::abs(x - n - 1), std::abs(x - n)};
    for (int i = 0; i < 4; ++i)
        out.eta(i) = -2.0 * P.E / P.g1 * P.pw(a[i]);
    return out;
}

Mat4 theta_matrix(const ModelConfig& cfg, double e)
{
    check_n(cfg.n());
    const Powers P = powers(cfg.n(), e);
    const int n = cfg.n();
    const double rp = planck_density(cfg.beta() + cfg.delta(), e);
    const double rm = planck_density(cfg.beta() - cfg.delta(), e);
    const cplx pref = P.E / (std::numbers::pi * I * P.g1);
    // exponent pattern for sigma = +; sigma = - flips every sign
    const int m[4][4] = {{0, 1, 2 * n + 1, 2 * n + 2},
                         {-1, 0, 2 * n, 2 * n + 1},
                         {-(2 * n + 1), -2 * n, 0, 1},
                         {-(2 * n + 2), -(2 * n + 1), -1, 0}};
    Mat4 t;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            t(i, j) = pref * (rp * P.pw(m[i][j]) + rm * P.pw(-m[i][j]));
    return t;
}

Vec4 solved_eta(const ModelConfig& cfg, double e, EtaSite site)
{
    check_n(cfg.n());
    const SigmaSystem sys = sigma_inverse(cfg, e);
    const Powers P = powers(cfg.n(), e);
    const int n = cfg.n();
    const double l = cfg.lambda(), l2 = l * l, l3 = l2 * l;
    const cplx E = P.E, E2 = P.E2, E3 = E2 * E, E4 = E2 * E2, E5 = E4 * E;
    const cplx u0 = P.one_minus(4 * n + 4) / P.g2;
    const cplx u1 = P.one_minus(4 * n + 2) / P.g2;
    const cplx u2 = P.one_minus(4 * n) / P.g2;
    Vec4 v;
    if (site == EtaSite::n) {
        v(0) = -2.0 * P.pw(2 * n + 1) / P.g1;
        v(1) = -2.0 * P.pw(2 * n + 2) / P.g1 * l;
        v(2) = -2.0 * E2 * u1 * l + 2.0 * E4 * u2 * l3;
        v(3) = -2.0 * E * u1 + 2.0 * E3 * u2 * l2;
    } else {
        v(0) = -2.0 * P.pw(2 * n + 3) / P.g1 * l;
        v(1) = -2.0 * P.pw(2 * n + 4) / P.g1 * l2;
        v(2) = -2.0 * E2 * u0 + 2.0 * E4 * u1 * l2;
        v(3) = -2.0 * E3 * u1 * l + 2.0 * E5 * u2 * l3;
    }
    return v / sys.delta_det;
}

Vec4 solved_eta(const ModelConfig& cfg, double e, int x)
{
    if (x == cfg.n())
        return solved_eta(cfg, e, EtaSite::n);
    if (x == cfg.n() + 2)
        return solved_eta(cfg, e, EtaSite::n_plus_2);
    throw std::invalid_argument("solved_eta: closed forms exist only for x = n and x = n+2");
}

CoefficientSet coefficient_functions(const ModelConfig& cfg, double e)
{
    check_n(cfg.n());
    const Powers P = powers(cfg.n(), e);
    const int n = cfg.n();
    const cplx E = P.E, E2 = P.E2, E3 = E2 * E, E4 = E2 * E2, E6 = E4 * E2, E8 = E4 * E4;
    const double rp = planck_density(cfg.beta() + cfg.delta(), e);
    const double rm = planck_density(cfg.beta() - cfg.delta(), e);
    const cplx g3 = P.g2 * P.g1, g4 = P.g2 * P.g2, g5 = g4 * P.g1;
    const cplx A0 = P.one_minus(4 * n), A2 = P.one_minus(4 * n + 2), A4 = P.one_minus(4 * n + 4);
    const cplx E4n = P.pw(4 * n), E8n4 = P.pw(8 * n + 4);
    const cplx pi_i = std::numbers::pi * I;
    const cplx w = rp * E4 + rm;
    const cplx den1 = pi_i * P.pw(4 * n + 1);
    const cplx den0 = pi_i * E4n;

    CoefficientSet c;
    c.p[0] = A4 * A4 / (den1 * g5) * w;
    c.p[1] = (1.0 + E2) * A2 * A4 / (den1 * g3) * rm;
    c.p[2] = -2.0 * (1.0 + E2) * A2 * A4 / (den1 * g5) * w;
    c.p[3] = -((1.0 + E8n4) * (1.0 + 3.0 * E2 + E4) - E4n * (1.0 + E2 + 5.0 * E4 + 3.0 * E6)) / (den1 * g3) * rm
             + E3 / (pi_i * P.g1) * rp;
    c.p[4] = ((1.0 + E8n4) * (1.0 + 4.0 * E2 + E4) - E4n * (1.0 + 10.0 * E4 + E8)) / (den1 * g5) * w;
    c.p[5] = 2.0 * E * (1.0 + E2) * A0 * A2 / (den0 * g3) * rm;
    c.p[6] = -2.0 * E * (1.0 + E2) * A0 * A2 / (den0 * g5) * w;
    c.p[7] = -E3 * A0 * A0 / (den0 * g3) * rm;
    c.p[8] = E3 * A0 * A0 / (den0 * g5) * w;

    const cplx qd = E4n * g4;
    c.q.fill(0.0);
    c.q[0] = std::real(-A4 * A4 / qd);
    c.q[2] = std::real(2.0 * (1.0 + E2) * A2 * A4 / qd);
    c.q[4] = std::real(-((1.0 + E4) * A0 * A4 + 4.0 * E2 * A2 * A2) / qd);
    c.q[6] = std::real(2.0 * E2 * (1.0 + E2) * A0 * A2 / qd);
    c.q[8] = std::real(-E4 * A0 * A0 / qd);
    return c;
}

std::array<double, 9> q_coefficients_trig(int n, double k)
{
    const double s = std::sin(k), s4 = s * s * s * s;
    const double a = std::sin(2.0 * (n + 1) * k);
    const double b = std::sin((2.0 * n + 1) * k);
    const double c = std::sin(2.0 * n * k);
    std::array<double, 9> q{};
    q[0] = a * a / (4.0 * s4);
    q[2] = -b * a * std::cos(k) / s4;
    q[4] = (c * a * std::cos(2.0 * k) + 2.0 * b * b) / (2.0 * s4);
    q[6] = -b * c * std::cos(k) / s4;
    q[8] = c * c / (4.0 * s4);
    return q;
}

double q_lambda(const ModelConfig& cfg, double e)
{
    check_n(cfg.n());
    const cplx E = band_edge(e);
    const cplx w = E * E;
    const double l2 = cfg.lambda() * cfg.lambda();
    const double a = 1.0 - l2;
    // (1-l2 w)^2 - a^2 w^{2n+2} = (1-w) [a^2 (1 + w + ... + w^{2n+1}) + 2 a l2 + l2^2 (1-w)]
    cplx geo{0.0, 0.0}, wp{1.0, 0.0};
    for (int j = 0; j < 2 * cfg.n() + 2; ++j) {
        geo += wp;
        wp *= w;
    }
    const cplx delta = (a * a * geo + 2.0 * a * l2 + l2 * l2 * (1.0 - w)) / (1.0 - w);
    return std::norm(delta);
}

std::array<cplx, 4> p_factors(const ModelConfig& cfg, double e)
{
    check_n(cfg.n());
    const Powers P = powers(cfg.n(), e);
    const int n = cfg.n();
    const double l2 = cfg.lambda() * cfg.lambda();
    const cplx a = P.pw(2 * n + 2), b = P.pw(2 * n);
    return {1.0 + a - (1.0 + b) * l2,
            -1.0 + a + (1.0 - b) * l2,
            1.0 - a - P.E2 * (1.0 - b) * l2,
            -1.0 - a + P.E2 * (1.0 + b) * l2};
}

} // namespace xyness
