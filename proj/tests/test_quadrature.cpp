#include <doctest.h>

#include <cmath>
#include <numbers>

#include "xyness/quadrature.hpp"

using namespace xyness;

TEST_CASE("smooth integrands")
{
    const auto r = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-13);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r.error <= 1e-13);
    CHECK(r.intervals >= 1);

    const auto g = integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0, 1e-13);
    CHECK(g.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
}

TEST_CASE("endpoint singularity")
{
    const auto r = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12);
    CHECK(std::abs(r.value - 2.0 / 3.0) < 1e-11);
    const auto s = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-10);
    CHECK(std::abs(s.value - 2.0) < 1e-8);
}

TEST_CASE("breakpoints")
{
    auto f = [](double x) { return std::abs(x - 0.3); };
    const auto r = integrate(f, {0.0, 0.3, 1.0}, 1e-14);
    CHECK(r.value == doctest::Approx(0.045 + 0.245).epsilon(1e-14));
    CHECK(r.intervals == 2);
    CHECK_THROWS_AS(integrate(f, {0.0}, 1e-10), std::invalid_argument);
}

TEST_CASE("interval budget")
{
    auto f = [](double x) { return 1.0 / x; };
    CHECK_THROWS_AS(integrate(f, 1e-300, 1.0, 1e-14, 50), QuadratureError);
}

TEST_CASE("zero integrand and determinism")
{
    const auto z = integrate([](double) { return 0.0; }, 0.0, 1.0, 1e-12);
    CHECK(z.value == 0.0);
    CHECK(z.intervals == 1);

    auto f = [](double x) { return std::cos(40.0 * x) / (1.0 + x * x); };
    const auto a = integrate(f, 0.0, 5.0, 1e-12);
    const auto b = integrate(f, 0.0, 5.0, 1e-12);
    CHECK(a.value == b.value);
    CHECK(a.intervals == b.intervals);
}
