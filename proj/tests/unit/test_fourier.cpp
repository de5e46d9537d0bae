#include <cmath>
#include <numbers>

#include <doctest.h>

#include "pikiln/errors.hpp"
#include "pikiln/fourier.hpp"

using namespace pikiln;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("closed form against quadrature")
{
    for (double alpha : {0.25, 1.0 / 3.0, 0.7}) {
        double worst = 0.0;
        for (unsigned n = 0; n <= 50; ++n) {
            const FourierCoefficient a = fourier_coefficient(alpha, n);
            CHECK(a.n == n);
            CHECK(std::isfinite(a.value));
            worst = std::max(worst, std::fabs(a.value - fourier_coefficient_quadrature(alpha, n)));
        }
        CAPTURE(alpha);
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("examples")
{
    CHECK(fourier_coefficient(0.5, 0).value == doctest::Approx(4.0 / kPi).epsilon(1e-15));
    const double alpha = 0.3;
    CHECK(fourier_coefficient(alpha, 0).value ==
          doctest::Approx(2.0 * std::sin(alpha * kPi) / (kPi * alpha)).epsilon(1e-15));
    CHECK(fourier_partial_sum(alpha, 0.4, 0) == doctest::Approx(fourier_coefficient(alpha, 0).value / 2.0));
    CHECK_THROWS_AS(fourier_coefficient(3.0, 1), Error);
    CHECK_THROWS_AS(fourier_partial_sum(-2.0, 0.0, 5), Error);
}

TEST_CASE("partial sums at zero converge to pi / sin")
{
    const double alpha = 0.25;
    const double target = kPi / std::sin(alpha * kPi);
    CHECK(std::fabs(reciprocal_sine_partial(alpha, 100000) - target) < 1e-6);
    // the raw expansion reproduces cos(0) = 1
    CHECK(fourier_partial_sum(alpha, 0.0, 100000) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("successive partial sums bracket the limit")
{
    for (double alpha : {0.1, 0.25, 1.0 / 3.0, 0.45}) {
        const double target = kPi / std::sin(alpha * kPi);
        for (unsigned n = 1; n < 60; ++n) {
            const double lo = reciprocal_sine_partial(alpha, n) - target;
            const double hi = reciprocal_sine_partial(alpha, n + 1) - target;
            CAPTURE(alpha);
            CAPTURE(n);
            CHECK(lo * hi < 0.0);
            CHECK(std::fabs(hi) < std::fabs(lo));
        }
    }
}

TEST_CASE("partial sums at pi approach the cotangent")
{
    const double alpha = 0.3;
    const double target = kPi / std::tan(alpha * kPi);
    const double e1 = std::fabs(cotangent_partial(alpha, 1000) - target);
    const double e2 = std::fabs(cotangent_partial(alpha, 10000) - target);
    CHECK(e2 < e1);
    CHECK(e2 < 1e-4);
}

TEST_CASE("adaptive simpson integrates smooth functions")
{
    auto f = [](double t, const void*) { return std::exp(t); };
    CHECK(adaptive_simpson(f, nullptr, 0.0, 1.0, 1e-13) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
}
