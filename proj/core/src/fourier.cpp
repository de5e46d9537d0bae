#include "pikiln/fourier.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pikiln/errors.hpp"

namespace pikiln {

namespace {

constexpr double kPi = std::numbers::pi;

void require_fractional(double alpha)
{
    if (!std::isfinite(alpha) || alpha == std::nearbyint(alpha))
        throw Error(ErrorCode::DegenerateAlpha, "alpha must be a finite non-integer, got " + std::to_string(alpha));
}

struct Segment {
    double a, b, fa, fm, fb, whole;
};

double simpson_step(double (*f)(double, const void*), const void* data, const Segment& s, double tolerance,
                    int depth)
{
    const double m = 0.5 * (s.a + s.b);
    const double lm = 0.5 * (s.a + m);
    const double rm = 0.5 * (m + s.b);
    const double flm = f(lm, data);
    const double frm = f(rm, data);
    const double left = (m - s.a) / 6.0 * (s.fa + 4.0 * flm + s.fm);
    const double right = (s.b - m) / 6.0 * (s.fm + 4.0 * frm + s.fb);
    const double delta = left + right - s.whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tolerance)
        return left + right + delta / 15.0;
    return simpson_step(f, data, {s.a, m, s.fa, flm, s.fm, left}, tolerance / 2.0, depth - 1) +
           simpson_step(f, data, {m, s.b, s.fm, frm, s.fb, right}, tolerance / 2.0, depth - 1);
}

struct Integrand {
    double alpha;
    double n;
};

double cosine_product(double t, const void* data)
{
    const auto* p = static_cast<const Integrand*>(data);
    return std::cos(p->alpha * t) * std::cos(p->n * t);
}

} // namespace

double adaptive_simpson(double (*f)(double, const void*), const void* data, double a, double b, double tolerance)
{
    const double fa = f(a, data);
    const double fb = f(b, data);
    const double fm = f(0.5 * (a + b), data);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, data, {a, b, fa, fm, fb, whole}, tolerance, 48);
}

FourierCoefficient fourier_coefficient(double alpha, unsigned n)
{
    require_fractional(alpha);
    const double nd = static_cast<double>(n);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double value = sign * std::sin(alpha * kPi) / kPi * (1.0 / (alpha + nd) + 1.0 / (alpha - nd));
    return {n, value};
}

double fourier_coefficient_quadrature(double alpha, unsigned n)
{
    require_fractional(alpha);
    const Integrand integrand{alpha, static_cast<double>(n)};
    // The 2/pi prefactor scales the error, so tighten the tolerance to match.
    return 2.0 / kPi * adaptive_simpson(cosine_product, &integrand, 0.0, kPi, 1e-12 * kPi / 2.0);
}

double fourier_partial_sum(double alpha, double x, unsigned n)
{
    require_fractional(alpha);
    double sum = fourier_coefficient(alpha, 0).value / 2.0;
    for (unsigned i = 1; i <= n; ++i)
        sum += fourier_coefficient(alpha, i).value * std::cos(static_cast<double>(i) * x);
    return sum;
}

double reciprocal_sine_partial(double alpha, unsigned n)
{
    return kPi / std::sin(alpha * kPi) * fourier_partial_sum(alpha, 0.0, n);
}

double cotangent_partial(double alpha, unsigned n)
{
    return kPi / std::sin(alpha * kPi) * fourier_partial_sum(alpha, kPi, n);
}

} // namespace pikiln
