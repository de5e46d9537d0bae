#pragma once

#include <cstdint>

namespace pikiln {

struct FourierCoefficient {
    unsigned n = 0;
    double value = 0.0;
};

/// a_n of cos(alpha t) on [-pi, pi]:
/// (-1)^n sin(alpha pi)/pi * (1/(alpha + n) + 1/(alpha - n)).
/// Throws DegenerateAlpha for integer alpha.
FourierCoefficient fourier_coefficient(double alpha, unsigned n);

/// (2/pi) int_0^pi cos(alpha t) cos(n t) dt by adaptive Simpson
/// (absolute tolerance 1e-12).
double fourier_coefficient_quadrature(double alpha, unsigned n);

/// a_0/2 + sum_{n=1}^N a_n cos(n x), x in [-pi, pi].
double fourier_partial_sum(double alpha, double x, unsigned n);

/// pi / sin(alpha pi) times the partial sum at x = 0; tends to
/// pi / sin(alpha pi).
double reciprocal_sine_partial(double alpha, unsigned n);

/// pi / sin(alpha pi) times the partial sum at x = pi; tends to
/// pi cot(alpha pi).
double cotangent_partial(double alpha, unsigned n);

double adaptive_simpson(double (*f)(double, const void*), const void* data, double a, double b, double tolerance);

} // namespace pikiln
