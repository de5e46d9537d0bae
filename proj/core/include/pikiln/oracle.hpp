#pragma once

#include <vector>

#include "pikiln/numerics.hpp"

namespace pikiln {

/// pi from Machin's identity pi/4 = 4 atan(1/5) - atan(1/239), with the
/// arctangents summed as Taylor series. Shares nothing with the series and
/// products under test, so agreement with them is evidence.
BigFixed reference_pi(const PrecisionContext& ctx);

/// pi from Euler's pi/4 = atan(1/2) + atan(1/3); cross-checks reference_pi.
BigFixed reference_pi_euler(const PrecisionContext& ctx);

/// atan(1/m) at the given scale (m >= 2).
BigFixed arctan_reciprocal(long m, std::uint32_t scale);

/// Central finite-difference weights for the k-th derivative on the nodes
/// -n..n (unit spacing), exact up to the final conversion to double.
std::vector<double> central_difference_weights(unsigned k, unsigned n);

/// d^k/dx^k [1 / sin(pi x)] in double precision from a (2k+15)-point
/// central stencil whose span stays inside the pole-free interval around x.
double reciprocal_sine_derivative(unsigned k, double x);

/// The B_k(x) implied by that derivative: f^(k)(x) / (pi^k k!).
double bk_finite_difference(unsigned k, double x);

} // namespace pikiln
