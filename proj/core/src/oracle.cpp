#include "pikiln/oracle.hpp"

#include <cmath>
#include <numbers>

#include "pikiln/errors.hpp"
#include "pikiln/rational.hpp"

namespace pikiln {

BigFixed arctan_reciprocal(long m, std::uint32_t scale)
{
    if (m < 2)
        throw Error(ErrorCode::InvalidArgument, "arctan_reciprocal needs m >= 2");
    const long m2 = m * m;
    BigFixed power = BigFixed::one(scale).div_int(m); // 1/m^(2k+1)
    BigFixed sum = power;
    for (long k = 1;; ++k) {
        power = power.div_int(m2);
        if (power.is_zero())
            break;
        BigFixed term = power.div_int(2 * k + 1);
        if (k % 2 == 1)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

BigFixed reference_pi(const PrecisionContext& ctx)
{
    const std::uint32_t inner = ctx.scale() + 32;
    BigFixed quarter = arctan_reciprocal(5, inner).mul_int(4) - arctan_reciprocal(239, inner);
    return quarter.mul_int(4).rescaled(ctx.scale());
}

BigFixed reference_pi_euler(const PrecisionContext& ctx)
{
    const std::uint32_t inner = ctx.scale() + 32;
    BigFixed quarter = arctan_reciprocal(2, inner) + arctan_reciprocal(3, inner);
    return quarter.mul_int(4).rescaled(ctx.scale());
}

std::vector<double> central_difference_weights(unsigned k, unsigned n)
{
    // Solve sum_j w_j j^m = k! [m == k] for m = 0..2n over the rationals.
    const unsigned size = 2 * n + 1;
    if (k >= size)
        throw Error(ErrorCode::InvalidArgument, "stencil too small for the derivative order");
    std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size + 1));
    for (unsigned m = 0; m < size; ++m) {
        for (unsigned j = 0; j < size; ++j)
            a[m][j] = pow(Rational(static_cast<long>(j) - static_cast<long>(n)), m);
        a[m][size] = m == k ? Rational(BigInt(1)) : Rational(0);
    }
    for (unsigned i = 1; i <= k; ++i)
        a[k][size] *= Rational(static_cast<long>(i));

    for (unsigned col = 0; col < size; ++col) {
        unsigned pivot = col;
        while (a[pivot][col].is_zero())
            ++pivot;
        std::swap(a[pivot], a[col]);
        for (unsigned row = 0; row < size; ++row) {
            if (row == col || a[row][col].is_zero())
                continue;
            Rational factor = a[row][col] / a[col][col];
            for (unsigned c = col; c <= size; ++c)
                a[row][c] -= factor * a[col][c];
        }
    }
    std::vector<double> w(size);
    for (unsigned j = 0; j < size; ++j)
        w[j] = (a[j][size] / a[j][j]).to_double();
    return w;
}

double reciprocal_sine_derivative(unsigned k, double x)
{
    const double distance = std::min(x - std::floor(x), std::ceil(x) - x);
    if (distance == 0.0)
        throw Error(ErrorCode::PoleAtInteger, "derivative requested at a pole");
    const unsigned n = k + 7;
    const double h = 0.6 * distance / n;
    const auto w = central_difference_weights(k, n);
    double acc = 0.0;
    for (unsigned j = 0; j < w.size(); ++j) {
        double node = x + (static_cast<double>(j) - static_cast<double>(n)) * h;
        acc += w[j] / std::sin(std::numbers::pi * node);
    }
    return acc / std::pow(h, static_cast<double>(k));
}

double bk_finite_difference(unsigned k, double x)
{
    return reciprocal_sine_derivative(k, x) / (std::pow(std::numbers::pi, k) * std::tgamma(k + 1.0));
}

} // namespace pikiln
