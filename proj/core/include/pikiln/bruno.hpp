#pragma once

#include <string>
#include <vector>

#include "pikiln/numerics.hpp"
#include "pikiln/partitions.hpp"
#include "pikiln/rational.hpp"

namespace pikiln {

/// sign * s^s_exp * c^c_exp with s = sin(pi x), c = cos(pi x).
struct TrigMonomial {
    int sign = 1;
    unsigned s_exp = 0;
    unsigned c_exp = 0;

    TrigMonomial& operator*=(const TrigMonomial& o);
    friend bool operator==(const TrigMonomial&, const TrigMonomial&) = default;
};

/// (-1)^(k-p0) (k-p0)! / prod_i (i!)^p_i p_i!
Rational faa_coefficient(const PartitionVector& pv);

/// The i-th derivative of sin(pi x), divided by pi^i: i mod 4 maps to
/// +s, +c, -s, -c.
TrigMonomial trig_factor(unsigned i);

/// Dense polynomial in s, coefficient j multiplies s^j.
using SPolynomial = std::vector<Rational>;

/// B_k(x) = (A(s) + c * B(s)) / s^(k+1), reduced so c appears at most to
/// the first power.
class BkSymbolic {
public:
    BkSymbolic(unsigned k, SPolynomial even_part, SPolynomial odd_part);

    unsigned order() const noexcept { return k_; }
    const SPolynomial& even_part() const noexcept { return even_; }
    const SPolynomial& odd_part() const noexcept { return odd_; }
    unsigned denominator_exponent() const noexcept { return k_ + 1; }

    /// Canonical text such as "(2 - s^2) / (2 s^3)" or "-c / s^2".
    std::string to_string() const;

    /// Value at the given s and c (same scale); s must be non-zero.
    BigFixed evaluate(const BigFixed& s, const BigFixed& c) const;

    /// Double-precision value, for oracles and sanity checks.
    double approx(double s, double c) const;

    friend bool operator==(const BkSymbolic&, const BkSymbolic&) = default;

private:
    unsigned k_;
    SPolynomial even_;
    SPolynomial odd_;
};

BkSymbolic bk_symbolic(unsigned k);

/// Number of partition terms summed by bk_symbolic(k).
std::size_t bk_term_count(unsigned k);

/// B_k(x) from the exact trig table.
///
/// Throws PoleAtInteger for integer x, UnsupportedAngle for x outside the
/// table and SingularPoint when |B_k(x)| < 10^(-digits/2), which at table
/// angles only happens for exact zeros such as k = 1, x = 1/2.
BigFixed bk_eval(unsigned k, const Rational& x, const PrecisionContext& ctx);

} // namespace pikiln
