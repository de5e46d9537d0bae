#include "pikiln/bruno.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pikiln/errors.hpp"
#include "pikiln/exact.hpp"

namespace pikiln {

TrigMonomial& TrigMonomial::operator*=(const TrigMonomial& o)
{
    sign *= o.sign;
    s_exp += o.s_exp;
    c_exp += o.c_exp;
    return *this;
}

Rational faa_coefficient(const PartitionVector& pv)
{
    const unsigned k = pv.order();
    const unsigned used = k - pv.p0();
    BigInt denominator(1);
    for (unsigned i = 1; i <= k; ++i) {
        const auto p = pv.multiplicity(i);
        if (p == 0)
            continue;
        BigInt fi = factorial(i);
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), fi.get_mpz_t(), p);
        denominator *= power * factorial(p);
    }
    BigInt numerator = factorial(used);
    if (used % 2 == 1)
        numerator = -numerator;
    return Rational(numerator, denominator);
}

TrigMonomial trig_factor(unsigned i)
{
    switch (i % 4) {
    case 0: return {+1, 1, 0};
    case 1: return {+1, 0, 1};
    case 2: return {-1, 1, 0};
    default: return {-1, 0, 1};
    }
}

namespace {

void add_scaled(SPolynomial& target, const SPolynomial& source, const Rational& factor, unsigned shift)
{
    if (target.size() < source.size() + shift)
        target.resize(source.size() + shift);
    for (std::size_t j = 0; j < source.size(); ++j)
        target[j + shift] += source[j] * factor;
}

// (1 - s^2)^m
SPolynomial one_minus_s2_power(unsigned m)
{
    SPolynomial out(2 * m + 1);
    for (unsigned j = 0; j <= m; ++j) {
        BigInt binom;
        mpz_bin_uiui(binom.get_mpz_t(), m, j);
        out[2 * j] = Rational(j % 2 == 0 ? binom : BigInt(-binom));
    }
    return out;
}

void trim(SPolynomial& p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

BigInt lcm_of_denominators(const SPolynomial& a, const SPolynomial& b)
{
    BigInt out(1);
    for (const auto* poly : {&a, &b})
        for (const auto& coefficient : *poly)
            mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), coefficient.raw().get_den_mpz_t());
    return out;
}

std::string power_of(const char* var, unsigned exponent)
{
    if (exponent == 1)
        return var;
    return std::string(var) + "^" + std::to_string(exponent);
}

BigFixed eval_poly(const SPolynomial& poly, const BigFixed& s)
{
    // Horner
    BigFixed acc = BigFixed::zero(s.scale());
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        acc = acc * s + BigFixed::from_rational(*it, s.scale());
    return acc;
}

} // namespace

BkSymbolic::BkSymbolic(unsigned k, SPolynomial even_part, SPolynomial odd_part)
    : k_(k)
    , even_(std::move(even_part))
    , odd_(std::move(odd_part))
{
    trim(even_);
    trim(odd_);
}

std::string BkSymbolic::to_string() const
{
    const BigInt scale_factor = lcm_of_denominators(even_, odd_);

    struct Term {
        BigInt coefficient;
        bool has_c;
        unsigned s_exp;
    };
    std::vector<Term> terms;
    auto collect = [&](const SPolynomial& poly, bool has_c) {
        for (unsigned j = 0; j < poly.size(); ++j) {
            if (poly[j].is_zero())
                continue;
            BigInt integral = poly[j].numerator() * (scale_factor / poly[j].denominator());
            terms.push_back({integral, has_c, j});
        }
    };
    collect(even_, false);
    collect(odd_, true);

    std::string numerator;
    if (terms.empty())
        numerator = "0";
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const Term& term = terms[t];
        const bool negative = sgn(term.coefficient) < 0;
        BigInt magnitude = ::abs(term.coefficient);
        if (t == 0)
            numerator += negative ? "-" : "";
        else
            numerator += negative ? " - " : " + ";

        std::vector<std::string> factors;
        bool bare = term.s_exp == 0 && !term.has_c;
        if (magnitude != 1 || bare)
            factors.push_back(magnitude.get_str());
        if (term.has_c)
            factors.emplace_back("c");
        if (term.s_exp > 0)
            factors.push_back(power_of("s", term.s_exp));
        for (std::size_t f = 0; f < factors.size(); ++f)
            numerator += (f == 0 ? "" : " ") + factors[f];
    }
    if (terms.size() > 1)
        numerator = "(" + numerator + ")";

    std::string denominator = power_of("s", denominator_exponent());
    if (scale_factor != 1)
        denominator = "(" + scale_factor.get_str() + " " + denominator + ")";
    return numerator + " / " + denominator;
}

BigFixed BkSymbolic::evaluate(const BigFixed& s, const BigFixed& c) const
{
    if (s.is_zero())
        throw Error(ErrorCode::PoleAtInteger, "B_k evaluated at sin(pi x) = 0");
    BigFixed numerator = eval_poly(even_, s) + c * eval_poly(odd_, s);
    BigFixed power = BigFixed::one(s.scale());
    for (unsigned i = 0; i < denominator_exponent(); ++i)
        power *= s;
    return numerator / power;
}

double BkSymbolic::approx(double s, double c) const
{
    auto eval = [s](const SPolynomial& poly) {
        double acc = 0.0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it)
            acc = acc * s + it->to_double();
        return acc;
    };
    return (eval(even_) + c * eval(odd_)) / std::pow(s, static_cast<double>(denominator_exponent()));
}

BkSymbolic bk_symbolic(unsigned k)
{
    SPolynomial even;
    SPolynomial odd;
    for (const auto& pv : enumerate_constrained(k)) {
        // s^p0 from the i = 0 factor, then the derivative factors
        TrigMonomial monomial{1, pv.p0(), 0};
        for (unsigned i = 1; i <= k; ++i) {
            TrigMonomial factor = trig_factor(i);
            for (std::uint32_t r = 0; r < pv.multiplicity(i); ++r)
                monomial *= factor;
        }
        Rational coefficient = faa_coefficient(pv) * Rational(monomial.sign);
        // c^(2m + b) = c^b (1 - s^2)^m
        SPolynomial reduced = one_minus_s2_power(monomial.c_exp / 2);
        SPolynomial& target = monomial.c_exp % 2 == 0 ? even : odd;
        add_scaled(target, reduced, coefficient, monomial.s_exp);
    }
    return BkSymbolic(k, std::move(even), std::move(odd));
}

std::size_t bk_term_count(unsigned k) { return enumerate_constrained(k).size(); }

BigFixed bk_eval(unsigned k, const Rational& x, const PrecisionContext& ctx)
{
    if (x.is_integer())
        throw Error(ErrorCode::PoleAtInteger, "sin(pi x) vanishes at x = " + x.to_string());
    const TrigValue trig = TrigTable::instance().lookup(x);

    // 1/s^(k+1) grows by at most (1/sin(pi/10))^(k+1) < 4^(k+1).
    PrecisionContext wide = ctx.widened(k + 4);
    const BigFixed s = radical_eval(trig.sin, wide);
    const BigFixed c = radical_eval(trig.cos, wide);
    BigFixed value = bk_symbolic(k).evaluate(s, c).rescaled(ctx.scale());

    BigFixed threshold = BigFixed::one(ctx.scale());
    BigInt ten_power;
    mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, ctx.requested_digits() / 2);
    threshold = threshold.div_int(ten_power);
    if (value.abs() < threshold)
        throw Error(ErrorCode::SingularPoint,
                    "B_" + std::to_string(k) + "(" + x.to_string() + ") vanishes; the identity cannot be inverted");
    return value;
}

} // namespace pikiln
