#include "pikiln/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pikiln/bruno.hpp"
#include "pikiln/errors.hpp"
#include "pikiln/oracle.hpp"
#include "pikiln/parallel.hpp"

namespace pikiln {

std::string_view to_string(SummationMethod method) noexcept
{
    return method == SummationMethod::direct ? "direct" : "accelerated";
}

SummationMethod parse_summation_method(std::string_view text)
{
    if (text == "direct")
        return SummationMethod::direct;
    if (text == "accelerated")
        return SummationMethod::accelerated;
    throw Error(ErrorCode::ParseError, "unknown summation method '" + std::string(text) + "'");
}

namespace {

unsigned decimal_digits(std::uint64_t n)
{
    unsigned digits = 1;
    while (n >= 10) {
        n /= 10;
        ++digits;
    }
    return digits;
}

// Non-negative bound re-expressed at `scale`, rounding up.
BigFixed round_up(const BigFixed& bound, std::uint32_t scale)
{
    if (scale >= bound.scale())
        return bound.rescaled(scale);
    BigInt out;
    mpz_cdiv_q_2exp(out.get_mpz_t(), bound.mantissa().get_mpz_t(), bound.scale() - scale);
    return BigFixed(out, scale);
}

BigFixed ulps(std::uint64_t count, std::uint32_t scale)
{
    return BigFixed(BigInt(static_cast<unsigned long>(count)), scale);
}

SeriesResult finalize(const BigFixed& value, const BigFixed& bound, std::uint64_t terms, SummationMethod method,
                      const PrecisionContext& ctx)
{
    SeriesResult out;
    out.value = value.rescaled(ctx.scale());
    out.error_bound = round_up(bound.abs(), ctx.scale()) + ctx.ulp();
    out.terms_used = std::max<std::uint64_t>(terms, 1);
    out.method = method;
    return out;
}

BigFixed rational_at(const Rational& r, std::uint32_t scale) { return BigFixed::from_rational(r, scale); }

// sign * q^m / (p + n q)^m for x = p/q
BigFixed reciprocal_power(const Rational& x, std::int64_t n, unsigned m, std::uint32_t scale, int sign)
{
    BigInt base = x.numerator() + BigInt(static_cast<long>(n)) * x.denominator();
    if (m == 1 && base.fits_slong_p()) {
        // one allocation: q 2^scale / |base|
        const long b = base.get_si();
        BigInt out;
        mpz_mul_2exp(out.get_mpz_t(), x.raw().get_den_mpz_t(), scale);
        mpz_tdiv_q_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(b < 0 ? -b : b));
        if ((b < 0) != (sign < 0))
            mpz_neg(out.get_mpz_t(), out.get_mpz_t());
        return BigFixed(std::move(out), scale);
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), x.raw().get_den_mpz_t(), m);
    mpz_pow_ui(den.get_mpz_t(), base.get_mpz_t(), m);
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), scale);
    BigInt out;
    mpz_tdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (sign < 0)
        out = -out;
    return BigFixed(out, scale);
}

void check_alternation(const std::vector<BigFixed>& u)
{
    const std::size_t checked = std::min<std::size_t>(u.size(), 16);
    for (std::size_t j = 0; j + 1 < checked; ++j) {
        if (u[j].sign() * u[j + 1].sign() > 0)
            throw Error(ErrorCode::NonAlternating,
                        "paired terms " + std::to_string(j + 1) + " and " + std::to_string(j + 2) + " share a sign");
    }
}

// T_n(3) = ((3 + sqrt 8)^n + (3 - sqrt 8)^n) / 2
BigInt chebyshev_at_three(std::uint64_t n)
{
    BigInt prev(1), cur(3);
    if (n == 0)
        return prev;
    for (std::uint64_t i = 1; i < n; ++i) {
        BigInt next = 6 * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

void require_non_integer(const Rational& x, const char* what)
{
    if (x.is_integer())
        throw Error(ErrorCode::PoleAtInteger, std::string(what) + " has a pole at x = " + x.to_string());
}

Rational rising(unsigned m, unsigned j)
{
    BigInt out(1);
    for (unsigned i = 0; i < j; ++i)
        out *= m + i;
    return Rational(out);
}

} // namespace

// ---------------------------------------------------------------------------
// Streams and tail models

PairedTermStream PairedTermStream::symmetric(std::function<BigFixed(std::int64_t, std::uint32_t)> term)
{
    PairedTermStream stream;
    stream.head = [term](std::uint32_t scale) { return term(0, scale); };
    stream.paired = [term](std::uint64_t n, std::uint32_t scale) {
        const auto i = static_cast<std::int64_t>(n);
        return term(i, scale) + term(-i, scale);
    };
    return stream;
}

BigFixed PairedTermStream::partial_sum(std::uint64_t last, std::uint32_t scale) const
{
    return head(scale) + parallel_sum(1, last, scale, [&](std::uint64_t n) { return paired(n, scale); });
}

Rational TailModel::derivative(unsigned order, const Rational& t) const
{
    Rational sum;
    for (const auto& atom : atoms) {
        Rational term = atom.coefficient * rising(atom.power, order) / pow(t + atom.shift, atom.power + order);
        sum += order % 2 == 0 ? term : -term;
    }
    return sum;
}

double TailModel::next_correction(double n) const
{
    double total = 0.0;
    double combined = 0.0;
    for (const auto& atom : atoms) {
        const double m = atom.power;
        double term = atom.coefficient.to_double() * m * (m + 1) * (m + 2)
                      / std::pow(n + atom.shift.to_double(), m + 3);
        total += std::fabs(term);
        combined += term;
    }
    return (sign_definite_derivatives ? std::fabs(combined) : total) / 720.0;
}

std::uint64_t TailModel::minimum_cut() const
{
    double reach = 0.0;
    for (const auto& atom : atoms)
        reach = std::max(reach, std::fabs(atom.shift.to_double()));
    return static_cast<std::uint64_t>(std::floor(reach)) + 2;
}

// ---------------------------------------------------------------------------
// Summation engines

SeriesResult accelerated_alternating_sum(const PairedTermStream& stream, const PrecisionContext& ctx)
{
    const unsigned digits = ctx.requested_digits() + ctx.guard_digits();
    const auto n = static_cast<std::uint64_t>(
                       std::ceil(digits * std::log(10.0) / std::log(3.0 + std::sqrt(8.0))))
                   + 5;
    const PrecisionContext wctx = ctx.widened(decimal_digits(n) + 1);
    const std::uint32_t w = wctx.scale();

    std::vector<BigFixed> u;
    const std::uint64_t needed = std::max<std::uint64_t>(n, 16);
    u.reserve(needed);
    for (std::uint64_t j = 1; j <= needed; ++j)
        u.push_back(stream.paired(j, w));
    check_alternation(u);

    BigFixed head = stream.head(w);
    int sigma = 0;
    for (const auto& term : u) {
        if (term.sign() != 0) {
            sigma = term.sign();
            break;
        }
    }
    if (sigma == 0)
        return finalize(head, ulps(2, w), n, SummationMethod::accelerated, ctx);

    // Cohen-Villegas-Zagier, algorithm 1, with exact rational weights.
    const BigInt d = chebyshev_at_three(n);
    Rational b(-1);
    Rational c = Rational(BigInt(-d));
    BigFixed acc = BigFixed::zero(w);
    BigInt weight_mass(0);
    for (std::uint64_t k = 0; k < n; ++k) {
        c = b - c;
        BigFixed a = u[k];
        if ((k % 2 == 1) != (sigma < 0))
            a = -a; // a_k = sigma (-1)^k u_{k+1} >= 0
        acc += BigFixed(BigInt(a.mantissa() * c.numerator()), w).div_int(c.denominator());
        weight_mass += ::abs(c.numerator()) / c.denominator() + 1;
        const auto kk = static_cast<long>(k);
        const auto nn = static_cast<long>(n);
        b = b * Rational((kk + nn) * (kk - nn) * 2, (2 * kk + 1) * (kk + 1));
    }
    BigFixed tail = acc.div_int(d);
    BigFixed value = head + (sigma > 0 ? tail : -tail);

    // |u_1| / d for the truncation, then 2 ulp per term weighted by |c_k| / d.
    BigFixed bound = u[0].abs().div_int(d) + ulps(1, w);
    BigInt rounding = (2 * weight_mass + d - 1) / d;
    bound += BigFixed(rounding + 4, w);
    return finalize(value, bound, n, SummationMethod::accelerated, ctx);
}

SeriesResult direct_alternating_sum(const PairedTermStream& stream, std::uint64_t terms, const PrecisionContext& ctx)
{
    if (terms == 0)
        throw Error(ErrorCode::InvalidArgument, "direct summation needs at least one term");
    const PrecisionContext wctx = ctx.widened(decimal_digits(terms) + 1);
    const std::uint32_t w = wctx.scale();

    std::vector<BigFixed> first;
    for (std::uint64_t j = 1; j <= std::min<std::uint64_t>(terms + 1, 16); ++j)
        first.push_back(stream.paired(j, w));
    check_alternation(first);

    BigFixed value = stream.partial_sum(terms, w);
    BigFixed bound = stream.paired(terms + 1, w).abs() + ulps(2 * terms + 4, w);
    return finalize(value, bound, terms, SummationMethod::direct, ctx);
}

SeriesResult euler_maclaurin_sum(const PairedTermStream& stream, const TailModel& tail,
                                 std::optional<std::uint64_t> terms, const PrecisionContext& ctx)
{
    Rational log_coefficients;
    for (const auto& atom : tail.atoms)
        if (atom.power == 1)
            log_coefficients += atom.coefficient;
    if (!log_coefficients.is_zero())
        throw Error(ErrorCode::InvalidArgument, "tail model with a divergent logarithmic integral");

    const std::uint64_t cut_floor = tail.minimum_cut();
    std::uint64_t n = 0;
    if (terms) {
        n = std::max(*terms, cut_floor);
    } else {
        const double target = std::pow(10.0, -static_cast<double>(ctx.requested_digits() + 1));
        n = std::max<std::uint64_t>(cut_floor, 16);
        while (tail.next_correction(static_cast<double>(n)) > target && n < kMaxEulerMaclaurinTerms)
            n = std::min<std::uint64_t>(kMaxEulerMaclaurinTerms, n + n / 4 + 1);
    }

    const PrecisionContext wctx = ctx.widened(decimal_digits(n) + 2);
    const std::uint32_t w = wctx.scale();
    const Rational cut(BigInt(static_cast<unsigned long>(n)));

    BigFixed value = stream.partial_sum(n, w);

    // Integral of g over [N, inf)
    BigFixed integral = BigFixed::zero(w);
    for (const auto& atom : tail.atoms) {
        if (atom.power == 1) {
            BigFixed ratio = rational_at((cut + atom.shift) / cut, w);
            BigFixed log_term = ln(ratio, wctx);
            BigFixed scaled(BigInt(log_term.mantissa() * atom.coefficient.numerator()), w);
            integral -= scaled.div_int(atom.coefficient.denominator());
        } else {
            integral += rational_at(atom.coefficient
                                        / (Rational(static_cast<long>(atom.power) - 1)
                                           * pow(cut + atom.shift, atom.power - 1)),
                                    w);
        }
    }
    // - g(N)/2 - g'(N)/12
    Rational correction = -tail.value(cut) / Rational(2) - tail.derivative(1, cut) / Rational(12);
    value += integral + rational_at(correction, w);

    Rational next;
    if (tail.sign_definite_derivatives) {
        next = abs(tail.derivative(3, cut)) / Rational(720);
    } else {
        for (const auto& atom : tail.atoms) {
            TailModel single{{atom}, true};
            next += abs(single.derivative(3, cut)) / Rational(720);
        }
    }
    BigFixed bound = rational_at(next, w) + ulps(2 * n + 4 * tail.atoms.size() + 8, w);
    return finalize(value, bound, n, SummationMethod::direct, ctx);
}

// ---------------------------------------------------------------------------
// Series identities

SeriesResult alternating_power_sum(unsigned k, const Rational& x, const PrecisionContext& ctx, SeriesOptions options)
{
    require_non_integer(x, "sum (-1)^n/(x+n)^(k+1)");
    const unsigned m = k + 1;
    auto stream = PairedTermStream::symmetric([x, m](std::int64_t n, std::uint32_t scale) {
        return reciprocal_power(x, n, m, scale, n % 2 == 0 ? 1 : -1);
    });
    if (options.method == SummationMethod::accelerated)
        return accelerated_alternating_sum(stream, ctx);
    return direct_alternating_sum(stream, options.terms.value_or(kDefaultDirectTerms), ctx);
}

SeriesResult reciprocal_sine_series(const Rational& x, const PrecisionContext& ctx, SeriesOptions options)
{
    return alternating_power_sum(0, x, ctx, options);
}

SeriesResult pi_power_from_series(unsigned k, const Rational& x, const PrecisionContext& ctx, SeriesOptions options)
{
    require_non_integer(x, "pi_power_from_series");
    // pi^(k+1) can reach ~10^(k/2); keep the requested digits after the point.
    const auto extra = static_cast<unsigned>(std::ceil((k + 1) * std::log10(std::numbers::pi))) + 4;
    const PrecisionContext wctx = ctx.widened(extra);
    const std::uint32_t w = wctx.scale();

    BigFixed bk = bk_eval(k, x, wctx); // SingularPoint before any summation
    SeriesResult sum = alternating_power_sum(k, x, wctx, options);

    BigFixed value = sum.value / bk;
    if (k % 2 == 1)
        value = -value;

    // e_S/|B| + |value| e_B/|B| + division rounding
    const BigFixed bk_error = ulps(8, w);
    const BigFixed abs_bk = bk.abs();
    BigFixed bound = sum.error_bound / abs_bk + ulps(1, w);
    bound += (value.abs() * bk_error) / abs_bk + ulps(3, w);

    SeriesResult out = finalize(value, bound, sum.terms_used, sum.method, ctx);
    return out;
}

SeriesResult cotangent_series(const Rational& x, const PrecisionContext& ctx, std::optional<std::uint64_t> terms)
{
    require_non_integer(x, "cotangent_series");
    auto stream = PairedTermStream::symmetric(
        [x](std::int64_t n, std::uint32_t scale) { return reciprocal_power(x, n, 1, scale, 1); });
    // g(t) = 1/(t + x) - 1/(t - x) = -2x / (t^2 - x^2)
    TailModel tail{{{Rational(1), x, 1}, {Rational(-1), -x, 1}}, true};
    return euler_maclaurin_sum(stream, tail, terms, ctx);
}

SeriesResult cot_difference_series(const Rational& x, const Rational& a, const PrecisionContext& ctx,
                                   std::optional<std::uint64_t> terms)
{
    if (x == a)
        throw Error(ErrorCode::CoincidentPoints, "cot_difference_series needs x != a");
    require_non_integer(x, "cot_difference_series");
    require_non_integer(a, "cot_difference_series");
    const Rational gap = a - x;
    auto stream = PairedTermStream::symmetric([x, a, gap](std::int64_t n, std::uint32_t scale) {
        const Rational idx(static_cast<long>(n));
        return rational_at(gap / ((x - idx) * (a - idx)), scale);
    });
    // term(t) + term(-t) = 1/(t+x) - 1/(t-x) - 1/(t+a) + 1/(t-a)
    TailModel tail{{{Rational(1), x, 1}, {Rational(-1), -x, 1}, {Rational(-1), a, 1}, {Rational(1), -a, 1}}, true};
    return euler_maclaurin_sum(stream, tail, terms, ctx);
}

SeriesResult appendix_pi_series(const PrecisionContext& ctx, std::optional<std::uint64_t> terms)
{
    auto stream = PairedTermStream::symmetric([](std::int64_t n, std::uint32_t scale) {
        BigInt den = BigInt(2 * n - 1) * BigInt(4 * n - 1);
        BigInt num;
        mpz_setbit(num.get_mpz_t(), scale);
        BigInt out;
        mpz_tdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return BigFixed(out, scale);
    });
    // 1/((2t-1)(4t-1)) + 1/((2t+1)(4t+1)) in partial fractions
    const Rational half(1, 2);
    const Rational quarter(1, 4);
    TailModel tail{{{half, -half, 1}, {-half, -quarter, 1}, {-half, half, 1}, {half, quarter, 1}}, true};
    SeriesResult sum = euler_maclaurin_sum(stream, tail, terms, ctx.widened(1));
    SeriesResult out;
    out.value = sum.value.mul_int(2).rescaled(ctx.scale());
    out.error_bound = round_up(sum.error_bound.mul_int(2), ctx.scale()) + ctx.ulp();
    out.terms_used = sum.terms_used;
    out.method = sum.method;
    return out;
}

IdentityResidual derivative_identity_check(unsigned k, const Rational& x, const PrecisionContext& ctx, BkSign sign)
{
    require_non_integer(x, "derivative_identity_check");
    const auto extra = static_cast<unsigned>(std::ceil((k + 1) * std::log10(std::numbers::pi))) + 4;
    const PrecisionContext wctx = ctx.widened(extra);
    const std::uint32_t w = wctx.scale();

    BigFixed bk = bk_eval(k, x, wctx);
    if (sign == BkSign::flipped)
        bk = -bk;
    SeriesResult sum = alternating_power_sum(k, x, wctx);
    BigFixed lhs = k % 2 == 0 ? sum.value : -sum.value;

    const BigFixed pi = reference_pi(wctx);
    BigFixed pi_k = BigFixed::one(w); // pi^k
    for (unsigned i = 0; i < k; ++i)
        pi_k *= pi;
    BigFixed pi_k1 = pi_k * pi;
    BigFixed rhs = pi_k1 * bk;

    // e_S + pi^(k+1) e_B + (k+1) pi^k |B| e_pi + product rounding
    BigFixed bound = sum.error_bound + pi_k1.abs().mul_int(8).div_int(BigInt(1) << w) + ulps(8, w);
    bound += (pi_k.abs() * bk.abs()).mul_int(static_cast<long>(2 * (k + 1))).div_int(BigInt(1) << w);
    bound += ulps(4 * (k + 2), w);

    IdentityResidual out;
    out.residual = (lhs - rhs).abs().rescaled(ctx.scale());
    out.bound = round_up(bound, ctx.scale()) + ctx.ulp();
    return out;
}

} // namespace pikiln
