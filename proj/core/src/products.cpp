#include "pikiln/products.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pikiln/errors.hpp"
#include "pikiln/exact.hpp"
#include "pikiln/oracle.hpp"

namespace pikiln {

std::string_view to_string(ConvergenceClass c) noexcept
{
    switch (c) {
    case ConvergenceClass::quadratic: return "quadratic";
    case ConvergenceClass::geometric: return "geometric";
    case ConvergenceClass::prime: return "prime";
    case ConvergenceClass::slow: return "slow";
    }
    return "unknown";
}

std::string_view to_string(TailCorrection c) noexcept
{
    return c == TailCorrection::none ? "none" : "first-order";
}

TailCorrection parse_tail_correction(std::string_view text)
{
    if (text == "none")
        return TailCorrection::none;
    if (text == "first-order" || text == "first_order")
        return TailCorrection::first_order;
    throw Error(ErrorCode::ParseError, "unknown correction '" + std::string(text) + "'");
}

const std::vector<ProductSpec>& product_catalog()
{
    using C = ConvergenceClass;
    static const std::vector<ProductSpec> catalog = {
        {"euler_wallis_1_4", "prod_{n>=1} (1 - 1/(16 n^2))", "2 sqrt(2) / pi", C::quadratic},
        {"euler_wallis_1_2", "prod_{n>=1} (1 - 1/(4 n^2))", "2 / pi", C::quadratic},
        {"euler_wallis_1_5", "prod_{n>=1} (1 - 1/(25 n^2))", "5 sqrt(3 - phi) / (2 pi)", C::quadratic},
        {"euler_wallis_1_10", "prod_{n>=1} (1 - 1/(100 n^2))", "5 / (pi phi)", C::quadratic},
        {"euler_wallis_1_3", "prod_{n>=1} (1 - 1/(9 n^2))", "3 sqrt(3) / (2 pi)", C::quadratic},
        {"euler_wallis_1_6", "prod_{n>=1} (1 - 1/(36 n^2))", "3 / pi", C::quadratic},
        {"wallis", "prod_{n>=1} (2n/(2n-1)) (2n/(2n+1))", "pi / 2", C::quadratic},
        {"odd_square", "prod_{n>=1} (1 - 1/(2n+1)^2)", "pi / 4", C::quadratic},
        {"viete", "prod_{n>=2} 1 / cos(pi / 2^n), cos(pi/2^n) = sqrt(2 + sqrt(2 + ...)) / 2", "pi / 2",
         C::geometric},
        {"euler_zeta2", "prod_{p prime} p^2 / (p^2 - 1)", "pi^2 / 6", C::prime},
        {"euler_pi4", "prod_{p odd prime} p / (p + (-1)^((p+1)/2))", "pi / 4", C::slow},
        {"nested_exponent",
         "prod_{n>=1} (1/(2n))^(2/(2n-1)) [prod_{k=1}^n (2k)^(2k) / (2k-1)^(2k-1)]^(4/(4n^2-1))", "pi / 2",
         C::slow},
    };
    return catalog;
}

const ProductSpec& find_product(std::string_view id)
{
    for (const auto& spec : product_catalog())
        if (spec.id == id)
            return spec;
    throw Error(ErrorCode::UnknownId, "no product '" + std::string(id) + "' in the catalog");
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

ProductResult finalize(const BigFixed& value, const BigFixed& bound, std::uint64_t factors, bool corrected,
                       bool rigorous, const PrecisionContext& ctx)
{
    ProductResult out;
    out.value = value.rescaled(ctx.scale());
    out.error_bound = round_up(bound.abs(), ctx.scale()) + ctx.ulp();
    out.factors_used = factors;
    out.corrected = corrected;
    out.bound_is_rigorous = rigorous;
    return out;
}

// |value| * (e^delta - 1) for small delta, as a bound at `scale`.
BigFixed relative_bound(const BigFixed& value, double delta)
{
    const double factor = std::expm1(delta) * (1.0 + 1e-12) + 1e-300;
    BigFixed rel = BigFixed::upper_bound_of(factor, value.scale());
    return value.abs() * rel + ulps(1, value.scale());
}

// prod_{n=1}^N (1 - a^2/(n+b)^2), or its reciprocal.
ProductResult quadratic_product(const Rational& a, const Rational& b, bool reciprocal, std::uint64_t n,
                                TailCorrection correction, const PrecisionContext& ctx)
{
    if (n == 0)
        throw Error(ErrorCode::InvalidArgument, "a product needs at least one factor");
    const PrecisionContext wctx = ctx.widened(decimal_digits(n) + 3);
    const std::uint32_t w = wctx.scale();
    const Rational a2 = a * a;

    BigFixed product = BigFixed::one(w);
    for (std::uint64_t i = 1; i <= n; ++i) {
        Rational shifted = Rational(BigInt(static_cast<unsigned long>(i))) + b;
        Rational s2 = shifted * shifted;
        Rational factor = reciprocal ? s2 / (s2 - a2) : (s2 - a2) / s2;
        product *= BigFixed::from_rational(factor, w);
    }
    BigFixed rounding = ulps(3 * n + 4, w);

    const double m = static_cast<double>(n) + b.to_double();
    const double ad2 = a2.to_double();
    const double higher = ad2 * ad2 / (6.0 * m * m * m * (1.0 - ad2 / (m * m)));
    const bool corrected = correction == TailCorrection::first_order;
    double delta = 0.0;
    if (corrected) {
        // log tail: a^2 psi_N + O(a^4/N^3), psi_N ~ 1/M - 1/(2M^2)
        const Rational big_m = Rational(BigInt(static_cast<unsigned long>(n))) + b;
        const Rational psi = Rational(1) / big_m - Rational(1) / (Rational(2) * big_m * big_m);
        BigFixed exponent = BigFixed::from_rational(a2 * psi, w);
        if (!reciprocal)
            exponent = -exponent;
        product *= exp(exponent, wctx);
        rounding += ulps(8, w);
        delta = ad2 / (6.0 * m * m * m) + higher;
    } else {
        delta = ad2 / m + higher;
    }
    BigFixed bound = relative_bound(product, delta) + rounding;
    return finalize(product, bound, n, corrected, true, ctx);
}

BigFixed pi_at(const PrecisionContext& ctx) { return reference_pi(ctx); }

// sin(pi x) / (pi x)
BigFixed sinc_limit(const Rational& x, const PrecisionContext& ctx)
{
    const PrecisionContext wctx = ctx.widened(4);
    BigFixed s = radical_eval(sin_pi_rational(x), wctx);
    BigFixed denom = pi_at(wctx) * BigFixed::from_rational(x, wctx.scale());
    return (s / denom).rescaled(ctx.scale());
}

const std::vector<std::pair<std::string_view, Rational>>& euler_wallis_points()
{
    static const std::vector<std::pair<std::string_view, Rational>> points = {
        {"euler_wallis_1_4", Rational(1, 4)},  {"euler_wallis_1_2", Rational(1, 2)},
        {"euler_wallis_1_5", Rational(1, 5)},  {"euler_wallis_1_10", Rational(1, 10)},
        {"euler_wallis_1_3", Rational(1, 3)},  {"euler_wallis_1_6", Rational(1, 6)},
    };
    return points;
}

ProductResult prime_product(bool zeta2, std::uint64_t limit, const PrecisionContext& ctx)
{
    if (limit < 3)
        throw Error(ErrorCode::InvalidArgument, "prime products need a sieve limit of at least 3");
    const auto primes = prime_sieve(limit);
    const PrecisionContext wctx = ctx.widened(decimal_digits(primes.size()) + 3);
    const std::uint32_t w = wctx.scale();

    BigFixed product = BigFixed::one(w);
    std::uint64_t used = 0;
    for (std::uint64_t p : primes) {
        Rational factor;
        const auto pl = static_cast<long>(p);
        if (zeta2) {
            factor = Rational(BigInt(pl) * pl, BigInt(pl) * pl - 1);
        } else {
            if (p == 2)
                continue;
            // (p+1)/2 even <=> p = 3 mod 4
            factor = p % 4 == 3 ? Rational(pl, pl + 1) : Rational(pl, pl - 1);
        }
        product *= BigFixed::from_rational(factor, w);
        ++used;
    }
    BigFixed rounding = ulps(3 * used + 4, w);

    const double nd = static_cast<double>(limit);
    if (zeta2) {
        // pi(t) < 1.25506 t / ln t gives sum_{p > N} 1/p^2 < 2.51012 / (N ln N).
        const double tail = 2.51012 / (nd * std::log(nd)) * (1.0 + 1.0 / (nd * nd - 1.0));
        BigFixed bound = relative_bound(product, tail) + rounding;
        return finalize(product, bound, used, false, true, ctx);
    }
    // Calibrated envelope: the error stayed below 1/sqrt(N) for N = 10^3..10^6.
    BigFixed bound = BigFixed::upper_bound_of(1.0 / std::sqrt(nd), w) + rounding;
    return finalize(product, bound, used, false, false, ctx);
}

ProductResult nested_exponent(std::uint64_t n, const PrecisionContext& ctx)
{
    if (n == 0)
        throw Error(ErrorCode::InvalidArgument, "a product needs at least one factor");
    const PrecisionContext wctx = ctx.widened(decimal_digits(n) * 2 + 4);
    const std::uint32_t w = wctx.scale();

    std::vector<BigFixed> logs(2 * n + 1, BigFixed::zero(w));
    for (std::uint64_t j = 2; j <= 2 * n; ++j)
        logs[j] = ln(BigFixed::from_integer(BigInt(static_cast<unsigned long>(j)), w), wctx);

    // log of factor n: -2/(2n-1) ln(2n) + 4/(4n^2-1) L_n,
    // L_n = sum_{j=1}^{2n} (-1)^j j ln j
    BigFixed total = BigFixed::zero(w);
    BigFixed running = BigFixed::zero(w);
    for (std::uint64_t i = 1; i <= n; ++i) {
        const auto odd = static_cast<long>(2 * i - 1);
        const auto even = static_cast<long>(2 * i);
        running += logs[static_cast<std::size_t>(even)].mul_int(even);
        running -= logs[static_cast<std::size_t>(odd)].mul_int(odd);
        total -= logs[static_cast<std::size_t>(even)].mul_int(2).div_int(odd);
        total += running.mul_int(4).div_int(BigInt(static_cast<long>(i)) * static_cast<long>(i) * 4 - 1);
    }
    BigFixed value = exp(total, wctx);
    BigFixed rounding = ulps(16 * n + 16, w);
    // Calibrated envelope: |error| ~ 0.37 ln(N)/N over N = 50..800.
    const double nd = static_cast<double>(n);
    BigFixed bound = BigFixed::upper_bound_of(0.5 * std::log(nd + 1.0) / nd, w) + rounding;
    return finalize(value, bound, n, false, false, ctx);
}

} // namespace

ProductResult euler_wallis(const Rational& x, std::uint64_t n, TailCorrection correction,
                           const PrecisionContext& ctx)
{
    if (x.sign() <= 0 || x >= Rational(1))
        throw Error(ErrorCode::OutOfRange, "euler_wallis needs 0 < x < 1, got " + x.to_string());
    return quadratic_product(x, Rational(0), false, n, correction, ctx);
}

ProductResult viete(unsigned iterations, const PrecisionContext& ctx)
{
    if (iterations == 0)
        throw Error(ErrorCode::InvalidArgument, "viete needs at least one iteration");
    const PrecisionContext wctx = ctx.widened(decimal_digits(iterations) + 2);
    const std::uint32_t w = wctx.scale();
    const BigFixed two = BigFixed::from_integer(BigInt(2), w);

    BigFixed radical = sqrt(two);
    BigFixed product = BigFixed::one(w);
    for (unsigned j = 1; j <= iterations; ++j) {
        product *= two / radical;
        radical = sqrt(two + radical);
    }
    // (pi/2)(1 - sin t / t) <= pi^3 / (48 4^m), t = pi / 2^(m+1)
    const double model = std::pow(std::numbers::pi, 3) / 48.0 * std::pow(4.0, -static_cast<double>(iterations));
    BigFixed bound = BigFixed::upper_bound_of(model * (1.0 + 1e-9), w) + ulps(8ull * iterations + 8, w);
    return finalize(product, bound, iterations, false, true, ctx);
}

std::vector<std::uint64_t> prime_sieve(std::uint64_t limit)
{
    if (limit < 2)
        throw Error(ErrorCode::InvalidArgument, "prime_sieve needs limit >= 2");
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return primes;
}

ProductResult catalog_eval(std::string_view id, std::uint64_t n, TailCorrection correction,
                           const PrecisionContext& ctx)
{
    const ProductSpec& spec = find_product(id);
    for (const auto& [point_id, x] : euler_wallis_points())
        if (point_id == spec.id)
            return euler_wallis(x, n, correction, ctx);
    if (spec.id == "wallis")
        return quadratic_product(Rational(1, 2), Rational(0), true, n, correction, ctx);
    if (spec.id == "odd_square")
        return quadratic_product(Rational(1, 2), Rational(1, 2), false, n, correction, ctx);
    if (spec.id == "viete") {
        if (n > 100000)
            throw Error(ErrorCode::OutOfRange, "viete iterations capped at 100000");
        return viete(static_cast<unsigned>(n), ctx);
    }
    if (spec.id == "euler_zeta2")
        return prime_product(true, n, ctx);
    if (spec.id == "euler_pi4")
        return prime_product(false, n, ctx);
    return nested_exponent(n, ctx);
}

BigFixed catalog_limit(std::string_view id, const PrecisionContext& ctx)
{
    const ProductSpec& spec = find_product(id);
    for (const auto& [point_id, x] : euler_wallis_points())
        if (point_id == spec.id)
            return sinc_limit(x, ctx);
    const PrecisionContext wctx = ctx.widened(2);
    const BigFixed pi = pi_at(wctx);
    BigFixed out;
    if (spec.id == "odd_square" || spec.id == "euler_pi4")
        out = pi.div_int(4);
    else if (spec.id == "euler_zeta2")
        out = (pi * pi).div_int(6);
    else
        out = pi.div_int(2);
    return out.rescaled(ctx.scale());
}

IdentityResidual golden_ratio_check(std::uint64_t n, const PrecisionContext& ctx, TailCorrection correction)
{
    const PrecisionContext wctx = ctx.widened(4);
    const std::uint32_t w = wctx.scale();
    ProductResult partial = euler_wallis(Rational(1, 5), n, correction, wctx);
    const BigFixed pi = reference_pi(wctx);
    const BigFixed phi = radical_eval(golden_ratio(), wctx);
    const BigFixed coefficient = (pi * pi).mul_int(4).div_int(25);
    const BigFixed estimate = BigFixed::from_integer(BigInt(3), w) - coefficient * partial.value * partial.value;

    // d/dP of (4 pi^2/25) P^2 is (8 pi^2 / 25) P <= 1.7 near the limit
    BigFixed bound = (coefficient.mul_int(2) * partial.value.abs() * partial.error_bound).mul_int(2);
    bound += ulps(32, w);

    IdentityResidual out;
    out.residual = (estimate - phi).abs().rescaled(ctx.scale());
    out.bound = round_up(bound, ctx.scale()) + ctx.ulp();
    return out;
}

BigFixed functional_equation_check(const Rational& x, const PrecisionContext& ctx)
{
    if (x.is_integer())
        throw Error(ErrorCode::PoleAtInteger, "functional equation needs non-integer x");
    const auto& table = TrigTable::instance();
    BigFixed here = radical_eval(table.lookup(x).sin, ctx);
    BigFixed next = radical_eval(table.lookup(x + Rational(1)).sin, ctx);
    return (here + next).abs();
}

} // namespace pikiln
