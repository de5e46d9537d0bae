#include <cmath>
#include <numbers>

#include <doctest.h>

#include "helpers.hpp"
#include "pikiln/errors.hpp"
#include "pikiln/exact.hpp"
#include "pikiln/oracle.hpp"
#include "pikiln/products.hpp"

using namespace pikiln;
using pikiln::testing::fx;
using pikiln::testing::within;

namespace {

BigFixed error_of(const ProductResult& r, const std::string& id, const PrecisionContext& ctx)
{
    return (r.value - catalog_limit(id, ctx)).abs();
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace

TEST_CASE("catalog")
{
    CHECK(product_catalog().size() == 12);
    CHECK(find_product("odd_square").limit_expr == "pi / 4");
    CHECK(find_product("euler_pi4").convergence_class == ConvergenceClass::slow);
    CHECK_THROWS_AS(find_product("nope"), Error);
    CHECK(parse_tail_correction("first-order") == TailCorrection::first_order);
    CHECK_THROWS_AS(parse_tail_correction("second"), Error);
}

TEST_CASE("euler-wallis products")
{
    const PrecisionContext ctx(30);
    const ProductResult one = euler_wallis(Rational(1, 2), 1, TailCorrection::none, ctx);
    CHECK(one.value == fx("0.75", ctx));

    const ProductResult half = euler_wallis(Rational(1, 2), 10000, TailCorrection::first_order, ctx);
    const BigFixed two_over_pi = BigFixed::from_integer(2, ctx.scale()) / reference_pi(ctx);
    CHECK(within(half.value, two_over_pi, half.error_bound));
    CHECK(within(half.value, two_over_pi, fx("0.00000001", ctx)));
    CHECK(half.corrected);

    // limit 2 sqrt 2 / pi at x = 1/4
    const ProductResult quarter = euler_wallis(Rational(1, 4), 2000, TailCorrection::first_order, ctx);
    const BigFixed limit = radical_eval(RadicalExpr::sqrt(2), ctx).mul_int(2) / reference_pi(ctx);
    CHECK(within(quarter.value, limit, quarter.error_bound));

    CHECK_THROWS_AS(euler_wallis(Rational(1), 10, TailCorrection::none, ctx), Error);
    CHECK_THROWS_AS(euler_wallis(Rational(0), 10, TailCorrection::none, ctx), Error);
}

TEST_CASE("partial product times pi x matches sin(pi x) at the six points")
{
    const PrecisionContext ctx(25);
    const BigFixed pi = reference_pi(ctx);
    for (const Rational& x : {Rational(1, 4), Rational(1, 2), Rational(1, 5), Rational(1, 10), Rational(1, 3),
                              Rational(1, 6)}) {
        CAPTURE(x.to_string());
        const ProductResult p = euler_wallis(x, 5000, TailCorrection::first_order, ctx);
        const BigFixed pix = pi * BigFixed::from_rational(x, ctx.scale());
        const BigFixed sine = radical_eval(sin_pi_rational(x), ctx);
        CHECK(within(p.value * pix, sine, p.error_bound.mul_int(4) + ctx.ulp().mul_int(16)));
    }
}

TEST_CASE("first-order correction shrinks the error at least 4x per doubling")
{
    const PrecisionContext ctx(30);
    for (const char* id : {"euler_wallis_1_4", "euler_wallis_1_3", "odd_square", "wallis"}) {
        CAPTURE(id);
        double previous = 0.0;
        for (std::uint64_t n : {250ull, 500ull, 1000ull, 2000ull}) {
            const ProductResult r = catalog_eval(id, n, TailCorrection::first_order, ctx);
            const double e = error_of(r, id, ctx).to_double();
            CHECK(e <= r.error_bound.to_double());
            if (previous > 0.0)
                CHECK(previous / e >= 4.0);
            previous = e;
        }
    }
}

TEST_CASE("wallis and odd_square")
{
    const PrecisionContext ctx(20);
    CHECK(within(catalog_eval("wallis", 1, TailCorrection::none, ctx).value, fx("4/3", ctx), ctx.ulp().mul_int(4)));
    for (const char* id : {"wallis", "odd_square"}) {
        for (std::uint64_t n : {10ull, 100ull, 1000ull}) {
            const ProductResult r = catalog_eval(id, n, TailCorrection::none, ctx);
            const BigFixed e = error_of(r, id, ctx);
            CHECK(e <= r.error_bound);
            CHECK(e.to_double() <= 1.0 / static_cast<double>(n));
        }
    }
    CHECK(catalog_limit("odd_square", ctx).to_decimal(15) == "0.785398163397448");
}

TEST_CASE("viete")
{
    const PrecisionContext ctx(20);
    CHECK(viete(1, ctx).value.to_decimal(15) == "1.414213562373095");

    const PrecisionContext wide(40);
    const ProductResult r = viete(60, wide);
    CHECK(error_of(r, "viete", wide) <= BigFixed::parse("1/1000000000000000000000000000000", wide.scale()));

    // error tracks the 4^-m model within a factor of 10
    for (unsigned m : {5u, 10u, 20u}) {
        const double e = error_of(viete(m, ctx), "viete", ctx).to_double();
        const double model = std::pow(std::numbers::pi, 3) / 48.0 * std::pow(4.0, -static_cast<double>(m));
        CHECK(e / model < 10.0);
        CHECK(e / model > 0.1);
    }
}

TEST_CASE("prime sieve")
{
    CHECK(prime_sieve(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    const auto hundred = prime_sieve(100);
    CHECK(hundred.size() == 25);
    std::size_t trial = 0;
    for (std::uint64_t n = 0; n <= 1000; ++n)
        trial += is_prime(n);
    CHECK(prime_sieve(1000).size() == trial);
    CHECK(prime_sieve(1000000).size() == 78498);
}

TEST_CASE("prime products")
{
    const PrecisionContext ctx(20);
    const ProductResult z = catalog_eval("euler_zeta2", 1000000, TailCorrection::none, ctx);
    CHECK(error_of(z, "euler_zeta2", ctx) <= z.error_bound);
    CHECK(error_of(z, "euler_zeta2", ctx).to_double() < 1e-6);
    CHECK(z.bound_is_rigorous);

    const ProductResult p = catalog_eval("euler_pi4", 100000, TailCorrection::none, ctx);
    CHECK_FALSE(p.bound_is_rigorous);
    CHECK(error_of(p, "euler_pi4", ctx).to_double() < 3e-4);
}

TEST_CASE("nested exponent product")
{
    const PrecisionContext ctx(20);
    const ProductResult r = catalog_eval("nested_exponent", 200, TailCorrection::none, ctx);
    CHECK(error_of(r, "nested_exponent", ctx).to_double() < 0.01);
    CHECK(error_of(r, "nested_exponent", ctx) <= r.error_bound);
    CHECK_FALSE(r.bound_is_rigorous);
}

TEST_CASE("golden ratio and functional equation")
{
    const PrecisionContext ctx(30);
    const IdentityResidual g = golden_ratio_check(10000, ctx);
    CHECK(g.within());
    CHECK(g.residual.to_double() < 1e-6);

    for (const Rational& x : {Rational(1, 4), Rational(1, 3), Rational(1, 10)})
        CHECK(functional_equation_check(x, ctx) <= ctx.ulp().mul_int(8));
    CHECK_THROWS_AS(functional_equation_check(Rational(1, 7), ctx), Error);
}
