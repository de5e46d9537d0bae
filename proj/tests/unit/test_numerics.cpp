#include <doctest.h>

#include "helpers.hpp"
#include "pikiln/errors.hpp"
#include "pikiln/numerics.hpp"
#include "pikiln/oracle.hpp"

using namespace pikiln;
using pikiln::testing::fx;
using pikiln::testing::ulp_distance;

TEST_CASE("precision context")
{
    const PrecisionContext ctx(30);
    CHECK(ctx.requested_digits() == 30);
    CHECK(ctx.guard_digits() == 10);
    CHECK(ctx.scale() == bits_for_digits(40));
    CHECK(ctx.scale() == 133);
    CHECK(ctx.widened(5).guard_digits() == 15);
    CHECK_THROWS_AS(PrecisionContext(0), Error);
    CHECK_THROWS_AS(PrecisionContext(10, 9), Error);
}

TEST_CASE("addition is exact")
{
    const PrecisionContext ctx(20);
    CHECK(fx("1.5", ctx) + fx("2.25", ctx) == fx("3.75", ctx));
    const BigFixed x = fx("0.1", ctx);
    CHECK(x + BigFixed::zero(ctx.scale()) == x);

    const BigFixed a = fx("1/3", ctx), b = fx("-2/7", ctx), c = fx("11/13", ctx);
    CHECK(((a + b) + c).mantissa() == (a + (b + c)).mantissa());
    CHECK(a + b == b + a);
}

TEST_CASE("mixing scales is an error")
{
    const BigFixed a = BigFixed::one(64), b = BigFixed::one(96);
    try {
        (void)(a + b);
        FAIL("expected ScaleMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ScaleMismatch);
    }
}

TEST_CASE("mul and div truncate within one ulp")
{
    const PrecisionContext ctx(30);
    CHECK(fx("0.5", ctx) * fx("0.5", ctx) == fx("0.25", ctx));

    const BigFixed one = BigFixed::one(ctx.scale());
    const BigFixed third = one / BigFixed::from_integer(3, ctx.scale());
    // |third - 1/3| < 1 ulp, i.e. |3 third - 1| < 3 ulp
    CHECK(ulp_distance(third.mul_int(3), one) <= 2);
    CHECK(third.to_decimal(30) == "0.333333333333333333333333333333");

    const BigFixed q = fx("2.5", ctx) / fx("7", ctx);
    CHECK(ulp_distance(q * fx("7", ctx), fx("2.5", ctx)) <= 8);

    CHECK_THROWS_AS(one / BigFixed::zero(ctx.scale()), Error);
}

TEST_CASE("sqrt")
{
    const PrecisionContext ctx(40);
    const auto s = ctx.scale();
    CHECK(sqrt(BigFixed::zero(s)).is_zero());
    CHECK(sqrt(fx("9/4", ctx)) == fx("1.5", ctx));

    // exact square of the mantissa, compared at scale 2s
    const BigFixed v = sqrt(fx("2", ctx));
    const BigInt square = v.mantissa() * v.mantissa();
    const BigInt two = BigInt(2) << (2 * s);
    const BigInt diff = ::abs(square - two);
    CHECK(diff <= (BigInt(2) << s));

    CHECK_THROWS_AS(sqrt(fx("-1", ctx)), Error);
}

TEST_CASE("ln and exp")
{
    for (unsigned digits : {15u, 30u, 60u, 100u}) {
        CAPTURE(digits);
        const PrecisionContext ctx(digits);
        const auto s = ctx.scale();
        CHECK(ln(BigFixed::one(s), ctx).is_zero());
        CHECK(exp(BigFixed::zero(s), ctx) == BigFixed::one(s));
        const BigFixed seven = fx("7", ctx);
        CHECK(ulp_distance(exp(ln(seven, ctx), ctx), seven) <= 8);
        const BigFixed small = fx("0.001", ctx);
        CHECK(ulp_distance(ln(exp(small, ctx), ctx), small) <= 8);
    }
    const PrecisionContext ctx(30);
    CHECK(ln(fx("2", ctx), ctx).to_decimal(30) == "0.693147180559945309417232121458");
    CHECK(exp(fx("1", ctx), ctx).to_decimal(30) == "2.718281828459045235360287471353");
    CHECK_THROWS_AS(ln(BigFixed::zero(ctx.scale()), ctx), Error);
}

TEST_CASE("pow_rational")
{
    const PrecisionContext ctx(30);
    const BigFixed r = pow_rational(fx("8", ctx), Rational(2, 3), ctx);
    CHECK(ulp_distance(r, fx("4", ctx)) <= 16);
}

TEST_CASE("extra digits never change correct ones")
{
    const PrecisionContext base(30);
    const std::string a = reference_pi(base).to_decimal(30);
    const std::string b = reference_pi(base.widened(10)).to_decimal(30);
    CHECK(a == b);
    const std::string l1 = ln(fx("3", base), base).to_decimal(30);
    const PrecisionContext wide = base.widened(10);
    CHECK(ln(fx("3", wide), wide).to_decimal(30) == l1);
}

TEST_CASE("decimal and scientific rendering")
{
    const PrecisionContext ctx(10);
    CHECK(fx("-0.00000000001", ctx).to_decimal(5) == "0.00000");
    CHECK(fx("-1.25", ctx).to_decimal(1) == "-1.3");
    CHECK(fx("0.000123", ctx).to_scientific(3) == "1.23e-04");
    CHECK(BigFixed::zero(ctx.scale()).to_scientific() == "0");
    CHECK_THROWS_AS(BigFixed::parse("1.2.3", ctx.scale()), Error);
}
