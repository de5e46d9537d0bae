#include <cmath>
#include <numbers>

#include <doctest.h>

#include "helpers.hpp"
#include "pikiln/bruno.hpp"
#include "pikiln/errors.hpp"
#include "pikiln/exact.hpp"
#include "pikiln/oracle.hpp"

using namespace pikiln;
using pikiln::testing::ulp_distance;

namespace {

double monomial_at(const TrigMonomial& m, double x)
{
    const double s = std::sin(std::numbers::pi * x), c = std::cos(std::numbers::pi * x);
    return m.sign * std::pow(s, m.s_exp) * std::pow(c, m.c_exp);
}

} // namespace

TEST_CASE("faa coefficients")
{
    CHECK(faa_coefficient(PartitionVector(1, {1})) == Rational(-1));
    CHECK(faa_coefficient(PartitionVector(2, {2, 0})) == Rational(1));
    CHECK(faa_coefficient(PartitionVector(2, {0, 1})) == Rational(-1, 2));
    CHECK(faa_coefficient(PartitionVector(0, {})) == Rational(1));
}

TEST_CASE("trig factors follow the derivatives of sin")
{
    CHECK(trig_factor(0) == TrigMonomial{1, 1, 0});
    CHECK(trig_factor(1) == TrigMonomial{1, 0, 1});
    CHECK(trig_factor(2) == TrigMonomial{-1, 1, 0});
    CHECK(trig_factor(3) == TrigMonomial{-1, 0, 1});
    // sin(pi x + 6 pi/2) = -sin(pi x)
    CHECK(trig_factor(6) == TrigMonomial{-1, 1, 0});
    const double x = 0.3;
    for (unsigned i = 0; i < 12; ++i) {
        CAPTURE(i);
        const double expected = std::sin(std::numbers::pi * x + i * std::numbers::pi / 2);
        CHECK(monomial_at(trig_factor(i), x) == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("closed forms")
{
    CHECK(bk_symbolic(0).to_string() == "1 / s");
    CHECK(bk_symbolic(1).to_string() == "-c / s^2");
    CHECK(bk_symbolic(2).to_string() == "(2 - s^2) / (2 s^3)");

    const BkSymbolic b0 = bk_symbolic(0);
    CHECK(b0.even_part() == SPolynomial{Rational(1)});
    CHECK(b0.odd_part().empty());

    const BkSymbolic b1 = bk_symbolic(1);
    CHECK(b1.even_part().empty());
    CHECK(b1.odd_part() == SPolynomial{Rational(-1)});

    // c^2/s^3 + 1/(2 s) = (1 - s^2)/s^3 + 1/(2 s) = (2 - s^2)/(2 s^3)
    const BkSymbolic b2 = bk_symbolic(2);
    CHECK(b2 == BkSymbolic(2, {Rational(1), Rational(0), Rational(-1, 2)}, {}));
    CHECK(b2.denominator_exponent() == 3);
}

TEST_CASE("term counts equal partition counts")
{
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (unsigned k = 0; k < counts.size(); ++k)
        CHECK(bk_term_count(k) == counts[k]);
}

TEST_CASE("closed forms match the double-precision derivative oracle")
{
    for (double x : {0.25, 1.0 / 3.0, 1.0 / 6.0, 0.3, 0.7}) {
        const double s = std::sin(std::numbers::pi * x), c = std::cos(std::numbers::pi * x);
        for (unsigned k = 0; k <= 8; ++k) {
            CAPTURE(x);
            CAPTURE(k);
            const double closed = bk_symbolic(k).approx(s, c);
            const double fd = bk_finite_difference(k, x);
            CHECK(std::fabs(closed - fd) <= 1e-5 * std::fabs(closed));
        }
    }
}

TEST_CASE("bk_eval")
{
    const PrecisionContext ctx(30);
    CHECK(bk_eval(0, Rational(1, 2), ctx) == BigFixed::one(ctx.scale()));

    const BigFixed b2 = bk_eval(2, Rational(1, 4), ctx);
    const double s = std::sqrt(2.0) / 2.0;
    CHECK(b2.to_double() == doctest::Approx((2.0 - s * s) / (2.0 * s * s * s)).epsilon(1e-15));
    // (2 - 1/2) / (2 (sqrt 2 / 2)^3) = (3/2) / (sqrt 2 / 2) = 3 sqrt 2 / 2
    const BigFixed three_root2 = radical_eval(RadicalExpr::sqrt(2) * 3 / 2, ctx);
    CHECK(ulp_distance(b2, three_root2) <= 16);

    auto code_of = [&](unsigned k, Rational x) {
        try {
            (void)bk_eval(k, x, ctx);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    CHECK(code_of(1, Rational(1, 2)) == ErrorCode::SingularPoint);
    CHECK(code_of(0, Rational(2)) == ErrorCode::PoleAtInteger);
    CHECK(code_of(0, Rational(1, 7)) == ErrorCode::UnsupportedAngle);
}

TEST_CASE("bk_eval is odd or even about 1/2 with the parity of k")
{
    const PrecisionContext ctx(25);
    for (unsigned k = 0; k <= 6; ++k) {
        const BigFixed a = bk_eval(k, Rational(1, 6), ctx);
        const BigFixed b = bk_eval(k, Rational(5, 6), ctx);
        CHECK(ulp_distance(k % 2 == 0 ? a : -a, b) <= 16);
    }
}
