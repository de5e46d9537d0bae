#include <cmath>
#include <cstdlib>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "helpers.hpp"
#include "pikiln/errors.hpp"
#include "pikiln/oracle.hpp"
#include "pikiln/parallel.hpp"
#include "pikiln/series.hpp"
#include "pikiln/study.hpp"
#include "pikiln/verify.hpp"

using namespace pikiln;
using pikiln::testing::ulp_distance;

namespace {

struct ThreadsGuard {
    explicit ThreadsGuard(const char* value) { setenv("PI_KILN_THREADS", value, 1); }
    ~ThreadsGuard() { unsetenv("PI_KILN_THREADS"); }
};

double as_double(const std::string& s) { return std::stod(s); }

} // namespace

TEST_CASE("two arctangent identities agree")
{
    for (unsigned digits : {15u, 30u, 50u, 100u}) {
        CAPTURE(digits);
        const PrecisionContext ctx(digits);
        CHECK(ulp_distance(reference_pi(ctx), reference_pi_euler(ctx)) <= 64);
    }
    CHECK(reference_pi(PrecisionContext(15)).to_decimal(15) == "3.141592653589793");
    CHECK(reference_pi(PrecisionContext(50)).to_decimal(50) ==
          reference_pi(PrecisionContext(50, 20)).to_decimal(50));
}

TEST_CASE("oracle squared matches the k = 1 series")
{
    const PrecisionContext ctx(30);
    const BigFixed pi = reference_pi(ctx);
    const SeriesResult s = pi_power_from_series(1, Rational(1, 4), ctx);
    CHECK((pi * pi - s.value).abs() <= s.error_bound + ctx.ulp().mul_int(4));
}

TEST_CASE("finite-difference weights")
{
    const auto w = central_difference_weights(1, 1);
    REQUIRE(w.size() == 3);
    CHECK(w[0] == doctest::Approx(-0.5));
    CHECK(w[1] == doctest::Approx(0.0));
    CHECK(w[2] == doctest::Approx(0.5));
    CHECK(reciprocal_sine_derivative(0, 0.5) == doctest::Approx(1.0));
}

TEST_CASE("parallel sum is independent of thread count")
{
    auto term = [](std::uint64_t n) { return BigFixed::from_rational(Rational(1, static_cast<long>(n)), 200); };
    BigFixed one, eight;
    {
        ThreadsGuard g("1");
        CHECK(thread_count() == 1);
        one = parallel_sum(1, 50000, 200, term);
    }
    {
        ThreadsGuard g("8");
        CHECK(thread_count() == 8);
        eight = parallel_sum(1, 50000, 200, term);
    }
    CHECK(one == eight);
}

TEST_CASE("study targets")
{
    const StudyTarget t = StudyTarget::parse("pi-power:k=2,x=2/8,method=direct");
    CHECK(t.formula == "pi-power");
    CHECK(*t.k == 2);
    CHECK(t.x == "1/4");
    CHECK(StudyTarget::parse("product:wallis,correction=first-order").formula_id() == "wallis");
    CHECK(StudyTarget::parse("product:id=odd_square").product_id == "odd_square");
    CHECK_THROWS_AS(StudyTarget::parse("bogus"), Error);
    CHECK_THROWS_AS(StudyTarget::parse("cot"), Error);
    CHECK_THROWS_AS(StudyTarget::parse("product:nope"), Error);
    CHECK(parse_grid("").empty());
    CHECK(parse_grid("3,1,2") == std::vector<std::uint64_t>{3, 1, 2});
    CHECK_THROWS_AS(parse_grid("1,,2"), Error);
}

TEST_CASE("appendix study errors decrease strictly")
{
    const PrecisionContext ctx(30);
    const std::vector<std::uint64_t> grid{10000, 100, 1000};
    const auto rows = convergence_study(StudyTarget::parse("appendix"), grid, ctx);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].n == 100);
    CHECK(rows[2].n == 10000);
    for (const auto& row : rows)
        CHECK(row.within_bound);
    CHECK(as_double(rows[1].abs_error) < as_double(rows[0].abs_error));
    CHECK(as_double(rows[2].abs_error) < as_double(rows[1].abs_error));
}

TEST_CASE("viete study follows 4^-m")
{
    const PrecisionContext ctx(30);
    const std::vector<std::uint64_t> grid{5, 10, 20};
    const auto rows = convergence_study(StudyTarget::parse("viete"), grid, ctx);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double ratio = as_double(rows[i].abs_error) / as_double(rows[i - 1].abs_error);
        const double model = std::pow(4.0, -static_cast<double>(rows[i].n - rows[i - 1].n));
        CHECK(ratio / model < 10.0);
        CHECK(ratio / model > 0.1);
    }
    CHECK(convergence_study(StudyTarget::parse("viete"), {}, ctx).empty());
}

TEST_CASE("study output formats")
{
    const PrecisionContext ctx(15);
    const std::vector<std::uint64_t> grid{10, 20};
    const auto rows =
        convergence_study(StudyTarget::parse("product:euler_wallis_1_4,correction=first-order"), grid, ctx);

    const auto json = nlohmann::json::parse(study_to_json(rows));
    REQUIRE(json.size() == 2);
    CHECK(json[0]["formula_id"] == "euler_wallis_1_4");
    CHECK(json[0]["params"]["correction"] == "first-order");
    CHECK(json[1]["N"] == 20);
    CHECK_FALSE(json[0].contains("elapsed_ms"));
    CHECK(nlohmann::json::parse(study_to_json(rows, true))[0].contains("elapsed_ms"));

    const std::string csv = study_to_csv(rows);
    CHECK(csv.rfind("formula_id,k,x,a,method,correction,N,value,abs_error,bound\n", 0) == 0);
    CHECK(csv.find("\neuler_wallis_1_4,,,,,first-order,10,") != std::string::npos);
}

TEST_CASE("study output is identical across thread counts")
{
    const PrecisionContext ctx(20);
    const std::vector<std::uint64_t> grid{100, 1000, 5000, 20000};
    const StudyTarget target = StudyTarget::parse("cot:x=1/3");
    std::string one, eight;
    {
        ThreadsGuard g("1");
        one = study_to_csv(convergence_study(target, grid, ctx));
    }
    {
        ThreadsGuard g("8");
        eight = study_to_csv(convergence_study(target, grid, ctx));
    }
    CHECK(one == eight);
}

TEST_CASE("verify")
{
    std::ostringstream a, b;
    CHECK(run_verify("bruno", 20, a));
    CHECK(run_verify("bruno", 20, b));
    CHECK(a.str() == b.str());
    CHECK(a.str().find("FAIL") == std::string::npos);
    CHECK(a.str().find("PASS bruno.closed_form k=2") != std::string::npos);
    std::ostringstream c;
    CHECK_THROWS_AS(run_verify("everything", 20, c), Error);
}
