// pikiln command-line front end.
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pikiln/bruno.hpp"
#include "pikiln/errors.hpp"
#include "pikiln/fourier.hpp"
#include "pikiln/oracle.hpp"
#include "pikiln/products.hpp"
#include "pikiln/series.hpp"
#include "pikiln/study.hpp"
#include "pikiln/verify.hpp"

using namespace pikiln;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

void print_series(const SeriesResult& r, unsigned digits)
{
    std::cout << "value " << r.value.to_decimal(digits) << '\n'
              << "bound " << r.error_bound.to_scientific() << '\n'
              << "terms " << r.terms_used << '\n'
              << "method " << to_string(r.method) << '\n';
}

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

int fourier_check(double alpha, unsigned nmax)
{
    std::cout << "n,closed_form,quadrature,abs_diff\n";
    double worst = 0.0;
    for (unsigned n = 0; n <= nmax; ++n) {
        const double closed = fourier_coefficient(alpha, n).value;
        const double quad = fourier_coefficient_quadrature(alpha, n);
        const double diff = std::fabs(closed - quad);
        worst = std::max(worst, diff);
        char line[128];
        std::snprintf(line, sizeof line, "%u,%.15e,%.15e,%.3e\n", n, closed, quad, diff);
        std::cout << line;
    }
    const double pi = std::numbers::pi;
    const double target0 = pi / std::sin(alpha * pi);
    const double targetpi = pi / std::tan(alpha * pi);
    std::cout << "max_abs_diff " << sci(worst) << '\n'
              << "x=0 partial " << sci(std::fabs(reciprocal_sine_partial(alpha, nmax) - target0)) << '\n'
              << "x=pi partial " << sci(std::fabs(cotangent_partial(alpha, nmax) - targetpi)) << '\n';
    return worst <= 1e-10 ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"pikiln: pi from reciprocal-sine series, derivative identities and infinite products"};
    app.require_subcommand(1);

    unsigned digits = 30;
    unsigned k = 0;
    std::string x_text;
    std::string a_text;
    std::string method_text = "accelerated";
    std::string id;
    std::uint64_t n = 0;
    std::string correction_text = "none";
    std::string target_text;
    std::string grid_text;
    std::string format = "json";
    bool timing = false;
    std::string suite = "all";
    double alpha = 0.0;
    unsigned nmax = 50;

    auto* pi_power = app.add_subcommand("pi-power", "pi^(k+1) from the alternating power series");
    pi_power->add_option("--k", k, "derivative order")->required();
    pi_power->add_option("--x", x_text, "rational point p/q")->required();
    pi_power->add_option("--digits", digits, "requested decimal digits")->required();
    pi_power->add_option("--method", method_text, "direct or accelerated")
        ->check(CLI::IsMember({"direct", "accelerated"}));

    auto* bk = app.add_subcommand("bk", "closed form of B_k, optionally evaluated");
    bk->add_option("--k", k, "derivative order")->required();
    bk->add_option("--x", x_text, "rational point p/q");
    bk->add_option("--digits", digits, "requested decimal digits");

    auto* series = app.add_subcommand("series", "evaluate one of the pi series");
    series->add_option("--id", id, "recip-sine, cot, cot-diff or appendix")
        ->required()
        ->check(CLI::IsMember({"recip-sine", "cot", "cot-diff", "appendix"}));
    series->add_option("--x", x_text, "rational point p/q");
    series->add_option("--a", a_text, "second point for cot-diff");
    series->add_option("--digits", digits, "requested decimal digits")->required();

    auto* product = app.add_subcommand("product", "partial product from the catalog");
    product->add_option("--id", id, "catalog id")->required();
    product->add_option("--n", n, "factors, iterations or sieve limit")->required();
    product->add_option("--correction", correction_text, "none or first-order")
        ->check(CLI::IsMember({"none", "first-order"}));
    product->add_option("--digits", digits, "requested decimal digits")->required();

    auto* study = app.add_subcommand("study", "convergence study over a grid of N");
    study->add_option("--target", target_text, "e.g. appendix, viete, product:wallis,correction=none")->required();
    study->add_option("--grid", grid_text, "comma-separated N values")->required();
    study->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    study->add_option("--digits", digits, "requested decimal digits");
    study->add_flag("--timing", timing, "include elapsed_ms per row");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "all, series, products or bruno")
        ->check(CLI::IsMember({"all", "series", "products", "bruno"}));
    verify->add_option("--digits", digits, "requested decimal digits")->required();

    auto* fourier = app.add_subcommand("fourier-check", "closed-form Fourier coefficients against quadrature");
    fourier->add_option("--alpha", alpha, "non-integer alpha")->required();
    fourier->add_option("--nmax", nmax, "largest coefficient index")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const PrecisionContext ctx(digits);
        if (*pi_power) {
            SeriesOptions options;
            options.method = parse_summation_method(method_text);
            print_series(pi_power_from_series(k, Rational::parse(x_text), ctx, options), digits);
        } else if (*bk) {
            std::cout << bk_symbolic(k).to_string() << '\n';
            if (!x_text.empty())
                std::cout << bk_eval(k, Rational::parse(x_text), ctx).to_decimal(digits) << '\n';
        } else if (*series) {
            auto need = [&](const std::string& v, const char* flag) {
                if (v.empty())
                    throw Error(ErrorCode::InvalidArgument, "series --id " + id + " needs " + flag);
                return Rational::parse(v);
            };
            if (id == "recip-sine")
                print_series(reciprocal_sine_series(need(x_text, "--x"), ctx), digits);
            else if (id == "cot")
                print_series(cotangent_series(need(x_text, "--x"), ctx), digits);
            else if (id == "cot-diff")
                print_series(cot_difference_series(need(x_text, "--x"), need(a_text, "--a"), ctx), digits);
            else
                print_series(appendix_pi_series(ctx), digits);
        } else if (*product) {
            const ProductResult r = catalog_eval(id, n, parse_tail_correction(correction_text), ctx);
            std::cout << "value " << r.value.to_decimal(digits) << '\n'
                      << "bound " << r.error_bound.to_scientific() << (r.bound_is_rigorous ? "" : " (calibrated)")
                      << '\n'
                      << "factors " << r.factors_used << '\n'
                      << "corrected " << (r.corrected ? "yes" : "no") << '\n';
        } else if (*study) {
            const auto rows =
                convergence_study(StudyTarget::parse(target_text), parse_grid(grid_text), ctx);
            std::cout << (format == "csv" ? study_to_csv(rows, timing) : study_to_json(rows, timing));
        } else if (*verify) {
            return run_verify(suite, digits, std::cout) ? kExitOk : kExitVerifyFailed;
        } else if (*fourier) {
            return fourier_check(alpha, nmax);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.is_numeric() ? kExitNumeric : kExitUsage;
    }
    return kExitOk;
}
