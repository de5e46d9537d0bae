#include "pikiln/verify.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "pikiln/bruno.hpp"
#include "pikiln/errors.hpp"
#include "pikiln/exact.hpp"
#include "pikiln/oracle.hpp"
#include "pikiln/partitions.hpp"
#include "pikiln/products.hpp"
#include "pikiln/series.hpp"

namespace pikiln {

namespace {

std::string sci(double v)
{
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.3e", v);
    return buf.data();
}

BigFixed power_of_ten_inverse(unsigned digits, std::uint32_t scale)
{
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, digits);
    return BigFixed::from_rational(Rational(BigInt(1), den), scale);
}

class Reporter {
public:
    explicit Reporter(std::ostream& out) : out_(out) {}

    bool ok() const { return ok_; }

    void line(bool pass, const std::string& name, const std::string& detail)
    {
        ok_ = ok_ && pass;
        out_ << (pass ? "PASS " : "FAIL ") << name;
        if (!detail.empty())
            out_ << ' ' << detail;
        out_ << '\n';
    }

    /// residual <= bound and residual <= tolerance
    void residual(const std::string& name, const BigFixed& residual, const BigFixed& bound,
                  const BigFixed& tolerance)
    {
        const std::uint32_t s = std::max({residual.scale(), bound.scale(), tolerance.scale()});
        const BigFixed r = residual.abs().rescaled(s);
        const bool pass = r <= bound.rescaled(s) && r <= tolerance.rescaled(s);
        line(pass, name,
             "residual=" + r.to_scientific(3) + " bound=" + bound.to_scientific(3) +
                 " tol=" + tolerance.to_scientific(3));
    }

    template <class F>
    void guarded(const std::string& name, F&& body)
    {
        try {
            body();
        } catch (const Error& e) {
            line(false, name, std::string("error=") + std::string(to_string(e.code())));
        }
    }

private:
    std::ostream& out_;
    bool ok_ = true;
};

const std::array<Rational, 4>& series_points()
{
    static const std::array<Rational, 4> points = {Rational(1, 4), Rational(1, 3), Rational(1, 6), Rational(1, 2)};
    return points;
}

void series_suite(Reporter& r, unsigned digits)
{
    const PrecisionContext ctx(digits);
    const PrecisionContext wctx = ctx.widened(6);
    const BigFixed tol = ctx.tolerance();
    const BigFixed pi = reference_pi(wctx);
    const auto& table = TrigTable::instance();

    r.guarded("oracle.machin_pair", [&] {
        const BigFixed diff = reference_pi(ctx) - reference_pi_euler(ctx);
        r.residual("oracle.machin_pair", diff, ctx.ulp().mul_int(64), tol);
    });

    for (const Rational& x : series_points()) {
        const std::string tag = " x=" + x.to_string();
        const TrigValue t = table.lookup(x);
        const BigFixed sin_v = radical_eval(t.sin, wctx);
        const BigFixed cos_v = radical_eval(t.cos, wctx);
        r.guarded("series.recip_sine" + tag, [&] {
            const SeriesResult s = reciprocal_sine_series(x, ctx);
            const BigFixed target = (pi / sin_v).rescaled(ctx.scale());
            r.residual("series.recip_sine" + tag, s.value - target, s.error_bound, tol);
        });
        r.guarded("series.cot" + tag, [&] {
            const SeriesResult s = cotangent_series(x, ctx);
            const BigFixed target = (pi * cos_v / sin_v).rescaled(ctx.scale());
            r.residual("series.cot" + tag, s.value - target, s.error_bound, tol);
        });
    }

    r.guarded("series.cot_diff x=1/4 a=1/2", [&] {
        const SeriesResult s = cot_difference_series(Rational(1, 4), Rational(1, 2), ctx);
        r.residual("series.cot_diff x=1/4 a=1/2", s.value - pi.rescaled(ctx.scale()), s.error_bound, tol);
    });

    r.guarded("series.appendix N=10000", [&] {
        const SeriesResult s = appendix_pi_series(ctx, 10000);
        r.residual("series.appendix N=10000", s.value - pi.rescaled(ctx.scale()), s.error_bound,
                   power_of_ten_inverse(8, ctx.scale()));
    });

    const unsigned power_digits = digits > 5 ? digits - 5 : digits;
    for (const Rational& x : {Rational(1, 4), Rational(1, 6)}) {
        BigFixed pik = pi;
        for (unsigned k = 0; k <= 6; ++k) {
            if (k > 0)
                pik *= pi;
            const std::string name = "series.pi_power k=" + std::to_string(k) + " x=" + x.to_string();
            const TrigValue t = table.lookup(x);
            const double magnitude = std::fabs(bk_symbolic(k).approx(t.sin.approx(), t.cos.approx()));
            try {
                const SeriesResult s = pi_power_from_series(k, x, ctx);
                if (magnitude < 1e-12) {
                    r.line(false, name, "expected=singular");
                    continue;
                }
                r.residual(name, s.value - pik.rescaled(s.value.scale()), s.error_bound,
                           power_of_ten_inverse(power_digits, ctx.scale()));
            } catch (const Error& e) {
                const bool expected = e.code() == ErrorCode::SingularPoint && magnitude < 1e-12;
                r.line(expected, name, std::string("error=") + std::string(to_string(e.code())));
            }
        }
    }

    for (unsigned k = 0; k <= 6; ++k) {
        const std::string name = "series.identity k=" + std::to_string(k) + " x=1/4";
        r.guarded(name, [&] {
            const IdentityResidual c = derivative_identity_check(k, Rational(1, 4), ctx);
            r.residual(name, c.residual, c.bound, c.bound);
        });
    }
    r.guarded("series.b1_sign_regression", [&] {
        const bool good = derivative_identity_check(1, Rational(1, 4), ctx).within();
        const bool flipped = derivative_identity_check(1, Rational(1, 4), ctx, BkSign::flipped).within();
        r.line(good && !flipped, "series.b1_sign_regression",
               std::string("faa_di_bruno=") + (good ? "within" : "outside") +
                   " flipped=" + (flipped ? "within" : "outside"));
    });
}

void bruno_suite(Reporter& r)
{
    const std::array<const char*, 3> golden = {"1 / s", "-c / s^2", "(2 - s^2) / (2 s^3)"};
    for (unsigned k = 0; k < golden.size(); ++k) {
        const std::string got = bk_symbolic(k).to_string();
        r.line(got == golden[k], "bruno.closed_form k=" + std::to_string(k), "B=\"" + got + "\"");
    }

    const std::array<std::size_t, 13> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (unsigned k = 0; k < counts.size(); ++k) {
        const std::size_t got = enumerate_constrained(k).size();
        r.line(got == counts[k], "bruno.partition_count k=" + std::to_string(k),
               "count=" + std::to_string(got) + " expected=" + std::to_string(counts[k]));
    }

    const PrecisionContext ctx(20);
    for (const Rational& x : {Rational(1, 4), Rational(1, 3), Rational(1, 6)}) {
        for (unsigned k = 0; k <= 8; ++k) {
            const std::string name = "bruno.finite_difference k=" + std::to_string(k) + " x=" + x.to_string();
            try {
                const double exact = bk_eval(k, x, ctx).to_double();
                const double fd = bk_finite_difference(k, x.to_double());
                const double rel = std::fabs(exact - fd) / std::fabs(exact);
                r.line(rel <= 1e-5, name, "relative=" + sci(rel) + " tol=1.000e-05");
            } catch (const Error& e) {
                r.line(e.code() == ErrorCode::SingularPoint, name,
                       std::string("error=") + std::string(to_string(e.code())));
            }
        }
    }
}

void products_suite(Reporter& r, unsigned digits)
{
    const PrecisionContext ctx(digits);
    const BigFixed tol = ctx.tolerance();
    const std::uint32_t s = ctx.scale();

    for (const auto& spec : product_catalog()) {
        if (spec.convergence_class != ConvergenceClass::quadratic || spec.id.rfind("euler_wallis", 0) != 0)
            continue;
        const std::string name = "products." + spec.id + " N=10000";
        r.guarded(name, [&] {
            const ProductResult p = catalog_eval(spec.id, 10000, TailCorrection::first_order, ctx);
            r.residual(name, p.value - catalog_limit(spec.id, ctx), p.error_bound,
                       power_of_ten_inverse(8, s));
        });
    }

    r.guarded("products.golden_ratio N=10000", [&] {
        const IdentityResidual c = golden_ratio_check(10000, ctx);
        r.residual("products.golden_ratio N=10000", c.residual, c.bound, power_of_ten_inverse(6, s));
    });

    r.guarded("products.euler_zeta2 N=1000000", [&] {
        const ProductResult p = catalog_eval("euler_zeta2", 1000000, TailCorrection::none, ctx);
        r.residual("products.euler_zeta2 N=1000000", p.value - catalog_limit("euler_zeta2", ctx), p.error_bound,
                   power_of_ten_inverse(6, s));
    });

    r.guarded("products.viete m=60", [&] {
        const PrecisionContext vctx(std::max(digits, 40u));
        const ProductResult p = viete(60, vctx);
        r.residual("products.viete m=60", p.value - catalog_limit("viete", vctx), p.error_bound,
                   power_of_ten_inverse(30, vctx.scale()));
    });

    // Calibrated C/N envelopes with C = 1.
    for (const char* id : {"wallis", "odd_square"}) {
        for (std::uint64_t n : {100ull, 1000ull, 10000ull}) {
            const std::string name = std::string("products.") + id + " N=" + std::to_string(n);
            r.guarded(name, [&] {
                const ProductResult p = catalog_eval(id, n, TailCorrection::none, ctx);
                r.residual(name, p.value - catalog_limit(id, ctx), p.error_bound,
                           BigFixed::one(s).div_int(static_cast<long>(n)));
            });
        }
    }

    // Demo class: tolerances frozen from a calibration run.
    r.guarded("products.euler_pi4 N=100000", [&] {
        const ProductResult p = catalog_eval("euler_pi4", 100000, TailCorrection::none, ctx);
        r.residual("products.euler_pi4 N=100000", p.value - catalog_limit("euler_pi4", ctx), p.error_bound,
                   BigFixed::parse("0.0003", s));
    });
    r.guarded("products.nested_exponent N=200", [&] {
        const ProductResult p = catalog_eval("nested_exponent", 200, TailCorrection::none, ctx);
        r.residual("products.nested_exponent N=200", p.value - catalog_limit("nested_exponent", ctx),
                   p.error_bound, BigFixed::parse("0.01", s));
    });

    for (const Rational& x : {Rational(1, 4), Rational(1, 3), Rational(1, 6), Rational(1, 5)}) {
        const std::string name = "products.functional_equation x=" + x.to_string();
        r.guarded(name, [&] {
            const BigFixed residual = functional_equation_check(x, ctx);
            r.residual(name, residual, tol, tol);
        });
    }
}

} // namespace

bool run_verify(std::string_view suite, unsigned digits, std::ostream& out)
{
    const bool all = suite == "all";
    if (!all && suite != "series" && suite != "products" && suite != "bruno")
        throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(suite) + "'");
    if (digits == 0)
        throw Error(ErrorCode::InvalidArgument, "verify needs at least one digit");

    Reporter r(out);
    if (all || suite == "series")
        series_suite(r, digits);
    if (all || suite == "bruno")
        bruno_suite(r);
    if (all || suite == "products")
        products_suite(r, digits);
    out << (r.ok() ? "OK" : "FAILED") << " suite=" << suite << " digits=" << digits << '\n';
    return r.ok();
}

} // namespace pikiln
