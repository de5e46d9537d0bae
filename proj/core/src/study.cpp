#include "pikiln/study.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "pikiln/errors.hpp"
#include "pikiln/exact.hpp"
#include "pikiln/oracle.hpp"
#include "pikiln/parallel.hpp"
#include "pikiln/products.hpp"
#include "pikiln/series.hpp"

namespace pikiln {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    while (true) {
        const auto pos = text.find(sep);
        out.push_back(text.substr(0, pos));
        if (pos == std::string_view::npos)
            break;
        text.remove_prefix(pos + 1);
    }
    return out;
}

std::uint64_t parse_count(std::string_view text)
{
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw Error(ErrorCode::ParseError, "expected a non-negative integer, got '" + std::string(text) + "'");
    return value;
}

bool known_formula(std::string_view f)
{
    for (std::string_view name : {"appendix", "viete", "cot", "cot-diff", "recip-sine", "pi-power", "product"})
        if (f == name)
            return true;
    return false;
}

struct Evaluation {
    BigFixed value;
    BigFixed bound;
};

BigFixed pi_over_sin(const Rational& x, const PrecisionContext& ctx)
{
    return reference_pi(ctx) / radical_eval(sin_pi_rational(x), ctx);
}

BigFixed pi_cot(const Rational& x, const PrecisionContext& ctx)
{
    const TrigValue t = TrigTable::instance().lookup(x);
    return reference_pi(ctx) * radical_eval(t.cos, ctx) / radical_eval(t.sin, ctx);
}

BigFixed limit_of(const StudyTarget& t, const PrecisionContext& ctx)
{
    const PrecisionContext wctx = ctx.widened(6);
    BigFixed out;
    if (t.formula == "appendix") {
        out = reference_pi(wctx);
    } else if (t.formula == "viete") {
        out = reference_pi(wctx).div_int(2);
    } else if (t.formula == "product") {
        out = catalog_limit(t.product_id, wctx);
    } else if (t.formula == "cot") {
        out = pi_cot(Rational::parse(t.x), wctx);
    } else if (t.formula == "cot-diff") {
        out = pi_cot(Rational::parse(t.x), wctx) - pi_cot(Rational::parse(t.a), wctx);
    } else if (t.formula == "recip-sine") {
        out = pi_over_sin(Rational::parse(t.x), wctx);
    } else {
        const BigFixed pi = reference_pi(wctx);
        out = pi;
        for (unsigned i = 0; i < *t.k; ++i)
            out *= pi;
    }
    return out.rescaled(ctx.scale());
}

Evaluation evaluate(const StudyTarget& t, std::uint64_t n, const PrecisionContext& ctx)
{
    auto from_series = [](const SeriesResult& r) { return Evaluation{r.value, r.error_bound}; };
    SeriesOptions options;
    options.method = t.method.empty() ? SummationMethod::direct : parse_summation_method(t.method);
    options.terms = n;

    if (t.formula == "appendix")
        return from_series(appendix_pi_series(ctx, n));
    if (t.formula == "cot")
        return from_series(cotangent_series(Rational::parse(t.x), ctx, n));
    if (t.formula == "cot-diff")
        return from_series(cot_difference_series(Rational::parse(t.x), Rational::parse(t.a), ctx, n));
    if (t.formula == "recip-sine")
        return from_series(reciprocal_sine_series(Rational::parse(t.x), ctx, options));
    if (t.formula == "pi-power")
        return from_series(pi_power_from_series(*t.k, Rational::parse(t.x), ctx, options));
    if (t.formula == "viete") {
        if (n > 100000)
            throw Error(ErrorCode::OutOfRange, "viete iterations capped at 100000");
        const ProductResult r = viete(static_cast<unsigned>(n), ctx);
        return {r.value, r.error_bound};
    }
    const TailCorrection correction =
        t.correction.empty() ? TailCorrection::none : parse_tail_correction(t.correction);
    const ProductResult r = catalog_eval(t.product_id, n, correction, ctx);
    return {r.value, r.error_bound};
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

} // namespace

StudyTarget StudyTarget::parse(std::string_view text)
{
    StudyTarget t;
    const auto colon = text.find(':');
    t.formula = std::string(text.substr(0, colon));
    if (!known_formula(t.formula))
        throw Error(ErrorCode::UnknownId, "unknown study formula '" + t.formula + "'");
    if (colon != std::string_view::npos) {
        for (std::string_view item : split(text.substr(colon + 1), ',')) {
            const auto eq = item.find('=');
            if (eq == std::string_view::npos) {
                if (t.formula == "product" && t.product_id.empty()) {
                    t.product_id = std::string(item);
                    continue;
                }
                throw Error(ErrorCode::ParseError, "expected key=value, got '" + std::string(item) + "'");
            }
            const std::string key(item.substr(0, eq));
            const std::string value(item.substr(eq + 1));
            if (key == "k")
                t.k = static_cast<unsigned>(parse_count(value));
            else if (key == "x")
                t.x = value;
            else if (key == "a")
                t.a = value;
            else if (key == "method")
                t.method = value;
            else if (key == "correction")
                t.correction = value;
            else if (key == "id")
                t.product_id = value;
            else
                throw Error(ErrorCode::ParseError, "unknown study parameter '" + key + "'");
        }
    }

    auto need = [&](bool ok, const char* what) {
        if (!ok)
            throw Error(ErrorCode::InvalidArgument, "study target '" + t.formula + "' needs " + what);
    };
    if (t.formula == "cot" || t.formula == "recip-sine" || t.formula == "pi-power")
        need(!t.x.empty(), "x");
    if (t.formula == "cot-diff")
        need(!t.x.empty() && !t.a.empty(), "x and a");
    if (t.formula == "pi-power")
        need(t.k.has_value(), "k");
    if (t.formula == "product") {
        need(!t.product_id.empty(), "a catalog id");
        find_product(t.product_id);
    }
    if (!t.x.empty())
        t.x = Rational::parse(t.x).to_string();
    if (!t.a.empty())
        t.a = Rational::parse(t.a).to_string();
    if (!t.method.empty())
        parse_summation_method(t.method);
    if (!t.correction.empty())
        t.correction = std::string(to_string(parse_tail_correction(t.correction)));
    return t;
}

std::string StudyTarget::formula_id() const
{
    return formula == "product" ? product_id : formula;
}

std::vector<std::uint64_t> parse_grid(std::string_view text)
{
    std::vector<std::uint64_t> grid;
    if (text.empty())
        return grid;
    for (std::string_view item : split(text, ','))
        grid.push_back(parse_count(item));
    return grid;
}

std::vector<StudyRow> convergence_study(const StudyTarget& target, std::span<const std::uint64_t> grid,
                                        const PrecisionContext& ctx)
{
    std::vector<std::uint64_t> points(grid.begin(), grid.end());
    std::sort(points.begin(), points.end());
    std::vector<StudyRow> rows(points.size());
    if (points.empty())
        return rows;

    const BigFixed limit = limit_of(target, ctx);
    const unsigned digits = ctx.requested_digits();
    parallel_for(points.size(), [&](std::size_t i) {
        const auto start = std::chrono::steady_clock::now();
        const Evaluation e = evaluate(target, points[i], ctx);
        const BigFixed error = (e.value.rescaled(ctx.scale()) - limit).abs();
        const BigFixed bound = e.bound.rescaled(ctx.scale());
        const auto stop = std::chrono::steady_clock::now();

        StudyRow& row = rows[i];
        row.formula_id = target.formula_id();
        row.k = target.k;
        row.x = target.x;
        row.a = target.a;
        row.method = target.method;
        row.correction = target.correction;
        row.n = points[i];
        row.value = e.value.to_decimal(digits);
        row.abs_error = error.to_scientific();
        row.bound = bound.to_scientific();
        row.within_bound = error <= bound;
        row.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    });
    return rows;
}

std::string study_to_json(std::span<const StudyRow> rows, bool timing)
{
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        if (row.k)
            params["k"] = *row.k;
        if (!row.x.empty())
            params["x"] = row.x;
        if (!row.a.empty())
            params["a"] = row.a;
        if (!row.method.empty())
            params["method"] = row.method;
        if (!row.correction.empty())
            params["correction"] = row.correction;
        nlohmann::ordered_json item;
        item["formula_id"] = row.formula_id;
        item["params"] = params;
        item["N"] = row.n;
        item["value"] = row.value;
        item["abs_error"] = row.abs_error;
        item["bound"] = row.bound;
        if (timing)
            item["elapsed_ms"] = row.elapsed_ms;
        out.push_back(std::move(item));
    }
    return out.dump(2) + "\n";
}

std::string study_to_csv(std::span<const StudyRow> rows, bool timing)
{
    std::ostringstream os;
    os << "formula_id,k,x,a,method,correction,N,value,abs_error,bound";
    if (timing)
        os << ",elapsed_ms";
    os << "\n";
    for (const auto& row : rows) {
        os << csv_field(row.formula_id) << ',' << (row.k ? std::to_string(*row.k) : "") << ',' << row.x << ','
           << row.a << ',' << row.method << ',' << row.correction << ',' << row.n << ',' << row.value << ','
           << row.abs_error << ',' << row.bound;
        if (timing)
            os << ',' << row.elapsed_ms;
        os << "\n";
    }
    return os.str();
}

} // namespace pikiln
