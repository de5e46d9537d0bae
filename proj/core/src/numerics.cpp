#include "pikiln/numerics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <mutex>

#include "pikiln/errors.hpp"

namespace pikiln {

namespace {

constexpr double kLog2Of10 = 3.32192809488736234787;

void require_same_scale(const BigFixed& a, const BigFixed& b)
{
    if (a.scale() != b.scale())
        throw Error(ErrorCode::ScaleMismatch, "operands at scales " + std::to_string(a.scale())
                                                  + " and " + std::to_string(b.scale()));
}

BigInt pow10(unsigned digits)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, digits);
    return out;
}

long bit_length(const BigInt& v)
{
    if (sgn(v) == 0)
        return 0;
    return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

BigInt shift_trunc(const BigInt& v, long bits)
{
    BigInt out;
    if (bits >= 0)
        mpz_mul_2exp(out.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    else
        mpz_tdiv_q_2exp(out.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(-bits));
    return out;
}

// Newton iteration for floor(sqrt(n)), n >= 0, seeded from a double.
BigInt isqrt_newton(const BigInt& n)
{
    if (sgn(n) == 0)
        return BigInt(0);
    long e = 0;
    double d = mpz_get_d_2exp(&e, n.get_mpz_t()); // n ~ d * 2^e, d in [0.5, 1)
    if (e % 2 != 0) {
        d *= 2.0;
        --e;
    }
    BigInt x(static_cast<unsigned long>(std::ldexp(std::sqrt(d), 52)));
    x = shift_trunc(x, e / 2 - 52);
    if (sgn(x) == 0)
        x = 1;

    long bits = std::max<long>(bit_length(n) / 2, 50);
    int iterations = static_cast<int>(std::ceil(std::log2(static_cast<double>(bits) / 50.0))) + 2;
    for (int i = 0; i < iterations; ++i)
        x = (x + n / x) >> 1;
    // Newton from above decreases monotonically to floor(sqrt(n)).
    while (true) {
        BigInt next = (x + n / x) >> 1;
        if (next >= x)
            break;
        x = next;
    }
    while (x * x > n)
        --x;
    while ((x + 1) * (x + 1) <= n)
        ++x;
    return x;
}

// sum_{k>=0} z^(2k+1)/(2k+1) at fixed scale; |z| < 1.
BigFixed atanh_series(const BigFixed& z)
{
    BigFixed sum = z;
    BigFixed z2 = z * z;
    BigFixed power = z;
    for (long k = 1;; ++k) {
        power *= z2;
        if (power.is_zero())
            break;
        sum += power.div_int(2 * k + 1);
    }
    return sum;
}

BigFixed compute_ln2(std::uint32_t scale)
{
    BigFixed third = BigFixed::one(scale).div_int(3);
    return atanh_series(third).mul_int(2);
}

// ln 2 truncated to `scale`, served from the most precise value computed so far.
BigFixed ln2_at(std::uint32_t scale)
{
    static std::mutex mutex;
    static BigFixed best;
    std::lock_guard lock(mutex);
    if (best.scale() < scale + 16)
        best = compute_ln2(scale + 64);
    return best.rescaled(scale);
}

} // namespace

std::uint32_t bits_for_digits(unsigned digits)
{
    return static_cast<std::uint32_t>(std::ceil(static_cast<double>(digits) * kLog2Of10));
}

// ---------------------------------------------------------------------------
// PrecisionContext

struct PrecisionContext::Cache {
    std::once_flag once;
    BigFixed ln2;
};

PrecisionContext::PrecisionContext(unsigned requested_digits, unsigned guard_digits)
    : requested_(requested_digits)
    , guard_(guard_digits)
    , scale_(bits_for_digits(requested_digits + guard_digits))
    , cache_(std::make_shared<Cache>())
{
    if (guard_digits < kMinGuardDigits)
        throw Error(ErrorCode::InvalidArgument, "guard digits must be at least 10");
    if (requested_digits == 0)
        throw Error(ErrorCode::InvalidArgument, "requested digits must be positive");
}

PrecisionContext PrecisionContext::widened(unsigned extra) const
{
    return PrecisionContext(requested_, guard_ + extra);
}

const BigFixed& PrecisionContext::ln2() const
{
    std::call_once(cache_->once, [this] { cache_->ln2 = ln2_at(scale_); });
    return cache_->ln2;
}

BigFixed PrecisionContext::ulp() const { return BigFixed(BigInt(1), scale_); }

BigFixed PrecisionContext::tolerance() const
{
    return BigFixed::one(scale_).div_int(pow10(requested_));
}

// ---------------------------------------------------------------------------
// BigFixed

BigFixed BigFixed::one(std::uint32_t scale) { return from_integer(BigInt(1), scale); }

BigFixed BigFixed::from_integer(const BigInt& value, std::uint32_t scale)
{
    return BigFixed(shift_trunc(value, scale), scale);
}

BigFixed BigFixed::from_rational(const Rational& value, std::uint32_t scale)
{
    BigInt num = shift_trunc(value.numerator(), scale);
    BigInt out;
    mpz_tdiv_q(out.get_mpz_t(), num.get_mpz_t(), value.raw().get_den_mpz_t());
    return BigFixed(out, scale);
}

BigFixed BigFixed::upper_bound_of(double value, std::uint32_t scale)
{
    if (!std::isfinite(value))
        throw Error(ErrorCode::InvalidArgument, "non-finite error bound");
    value = std::fabs(value);
    if (value == 0.0)
        return zero(scale);
    int exponent = 0;
    double fraction = std::frexp(value, &exponent);
    BigInt m(static_cast<unsigned long>(std::ldexp(fraction, 53)));
    long shift = static_cast<long>(exponent) - 53 + static_cast<long>(scale);
    BigInt out;
    if (shift >= 0)
        mpz_mul_2exp(out.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    else
        mpz_cdiv_q_2exp(out.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    return BigFixed(out, scale);
}

BigFixed BigFixed::parse(std::string_view text, std::uint32_t scale)
{
    if (text.find('/') != std::string_view::npos)
        return from_rational(Rational::parse(text), scale);

    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string digits;
    unsigned fraction_digits = 0;
    bool seen_point = false;
    for (char ch : body) {
        if (ch == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits.push_back(ch);
            if (seen_point)
                ++fraction_digits;
        } else {
            throw Error(ErrorCode::ParseError, "not a decimal: '" + std::string(text) + "'");
        }
    }
    if (digits.empty())
        throw Error(ErrorCode::ParseError, "not a decimal: '" + std::string(text) + "'");
    BigInt value(digits, 10);
    if (negative)
        value = -value;
    return from_rational(Rational(value, pow10(fraction_digits)), scale);
}

BigFixed BigFixed::rescaled(std::uint32_t new_scale) const
{
    return BigFixed(shift_trunc(mantissa_, static_cast<long>(new_scale) - static_cast<long>(scale_)),
                    new_scale);
}

BigFixed BigFixed::shifted(long bits) const { return BigFixed(shift_trunc(mantissa_, bits), scale_); }

BigFixed& BigFixed::operator+=(const BigFixed& o)
{
    require_same_scale(*this, o);
    mantissa_ += o.mantissa_;
    return *this;
}

BigFixed& BigFixed::operator-=(const BigFixed& o)
{
    require_same_scale(*this, o);
    mantissa_ -= o.mantissa_;
    return *this;
}

BigFixed& BigFixed::operator*=(const BigFixed& o)
{
    require_same_scale(*this, o);
    BigInt product = mantissa_ * o.mantissa_;
    mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), product.get_mpz_t(), scale_);
    return *this;
}

BigFixed& BigFixed::operator/=(const BigFixed& o)
{
    require_same_scale(*this, o);
    if (o.is_zero())
        throw Error(ErrorCode::DivisionByZero, "fixed-point division by zero");
    BigInt num = shift_trunc(mantissa_, scale_);
    mpz_tdiv_q(mantissa_.get_mpz_t(), num.get_mpz_t(), o.mantissa_.get_mpz_t());
    return *this;
}

BigFixed BigFixed::mul_int(long factor) const { return BigFixed(BigInt(mantissa_ * factor), scale_); }

BigFixed BigFixed::div_int(long divisor) const { return div_int(BigInt(divisor)); }

BigFixed BigFixed::div_int(const BigInt& divisor) const
{
    if (sgn(divisor) == 0)
        throw Error(ErrorCode::DivisionByZero, "fixed-point division by zero");
    BigInt out;
    mpz_tdiv_q(out.get_mpz_t(), mantissa_.get_mpz_t(), divisor.get_mpz_t());
    return BigFixed(out, scale_);
}

bool operator==(const BigFixed& a, const BigFixed& b)
{
    require_same_scale(a, b);
    return a.mantissa_ == b.mantissa_;
}

std::strong_ordering operator<=>(const BigFixed& a, const BigFixed& b)
{
    require_same_scale(a, b);
    int c = cmp(a.mantissa_, b.mantissa_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

double BigFixed::to_double() const
{
    if (is_zero())
        return 0.0;
    long e = 0;
    double d = mpz_get_d_2exp(&e, mantissa_.get_mpz_t());
    return std::ldexp(d, static_cast<int>(e - static_cast<long>(scale_)));
}

std::string BigFixed::to_decimal(unsigned digits) const
{
    BigInt scaled = ::abs(mantissa_) * pow10(digits);
    if (scale_ > 0) {
        BigInt half;
        mpz_setbit(half.get_mpz_t(), scale_ - 1);
        scaled += half;
        mpz_fdiv_q_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), scale_);
    }
    std::string text = scaled.get_str();
    if (text.size() < digits + 1)
        text.insert(0, digits + 1 - text.size(), '0');
    if (digits > 0)
        text.insert(text.size() - digits, 1, '.');
    if (sign() < 0 && sgn(scaled) != 0)
        text.insert(0, 1, '-');
    return text;
}

std::string BigFixed::to_scientific(unsigned significant) const
{
    if (significant == 0)
        significant = 1;
    if (is_zero())
        return "0";
    BigInt magnitude = ::abs(mantissa_);
    long e2 = 0;
    double d = mpz_get_d_2exp(&e2, magnitude.get_mpz_t());
    long exponent = static_cast<long>(
        std::floor(std::log10(d) + static_cast<double>(e2 - static_cast<long>(scale_)) * std::log10(2.0)));

    auto digits_at = [&](long e10) {
        // round(magnitude * 10^(significant-1-e10) / 2^scale), half away from zero
        long p = static_cast<long>(significant) - 1 - e10;
        BigInt num = magnitude;
        BigInt den;
        mpz_setbit(den.get_mpz_t(), scale_);
        if (p >= 0)
            num *= pow10(static_cast<unsigned>(p));
        else
            den *= pow10(static_cast<unsigned>(-p));
        BigInt q = (2 * num + den) / (2 * den);
        return q;
    };
    BigInt lo = pow10(significant - 1);
    BigInt hi = pow10(significant);
    BigInt q = digits_at(exponent);
    for (int guard = 0; guard < 4 && (q >= hi || q < lo); ++guard) {
        exponent += q >= hi ? 1 : -1;
        q = digits_at(exponent);
    }
    std::string body = q.get_str();
    std::string out;
    if (sign() < 0)
        out.push_back('-');
    out.push_back(body[0]);
    if (body.size() > 1) {
        out.push_back('.');
        out.append(body, 1);
    }
    out.push_back('e');
    out.push_back(exponent < 0 ? '-' : '+');
    std::string exp_text = std::to_string(exponent < 0 ? -exponent : exponent);
    if (exp_text.size() < 2)
        exp_text.insert(0, 1, '0');
    out += exp_text;
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigFixed& v)
{
    // about as many decimal digits as the scale carries
    return os << v.to_decimal(static_cast<unsigned>(static_cast<double>(v.scale()) / kLog2Of10));
}

BigFixed add(const BigFixed& a, const BigFixed& b) { return a + b; }
BigFixed mul(const BigFixed& a, const BigFixed& b) { return a * b; }
BigFixed div(const BigFixed& a, const BigFixed& b) { return a / b; }

BigFixed max(const BigFixed& a, const BigFixed& b) { return a < b ? b : a; }

// ---------------------------------------------------------------------------
// Elementary functions

BigFixed sqrt(const BigFixed& a)
{
    if (a.sign() < 0)
        throw Error(ErrorCode::NegativeOperand, "sqrt of a negative value");
    // 2*sqrt(m * 2^s) floored, then halved with rounding.
    BigInt n = shift_trunc(a.mantissa(), static_cast<long>(a.scale()) + 2);
    BigInt r = isqrt_newton(n);
    return BigFixed((r + 1) >> 1, a.scale());
}

BigFixed ln(const BigFixed& a, const PrecisionContext& ctx)
{
    if (a.scale() != ctx.scale())
        throw Error(ErrorCode::ScaleMismatch, "ln operand not at context scale");
    if (a.sign() <= 0)
        throw Error(ErrorCode::NonPositiveOperand, "ln of a non-positive value");

    const long s = static_cast<long>(a.scale());
    const long top = bit_length(a.mantissa()) - 1;
    const long e = top - s; // a = m * 2^e with m in [1, 2)
    const long w = s + 32 + bit_length(BigInt(e < 0 ? -e : e));
    const auto ws = static_cast<std::uint32_t>(w);

    BigFixed m(shift_trunc(a.mantissa(), w - top), ws);
    BigFixed one = BigFixed::one(ws);
    BigFixed z = (m - one) / (m + one);
    BigFixed result = atanh_series(z).mul_int(2);
    if (e != 0) {
        BigFixed ln2 = ws <= ctx.scale() ? ctx.ln2().rescaled(ws) : ln2_at(ws);
        result += ln2.mul_int(e);
    }
    return result.rescaled(a.scale());
}

BigFixed exp(const BigFixed& a, const PrecisionContext& ctx)
{
    if (a.scale() != ctx.scale())
        throw Error(ErrorCode::ScaleMismatch, "exp operand not at context scale");
    const std::uint32_t s = a.scale();
    if (a.is_zero())
        return BigFixed::one(s);

    // a = k ln 2 + r, 0 <= r < ln 2
    long k = static_cast<long>(std::floor(a.to_double() / 0.69314718055994530942));
    if (k < -static_cast<long>(s) - 2)
        return BigFixed::zero(s);

    const long w = static_cast<long>(s) + 32 + std::max<long>(k, 0)
                   + bit_length(BigInt(k < 0 ? -k : k));
    const auto ws = static_cast<std::uint32_t>(w);
    BigFixed ln2 = ln2_at(ws);
    BigFixed r = a.rescaled(ws) - ln2.mul_int(k);
    BigFixed zero = BigFixed::zero(ws);
    while (r < zero) {
        r += ln2;
        --k;
    }
    while (r >= ln2) {
        r -= ln2;
        ++k;
    }

    // exp(r) = exp(r / 2^h)^(2^h)
    const int h = std::max(4, static_cast<int>(std::sqrt(static_cast<double>(w)) / 2.0));
    const auto wt = static_cast<std::uint32_t>(w + h + 8);
    BigFixed y = r.rescaled(wt).shifted(-h);
    BigFixed sum = BigFixed::one(wt);
    BigFixed term = BigFixed::one(wt);
    for (long n = 1;; ++n) {
        term = (term * y).div_int(n);
        if (term.is_zero())
            break;
        sum += term;
    }
    for (int i = 0; i < h; ++i)
        sum *= sum;
    return sum.shifted(k).rescaled(s);
}

BigFixed pow_rational(const BigFixed& a, const Rational& r, const PrecisionContext& ctx)
{
    if (a.scale() != ctx.scale())
        throw Error(ErrorCode::ScaleMismatch, "pow operand not at context scale");
    if (a.sign() <= 0)
        throw Error(ErrorCode::NonPositiveOperand, "pow_rational of a non-positive value");
    if (r.is_zero())
        return BigFixed::one(a.scale());

    // Widen so the exponent's magnitude and the result's size do not eat
    // into the requested digits.
    double estimate = std::fabs(r.to_double() * std::log(a.to_double()));
    auto extra = static_cast<unsigned>(std::ceil(estimate / std::log(10.0)
                                                 + std::log10(std::fabs(r.to_double()) + 1.0)))
                 + 4;
    PrecisionContext wide = ctx.widened(extra);
    BigFixed wa = a.rescaled(wide.scale());
    BigFixed exponent = ln(wa, wide) * BigFixed::from_rational(r, wide.scale());
    return exp(exponent, wide).rescaled(a.scale());
}

} // namespace pikiln
