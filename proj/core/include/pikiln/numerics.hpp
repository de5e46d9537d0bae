#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include "pikiln/rational.hpp"

namespace pikiln {

class BigFixed;

/// Working precision: `requested_digits` are what callers see, guard digits
/// absorb truncation. The binary scale is ceil((requested + guard) * log2 10).
class PrecisionContext {
public:
    static constexpr unsigned kMinGuardDigits = 10;

    explicit PrecisionContext(unsigned requested_digits, unsigned guard_digits = kMinGuardDigits);

    unsigned requested_digits() const noexcept { return requested_; }
    unsigned guard_digits() const noexcept { return guard_; }
    std::uint32_t scale() const noexcept { return scale_; }

    /// Same requested digits, `extra` more guard digits.
    PrecisionContext widened(unsigned extra) const;

    /// ln 2 at this context's scale, computed on first use.
    const BigFixed& ln2() const;

    /// 1 ulp at this scale.
    BigFixed ulp() const;

    /// 10^-requested_digits, truncated to this scale.
    BigFixed tolerance() const;

private:
    struct Cache;

    unsigned requested_;
    unsigned guard_;
    std::uint32_t scale_;
    std::shared_ptr<Cache> cache_;
};

/// Number of binary fractional bits needed to carry `digits` decimal digits.
std::uint32_t bits_for_digits(unsigned digits);

/// Signed fixed-point value mantissa * 2^-scale.
///
/// Addition and subtraction are exact. Multiplication and division truncate
/// toward zero, so they are correct to within one unit in the last place.
/// Mixing scales in one operation is an error (ScaleMismatch).
class BigFixed {
public:
    BigFixed() = default;
    BigFixed(BigInt mantissa, std::uint32_t scale) : mantissa_(std::move(mantissa)), scale_(scale) {}

    static BigFixed zero(std::uint32_t scale) { return BigFixed(BigInt(0), scale); }
    static BigFixed one(std::uint32_t scale);
    static BigFixed from_integer(const BigInt& value, std::uint32_t scale);
    /// Truncates toward zero.
    static BigFixed from_rational(const Rational& value, std::uint32_t scale);
    /// Smallest value at `scale` that is >= |value| (used for error bounds).
    static BigFixed upper_bound_of(double value, std::uint32_t scale);
    /// Decimal ("-12.375") or rational ("p/q") text. Decimal input is
    /// truncated toward zero at the given scale.
    static BigFixed parse(std::string_view text, std::uint32_t scale);

    const BigInt& mantissa() const noexcept { return mantissa_; }
    std::uint32_t scale() const noexcept { return scale_; }

    int sign() const { return sgn(mantissa_); }
    bool is_zero() const { return sgn(mantissa_) == 0; }

    /// Re-expressed at another scale; narrowing truncates toward zero.
    BigFixed rescaled(std::uint32_t new_scale) const;
    /// Multiplies by 2^bits (negative bits divide, truncating toward zero).
    BigFixed shifted(long bits) const;

    BigFixed abs() const { return BigFixed(BigInt(::abs(mantissa_)), scale_); }
    BigFixed operator-() const { return BigFixed(BigInt(-mantissa_), scale_); }

    BigFixed& operator+=(const BigFixed& o);
    BigFixed& operator-=(const BigFixed& o);
    BigFixed& operator*=(const BigFixed& o);
    BigFixed& operator/=(const BigFixed& o);

    /// Exact multiply/divide by a machine integer (division truncates).
    BigFixed mul_int(long factor) const;
    BigFixed div_int(long divisor) const;
    BigFixed div_int(const BigInt& divisor) const;

    friend BigFixed operator+(BigFixed a, const BigFixed& b) { return a += b; }
    friend BigFixed operator-(BigFixed a, const BigFixed& b) { return a -= b; }
    friend BigFixed operator*(BigFixed a, const BigFixed& b) { return a *= b; }
    friend BigFixed operator/(BigFixed a, const BigFixed& b) { return a /= b; }

    /// Value comparison; scales must match.
    friend bool operator==(const BigFixed& a, const BigFixed& b);
    friend std::strong_ordering operator<=>(const BigFixed& a, const BigFixed& b);

    double to_double() const;

    /// Sign, integer part, '.', exactly `digits` fractional digits, rounded
    /// half away from zero. "-" is omitted when the rounded value is zero.
    std::string to_decimal(unsigned digits) const;

    /// d.ddddde-N with `significant` digits, for error magnitudes.
    std::string to_scientific(unsigned significant = 6) const;

private:
    BigInt mantissa_{0};
    std::uint32_t scale_ = 0;
};

std::ostream& operator<<(std::ostream& os, const BigFixed& v);

BigFixed add(const BigFixed& a, const BigFixed& b);
BigFixed mul(const BigFixed& a, const BigFixed& b);
BigFixed div(const BigFixed& a, const BigFixed& b);

/// Rounded to nearest: |result - sqrt(a)| <= 1/2 ulp.
BigFixed sqrt(const BigFixed& a);

/// Natural log; a must be positive and at ctx.scale().
BigFixed ln(const BigFixed& a, const PrecisionContext& ctx);
BigFixed exp(const BigFixed& a, const PrecisionContext& ctx);
/// a^r = exp(r ln a) for a > 0.
BigFixed pow_rational(const BigFixed& a, const Rational& r, const PrecisionContext& ctx);

/// Larger of two values at the same scale.
BigFixed max(const BigFixed& a, const BigFixed& b);

} // namespace pikiln
