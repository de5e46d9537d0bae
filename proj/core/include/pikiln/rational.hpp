#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pikiln {

using BigInt = mpz_class;

/// Exact reduced fraction with a positive denominator.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long value) : q_(value) {} // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : q_(value) {} // NOLINT(google-explicit-constructor)
    Rational(const BigInt& numerator, const BigInt& denominator);
    Rational(long numerator, long denominator);

    /// Accepts "p", "-p", "p/q" (whitespace around the slash is not allowed).
    static Rational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Largest integer not exceeding the value.
    BigInt floor() const;

    /// x - m*floor(x/m); result lies in [0, m).
    Rational mod(const Rational& m) const;

    double to_double() const { return q_.get_d(); }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return q_; }

private:
    explicit Rational(mpq_class q);
    mpq_class q_;
};

Rational pow(const Rational& base, unsigned exponent);
Rational abs(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace pikiln
