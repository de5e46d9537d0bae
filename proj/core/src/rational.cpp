#include "pikiln/rational.hpp"

#include <cctype>

#include "pikiln/errors.hpp"

namespace pikiln {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole)
{
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (digits.empty())
        throw Error(ErrorCode::ParseError, "empty integer in '" + std::string(whole) + "'");
    for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(whole) + "'");
    }
    std::string s(text);
    if (s.front() == '+')
        s.erase(0, 1);
    return BigInt(s, 10);
}

} // namespace

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational::Rational(const BigInt& numerator, const BigInt& denominator)
{
    if (denominator == 0)
        throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational::Rational(long numerator, long denominator)
    : Rational(BigInt(numerator), BigInt(denominator))
{
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    BigInt num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw Error(ErrorCode::ParseError, "signed denominator in '" + std::string(text) + "'");
    return Rational(num, parse_integer(den_text, text));
}

BigInt Rational::floor() const
{
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

Rational Rational::mod(const Rational& m) const
{
    if (m.sign() <= 0)
        throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
    Rational k((*this / m).floor());
    return *this - k * m;
}

std::string Rational::to_string() const
{
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& o)
{
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw Error(ErrorCode::DivisionByZero, "rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational pow(const Rational& base, unsigned exponent)
{
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(num, den);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace pikiln
