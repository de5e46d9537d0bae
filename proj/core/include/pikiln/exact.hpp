#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>

#include "pikiln/numerics.hpp"
#include "pikiln/rational.hpp"

namespace pikiln {

BigInt factorial(unsigned n);

/// (p1 + ... + pk)! / (p1! ... pk!)
BigInt multinomial(std::span<const std::uint32_t> multiplicities);

/// Immutable expression tree over rational leaves with +, -, *, / and sqrt.
/// Trees share structure; copying is cheap.
class RadicalExpr {
public:
    enum class Op { Leaf, Add, Sub, Mul, Div, Sqrt };

    RadicalExpr() : RadicalExpr(Rational(0)) {}
    RadicalExpr(Rational value); // NOLINT(google-explicit-constructor)
    RadicalExpr(long value) : RadicalExpr(Rational(value)) {} // NOLINT(google-explicit-constructor)

    static RadicalExpr sqrt(const RadicalExpr& operand);

    Op op() const noexcept { return node_->op; }
    /// Only meaningful for leaves.
    const Rational& leaf() const { return node_->leaf; }
    const RadicalExpr& lhs() const { return *node_->lhs; }
    const RadicalExpr& rhs() const { return *node_->rhs; }

    /// Leaves have depth 0.
    unsigned depth() const noexcept { return node_->depth; }

    /// Double-precision evaluation; debugging and cross-checks only.
    double approx() const;

    /// e.g. "(div (sub (sqrt 5) 1) 4)"
    std::string to_sexpr() const;

    friend RadicalExpr operator+(const RadicalExpr& a, const RadicalExpr& b);
    friend RadicalExpr operator-(const RadicalExpr& a, const RadicalExpr& b);
    friend RadicalExpr operator*(const RadicalExpr& a, const RadicalExpr& b);
    friend RadicalExpr operator/(const RadicalExpr& a, const RadicalExpr& b);
    RadicalExpr operator-() const;

private:
    struct Node {
        Op op = Op::Leaf;
        Rational leaf;
        std::shared_ptr<const RadicalExpr> lhs;
        std::shared_ptr<const RadicalExpr> rhs;
        unsigned depth = 0;
    };

    RadicalExpr(Op op, const RadicalExpr& lhs, const RadicalExpr* rhs);

    std::shared_ptr<const Node> node_;
};

/// Evaluates at ctx.scale(); error stays below 4 * depth ulp.
BigFixed radical_eval(const RadicalExpr& expr, const PrecisionContext& ctx);

/// The golden ratio (1 + sqrt 5) / 2.
RadicalExpr golden_ratio();

struct TrigValue {
    RadicalExpr sin;
    RadicalExpr cos;
};

/// Exact sin(pi x), cos(pi x) for rational x whose reduced denominator is
/// one of 1, 2, 3, 4, 5, 6, 10. Any integer shift of a supported x is
/// supported (lookups reduce x mod 2).
class TrigTable {
public:
    static const TrigTable& instance();

    bool supports(const Rational& x) const;
    /// Throws UnsupportedAngle.
    TrigValue lookup(const Rational& x) const;

private:
    TrigTable() = default;
};

RadicalExpr sin_pi_rational(const Rational& x);
RadicalExpr cos_pi_rational(const Rational& x);

} // namespace pikiln
