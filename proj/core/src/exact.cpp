#include "pikiln/exact.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "pikiln/errors.hpp"

namespace pikiln {

BigInt factorial(unsigned n)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt multinomial(std::span<const std::uint32_t> multiplicities)
{
    unsigned total = 0;
    BigInt denominator(1);
    for (auto p : multiplicities) {
        total += p;
        denominator *= factorial(p);
    }
    return factorial(total) / denominator;
}

// ---------------------------------------------------------------------------
// RadicalExpr

RadicalExpr::RadicalExpr(Rational value)
{
    auto node = std::make_shared<Node>();
    node->leaf = std::move(value);
    node_ = std::move(node);
}

RadicalExpr::RadicalExpr(Op op, const RadicalExpr& lhs, const RadicalExpr* rhs)
{
    auto node = std::make_shared<Node>();
    node->op = op;
    node->lhs = std::make_shared<const RadicalExpr>(lhs);
    node->depth = lhs.depth() + 1;
    if (rhs != nullptr) {
        node->rhs = std::make_shared<const RadicalExpr>(*rhs);
        node->depth = std::max(node->depth, rhs->depth() + 1);
    }
    node_ = std::move(node);
}

RadicalExpr RadicalExpr::sqrt(const RadicalExpr& operand)
{
    if (operand.op() == Op::Leaf && operand.leaf().sign() < 0)
        throw Error(ErrorCode::NegativeUnderSqrt, "sqrt of negative constant " + operand.leaf().to_string());
    return RadicalExpr(Op::Sqrt, operand, nullptr);
}

RadicalExpr operator+(const RadicalExpr& a, const RadicalExpr& b)
{
    return RadicalExpr(RadicalExpr::Op::Add, a, &b);
}

RadicalExpr operator-(const RadicalExpr& a, const RadicalExpr& b)
{
    return RadicalExpr(RadicalExpr::Op::Sub, a, &b);
}

RadicalExpr operator*(const RadicalExpr& a, const RadicalExpr& b)
{
    return RadicalExpr(RadicalExpr::Op::Mul, a, &b);
}

RadicalExpr operator/(const RadicalExpr& a, const RadicalExpr& b)
{
    return RadicalExpr(RadicalExpr::Op::Div, a, &b);
}

RadicalExpr RadicalExpr::operator-() const
{
    if (op() == Op::Leaf)
        return RadicalExpr(-leaf());
    return RadicalExpr(0) - *this;
}

double RadicalExpr::approx() const
{
    switch (op()) {
    case Op::Leaf: return leaf().to_double();
    case Op::Add: return lhs().approx() + rhs().approx();
    case Op::Sub: return lhs().approx() - rhs().approx();
    case Op::Mul: return lhs().approx() * rhs().approx();
    case Op::Div: return lhs().approx() / rhs().approx();
    case Op::Sqrt: return std::sqrt(lhs().approx());
    }
    return 0.0;
}

std::string RadicalExpr::to_sexpr() const
{
    switch (op()) {
    case Op::Leaf: return leaf().to_string();
    case Op::Add: return "(add " + lhs().to_sexpr() + " " + rhs().to_sexpr() + ")";
    case Op::Sub: return "(sub " + lhs().to_sexpr() + " " + rhs().to_sexpr() + ")";
    case Op::Mul: return "(mul " + lhs().to_sexpr() + " " + rhs().to_sexpr() + ")";
    case Op::Div: return "(div " + lhs().to_sexpr() + " " + rhs().to_sexpr() + ")";
    case Op::Sqrt: return "(sqrt " + lhs().to_sexpr() + ")";
    }
    return {};
}

namespace {

BigFixed eval_at(const RadicalExpr& e, std::uint32_t scale)
{
    using Op = RadicalExpr::Op;
    switch (e.op()) {
    case Op::Leaf: return BigFixed::from_rational(e.leaf(), scale);
    case Op::Add: return eval_at(e.lhs(), scale) + eval_at(e.rhs(), scale);
    case Op::Sub: return eval_at(e.lhs(), scale) - eval_at(e.rhs(), scale);
    case Op::Mul: return eval_at(e.lhs(), scale) * eval_at(e.rhs(), scale);
    case Op::Div: {
        BigFixed denominator = eval_at(e.rhs(), scale);
        if (denominator.is_zero())
            throw Error(ErrorCode::DivisionByZero, "radical expression divides by zero: " + e.to_sexpr());
        return eval_at(e.lhs(), scale) / denominator;
    }
    case Op::Sqrt: {
        BigFixed operand = eval_at(e.lhs(), scale);
        if (operand.sign() < 0)
            throw Error(ErrorCode::NegativeUnderSqrt, "negative operand under sqrt: " + e.lhs().to_sexpr());
        return sqrt(operand);
    }
    }
    return BigFixed::zero(scale);
}

} // namespace

BigFixed radical_eval(const RadicalExpr& expr, const PrecisionContext& ctx)
{
    const std::uint32_t inner = ctx.scale() + 2 * expr.depth() + 16;
    return eval_at(expr, inner).rescaled(ctx.scale());
}

RadicalExpr golden_ratio() { return (1 + RadicalExpr::sqrt(5)) / 2; }

// ---------------------------------------------------------------------------
// TrigTable

namespace {

using TrigMap = std::map<Rational, TrigValue>;

// First-quadrant values, x in [0, 1/2].
TrigMap first_quadrant()
{
    const RadicalExpr phi = golden_ratio();
    const RadicalExpr root2 = RadicalExpr::sqrt(2);
    const RadicalExpr root3 = RadicalExpr::sqrt(3);
    const RadicalExpr sin36 = RadicalExpr::sqrt(3 - phi) / 2;
    const RadicalExpr sin72 = RadicalExpr::sqrt(2 + phi) / 2;

    TrigMap m;
    m[Rational(0)] = {RadicalExpr(0), RadicalExpr(1)};
    m[Rational(1, 2)] = {RadicalExpr(1), RadicalExpr(0)};
    m[Rational(1, 3)] = {root3 / 2, Rational(1, 2)};
    m[Rational(1, 4)] = {root2 / 2, root2 / 2};
    m[Rational(1, 6)] = {Rational(1, 2), root3 / 2};
    m[Rational(1, 5)] = {sin36, phi / 2};
    m[Rational(2, 5)] = {sin72, (phi - 1) / 2};
    m[Rational(1, 10)] = {(RadicalExpr::sqrt(5) - 1) / 4, sin72};
    m[Rational(3, 10)] = {phi / 2, sin36};
    return m;
}

TrigMap build_table()
{
    TrigMap table = first_quadrant();
    TrigMap q1 = table;
    // sin(pi(1-x)) = sin(pi x), cos(pi(1-x)) = -cos(pi x)
    for (const auto& [x, v] : q1) {
        Rational mirrored = Rational(1) - x;
        if (!table.contains(mirrored))
            table[mirrored] = {v.sin, -v.cos};
    }
    // sin(pi(x+1)) = -sin(pi x), cos likewise
    TrigMap upper = table;
    for (const auto& [x, v] : upper) {
        Rational shifted = x + Rational(1);
        if (!table.contains(shifted))
            table[shifted] = {-v.sin, -v.cos};
    }
    return table;
}

const TrigMap& table_entries()
{
    static const TrigMap table = build_table();
    return table;
}

} // namespace

const TrigTable& TrigTable::instance()
{
    static const TrigTable table;
    return table;
}

bool TrigTable::supports(const Rational& x) const
{
    return table_entries().contains(x.mod(Rational(2)));
}

TrigValue TrigTable::lookup(const Rational& x) const
{
    const auto& entries = table_entries();
    auto it = entries.find(x.mod(Rational(2)));
    if (it == entries.end())
        throw Error(ErrorCode::UnsupportedAngle, "no exact value for sin(pi * " + x.to_string() + ")");
    return it->second;
}

RadicalExpr sin_pi_rational(const Rational& x) { return TrigTable::instance().lookup(x).sin; }
RadicalExpr cos_pi_rational(const Rational& x) { return TrigTable::instance().lookup(x).cos; }

} // namespace pikiln
