#pragma once

#include <doctest.h>

#include "pikiln/numerics.hpp"

namespace pikiln::testing {

inline BigFixed fx(const char* text, const PrecisionContext& ctx) { return BigFixed::parse(text, ctx.scale()); }

/// |a - b| in ulps at a common scale.
inline BigInt ulp_distance(const BigFixed& a, const BigFixed& b)
{
    const std::uint32_t s = std::max(a.scale(), b.scale());
    return BigInt(::abs(a.rescaled(s).mantissa() - b.rescaled(s).mantissa()));
}

inline bool within(const BigFixed& value, const BigFixed& target, const BigFixed& bound)
{
    const std::uint32_t s = std::max({value.scale(), target.scale(), bound.scale()});
    return (value.rescaled(s) - target.rescaled(s)).abs() <= bound.rescaled(s);
}

} // namespace pikiln::testing
