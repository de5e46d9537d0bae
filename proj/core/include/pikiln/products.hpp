#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pikiln/numerics.hpp"
#include "pikiln/rational.hpp"
#include "pikiln/series.hpp"

namespace pikiln {

enum class ConvergenceClass {
    quadratic, ///< factors 1 - a^2/(n+b)^2; log tail known analytically
    geometric, ///< Viete; error ~ 4^-m
    prime,     ///< Euler products over primes <= N
    slow,      ///< demo class; bound is an empirically calibrated envelope
};

enum class TailCorrection { none, first_order };

std::string_view to_string(ConvergenceClass c) noexcept;
std::string_view to_string(TailCorrection c) noexcept;
/// "none" or "first-order"
TailCorrection parse_tail_correction(std::string_view text);

struct ProductSpec {
    std::string id;
    std::string description;
    std::string limit_expr;
    ConvergenceClass convergence_class;
};

struct ProductResult {
    BigFixed value;
    std::uint64_t factors_used = 0;
    bool corrected = false;
    BigFixed error_bound;
    /// False for the slow class, whose bound is a calibrated envelope.
    bool bound_is_rigorous = true;
};

const std::vector<ProductSpec>& product_catalog();
/// Throws UnknownId.
const ProductSpec& find_product(std::string_view id);

/// prod_{n=1}^N (1 - x^2/n^2) -> sin(pi x)/(pi x), for 0 < x < 1. With
/// first-order correction the partial product is multiplied by
/// exp(-x^2 (1/N - 1/(2N^2))), the leading log-tail.
ProductResult euler_wallis(const Rational& x, std::uint64_t n, TailCorrection correction,
                           const PrecisionContext& ctx);

/// Partial product for any catalog entry. `n` counts factors, iterations
/// (viete) or the prime sieve limit (euler_zeta2, euler_pi4). Correction is
/// applied only where the class defines one.
ProductResult catalog_eval(std::string_view id, std::uint64_t n, TailCorrection correction,
                           const PrecisionContext& ctx);

/// The exact limit of a catalog entry, from the oracle pi and the trig table.
BigFixed catalog_limit(std::string_view id, const PrecisionContext& ctx);

/// prod_{j=1}^m 2 / r_j with r_1 = sqrt 2, r_{j+1} = sqrt(2 + r_j) -> pi/2.
ProductResult viete(unsigned iterations, const PrecisionContext& ctx);

/// All primes <= limit, ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> prime_sieve(std::uint64_t limit);

/// |3 - (4 pi^2 / 25) P_N^2 - phi| with P_N the x = 1/5 Euler-Wallis
/// partial product, oracle pi and exact phi.
IdentityResidual golden_ratio_check(std::uint64_t n, const PrecisionContext& ctx,
                                    TailCorrection correction = TailCorrection::first_order);

/// x h(x) + (x+1) h(x+1) with h(x) = sin(pi x)/(pi x) is
/// (sin(pi x) + sin(pi (x+1))) / pi; returns |sin(pi x) + sin(pi (x+1))|
/// from exact table values.
BigFixed functional_equation_check(const Rational& x, const PrecisionContext& ctx);

} // namespace pikiln
