#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "pikiln/numerics.hpp"
#include "pikiln/rational.hpp"

namespace pikiln {

enum class SummationMethod { direct, accelerated };

std::string_view to_string(SummationMethod method) noexcept;
/// "direct" or "accelerated"; throws ParseError otherwise.
SummationMethod parse_summation_method(std::string_view text);

struct SeriesResult {
    BigFixed value;
    BigFixed error_bound; ///< > 0, at the same scale as value
    std::uint64_t terms_used = 0; ///< paired terms summed
    SummationMethod method = SummationMethod::direct;
};

/// head + sum_{n >= 1} paired(n). For doubly-infinite sums, paired(n)
/// combines the +n and -n terms so symmetric truncations are exact.
struct PairedTermStream {
    std::function<BigFixed(std::uint32_t scale)> head;
    std::function<BigFixed(std::uint64_t n, std::uint32_t scale)> paired;

    /// Pairs term(n) with term(-n). Each index term is converted on its own,
    /// so partial sums equal brute-force sums over |n| <= N bit for bit.
    static PairedTermStream symmetric(std::function<BigFixed(std::int64_t n, std::uint32_t scale)> term);

    /// head + sum_{n=1}^{last} paired(n)
    BigFixed partial_sum(std::uint64_t last, std::uint32_t scale) const;
};

/// c / (t + r)^m
struct ReciprocalAtom {
    Rational coefficient;
    Rational shift;
    unsigned power = 1;
};

/// Continuous model g(t) of a positive stream's paired terms, g(n) = paired(n),
/// used for Euler-Maclaurin tails. Atoms of power 1 must have coefficients
/// summing to zero. `sign_definite_derivatives` asserts that +-g is
/// completely monotone past the summation cut, which makes the first omitted
/// correction a rigorous bound; otherwise each atom is bounded separately.
struct TailModel {
    std::vector<ReciprocalAtom> atoms;
    bool sign_definite_derivatives = false;

    Rational value(const Rational& t) const { return derivative(0, t); }
    Rational derivative(unsigned order, const Rational& t) const;
    /// Magnitude of the first neglected Euler-Maclaurin term, |g'''(N)| / 720.
    double next_correction(double n) const;
    /// Smallest admissible cut: past every atom's pole.
    std::uint64_t minimum_cut() const;
};

/// Chebyshev (Cohen-Villegas-Zagier) acceleration over the paired terms,
/// which must alternate in sign. Uses ceil(digits ln 10 / ln(3+sqrt 8)) + 5
/// terms with exact integer weights; the bound is |u_1| / T_N(3) plus
/// rounding, valid when |u_n| is a moment sequence of a positive measure
/// (true for every stream this library builds).
SeriesResult accelerated_alternating_sum(const PairedTermStream& stream, const PrecisionContext& ctx);

/// Plain partial sum of an alternating stream; bound |u_{N+1}| plus rounding.
SeriesResult direct_alternating_sum(const PairedTermStream& stream, std::uint64_t terms,
                                    const PrecisionContext& ctx);

/// Direct sum to N plus the Euler-Maclaurin tail through the f'(N)/12 term.
/// Without an explicit cut, N is grown until the next correction falls below
/// 10^-(digits+1) (capped at kMaxEulerMaclaurinTerms).
SeriesResult euler_maclaurin_sum(const PairedTermStream& stream, const TailModel& tail,
                                 std::optional<std::uint64_t> terms, const PrecisionContext& ctx);

inline constexpr std::uint64_t kDefaultDirectTerms = 100000;
inline constexpr std::uint64_t kMaxEulerMaclaurinTerms = 20000000;

struct SeriesOptions {
    SummationMethod method = SummationMethod::accelerated;
    /// Paired terms for the direct method; ignored when accelerated.
    std::optional<std::uint64_t> terms;
};

/// pi / sin(pi x) = sum_n (-1)^n / (x + n); any non-integer rational x.
SeriesResult reciprocal_sine_series(const Rational& x, const PrecisionContext& ctx, SeriesOptions options = {});

/// sum_n (-1)^n / (x + n)^(k+1), the raw alternating sum.
SeriesResult alternating_power_sum(unsigned k, const Rational& x, const PrecisionContext& ctx,
                                   SeriesOptions options = {});

/// pi^(k+1) = (-1)^k / B_k(x) * sum_n (-1)^n / (x + n)^(k+1).
SeriesResult pi_power_from_series(unsigned k, const Rational& x, const PrecisionContext& ctx,
                                  SeriesOptions options = {});

/// pi cot(pi x) = 1/x + sum_{n>=1} 2x / (x^2 - n^2).
SeriesResult cotangent_series(const Rational& x, const PrecisionContext& ctx,
                              std::optional<std::uint64_t> terms = {});

/// sum_n (a - x) / ((x - n)(a - n)) = pi cot(pi x) - pi cot(pi a).
SeriesResult cot_difference_series(const Rational& x, const Rational& a, const PrecisionContext& ctx,
                                   std::optional<std::uint64_t> terms = {});

/// pi = 2 sum_n 1 / ((2n - 1)(4n - 1)).
SeriesResult appendix_pi_series(const PrecisionContext& ctx, std::optional<std::uint64_t> terms = {});

enum class BkSign { faa_di_bruno, flipped };

struct IdentityResidual {
    BigFixed residual;
    BigFixed bound;
    bool within() const { return residual <= bound; }
};

/// |(-1)^k sum_n (-1)^n/(x+n)^(k+1) - pi^(k+1) B_k(x)| with the oracle pi.
/// BkSign::flipped negates B_k, i.e. uses +c/s^2 for B_1; the check must
/// fail then, which guards the sign convention.
IdentityResidual derivative_identity_check(unsigned k, const Rational& x, const PrecisionContext& ctx,
                                           BkSign sign = BkSign::faa_di_bruno);

} // namespace pikiln
