#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pikiln/numerics.hpp"

namespace pikiln {

/// A convergence-study target, parsed from "<formula>[:key=value,...]".
///
/// Formulas: appendix, viete, cot (x), cot-diff (x, a), recip-sine (x,
/// method), pi-power (k, x, method), product (id, correction). "product:wallis"
/// is short for "product:id=wallis". Series targets default to the direct
/// method so that N is meaningful.
struct StudyTarget {
    std::string formula;
    std::string product_id;
    std::optional<unsigned> k;
    std::string x;
    std::string a;
    std::string method;
    std::string correction;

    static StudyTarget parse(std::string_view text);
    /// Row label: the catalog id for products, the formula otherwise.
    std::string formula_id() const;
};

struct StudyRow {
    std::string formula_id;
    std::optional<unsigned> k;
    std::string x;
    std::string a;
    std::string method;
    std::string correction;
    std::uint64_t n = 0;
    std::string value;     ///< decimal at requested digits
    std::string abs_error; ///< scientific
    std::string bound;     ///< scientific
    bool within_bound = true;
    double elapsed_ms = 0.0;
};

/// "100,1000,10000" -> {100, 1000, 10000}; empty text gives an empty grid.
std::vector<std::uint64_t> parse_grid(std::string_view text);

/// One row per grid point, in ascending N. Rows may be computed in parallel.
std::vector<StudyRow> convergence_study(const StudyTarget& target, std::span<const std::uint64_t> grid,
                                        const PrecisionContext& ctx);

/// JSON array of row objects. elapsed_ms is included only with `timing`,
/// so that default output is reproducible byte for byte.
std::string study_to_json(std::span<const StudyRow> rows, bool timing = false);
/// CSV with header formula_id,k,x,a,method,correction,N,value,abs_error,bound
/// (plus elapsed_ms with `timing`).
std::string study_to_csv(std::span<const StudyRow> rows, bool timing = false);

} // namespace pikiln
