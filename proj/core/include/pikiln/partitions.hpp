#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pikiln {

/// A partition of k in multiplicity form: p[i-1] parts of size i, with
/// sum i*p_i = k. p0 = k - sum p_i is the number of "unused" slots.
class PartitionVector {
public:
    PartitionVector() = default;
    /// Throws InvalidArgument unless sum i*p_i == k.
    PartitionVector(unsigned k, std::vector<std::uint32_t> multiplicities);

    unsigned order() const noexcept { return k_; }
    /// p_i for 1 <= i <= k; 0 outside that range.
    std::uint32_t multiplicity(unsigned i) const noexcept;
    std::span<const std::uint32_t> multiplicities() const noexcept { return p_; }
    unsigned p0() const noexcept;
    /// Number of parts, sum p_i = k - p0.
    unsigned part_count() const noexcept;

    /// Parts in non-increasing order, e.g. {3, 1, 1}.
    std::vector<unsigned> parts() const;

    std::string to_string() const;

    friend bool operator==(const PartitionVector&, const PartitionVector&) = default;
    friend auto operator<=>(const PartitionVector&, const PartitionVector&) = default;

private:
    unsigned k_ = 0;
    std::vector<std::uint32_t> p_;
};

/// All partitions of k, ordered by largest part descending and then
/// lexicographically descending on the remaining parts:
/// k=4 -> [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
std::vector<PartitionVector> enumerate_constrained(unsigned k);

} // namespace pikiln
