#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "pikiln/numerics.hpp"

namespace pikiln {

/// Worker count from PI_KILN_THREADS (0 or unset means hardware
/// concurrency). Read on every call.
unsigned thread_count();

/// sum_{n = first}^{last} term(n) at `scale`, split into contiguous chunks
/// across thread_count() workers. Fixed-point addition is exact, so the
/// result does not depend on the number of chunks.
BigFixed parallel_sum(std::uint64_t first, std::uint64_t last, std::uint32_t scale,
                      const std::function<BigFixed(std::uint64_t)>& term);

/// Runs body(0..count-1) on up to thread_count() workers, each index once.
/// The first exception thrown (lowest index) is rethrown after all finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace pikiln
