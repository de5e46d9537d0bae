#include "pikiln/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace pikiln {

unsigned thread_count()
{
    unsigned requested = 0;
    if (const char* env = std::getenv("PI_KILN_THREADS")) {
        try {
            requested = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            requested = 0;
        }
    }
    if (requested == 0)
        requested = std::max(1u, std::thread::hardware_concurrency());
    return requested;
}

BigFixed parallel_sum(std::uint64_t first, std::uint64_t last, std::uint32_t scale,
                      const std::function<BigFixed(std::uint64_t)>& term)
{
    if (last < first)
        return BigFixed::zero(scale);
    const std::uint64_t count = last - first + 1;
    // Small ranges are not worth a thread.
    const std::uint64_t workers = std::min<std::uint64_t>(thread_count(), std::max<std::uint64_t>(1, count / 4096));

    auto sum_range = [&](std::uint64_t lo, std::uint64_t hi) {
        BigFixed acc = BigFixed::zero(scale);
        for (std::uint64_t n = lo; n <= hi; ++n)
            acc += term(n);
        return acc;
    };
    if (workers <= 1)
        return sum_range(first, last);

    std::vector<BigFixed> partial(workers, BigFixed::zero(scale));
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t lo = first + w * chunk;
        const std::uint64_t hi = std::min(last, lo + chunk - 1);
        if (lo > last)
            break;
        threads.emplace_back([&, w, lo, hi] {
            try {
                partial[w] = sum_range(lo, hi);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads)
        t.join();
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    BigFixed total = BigFixed::zero(scale);
    for (const auto& p : partial)
        total += p;
    return total;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body)
{
    std::vector<std::exception_ptr> errors(count);
    const std::size_t workers = std::min<std::size_t>(thread_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : threads)
        t.join();
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace pikiln
