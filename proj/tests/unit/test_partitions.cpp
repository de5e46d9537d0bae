#include <algorithm>
#include <set>
#include <vector>

#include <doctest.h>

#include "pikiln/errors.hpp"
#include "pikiln/partitions.hpp"

using namespace pikiln;

namespace {

// Odometer over every vector with 0 <= p_i <= k/i, keeping those that satisfy
// both constraints.
std::set<std::vector<std::uint32_t>> brute_force(unsigned k)
{
    std::set<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> p(k, 0);
    while (true) {
        unsigned weighted = 0, count = 0;
        for (unsigned i = 1; i <= k; ++i) {
            weighted += i * p[i - 1];
            count += p[i - 1];
        }
        if (weighted == k && count <= k)
            out.insert(p);
        unsigned pos = 0;
        while (pos < k && p[pos] == k / (pos + 1)) {
            p[pos] = 0;
            ++pos;
        }
        if (pos == k)
            break;
        ++p[pos];
    }
    return out;
}

} // namespace

TEST_CASE("small cases")
{
    const auto zero = enumerate_constrained(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].p0() == 0);
    CHECK(zero[0].part_count() == 0);

    const auto two = enumerate_constrained(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].multiplicity(2) == 1);
    CHECK(two[1].multiplicity(1) == 2);
    CHECK(two[1].p0() == 0);
    CHECK(two[0].p0() == 1);

    CHECK(enumerate_constrained(4).size() == 5);
    CHECK(enumerate_constrained(9).size() == 30);
}

TEST_CASE("fixed ordering")
{
    std::vector<std::string> got;
    for (const auto& pv : enumerate_constrained(4))
        got.push_back(pv.to_string());
    std::vector<std::vector<unsigned>> parts;
    for (const auto& pv : enumerate_constrained(4))
        parts.push_back(pv.parts());
    const std::vector<std::vector<unsigned>> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(parts == expected);
}

TEST_CASE("matches the brute-force oracle for k <= 12")
{
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (unsigned k = 0; k <= 12; ++k) {
        CAPTURE(k);
        const auto got = enumerate_constrained(k);
        std::set<std::vector<std::uint32_t>> as_set;
        for (const auto& pv : got) {
            unsigned weighted = 0;
            for (unsigned i = 1; i <= k; ++i)
                weighted += i * pv.multiplicity(i);
            CHECK(weighted == k);
            CHECK(pv.p0() + pv.part_count() == k);
            as_set.emplace(pv.multiplicities().begin(), pv.multiplicities().end());
        }
        CHECK(as_set.size() == got.size());
        CHECK(got.size() == counts[k]);
        CHECK(as_set == brute_force(k));
    }
}

TEST_CASE("constraint violations are rejected")
{
    CHECK_THROWS_AS(PartitionVector(3, {1, 0, 1}), Error);
    CHECK_NOTHROW(PartitionVector(3, {1, 1, 0}));
}
