#include "pikiln/partitions.hpp"

#include <numeric>
#include <sstream>

#include "pikiln/errors.hpp"

namespace pikiln {

PartitionVector::PartitionVector(unsigned k, std::vector<std::uint32_t> multiplicities)
    : k_(k)
    , p_(std::move(multiplicities))
{
    std::uint64_t weighted = 0;
    for (unsigned i = 0; i < p_.size(); ++i)
        weighted += static_cast<std::uint64_t>(i + 1) * p_[i];
    if (weighted != k)
        throw Error(ErrorCode::InvalidArgument, "multiplicities do not sum to k = " + std::to_string(k));
    p_.resize(k, 0);
}

std::uint32_t PartitionVector::multiplicity(unsigned i) const noexcept
{
    if (i == 0 || i > p_.size())
        return 0;
    return p_[i - 1];
}

unsigned PartitionVector::part_count() const noexcept
{
    return std::accumulate(p_.begin(), p_.end(), 0u);
}

unsigned PartitionVector::p0() const noexcept { return k_ - part_count(); }

std::vector<unsigned> PartitionVector::parts() const
{
    std::vector<unsigned> out;
    for (unsigned i = static_cast<unsigned>(p_.size()); i >= 1; --i)
        out.insert(out.end(), p_[i - 1], i);
    return out;
}

std::string PartitionVector::to_string() const
{
    std::ostringstream os;
    os << "k=" << k_ << " p0=" << p0() << " [";
    bool first = true;
    for (unsigned i = 1; i <= k_; ++i) {
        if (p_[i - 1] == 0)
            continue;
        if (!first)
            os << ", ";
        os << "p" << i << "=" << p_[i - 1];
        first = false;
    }
    os << "]";
    return os.str();
}

namespace {

void descend(unsigned k, unsigned remaining, unsigned max_part, std::vector<std::uint32_t>& p,
             std::vector<PartitionVector>& out)
{
    if (remaining == 0) {
        out.emplace_back(k, p);
        return;
    }
    for (unsigned part = std::min(max_part, remaining); part >= 1; --part) {
        ++p[part - 1];
        descend(k, remaining - part, part, p, out);
        --p[part - 1];
    }
}

} // namespace

std::vector<PartitionVector> enumerate_constrained(unsigned k)
{
    std::vector<PartitionVector> out;
    std::vector<std::uint32_t> p(k, 0);
    descend(k, k, k, p, out);
    return out;
}

} // namespace pikiln
