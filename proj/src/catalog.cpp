#include "knotnum/catalog.hpp"

#include "knotnum/error.hpp"

#include <array>

namespace knotnum {

namespace {

// Prime knots by minimal crossing number, 3..16.
constexpr std::array<long long, 14> kCounts = {
    1, 1, 2, 3, 7, 21, 49, 165, 552, 2176, 9988, 46972, 253293, 1388705,
};

} // namespace

std::optional<long long> KnotCatalog::count(int crossings) {
    if (crossings < kMinCrossings || crossings > kMaxCrossings)
        return std::nullopt;
    return kCounts[static_cast<std::size_t>(crossings - kMinCrossings)];
}

std::vector<std::string> KnotCatalog::names(int crossings) {
    std::vector<std::string> out;
    if (crossings < kMinCrossings || crossings > kVerifiedMaxCrossings)
        return out;
    const auto n = *count(crossings);
    for (long long i = 1; i <= n; ++i)
        out.push_back(std::to_string(crossings) + "_" + std::to_string(i));
    return out;
}

bool KnotCatalog::contains(const PrimeKnotId& id) {
    if (id.crossings < kMinCrossings || id.index < 1)
        return false;
    if (id.chirality != 1 && id.chirality != -1)
        return false;
    if (id.crossings <= kVerifiedMaxCrossings)
        return id.index <= *count(id.crossings);
    return true;
}

PrimeKnotId PrimeKnotAllocator::peek() const { return next_; }

PrimeKnotId PrimeKnotAllocator::next() {
    const auto cap = KnotCatalog::count(next_.crossings);
    if (!cap)
        throw InvalidArgument("prime-knot catalog exhausted");
    PrimeKnotId out = next_;
    if (next_.index < *cap) {
        ++next_.index;
    } else {
        ++next_.crossings;
        next_.index = 1;
    }
    return out;
}

void PrimeKnotAllocator::advance_past(const PrimeKnotId& id) {
    while (!(id < next_))
        next();
}

} // namespace knotnum
