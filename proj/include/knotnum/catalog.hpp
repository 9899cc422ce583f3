#pragma once

#include "knotnum/expr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace knotnum {

/// Prime knots per minimal crossing number. Counts for 3..8 crossings are the
/// classical ones (1, 1, 2, 3, 7, 21); higher counts come from the standard
/// knot tables and are only used to name knots past 8_21.
class KnotCatalog {
public:
    static constexpr int kMinCrossings = 3;
    static constexpr int kVerifiedMaxCrossings = 8;
    static constexpr int kMaxCrossings = 16;

    /// Number of prime knots with the given minimal crossing number, or
    /// nullopt outside [3, 16].
    static std::optional<long long> count(int crossings);

    /// "c_1" .. "c_k" for crossings <= 8.
    static std::vector<std::string> names(int crossings);

    /// True iff `id` names a catalogued knot: crossings >= 3, and the index
    /// within the count when crossings <= 8.
    static bool contains(const PrimeKnotId& id);
};

/// Hands out prime-knot atoms strictly in catalog order: 3_1, 4_1, 5_1, 5_2,
/// 6_1, ...
class PrimeKnotAllocator {
public:
    PrimeKnotAllocator() = default;

    /// The next unused atom. Throws InvalidArgument when the catalog is
    /// exhausted.
    PrimeKnotId next();
    PrimeKnotId peek() const;

    /// Skips every id up to and including `id`.
    void advance_past(const PrimeKnotId& id);

private:
    PrimeKnotId next_{3, 1, +1};
};

} // namespace knotnum
