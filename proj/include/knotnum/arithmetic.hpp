#pragma once

#include "knotnum/expr.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace knotnum {

/// Eratosthenes sieve over [0, limit]. Immutable after construction.
class PrimeSieve {
public:
    explicit PrimeSieve(std::uint64_t limit);

    std::uint64_t limit() const noexcept { return limit_; }
    bool is_prime(std::uint64_t m) const;
    const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }

    /// Largest prime <= m, or nullopt when m < 2.
    std::optional<std::uint64_t> largest_prime_at_most(std::uint64_t m) const;

private:
    std::uint64_t limit_;
    std::vector<bool> composite_;
    std::vector<std::uint64_t> primes_;
};

/// Primes <= limit, ascending. Empty for limit < 2.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

struct Factorization {
    std::map<std::uint64_t, int> powers;
    std::uint64_t value = 1;

    /// Prime factors with multiplicity, ascending.
    std::vector<std::uint64_t> multiset() const;
    bool is_prime() const noexcept { return powers.size() == 1 && powers.begin()->second == 1; }
};

/// Trial division. m >= 1.
Factorization factorize(std::uint64_t m);

/// Dyadic step n: the integers m with 2^(n-1) < m <= 2^n. Step 1 is {2}.
class StepIndex {
public:
    static constexpr int kMax = 62;

    explicit StepIndex(int n);

    int value() const noexcept { return n_; }
    std::uint64_t first() const noexcept { return (std::uint64_t{1} << (n_ - 1)) + 1; }
    std::uint64_t last() const noexcept { return std::uint64_t{1} << n_; }
    std::uint64_t size() const noexcept { return std::uint64_t{1} << (n_ - 1); }
    bool contains(std::uint64_t m) const noexcept { return m >= first() && m <= last(); }

    friend auto operator<=>(const StepIndex&, const StepIndex&) = default;

private:
    int n_;
};

/// Throws InvalidArgument for m < 2.
StepIndex step_of(std::uint64_t m);

/// Prime assigned to each prime knot other than the trefoil. Chirality is
/// ignored on lookup.
using PrimeAssignment = std::map<PrimeKnotId, std::uint64_t>;

/// Product of the primes of k's atoms (2 for 3_1), or nullopt when k
/// contains a times node. Throws MissingPrime for an atom without a prime.
std::optional<std::uint64_t> related_number(const KnotExpr& k, const PrimeAssignment& prime_of);

/// Ordered splits (P2, P3) of m's prime multiset into two nonempty parts
/// that satisfy the alternation for every n0 in [2, n-2]. Empty when m is
/// even, prime, < 4 or >= 2^n, or when the n0 range is empty.
std::vector<std::pair<std::uint64_t, std::uint64_t>> first_kind_splits(std::uint64_t m, StepIndex n);

bool jump_first_kind(std::uint64_t m, StepIndex n);

/// First kind, or the largest-prime substitution, or the doubling rule
/// (m even and m/2 jumps in step n-1). `primes` must cover m.
bool jump_general_kind(std::uint64_t m, StepIndex n, const PrimeSieve& primes);

/// Members of step n that jump over, ascending. n >= 2.
std::vector<std::uint64_t> jumpers(StepIndex n, const PrimeSieve& primes);
std::vector<std::uint64_t> jumpers(StepIndex n);

/// Jumper candidates for step n+1 derived from each witnessing split (A, B)
/// of m: (2A-1)*B and A*(2B+1), kept when below 2^(n+1).
std::vector<std::uint64_t> room_constructions(std::uint64_t m, StepIndex n);

} // namespace knotnum
