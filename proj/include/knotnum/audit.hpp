#pragma once

#include "knotnum/arithmetic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotnum {

enum class Claim { Goldbach, TwinSteps, StrongTwin };

/// "goldbach", "twin-steps", "strong-twin".
std::string_view claim_tag(Claim c) noexcept;
std::optional<Claim> claim_from_tag(std::string_view tag) noexcept;

struct TwinPair {
    std::uint64_t p = 0;
    std::uint64_t q = 0;

    friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

/// Smallest-p decomposition e = p + q, p <= q, both prime. e must be even
/// and >= 6 (InvalidArgument otherwise); `primes` must cover e.
std::optional<std::pair<std::uint64_t, std::uint64_t>> goldbach_witness(std::uint64_t e, const PrimeSieve& primes);

/// Twin pairs with both members in step n. n >= 3.
std::vector<TwinPair> twin_pairs_in_step(StepIndex n, const PrimeSieve& primes);

/// Twin pairs (p, p+2) with p <= 2^(k-1) < p+2 for some k in [2, max_step].
std::vector<TwinPair> straddling_twin_pairs(int max_step, const PrimeSieve& primes);

/// p is prime and p-2 or p+2 is prime.
bool is_twin_member(std::uint64_t p, const PrimeSieve& primes);

struct Witness {
    std::uint64_t n = 0; // even number, or step index for twin-steps
    std::uint64_t p = 0;
    std::uint64_t q = 0;
};

struct AuditReport {
    Claim claim = Claim::Goldbach;
    std::uint64_t range_lo = 0;
    std::uint64_t range_hi = 0;
    bool pass = true;
    bool truncated = false;
    /// Last value fully scanned (equals range_hi unless truncated).
    std::uint64_t scanned_through = 0;
    std::vector<Witness> witnesses;
    std::vector<std::uint64_t> counterexamples;
    std::vector<std::string> notes;
    std::int64_t elapsed_ms = 0;
};

struct AuditOptions {
    std::uint64_t limit = 10000;
    int max_step = 20;
    unsigned threads = 1;
    /// Wall-clock budget; 0 means unlimited.
    double budget_secs = 0;
    std::size_t witness_cap = 16;
};

/// Every even e in [6, limit] has a Goldbach witness.
AuditReport goldbach_check(std::uint64_t limit, const PrimeSieve& primes, const AuditOptions& opts = {});

/// Every even e in [6, limit] is a sum of two twin members. Counterexamples
/// are listed ascending.
AuditReport strong_twin_goldbach_check(std::uint64_t limit, const PrimeSieve& primes,
                                       const AuditOptions& opts = {});

/// twin_pairs_in_step(n) is nonempty for every n in [3, max_step].
AuditReport twin_steps_check(int max_step, const PrimeSieve& primes, const AuditOptions& opts = {});

/// Runs the selected claims with one shared sieve.
std::vector<AuditReport> audit_range(const std::vector<Claim>& claims, const AuditOptions& opts);

/// {claim, range, pass, truncated, scanned_through, witnesses,
///  counterexamples, notes, elapsed_ms}
std::string report_json(const AuditReport& r, bool with_timing = true);

} // namespace knotnum
