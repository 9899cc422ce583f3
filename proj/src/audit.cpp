#include "knotnum/audit.hpp"

#include "knotnum/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace knotnum {

std::string_view claim_tag(Claim c) noexcept {
    switch (c) {
    case Claim::Goldbach:
        return "goldbach";
    case Claim::TwinSteps:
        return "twin-steps";
    case Claim::StrongTwin:
        return "strong-twin";
    }
    return "?";
}

std::optional<Claim> claim_from_tag(std::string_view tag) noexcept {
    for (auto c : {Claim::Goldbach, Claim::TwinSteps, Claim::StrongTwin})
        if (claim_tag(c) == tag)
            return c;
    return std::nullopt;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> goldbach_witness(std::uint64_t e, const PrimeSieve& primes) {
    if (e < 6 || e % 2 != 0)
        throw InvalidArgument("goldbach_witness needs an even number >= 6, got " + std::to_string(e));
    for (auto p : primes.primes()) {
        if (p > e / 2)
            break;
        if (primes.is_prime(e - p))
            return std::pair{p, e - p};
    }
    return std::nullopt;
}

bool is_twin_member(std::uint64_t p, const PrimeSieve& primes) {
    if (!primes.is_prime(p))
        return false;
    return (p >= 2 && primes.is_prime(p - 2)) || primes.is_prime(p + 2);
}

std::vector<TwinPair> twin_pairs_in_step(StepIndex n, const PrimeSieve& primes) {
    if (n.value() < 3)
        throw InvalidArgument("twin_pairs_in_step needs n >= 3");
    std::vector<TwinPair> out;
    for (std::uint64_t p = n.first(); p + 2 <= n.last(); ++p)
        if (primes.is_prime(p) && primes.is_prime(p + 2))
            out.push_back({p, p + 2});
    return out;
}

std::vector<TwinPair> straddling_twin_pairs(int max_step, const PrimeSieve& primes) {
    std::vector<TwinPair> out;
    for (int k = 2; k <= max_step; ++k) {
        const std::uint64_t b = std::uint64_t{1} << (k - 1);
        for (std::uint64_t p = b - 1; p <= b; ++p)
            if (p >= 2 && primes.is_prime(p) && primes.is_prime(p + 2))
                out.push_back({p, p + 2});
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct ChunkResult {
    bool done = false;
    std::vector<Witness> witnesses;
    std::vector<std::uint64_t> failures;
};

// Scans the even numbers of [lo, hi] in fixed-size chunks (independent of
// the thread count), so the merged result is the same for any `threads`.
template <class Test>
void scan_evens(std::uint64_t lo, std::uint64_t hi, const AuditOptions& opts, AuditReport& rep, Test test) {
    constexpr std::uint64_t kChunk = 1 << 15;
    const auto start = Clock::now();
    const auto deadline = opts.budget_secs > 0
                              ? start + std::chrono::duration_cast<Clock::duration>(
                                            std::chrono::duration<double>(opts.budget_secs))
                              : Clock::time_point::max();
    const std::uint64_t count = hi >= lo ? (hi - lo) / 2 + 1 : 0;
    const std::size_t chunks = static_cast<std::size_t>((count + kChunk - 1) / kChunk);
    std::vector<ChunkResult> results(chunks);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const auto i = next.fetch_add(1);
            if (i >= chunks || Clock::now() > deadline)
                return;
            auto& r = results[i];
            const std::uint64_t a = lo + 2 * kChunk * i;
            const std::uint64_t b = std::min(hi, a + 2 * (kChunk - 1));
            for (std::uint64_t e = a; e <= b; e += 2) {
                if (auto w = test(e)) {
                    if (r.witnesses.size() < opts.witness_cap)
                        r.witnesses.push_back({e, w->first, w->second});
                } else {
                    r.failures.push_back(e);
                }
            }
            r.done = true;
        }
    };
    const unsigned nt = std::max(1u, opts.threads);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nt; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    rep.range_lo = lo;
    rep.range_hi = hi;
    rep.scanned_through = lo >= 2 ? lo - 2 : 0;
    for (std::size_t i = 0; i < chunks; ++i) {
        auto& r = results[i];
        if (!r.done) {
            rep.truncated = true;
            break;
        }
        for (auto& w : r.witnesses)
            if (rep.witnesses.size() < opts.witness_cap)
                rep.witnesses.push_back(w);
        rep.counterexamples.insert(rep.counterexamples.end(), r.failures.begin(), r.failures.end());
        rep.scanned_through = std::min(hi, lo + 2 * kChunk * (i + 1) - 2);
    }
    rep.pass = rep.counterexamples.empty() && !rep.truncated;
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void require_cover(const PrimeSieve& primes, std::uint64_t limit) {
    if (primes.limit() < limit)
        throw InvalidArgument("sieve covers " + std::to_string(primes.limit()) + ", need " + std::to_string(limit));
}

} // namespace

AuditReport goldbach_check(std::uint64_t limit, const PrimeSieve& primes, const AuditOptions& opts) {
    if (limit < 6)
        throw InvalidArgument("goldbach limit must be >= 6");
    require_cover(primes, limit);
    AuditReport rep;
    rep.claim = Claim::Goldbach;
    scan_evens(6, limit - limit % 2, opts, rep, [&](std::uint64_t e) { return goldbach_witness(e, primes); });
    return rep;
}

AuditReport strong_twin_goldbach_check(std::uint64_t limit, const PrimeSieve& primes, const AuditOptions& opts) {
    if (limit < 6)
        throw InvalidArgument("strong-twin limit must be >= 6");
    require_cover(primes, limit + 2);
    std::vector<std::uint64_t> members;
    std::vector<bool> is_member(limit + 1, false);
    for (auto p : primes.primes()) {
        if (p > limit)
            break;
        if (is_twin_member(p, primes)) {
            members.push_back(p);
            is_member[p] = true;
        }
    }
    AuditReport rep;
    rep.claim = Claim::StrongTwin;
    scan_evens(6, limit - limit % 2, opts, rep,
               [&](std::uint64_t e) -> std::optional<std::pair<std::uint64_t, std::uint64_t>> {
                   for (auto p : members) {
                       if (p > e / 2)
                           break;
                       if (is_member[e - p])
                           return std::pair{p, e - p};
                   }
                   return std::nullopt;
               });
    if (!rep.counterexamples.empty())
        rep.notes.push_back("first counterexample " + std::to_string(rep.counterexamples.front()));
    return rep;
}

AuditReport twin_steps_check(int max_step, const PrimeSieve& primes, const AuditOptions& opts) {
    if (max_step < 3 || max_step > 32)
        throw InvalidArgument("twin-steps max_step must be in [3, 32]");
    const std::uint64_t top = std::uint64_t{1} << max_step;
    require_cover(primes, top);
    const auto start = Clock::now();
    AuditReport rep;
    rep.claim = Claim::TwinSteps;
    rep.range_lo = 3;
    rep.range_hi = static_cast<std::uint64_t>(max_step);
    rep.scanned_through = 2;
    for (int n = 3; n <= max_step; ++n) {
        if (opts.budget_secs > 0 &&
            std::chrono::duration<double>(Clock::now() - start).count() > opts.budget_secs) {
            rep.truncated = true;
            break;
        }
        const auto pairs = twin_pairs_in_step(StepIndex(n), primes);
        if (pairs.empty())
            rep.counterexamples.push_back(static_cast<std::uint64_t>(n));
        else if (rep.witnesses.size() < opts.witness_cap)
            rep.witnesses.push_back({static_cast<std::uint64_t>(n), pairs.front().p, pairs.front().q});
        rep.scanned_through = static_cast<std::uint64_t>(n);
    }
    for (const auto& tp : straddling_twin_pairs(max_step, primes))
        rep.notes.push_back("twin pair (" + std::to_string(tp.p) + ", " + std::to_string(tp.q) +
                            ") straddles a step boundary");
    rep.pass = rep.counterexamples.empty() && !rep.truncated;
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return rep;
}

std::vector<AuditReport> audit_range(const std::vector<Claim>& claims, const AuditOptions& opts) {
    std::uint64_t need = 2;
    for (auto c : claims)
        need = std::max(need, c == Claim::TwinSteps ? (std::uint64_t{1} << std::clamp(opts.max_step, 3, 32))
                                                    : opts.limit + 2);
    const PrimeSieve primes(need);
    std::vector<AuditReport> out;
    for (auto c : claims) {
        switch (c) {
        case Claim::Goldbach:
            out.push_back(goldbach_check(opts.limit, primes, opts));
            break;
        case Claim::StrongTwin:
            out.push_back(strong_twin_goldbach_check(opts.limit, primes, opts));
            break;
        case Claim::TwinSteps:
            out.push_back(twin_steps_check(opts.max_step, primes, opts));
            break;
        }
    }
    return out;
}

std::string report_json(const AuditReport& r, bool with_timing) {
    nlohmann::ordered_json j;
    j["claim"] = claim_tag(r.claim);
    j["range"] = {r.range_lo, r.range_hi};
    j["pass"] = r.pass;
    j["truncated"] = r.truncated;
    j["scanned_through"] = r.scanned_through;
    auto ws = nlohmann::ordered_json::array();
    for (const auto& w : r.witnesses) {
        nlohmann::ordered_json o;
        o[r.claim == Claim::TwinSteps ? "step" : "n"] = w.n;
        o["p"] = w.p;
        o["q"] = w.q;
        ws.push_back(std::move(o));
    }
    j["witnesses"] = std::move(ws);
    j["counterexamples"] = r.counterexamples;
    j["notes"] = r.notes;
    if (with_timing)
        j["elapsed_ms"] = r.elapsed_ms;
    return j.dump(2);
}

} // namespace knotnum
