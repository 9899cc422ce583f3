#include "knotnum/arithmetic.hpp"

#include "knotnum/error.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace knotnum {

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit), composite_(limit + 1, false) {
    if (limit >= (std::uint64_t{1} << 40))
        throw InvalidArgument("sieve limit too large");
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite_[i])
            continue;
        primes_.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite_[j] = true;
    }
}

bool PrimeSieve::is_prime(std::uint64_t m) const {
    if (m > limit_)
        throw InvalidArgument("sieve does not cover " + std::to_string(m));
    return m >= 2 && !composite_[m];
}

std::optional<std::uint64_t> PrimeSieve::largest_prime_at_most(std::uint64_t m) const {
    if (m > limit_)
        throw InvalidArgument("sieve does not cover " + std::to_string(m));
    auto it = std::upper_bound(primes_.begin(), primes_.end(), m);
    if (it == primes_.begin())
        return std::nullopt;
    return *std::prev(it);
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    if (limit < 2)
        return {};
    return PrimeSieve(limit).primes();
}

std::vector<std::uint64_t> Factorization::multiset() const {
    std::vector<std::uint64_t> out;
    for (auto [p, e] : powers)
        out.insert(out.end(), static_cast<std::size_t>(e), p);
    return out;
}

Factorization factorize(std::uint64_t m) {
    if (m == 0)
        throw InvalidArgument("cannot factorize 0");
    Factorization f;
    f.value = m;
    for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        while (m % p == 0) {
            ++f.powers[p];
            m /= p;
        }
    }
    if (m > 1)
        ++f.powers[m];
    return f;
}

StepIndex::StepIndex(int n) : n_(n) {
    if (n < 1 || n > kMax)
        throw InvalidArgument("step index out of range: " + std::to_string(n));
}

StepIndex step_of(std::uint64_t m) {
    if (m < 2)
        throw InvalidArgument("step_of needs m >= 2");
    return StepIndex(static_cast<int>(std::bit_width(m - 1)));
}

std::optional<std::uint64_t> related_number(const KnotExpr& k, const PrimeAssignment& prime_of) {
    if (k.is_atom()) {
        PrimeKnotId id = k.atom_id();
        id.chirality = +1;
        if (id == PrimeKnotId{3, 1, +1})
            return 2;
        auto it = prime_of.find(id);
        if (it == prime_of.end())
            throw MissingPrime("no prime assigned to " + id.name());
        return it->second;
    }
    if (k.kind() == KnotExpr::Kind::Times)
        return std::nullopt;
    std::uint64_t r = 1;
    for (const auto& c : k.children()) {
        auto v = related_number(c, prime_of);
        if (!v)
            return std::nullopt;
        r *= *v;
    }
    return r;
}

namespace {

bool alternates(std::uint64_t p2, std::uint64_t p3, int n) {
    for (int n0 = 2; n0 <= n - 2; ++n0) {
        const std::uint64_t a = std::uint64_t{1} << n0;
        const std::uint64_t b = std::uint64_t{1} << (n - n0);
        if (!((a < p2 && b > p3) || (a > p2 && b < p3)))
            return false;
    }
    return true;
}

} // namespace

std::vector<std::pair<std::uint64_t, std::uint64_t>> first_kind_splits(std::uint64_t m, StepIndex n) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    const int nv = n.value();
    if (nv < 4 || m < 4 || m % 2 == 0 || m >= n.last())
        return out;
    const auto f = factorize(m);
    if (f.is_prime())
        return out;

    // Sub-multisets as exponent vectors.
    std::vector<std::pair<std::uint64_t, int>> pe(f.powers.begin(), f.powers.end());
    std::vector<int> e(pe.size(), 0);
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (;;) {
        std::size_t i = 0;
        while (i < e.size() && e[i] == pe[i].second) {
            e[i] = 0;
            ++i;
        }
        if (i == e.size())
            break;
        ++e[i];
        std::uint64_t a = 1;
        for (std::size_t j = 0; j < e.size(); ++j)
            for (int k = 0; k < e[j]; ++k)
                a *= pe[j].first;
        if (a == m)
            continue;
        const std::uint64_t b = m / a;
        if (alternates(a, b, nv) && seen.emplace(a, b).second)
            out.emplace_back(a, b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool jump_first_kind(std::uint64_t m, StepIndex n) { return !first_kind_splits(m, n).empty(); }

bool jump_general_kind(std::uint64_t m, StepIndex n, const PrimeSieve& primes) {
    if (m < 4 || !n.contains(m) || primes.is_prime(m))
        return false;
    if (jump_first_kind(m, n))
        return true;
    const auto f = factorize(m);
    for (auto [p1, mult] : f.powers) {
        if (mult != 1)
            continue;
        const std::uint64_t r = m / p1;
        const auto ps = step_of(p1);
        const auto q = primes.largest_prime_at_most(ps.last());
        if (!q || *q == p1)
            continue;
        const std::uint64_t qr = *q * r;
        if (qr >= 2 && step_of(qr) == n && jump_first_kind(qr, n))
            return true;
    }
    if (m % 2 == 0 && n.value() > 2)
        return jump_general_kind(m / 2, StepIndex(n.value() - 1), primes);
    return false;
}

std::vector<std::uint64_t> jumpers(StepIndex n, const PrimeSieve& primes) {
    if (n.value() < 2)
        throw InvalidArgument("jumpers needs n >= 2");
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = n.first(); m <= n.last(); ++m)
        if (jump_general_kind(m, n, primes))
            out.push_back(m);
    return out;
}

std::vector<std::uint64_t> jumpers(StepIndex n) { return jumpers(n, PrimeSieve(n.last())); }

std::vector<std::uint64_t> room_constructions(std::uint64_t m, StepIndex n) {
    std::set<std::uint64_t> out;
    const std::uint64_t bound = std::uint64_t{1} << (n.value() + 1);
    for (auto [a, b] : first_kind_splits(m, n)) {
        if (const auto c = (2 * a - 1) * b; c < bound)
            out.insert(c);
        if (const auto c = a * (2 * b + 1); c < bound)
            out.insert(c);
    }
    return {out.begin(), out.end()};
}

} // namespace knotnum
