#include "knotnum/table.hpp"

#include "embedded.hpp"
#include "knotnum/catalog.hpp"
#include "knotnum/notation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace knotnum {

namespace {

// Steps before this one record replacements in their StepBuild only; the
// table's replaced column starts here.
constexpr int kReplacedColumnFirstStep = 6;

struct PlanEntry {
    std::vector<std::string> candidates;
    std::string insert;
};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

// "POS cand[, cand...] [| insert]" per line; '#' starts a comment line.
std::map<std::uint64_t, PlanEntry> parse_plans(std::string_view text) {
    std::map<std::uint64_t, PlanEntry> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto t = trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        const auto sp = t.find(' ');
        if (sp == std::string::npos)
            throw InvalidArgument("bad layout plan line: " + t);
        const auto pos = std::stoull(t.substr(0, sp));
        std::string rest = t.substr(sp + 1);
        PlanEntry e;
        if (const auto bar = rest.find('|'); bar != std::string::npos) {
            e.insert = trim(std::string_view(rest).substr(bar + 1));
            rest.resize(bar);
        }
        std::istringstream cs(rest);
        std::string c;
        while (std::getline(cs, c, ','))
            if (auto tc = trim(c); !tc.empty())
                e.candidates.push_back(std::move(tc));
        if (e.candidates.empty())
            throw InvalidArgument("layout plan line without candidates: " + t);
        out.emplace(pos, std::move(e));
    }
    return out;
}

const std::map<std::uint64_t, PlanEntry>& layout_plan() {
    static const auto plan = parse_plans(embedded::layout_plans());
    return plan;
}

bool is_prime_position(std::uint64_t p, const PrimeSieve& sieve) { return p >= 3 && sieve.is_prime(p); }

} // namespace

int layout_plan_max_step() {
    static const int n = [] {
        const auto& plan = layout_plan();
        int last = 1;
        for (int k = 2; k <= StepIndex::kMax; ++k) {
            const StepIndex s(k);
            for (std::uint64_t p = s.first(); p < s.last(); ++p)
                if (!plan.contains(p))
                    return last;
            last = k;
        }
        return last;
    }();
    return n;
}

// ---------------------------------------------------------------------------
// ClassificationTable

ClassificationTable::ClassificationTable() : sieve_(std::make_shared<PrimeSieve>(2)) {}

std::uint64_t ClassificationTable::max_position() const noexcept {
    return steps_.empty() ? 0 : std::uint64_t{1} << steps_.size();
}

std::optional<KnotExpr> ClassificationTable::knot_at(std::uint64_t position) const {
    auto it = assignment_.find(position);
    if (it == assignment_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::uint64_t> ClassificationTable::position_of(const KnotExpr& k) const {
    auto it = inverse_.find(k);
    if (it == inverse_.end())
        return std::nullopt;
    return it->second;
}

std::vector<KnotExpr> ClassificationTable::replaced_at(std::uint64_t position) const {
    auto it = replaced_.find(position);
    if (it == replaced_.end())
        return {};
    return it->second;
}

const StepBuild& ClassificationTable::step(int n) const {
    if (n < 1 || n > max_step())
        throw InvalidArgument("step " + std::to_string(n) + " not built");
    return steps_[static_cast<std::size_t>(n - 1)];
}

void ClassificationTable::override_position(std::uint64_t position, const KnotExpr& k) {
    auto it = assignment_.find(position);
    if (it == assignment_.end())
        throw InvalidArgument("position " + std::to_string(position) + " is not assigned");
    if (auto inv = inverse_.find(it->second); inv != inverse_.end() && inv->second == position)
        inverse_.erase(inv);
    it->second = k;
    inverse_[k] = position;
}

void ClassificationTable::ensure_sieve(std::uint64_t limit) {
    if (sieve_->limit() < limit)
        sieve_ = std::make_shared<PrimeSieve>(limit);
}

void ClassificationTable::place(std::uint64_t position, const KnotExpr& k, StepBuild& record) {
    if (assignment_.contains(position))
        throw BuildError("position " + std::to_string(position) + " assigned twice", record);
    if (auto at = position_of(k))
        throw BuildError(k.text() + " already at " + std::to_string(*at) + ", cannot place at " +
                             std::to_string(position),
                         record);
    assignment_.emplace(position, k);
    inverse_.emplace(k, position);
    if (k.is_atom() && is_prime_position(position, *sieve_)) {
        auto id = k.atom_id();
        id.chirality = +1;
        prime_of_[id] = position;
    }
}

// ---------------------------------------------------------------------------
// Sequences

std::vector<Sequence> preordering_sequences(StepIndex n, const ClassificationTable& table) {
    const int nv = n.value();
    if (table.max_step() < nv - 1)
        throw InvalidArgument("preordering sequences for step " + std::to_string(nv) + " need steps 1.." +
                              std::to_string(nv - 1));
    std::vector<Sequence> seqs;
    std::vector<std::size_t> first_of_tail;
    for (int t = 1; t <= nv - 1; ++t) {
        const int k = nv - t;
        std::vector<KnotExpr> tail;
        if (t == 1) {
            tail.push_back(*table.knot_at(1));
        } else {
            const StepIndex ts(t);
            for (std::uint64_t p = ts.first(); p <= ts.last(); ++p)
                tail.push_back(*table.knot_at(p));
        }
        std::vector<KnotExpr> heads;
        if (k == 1) {
            heads.push_back(trefoil());
        } else {
            const StepIndex hs(k);
            for (std::uint64_t p = hs.first(); p <= hs.last(); ++p)
                if (table.sieve().is_prime(p))
                    heads.push_back(*table.knot_at(p));
        }
        first_of_tail.push_back(seqs.size());
        for (const auto& h : heads) {
            Sequence s{h, t, {}};
            s.knots.reserve(tail.size());
            for (const auto& x : tail)
                s.knots.push_back(star(h, x));
            seqs.push_back(std::move(s));
        }
    }

    std::unordered_map<KnotExpr, int, KnotExprHash> seen;
    for (const auto& s : seqs)
        for (const auto& k : s.knots)
            ++seen[k];
    const auto anchor = trefoil_power(nv);
    std::vector<Sequence> out;
    std::set<std::size_t> keep(first_of_tail.begin(), first_of_tail.end());
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        const auto& s = seqs[i];
        std::unordered_map<KnotExpr, int, KnotExprHash> own;
        for (const auto& k : s.knots)
            ++own[k];
        const bool all_repeats = std::all_of(s.knots.begin(), s.knots.end(), [&](const KnotExpr& k) {
            return k == anchor || table.position_of(k).has_value() || seen[k] > own[k];
        });
        if (!all_repeats || keep.contains(i))
            out.push_back(s);
    }
    return out;
}

std::uint64_t nominal_number(const KnotExpr& head, std::uint64_t tail_pos, const ClassificationTable& table) {
    if (!head.is_atom())
        throw InvalidArgument("sequence head must be a prime knot: " + head.text());
    return *table.related(head) * tail_pos;
}

// ---------------------------------------------------------------------------
// Chains and times-rooted knots

std::vector<Chain> trace_chains(StepIndex n, const ClassificationTable& table) {
    const auto& sieve = table.sieve();
    std::map<std::uint64_t, std::vector<std::uint64_t>> by_related;
    std::vector<std::uint64_t> starts;
    for (std::uint64_t p = n.first(); p < n.last(); ++p) {
        if (sieve.is_prime(p))
            continue;
        const auto k = table.knot_at(p);
        if (!k)
            continue;
        const auto r = table.related(*k);
        if (r && n.contains(*r))
            by_related[*r].push_back(p);
        else
            starts.push_back(p);
    }
    const auto out_set = jumpers(n, sieve);
    std::vector<Chain> chains;
    for (auto s : starts) {
        Chain c{{s}, false};
        std::set<std::uint64_t> visited{s};
        for (auto cur = s;;) {
            auto it = by_related.find(cur);
            if (it == by_related.end())
                break;
            auto next = std::find_if(it->second.begin(), it->second.end(),
                                     [&](std::uint64_t q) { return !visited.contains(q); });
            if (next == it->second.end())
                break;
            cur = *next;
            visited.insert(cur);
            c.path.push_back(cur);
        }
        c.ends_in_jumper = std::binary_search(out_set.begin(), out_set.end(), c.path.back());
        chains.push_back(std::move(c));
    }
    return chains;
}

namespace {

// Prime knots holding a prime, grouped by crossing number.
std::map<int, std::vector<KnotExpr>> assigned_atoms(const ClassificationTable& table) {
    std::map<int, std::vector<KnotExpr>> out;
    out[3].push_back(trefoil());
    for (const auto& [id, p] : table.prime_of())
        if (!(id == PrimeKnotId{3, 1, +1}))
            out[id.crossings].push_back(atom(id));
    return out;
}

// Multisets of atoms with total crossing number `total`, at least two atoms,
// non-decreasing by crossing number then atom order.
void times_with_total(const std::map<int, std::vector<KnotExpr>>& atoms, int total,
                      std::vector<KnotExpr>& out) {
    std::vector<KnotExpr> flat;
    for (const auto& [c, v] : atoms)
        flat.insert(flat.end(), v.begin(), v.end());
    std::vector<KnotExpr> cur;
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            if (cur.size() >= 2)
                out.push_back(times_of(cur));
            return;
        }
        for (std::size_t i = from; i < flat.size(); ++i) {
            const int c = flat[i].atom_id().crossings;
            if (c > left)
                break;
            cur.push_back(flat[i]);
            self(self, i, left - c);
            cur.pop_back();
        }
    };
    rec(rec, 0, total);
}

std::vector<KnotExpr> times_knots_excluding(const ClassificationTable& table, std::size_t count,
                                            const std::unordered_set<KnotExpr, KnotExprHash>& exclude) {
    std::vector<KnotExpr> out;
    if (count == 0)
        return out;
    const auto atoms = assigned_atoms(table);
    const int max_total = 2 * KnotCatalog::kMaxCrossings * 4;
    for (int total = 6; total <= max_total && out.size() < count; ++total) {
        std::vector<KnotExpr> level;
        times_with_total(atoms, total, level);
        std::sort(level.begin(), level.end(),
                  [](const KnotExpr& a, const KnotExpr& b) { return a.text() < b.text(); });
        for (const auto& k : level) {
            if (out.size() == count)
                break;
            if (!table.position_of(k) && !exclude.contains(k))
                out.push_back(k);
        }
    }
    return out;
}

} // namespace

std::vector<KnotExpr> times_knots(const ClassificationTable& table, std::size_t count) {
    return times_knots_excluding(table, count, {});
}

// ---------------------------------------------------------------------------
// Step builder

class StepBuilder {
public:
    StepBuilder(StepIndex n, ClassificationTable& table)
        : n_(n), t_(table), saved_allocator_(table.allocator_), saved_pending_(table.pending_) {
        rec_.n = n;
    }

    StepBuild run() {
        const int nv = n_.value();
        t_.ensure_sieve(std::max<std::uint64_t>(n_.last(), 2));
        if (nv == 1) {
            rec_.source = StepBuild::Source::Initial;
            put(1, trefoil());
            t_.allocator_.advance_past(PrimeKnotId{3, 1, +1});
        } else {
            rec_.sequences = preordering_sequences(n_, t_);
            rec_.outgoing = jumpers(n_, t_.sieve());
            if (nv <= layout_plan_max_step())
                from_plan();
            else
                resolve();
            put(n_.last(), trefoil_power(nv));
            check_primes();
            rec_.chains = trace_chains(n_, t_);
            for (const auto& c : rec_.chains) {
                if (!c.ends_in_jumper)
                    rec_.diagnostics.push_back("chain " + path_text(c) + " ends outside jumpers(" +
                                               std::to_string(nv) + ")");
                for (std::size_t i = 1; i + 1 < c.path.size(); ++i)
                    if (t_.sieve().is_prime(c.path[i]))
                        rec_.diagnostics.push_back("chain " + path_text(c) + " passes a prime position");
            }
        }
        if (nv >= kReplacedColumnFirstStep) {
            for (const auto* list : {&rec_.replacements, &rec_.displacements})
                for (const auto& r : *list)
                    if (!r.replaced.empty())
                        t_.replaced_[r.position] = r.replaced;
        }
        t_.steps_.push_back(rec_);
        return rec_;
    }

    void rollback() {
        for (auto p : placed_) {
            auto it = t_.assignment_.find(p);
            if (it == t_.assignment_.end())
                continue;
            t_.inverse_.erase(it->second);
            if (it->second.is_atom()) {
                auto id = it->second.atom_id();
                id.chirality = +1;
                if (auto pi = t_.prime_of_.find(id); pi != t_.prime_of_.end() && pi->second == p)
                    t_.prime_of_.erase(pi);
            }
            t_.assignment_.erase(it);
            t_.replaced_.erase(p);
        }
        t_.allocator_ = saved_allocator_;
        t_.pending_ = saved_pending_;
    }

    const StepBuild& record() const { return rec_; }

private:
    static std::string path_text(const Chain& c) {
        std::string s;
        for (auto p : c.path) {
            if (!s.empty())
                s += "->";
            s += std::to_string(p);
        }
        return s;
    }

    void put(std::uint64_t p, const KnotExpr& k) {
        t_.place(p, k, rec_);
        placed_.push_back(p);
    }

    KnotExpr next_prime_knot() {
        try {
            return atom(t_.allocator_.next());
        } catch (const Error& e) {
            throw BuildError(e.what(), rec_);
        }
    }

    void from_plan() {
        rec_.source = StepBuild::Source::LayoutPlan;
        const auto& plan = layout_plan();
        const PositionResolver resolve = [this](std::uint64_t p) -> KnotExpr {
            auto k = t_.knot_at(p);
            if (!k)
                throw InvalidArgument("position " + std::to_string(p) + " not assigned yet");
            return *k;
        };
        for (std::uint64_t p = n_.first(); p < n_.last(); ++p) {
            const auto& e = plan.at(p);
            std::vector<KnotExpr> cands;
            for (const auto& c : e.candidates)
                cands.push_back(parse_template(c, resolve));
            if (t_.sieve().is_prime(p)) {
                const auto k = next_prime_knot();
                put(p, k);
                rec_.replacements.push_back({p, k, cands});
            } else if (!e.insert.empty()) {
                const auto k = parse_template(e.insert, resolve);
                put(p, k);
                rec_.displacements.push_back({p, k, cands});
                if (is_times_rooted(k))
                    rec_.incoming.push_back(k);
            } else {
                if (cands.size() != 1)
                    throw BuildError("ambiguous plan entry at " + std::to_string(p), rec_);
                put(p, cands.front());
                if (const auto r = t_.related(cands.front()); r && *r <= n_.first() - 1)
                    rec_.incoming.push_back(cands.front());
            }
        }
    }

    KnotExpr natural_knot(std::uint64_t m) {
        std::vector<KnotExpr> parts;
        for (auto p : factorize(m).multiset()) {
            if (p == 2) {
                parts.push_back(trefoil());
                continue;
            }
            auto k = t_.knot_at(p);
            if (!k || !k->is_atom())
                throw BuildError("no prime knot at " + std::to_string(p), rec_);
            parts.push_back(*k);
        }
        return star_of(std::move(parts));
    }

    void resolve() {
        rec_.source = StepBuild::Source::Resolution;
        const auto& sieve = t_.sieve();
        const std::set<std::uint64_t> out(rec_.outgoing.begin(), rec_.outgoing.end());

        // Knots owed to this step: leftovers plus knots of the previous
        // step's numbers that never got a position.
        std::vector<KnotExpr> pending = t_.pending_;
        std::unordered_set<KnotExpr, KnotExprHash> pending_set(pending.begin(), pending.end());
        const StepIndex prev(n_.value() - 1);
        for (std::uint64_t m = prev.first(); m < prev.last(); ++m) {
            if (sieve.is_prime(m))
                continue;
            auto k = natural_knot(m);
            if (!t_.position_of(k) && pending_set.insert(k).second)
                pending.push_back(k);
        }

        std::vector<std::uint64_t> vacant;
        for (std::uint64_t c = n_.first(); c < n_.last(); ++c) {
            if (sieve.is_prime(c))
                continue;
            auto k = natural_knot(c);
            if (out.contains(c) || t_.position_of(k) || pending_set.contains(k))
                vacant.push_back(c);
            else
                put(c, k);
        }

        const std::size_t x_count = vacant.size() > pending.size() ? vacant.size() - pending.size() : 0;
        auto fresh = times_knots_excluding(t_, x_count, pending_set);
        if (fresh.size() < x_count)
            throw BuildError("ran out of times-rooted knots in step " + std::to_string(n_.value()), rec_);

        std::vector<KnotExpr> xs, others;
        for (auto& k : pending)
            (is_times_rooted(k) ? xs : others).push_back(k);
        xs.insert(xs.end(), fresh.begin(), fresh.end());
        std::sort(xs.begin(), xs.end(), [](const KnotExpr& a, const KnotExpr& b) {
            if (a.alt_crossings() != b.alt_crossings())
                return a.alt_crossings() < b.alt_crossings();
            return a.text() < b.text();
        });
        std::sort(others.begin(), others.end(),
                  [](const KnotExpr& a, const KnotExpr& b) { return a.text() < b.text(); });
        std::vector<KnotExpr> seeds = std::move(xs);
        seeds.insert(seeds.end(), others.begin(), others.end());

        std::size_t i = 0;
        for (; i < vacant.size() && i < seeds.size(); ++i) {
            put(vacant[i], seeds[i]);
            rec_.incoming.push_back(seeds[i]);
        }
        if (i < vacant.size())
            throw BuildError("composite position " + std::to_string(vacant[i]) + " left vacant", rec_);
        t_.pending_.assign(seeds.begin() + static_cast<std::ptrdiff_t>(i), seeds.end());
        if (!t_.pending_.empty())
            rec_.diagnostics.push_back(std::to_string(t_.pending_.size()) + " knots carried to step " +
                                       std::to_string(n_.value() + 1));

        // Column of sequence knots not yet placed, for the replaced record.
        std::vector<KnotExpr> column;
        std::unordered_set<KnotExpr, KnotExprHash> in_column;
        for (const auto& s : rec_.sequences)
            for (const auto& k : s.knots)
                if (!t_.position_of(k) && in_column.insert(k).second)
                    column.push_back(k);
        for (std::uint64_t p = n_.first(); p < n_.last(); ++p) {
            if (!sieve.is_prime(p))
                continue;
            const auto k = next_prime_knot();
            put(p, k);
            const auto idx = p - n_.first();
            std::vector<KnotExpr> repl;
            if (idx < column.size())
                repl.push_back(column[idx]);
            rec_.replacements.push_back({p, k, std::move(repl)});
        }
    }

    void check_primes() {
        const auto& sieve = t_.sieve();
        for (std::uint64_t p = n_.first(); p <= n_.last(); ++p) {
            const auto k = t_.knot_at(p);
            if (!k)
                throw BuildError("position " + std::to_string(p) + " left vacant", rec_);
            if (k->is_atom() != sieve.is_prime(p))
                throw BuildError("position " + std::to_string(p) + " holds " + k->text() +
                                     (sieve.is_prime(p) ? " at a prime" : " at a composite"),
                                 rec_);
        }
    }

    StepIndex n_;
    ClassificationTable& t_;
    PrimeKnotAllocator saved_allocator_;
    std::vector<KnotExpr> saved_pending_;
    StepBuild rec_;
    std::vector<std::uint64_t> placed_;
};

StepBuild build_step(StepIndex n, ClassificationTable& table) {
    if (table.max_step() != n.value() - 1)
        throw InvalidArgument("build_step(" + std::to_string(n.value()) + ") needs steps 1.." +
                              std::to_string(n.value() - 1) + " complete; table has " +
                              std::to_string(table.max_step()));
    StepBuilder b(n, table);
    try {
        return b.run();
    } catch (const BuildError&) {
        b.rollback();
        throw;
    } catch (const Error& e) {
        b.rollback();
        throw BuildError("step " + std::to_string(n.value()) + ": " + e.what(), b.record());
    }
}

ClassificationTable build_table(int max_step) {
    if (max_step < 1 || max_step > 16)
        throw InvalidArgument("max_step must be in [1, 16]");
    ClassificationTable table;
    for (int n = 1; n <= max_step; ++n)
        build_step(StepIndex(n), table);
    return table;
}

} // namespace knotnum
