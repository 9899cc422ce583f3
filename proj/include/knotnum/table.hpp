#pragma once

#include "knotnum/arithmetic.hpp"
#include "knotnum/catalog.hpp"
#include "knotnum/error.hpp"
#include "knotnum/expr.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace knotnum {

/// One preordering sequence: head star each knot of the tail step.
struct Sequence {
    KnotExpr head;
    int tail_step = 1;
    std::vector<KnotExpr> knots;
};

struct Chain {
    std::vector<std::uint64_t> path;
    /// The last number of `path` is a jumper of the step.
    bool ends_in_jumper = false;
};

/// A knot placed at `position` in place of the sequence knots `replaced`.
struct Replacement {
    std::uint64_t position = 0;
    KnotExpr placed;
    std::vector<KnotExpr> replaced;
};

struct StepBuild {
    enum class Source { Initial, LayoutPlan, Resolution };

    StepIndex n{1};
    Source source = Source::Initial;
    std::vector<Sequence> sequences;
    /// Knots entering from the previous step (knots of earlier jumpers) and
    /// new times-rooted knots.
    std::vector<KnotExpr> incoming;
    /// jumpers(n): numbers whose knots leave for step n+1.
    std::vector<std::uint64_t> outgoing;
    std::vector<Chain> chains;
    /// New prime knots at prime positions.
    std::vector<Replacement> replacements;
    /// Inserted knots at composite positions.
    std::vector<Replacement> displacements;
    std::vector<std::string> diagnostics;
};

class ClassificationTable;

/// Builder failure; carries the partial record of the failing step.
class BuildError : public Error {
public:
    BuildError(const std::string& message, StepBuild partial)
        : Error(message), partial_(std::make_shared<StepBuild>(std::move(partial))) {}

    const StepBuild& partial() const noexcept { return *partial_; }

private:
    std::shared_ptr<StepBuild> partial_;
};

/// Position <-> knot assignment for positions 1..2^N (2 is reserved).
class ClassificationTable {
public:
    /// Empty table; build_step(1) puts 3_1 at 1.
    ClassificationTable();

    /// Last completed step, 0 when empty.
    int max_step() const noexcept { return static_cast<int>(steps_.size()); }
    /// 2^max_step, or 0 when empty.
    std::uint64_t max_position() const noexcept;

    std::optional<KnotExpr> knot_at(std::uint64_t position) const;
    std::optional<std::uint64_t> position_of(const KnotExpr& k) const;

    /// Every knot listed as replaced at `position`, in plan order.
    std::vector<KnotExpr> replaced_at(std::uint64_t position) const;

    const std::map<std::uint64_t, KnotExpr>& assignment() const noexcept { return assignment_; }
    const PrimeAssignment& prime_of() const noexcept { return prime_of_; }
    const std::vector<StepBuild>& steps() const noexcept { return steps_; }
    const StepBuild& step(int n) const;

    /// Sieve covering at least max_position().
    const PrimeSieve& sieve() const noexcept { return *sieve_; }

    /// Related number of k against this table's prime assignment.
    std::optional<std::uint64_t> related(const KnotExpr& k) const { return related_number(k, prime_of_); }

    /// Replaces the knot at an existing position without any consistency
    /// check. Meant for fault injection.
    void override_position(std::uint64_t position, const KnotExpr& k);

private:
    friend StepBuild build_step(StepIndex n, ClassificationTable& table);
    friend class StepBuilder;

    void ensure_sieve(std::uint64_t limit);
    void place(std::uint64_t position, const KnotExpr& k, StepBuild& record);

    std::map<std::uint64_t, KnotExpr> assignment_;
    std::unordered_map<KnotExpr, std::uint64_t, KnotExprHash> inverse_;
    PrimeAssignment prime_of_;
    std::map<std::uint64_t, std::vector<KnotExpr>> replaced_;
    std::vector<StepBuild> steps_;
    std::shared_ptr<const PrimeSieve> sieve_;
    PrimeKnotAllocator allocator_;
    // Knots owed to the next step by the resolution procedure.
    std::vector<KnotExpr> pending_;
};

/// Preordering sequences for step n, by ascending tail step. Tail step t
/// pairs with the prime knots of step n-t (3_1 for t = n-1). A sequence whose
/// knots all repeat knots already listed or already assigned is dropped,
/// except the first one of each tail step.
std::vector<Sequence> preordering_sequences(StepIndex n, const ClassificationTable& table);

/// related prime of `head` (2 for 3_1) times `tail_pos`.
std::uint64_t nominal_number(const KnotExpr& head, std::uint64_t tail_pos, const ClassificationTable& table);

/// Completes step n on `table` (steps 1..n-1 must be complete) and returns
/// the step record, which is also appended to table.steps().
StepBuild build_step(StepIndex n, ClassificationTable& table);

/// Steps 1..max_step, max_step in [1, 16].
ClassificationTable build_table(int max_step);

/// Largest step reproduced from the built-in layout plans. Later steps use
/// the related-number resolution procedure.
int layout_plan_max_step();

/// Times-rooted knots over prime knots already holding a prime, ascending by
/// (alt_crossings, text), skipping knots already in `table`.
std::vector<KnotExpr> times_knots(const ClassificationTable& table, std::size_t count);

/// Follows displacements in step n: from each composite position whose knot
/// has no related number in the step, to the position of the knot related
/// to the current number, until none remains.
std::vector<Chain> trace_chains(StepIndex n, const ClassificationTable& table);

} // namespace knotnum
