#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace knotnum {

/// A prime knot named by minimal crossing number and table index, e.g. 8_17.
/// Chirality is carried along but has no algebraic effect.
struct PrimeKnotId {
    int crossings = 3;
    int index = 1;
    int chirality = +1;

    std::string name() const;

    friend auto operator<=>(const PrimeKnotId&, const PrimeKnotId&) = default;
};

/// Immutable canonical term over prime-knot atoms and the two connected-sum
/// operations. Star and Times nodes are flattened and their children sorted,
/// so structural equality is equality of knots in the algebra.
///
/// Canonical child order: atoms by (crossings, index, chirality), then Times
/// nodes, then Star nodes, composites of one kind by rendered text.
class KnotExpr {
public:
    enum class Kind : std::uint8_t { Atom = 0, Times = 1, Star = 2 };

    /// Defaults to the trefoil.
    KnotExpr();

    Kind kind() const noexcept;
    bool is_atom() const noexcept { return kind() == Kind::Atom; }

    /// Only meaningful for atoms.
    const PrimeKnotId& atom_id() const noexcept;
    std::span<const KnotExpr> children() const noexcept;

    /// Canonical notation, e.g. "3_1x(3_1*5_2)".
    const std::string& text() const noexcept;

    /// Alternating-crossing tally: atoms contribute their crossing number,
    /// each star join subtracts 2, times joins are additive.
    std::int64_t alt_crossings() const noexcept;

    friend bool operator==(const KnotExpr& a, const KnotExpr& b) noexcept;
    friend std::strong_ordering operator<=>(const KnotExpr& a, const KnotExpr& b) noexcept;

    struct Node; // opaque

private:
    explicit KnotExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;

    friend KnotExpr make_atom_unchecked(const PrimeKnotId& id);
    friend KnotExpr make_operation(Kind kind, std::vector<KnotExpr> children);
};

/// Unnormalized term tree, as produced by a parser or a test generator.
struct RawTerm {
    KnotExpr::Kind kind = KnotExpr::Kind::Atom;
    PrimeKnotId atom{};
    std::vector<RawTerm> children;

    static RawTerm leaf(PrimeKnotId id) { return RawTerm{KnotExpr::Kind::Atom, id, {}}; }
    static RawTerm op(KnotExpr::Kind k, std::vector<RawTerm> cs) { return RawTerm{k, {}, std::move(cs)}; }
};

/// Validated atom constructor; throws UnknownAtom for names outside the
/// catalog (crossings < 3, or index beyond the count for crossings <= 8).
KnotExpr atom(const PrimeKnotId& id);
KnotExpr atom(int crossings, int index);

/// The trefoil 3_1.
KnotExpr trefoil();

KnotExpr star(const KnotExpr& a, const KnotExpr& b);
KnotExpr times(const KnotExpr& a, const KnotExpr& b);

/// N-ary forms; a single operand is returned as is.
KnotExpr star_of(std::vector<KnotExpr> operands);
KnotExpr times_of(std::vector<KnotExpr> operands);

/// Star of `n` trefoils (the anchor of dyadic step n). `n` >= 1.
KnotExpr trefoil_power(int n);

/// Flattens same-operation nesting, sorts children, and collapses
/// single-child nodes. Empty operation nodes are rejected.
KnotExpr normalize(const RawTerm& term);

/// Lifts a canonical expression back into a raw tree.
RawTerm to_raw(const KnotExpr& k);

/// Unique star-factorization: the children of a Star node, or {k} itself.
std::vector<KnotExpr> star_factors(const KnotExpr& k);

bool is_times_rooted(const KnotExpr& k) noexcept;

/// All atoms of `k`, with multiplicity, in canonical order of appearance.
std::vector<PrimeKnotId> atoms_of(const KnotExpr& k);

struct KnotExprHash {
    std::size_t operator()(const KnotExpr& k) const noexcept { return std::hash<std::string>{}(k.text()); }
};

} // namespace knotnum
