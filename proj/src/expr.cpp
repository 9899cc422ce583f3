#include "knotnum/expr.hpp"

#include "knotnum/catalog.hpp"
#include "knotnum/error.hpp"

#include <algorithm>
#include <utility>

namespace knotnum {

std::string PrimeKnotId::name() const {
    std::string s = chirality < 0 ? "-" : "";
    s += std::to_string(crossings);
    s += '_';
    s += std::to_string(index);
    return s;
}

struct KnotExpr::Node {
    Kind kind = Kind::Atom;
    PrimeKnotId id{};
    std::vector<KnotExpr> children;
    std::string text;
    std::int64_t alt = 0;
};

namespace {

const std::shared_ptr<const KnotExpr::Node>& trefoil_node();

char op_symbol(KnotExpr::Kind kind) { return kind == KnotExpr::Kind::Star ? '*' : 'x'; }

} // namespace

KnotExpr make_atom_unchecked(const PrimeKnotId& id) {
    auto node = std::make_shared<KnotExpr::Node>();
    node->kind = KnotExpr::Kind::Atom;
    node->id = id;
    node->text = id.name();
    node->alt = id.crossings;
    return KnotExpr(std::move(node));
}

KnotExpr make_operation(KnotExpr::Kind kind, std::vector<KnotExpr> children) {
    std::vector<KnotExpr> flat;
    flat.reserve(children.size());
    for (auto& c : children) {
        if (c.kind() == kind) {
            auto sub = c.children();
            flat.insert(flat.end(), sub.begin(), sub.end());
        } else {
            flat.push_back(std::move(c));
        }
    }
    if (flat.empty())
        throw InvalidArgument("operation node without children");
    if (flat.size() == 1)
        return flat.front();
    std::sort(flat.begin(), flat.end());

    auto node = std::make_shared<KnotExpr::Node>();
    node->kind = kind;
    const char sym = op_symbol(kind);
    std::int64_t alt = 0;
    for (std::size_t i = 0; i < flat.size(); ++i) {
        if (i)
            node->text += sym;
        if (flat[i].is_atom()) {
            node->text += flat[i].text();
        } else {
            node->text += '(';
            node->text += flat[i].text();
            node->text += ')';
        }
        alt += flat[i].alt_crossings();
    }
    if (kind == KnotExpr::Kind::Star)
        alt -= 2 * static_cast<std::int64_t>(flat.size() - 1);
    node->alt = alt;
    node->children = std::move(flat);
    return KnotExpr(std::move(node));
}

namespace {

const std::shared_ptr<const KnotExpr::Node>& trefoil_node() {
    static const auto node = [] {
        auto n = std::make_shared<KnotExpr::Node>();
        n->kind = KnotExpr::Kind::Atom;
        n->id = PrimeKnotId{3, 1, +1};
        n->text = "3_1";
        n->alt = 3;
        return std::shared_ptr<const KnotExpr::Node>(std::move(n));
    }();
    return node;
}

} // namespace

KnotExpr::KnotExpr() : node_(trefoil_node()) {}

KnotExpr::Kind KnotExpr::kind() const noexcept { return node_->kind; }
const PrimeKnotId& KnotExpr::atom_id() const noexcept { return node_->id; }
std::span<const KnotExpr> KnotExpr::children() const noexcept { return node_->children; }
const std::string& KnotExpr::text() const noexcept { return node_->text; }
std::int64_t KnotExpr::alt_crossings() const noexcept { return node_->alt; }

bool operator==(const KnotExpr& a, const KnotExpr& b) noexcept {
    if (a.node_ == b.node_)
        return true;
    return a.node_->kind == b.node_->kind && a.node_->text == b.node_->text;
}

std::strong_ordering operator<=>(const KnotExpr& a, const KnotExpr& b) noexcept {
    if (a.node_ == b.node_)
        return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0)
        return c;
    if (a.is_atom())
        return a.atom_id() <=> b.atom_id();
    return a.text().compare(b.text()) <=> 0;
}

KnotExpr atom(const PrimeKnotId& id) {
    if (!KnotCatalog::contains(id))
        throw UnknownAtom("unknown prime knot " + id.name());
    if (id == PrimeKnotId{3, 1, +1})
        return KnotExpr{};
    return make_atom_unchecked(id);
}

KnotExpr atom(int crossings, int index) { return atom(PrimeKnotId{crossings, index, +1}); }

KnotExpr trefoil() { return KnotExpr{}; }

KnotExpr star(const KnotExpr& a, const KnotExpr& b) { return make_operation(KnotExpr::Kind::Star, {a, b}); }

KnotExpr times(const KnotExpr& a, const KnotExpr& b) { return make_operation(KnotExpr::Kind::Times, {a, b}); }

KnotExpr star_of(std::vector<KnotExpr> operands) {
    return make_operation(KnotExpr::Kind::Star, std::move(operands));
}

KnotExpr times_of(std::vector<KnotExpr> operands) {
    return make_operation(KnotExpr::Kind::Times, std::move(operands));
}

KnotExpr trefoil_power(int n) {
    if (n < 1)
        throw InvalidArgument("trefoil power needs n >= 1");
    if (n == 1)
        return trefoil();
    return make_operation(KnotExpr::Kind::Star, std::vector<KnotExpr>(static_cast<std::size_t>(n), trefoil()));
}

KnotExpr normalize(const RawTerm& term) {
    if (term.kind == KnotExpr::Kind::Atom)
        return atom(term.atom);
    std::vector<KnotExpr> children;
    children.reserve(term.children.size());
    for (const auto& c : term.children)
        children.push_back(normalize(c));
    return make_operation(term.kind, std::move(children));
}

RawTerm to_raw(const KnotExpr& k) {
    if (k.is_atom())
        return RawTerm::leaf(k.atom_id());
    std::vector<RawTerm> cs;
    for (const auto& c : k.children())
        cs.push_back(to_raw(c));
    return RawTerm::op(k.kind(), std::move(cs));
}

std::vector<KnotExpr> star_factors(const KnotExpr& k) {
    if (k.kind() == KnotExpr::Kind::Star) {
        auto cs = k.children();
        return {cs.begin(), cs.end()};
    }
    return {k};
}

bool is_times_rooted(const KnotExpr& k) noexcept { return k.kind() == KnotExpr::Kind::Times; }

namespace {

void collect_atoms(const KnotExpr& k, std::vector<PrimeKnotId>& out) {
    if (k.is_atom()) {
        out.push_back(k.atom_id());
        return;
    }
    for (const auto& c : k.children())
        collect_atoms(c, out);
}

} // namespace

std::vector<PrimeKnotId> atoms_of(const KnotExpr& k) {
    std::vector<PrimeKnotId> out;
    collect_atoms(k, out);
    return out;
}

} // namespace knotnum
