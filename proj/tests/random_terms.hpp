#pragma once

#include "knotnum/expr.hpp"

#include <random>
#include <string>

namespace knotnum::gen {

// Atoms drawn from 3..8 crossings with valid indices.
inline PrimeKnotId random_atom(std::mt19937_64& rng) {
    static constexpr int counts[] = {1, 1, 2, 3, 7, 21};
    std::uniform_int_distribution<int> cd(3, 8);
    const int c = cd(rng);
    std::uniform_int_distribution<int> id(1, counts[c - 3]);
    return PrimeKnotId{c, id(rng), +1};
}

// Unnormalized tree: nested same-operation nodes and arbitrary child order.
inline RawTerm random_raw(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> coin(0, 99);
    if (depth <= 0 || coin(rng) < 30)
        return RawTerm::leaf(random_atom(rng));
    std::uniform_int_distribution<int> arity(2, 4);
    const auto kind = coin(rng) < 50 ? KnotExpr::Kind::Star : KnotExpr::Kind::Times;
    const int k = arity(rng);
    std::vector<RawTerm> cs;
    for (int i = 0; i < k; ++i)
        cs.push_back(random_raw(rng, depth - 1));
    return RawTerm::op(kind, std::move(cs));
}

// Notation for a raw tree, every composite parenthesized, with random
// whitespace.
inline std::string raw_notation(const RawTerm& t, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> ws(0, 3);
    auto pad = [&] { return std::string(static_cast<std::size_t>(ws(rng) == 0), ' '); };
    if (t.kind == KnotExpr::Kind::Atom)
        return pad() + t.atom.name() + pad();
    std::string s = pad() + "(";
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i)
            s += t.kind == KnotExpr::Kind::Star ? "*" : "x";
        s += raw_notation(t.children[i], rng);
    }
    return s + ")" + pad();
}

// Alternating-crossing count straight off the raw tree.
inline std::int64_t raw_alt(const RawTerm& t) {
    if (t.kind == KnotExpr::Kind::Atom)
        return t.atom.crossings;
    std::int64_t s = 0;
    for (const auto& c : t.children)
        s += raw_alt(c);
    if (t.kind == KnotExpr::Kind::Star)
        s -= 2 * static_cast<std::int64_t>(t.children.size() - 1);
    return s;
}

} // namespace knotnum::gen
