#pragma once

#include "knotnum/expr.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace knotnum {

// Grammar:
//   expr   := factor (op factor)*      one operator per level
//   op     := '*' (star) | 'x' (times)
//   factor := atom | '(' expr ')'
//   atom   := ['-'] INT '_' INT
// Whitespace is insignificant.

/// Parses knot notation into canonical form. Throws ParseError (with byte
/// offset) on malformed input and UnknownAtom on names outside the catalog.
KnotExpr parse(std::string_view text);

/// Canonical notation. Same as `k.text()`.
std::string render(const KnotExpr& k);

using PositionResolver = std::function<KnotExpr(std::uint64_t position)>;

/// Notation extended with position references "@N", each replaced by
/// `resolve(N)`. Used by the table layout plans.
KnotExpr parse_template(std::string_view text, const PositionResolver& resolve);

} // namespace knotnum
