#pragma once

#include "knotnum/table.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace knotnum {

/// "position\tknot\treplaced" then one row per assigned position.
std::string table_tsv(const ClassificationTable& table);

/// [{"position": int, "knot": string, "replaced": string|null, "step": int}, ...]
std::string table_json(const ClassificationTable& table);

/// Ascending JSON array, e.g. "[25,27,30]".
std::string numbers_json(const std::vector<std::uint64_t>& values);

/// Replaced knots joined by ','.
std::string replaced_text(const std::vector<KnotExpr>& replaced);

} // namespace knotnum
