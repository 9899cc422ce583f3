#pragma once

#include "knotnum/expr.hpp"
#include "knotnum/table.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace knotnum {

struct TableRow {
    std::uint64_t position = 0;
    KnotExpr knot;
    std::vector<KnotExpr> replaced;
};

/// Reads the table TSV format (header "position\tknot\treplaced"; several
/// replaced knots separated by ','). Throws InvalidArgument / ParseError.
std::vector<TableRow> read_table_tsv(std::string_view text);

/// The reference table for positions 1..128, compiled in.
const std::vector<TableRow>& reference_rows();
std::string_view reference_tsv();

/// Positions from which the reference replaced column is compared.
inline constexpr std::uint64_t kReplacedCheckedFrom = 33;

struct Mismatch {
    std::uint64_t position = 0;
    std::string field; // "knot" or "replaced"
    std::string expected;
    std::string actual;
};

struct FixtureReport {
    std::uint64_t checked_through = 0;
    std::size_t rows_checked = 0;
    std::vector<Mismatch> mismatches;

    bool pass() const noexcept { return mismatches.empty(); }
};

/// Compares every reference row up to table.max_position(). Replaced knots
/// are compared as multisets.
FixtureReport verify_against_fixtures(const ClassificationTable& table);

} // namespace knotnum
