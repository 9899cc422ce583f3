#include "knotnum/fixtures.hpp"

#include "embedded.hpp"
#include "knotnum/error.hpp"
#include "knotnum/notation.hpp"

#include <algorithm>
#include <sstream>

namespace knotnum {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

std::string joined(std::vector<KnotExpr> ks) {
    std::sort(ks.begin(), ks.end());
    std::string s;
    for (const auto& k : ks) {
        if (!s.empty())
            s += ',';
        s += k.text();
    }
    return s;
}

} // namespace

std::vector<TableRow> read_table_tsv(std::string_view text) {
    std::vector<TableRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (lineno == 1 && line.rfind("position\t", 0) == 0)
            continue;
        const auto cols = split(line, '\t');
        if (cols.size() < 2 || cols.size() > 3)
            throw InvalidArgument("line " + std::to_string(lineno) + ": expected 2 or 3 columns");
        TableRow r;
        try {
            r.position = std::stoull(cols[0]);
        } catch (const std::exception&) {
            throw InvalidArgument("line " + std::to_string(lineno) + ": bad position '" + cols[0] + "'");
        }
        r.knot = parse(cols[1]);
        if (cols.size() == 3 && !cols[2].empty())
            for (const auto& k : split(cols[2], ','))
                r.replaced.push_back(parse(k));
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string_view reference_tsv() { return embedded::reference_table(); }

const std::vector<TableRow>& reference_rows() {
    static const auto rows = read_table_tsv(embedded::reference_table());
    return rows;
}

FixtureReport verify_against_fixtures(const ClassificationTable& table) {
    FixtureReport rep;
    rep.checked_through = std::min<std::uint64_t>(table.max_position(), reference_rows().back().position);
    for (const auto& row : reference_rows()) {
        if (row.position > table.max_position())
            continue;
        ++rep.rows_checked;
        const auto got = table.knot_at(row.position);
        if (!got || *got != row.knot)
            rep.mismatches.push_back({row.position, "knot", row.knot.text(), got ? got->text() : "(none)"});
        if (row.position >= kReplacedCheckedFrom) {
            const auto want = joined(row.replaced);
            const auto have = joined(table.replaced_at(row.position));
            if (want != have)
                rep.mismatches.push_back({row.position, "replaced", want, have});
        }
    }
    return rep;
}

} // namespace knotnum
