#include "knotnum/fixtures.hpp"
#include "knotnum/notation.hpp"
#include "knotnum/serialize.hpp"
#include "knotnum/table.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace knotnum;

namespace {

bool trial_division_prime(std::uint64_t m) {
    if (m < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0)
            return false;
    return true;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(Reference, ShapeAndPrimePositions) {
    const auto& rows = reference_rows();
    ASSERT_EQ(rows.size(), 127u);
    std::uint64_t expect = 1;
    for (const auto& r : rows) {
        EXPECT_EQ(r.position, expect);
        expect = expect == 1 ? 3 : expect + 1;
        if (r.position >= 3)
            EXPECT_EQ(r.knot.is_atom(), trial_division_prime(r.position)) << r.position;
    }
}

TEST(Reference, ShippedFileMatchesBuiltIn) {
    EXPECT_EQ(slurp(KNOTNUM_SOURCE_DIR "/data/reference_table.tsv"), std::string(reference_tsv()));
}

TEST(Reference, TsvReaderErrors) {
    EXPECT_THROW(read_table_tsv("x\t3_1\t\n"), InvalidArgument);
    EXPECT_THROW(read_table_tsv("1\n"), InvalidArgument);
    EXPECT_THROW(read_table_tsv("1\t3_1**3_1\t\n"), ParseError);
    const auto rows = read_table_tsv("position\tknot\treplaced\n45\t4_1x4_1\t5_1*(3_1*3_1*3_1),5_2*(3_1*4_1)\n");
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].replaced.size(), 2u);
}

TEST(Verify, BuiltTablePasses) {
    const auto t = build_table(7);
    const auto rep = verify_against_fixtures(t);
    EXPECT_TRUE(rep.pass());
    EXPECT_EQ(rep.rows_checked, 127u);
    EXPECT_EQ(rep.checked_through, 128u);
    for (const auto& m : rep.mismatches)
        ADD_FAILURE() << m.position << " " << m.field << ": " << m.expected << " vs " << m.actual;
}

TEST(Verify, TsvOfBuiltTableEqualsReference) {
    EXPECT_EQ(read_table_tsv(table_tsv(build_table(7))).size(), 127u);
    const auto t = build_table(7);
    const auto rows = read_table_tsv(table_tsv(t));
    const auto& ref = reference_rows();
    ASSERT_EQ(rows.size(), ref.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].knot, ref[i].knot);
        if (rows[i].position >= kReplacedCheckedFrom)
            EXPECT_EQ(rows[i].replaced, ref[i].replaced) << rows[i].position;
    }
}

TEST(Verify, PrefixCheck) {
    const auto rep = verify_against_fixtures(build_table(4));
    EXPECT_TRUE(rep.pass());
    EXPECT_EQ(rep.rows_checked, 15u);
    EXPECT_EQ(rep.checked_through, 16u);
}

TEST(Verify, DetectsWrongKnot) {
    auto t = build_table(7);
    t.override_position(18, parse("3_1*4_1*4_1"));
    const auto rep = verify_against_fixtures(t);
    ASSERT_EQ(rep.mismatches.size(), 1u);
    EXPECT_EQ(rep.mismatches[0].position, 18u);
    EXPECT_EQ(rep.mismatches[0].field, "knot");
    EXPECT_EQ(rep.mismatches[0].expected, "3_1x4_1");
    EXPECT_EQ(rep.mismatches[0].actual, "3_1*4_1*4_1");
}

TEST(Verify, DetectsFaultAt45) {
    auto t = build_table(7);
    t.override_position(45, parse("3_1*3_1*3_1*5_1"));
    const auto rep = verify_against_fixtures(t);
    ASSERT_EQ(rep.mismatches.size(), 1u);
    EXPECT_EQ(rep.mismatches[0].position, 45u);
    EXPECT_EQ(rep.mismatches[0].expected, "4_1x4_1");
}
