#include "knotnum/error.hpp"
#include "knotnum/fixtures.hpp"
#include "knotnum/notation.hpp"
#include "random_terms.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace knotnum;

namespace {

std::size_t parse_error_offset(const char* text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    ADD_FAILURE() << "no ParseError for '" << text << "'";
    return static_cast<std::size_t>(-1);
}

} // namespace

TEST(Parse, Examples) {
    const auto a = parse("3_1*4_1");
    EXPECT_EQ(a.kind(), KnotExpr::Kind::Star);
    EXPECT_EQ(a, star(atom(3, 1), atom(4, 1)));

    const auto b = parse("3_1x(3_1*5_2)");
    EXPECT_EQ(b.kind(), KnotExpr::Kind::Times);
    EXPECT_EQ(b, times(atom(3, 1), star(atom(3, 1), atom(5, 2))));
}

TEST(Parse, WhitespaceInsignificant) {
    EXPECT_EQ(parse("  3_1 x ( 3_1 *\t5_2 ) "), parse("3_1x(3_1*5_2)"));
}

TEST(Parse, SyntaxErrorsCarryOffsets) {
    EXPECT_EQ(parse_error_offset("3_1**4_1"), 4u);
    EXPECT_EQ(parse_error_offset("3_1*4_1x5_1"), 7u);
    EXPECT_EQ(parse_error_offset(""), 0u);
    EXPECT_EQ(parse_error_offset("(3_1*4_1"), 8u);
    EXPECT_EQ(parse_error_offset("3_1)"), 3u);
    EXPECT_EQ(parse_error_offset("3-1"), 1u);
    EXPECT_EQ(parse_error_offset("3_"), 2u);
    EXPECT_EQ(parse_error_offset("3_1 3_1"), 4u);
    EXPECT_EQ(parse_error_offset("@3"), 0u);
    EXPECT_EQ(parse_error_offset("99999999999_1"), 0u);
}

TEST(Parse, MixedChainsNeedParentheses) {
    EXPECT_THROW(parse("3_1*4_1x5_1"), ParseError);
    EXPECT_EQ(parse("3_1*(4_1x5_1)").text(), "3_1*(4_1x5_1)");
    EXPECT_EQ(parse("(3_1*4_1)x5_1").text(), "5_1x(3_1*4_1)");
}

TEST(Parse, UnknownAtom) {
    EXPECT_THROW(parse("5_3"), UnknownAtom);
    EXPECT_THROW(parse("3_1*2_1"), UnknownAtom);
}

TEST(Render, Examples) {
    EXPECT_EQ(render(trefoil_power(3)), "3_1*3_1*3_1");
    EXPECT_EQ(render(times(atom(3, 1), star(atom(3, 1), atom(5, 2)))), "3_1x(3_1*5_2)");
}

TEST(RoundTrip, GeneratedExpressions) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 5000; ++i) {
        const auto raw = gen::random_raw(rng, 4);
        const auto k = normalize(raw);
        EXPECT_EQ(parse(render(k)), k);
        EXPECT_EQ(render(parse(render(k))), render(k));
        EXPECT_EQ(parse(gen::raw_notation(raw, rng)), k);
    }
}

TEST(RoundTrip, ReferenceNotationsAreCanonical) {
    for (const auto& row : reference_rows()) {
        EXPECT_EQ(render(parse(row.knot.text())), row.knot.text());
        for (const auto& r : row.replaced)
            EXPECT_EQ(render(parse(r.text())), r.text());
    }
}

TEST(RoundTrip, VerbatimTranscriptionNormalizesToReference) {
    std::ifstream in(KNOTNUM_SOURCE_DIR "/tests/data/reference_table_verbatim.tsv");
    ASSERT_TRUE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto verbatim = read_table_tsv(ss.str());
    const auto& ref = reference_rows();
    ASSERT_EQ(verbatim.size(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
        EXPECT_EQ(verbatim[i].position, ref[i].position);
        EXPECT_EQ(verbatim[i].knot, ref[i].knot) << ref[i].position;
        EXPECT_EQ(verbatim[i].replaced, ref[i].replaced) << ref[i].position;
    }
}

TEST(Template, PositionReferences) {
    const PositionResolver resolve = [](std::uint64_t p) -> KnotExpr {
        if (p == 1)
            return trefoil();
        if (p == 3)
            return atom(4, 1);
        throw InvalidArgument("unassigned");
    };
    EXPECT_EQ(parse_template("@1*@3", resolve).text(), "3_1*4_1");
    EXPECT_EQ(parse_template("@1x(@1*@3)", resolve).text(), "3_1x(3_1*4_1)");
    EXPECT_THROW(parse_template("@7", resolve), ParseError);
    EXPECT_THROW(parse("@1"), ParseError);
}
