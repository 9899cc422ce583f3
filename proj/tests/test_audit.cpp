#include "knotnum/audit.hpp"
#include "knotnum/error.hpp"

#include <gtest/gtest.h>

#include <set>

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

bool twin_member_oracle(std::uint64_t p) {
    return trial_division_prime(p) && ((p >= 2 && trial_division_prime(p - 2)) || trial_division_prime(p + 2));
}

std::vector<std::uint64_t> strong_twin_failures_oracle(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t e = 6; e <= limit; e += 2) {
        bool found = false;
        for (std::uint64_t p = 2; p <= e - 2 && !found; ++p)
            found = twin_member_oracle(p) && twin_member_oracle(e - p);
        if (!found)
            out.push_back(e);
    }
    return out;
}

} // namespace

TEST(Goldbach, Witnesses) {
    const PrimeSieve s(1000);
    EXPECT_EQ(goldbach_witness(6, s), (std::pair<std::uint64_t, std::uint64_t>{3, 3}));
    EXPECT_EQ(goldbach_witness(8, s), (std::pair<std::uint64_t, std::uint64_t>{3, 5}));
    EXPECT_EQ(goldbach_witness(10, s), (std::pair<std::uint64_t, std::uint64_t>{3, 7}));
    EXPECT_EQ(goldbach_witness(12, s), (std::pair<std::uint64_t, std::uint64_t>{5, 7}));
    EXPECT_THROW(goldbach_witness(7, s), InvalidArgument);
    EXPECT_THROW(goldbach_witness(4, s), InvalidArgument);
}

TEST(Goldbach, CheckToHundredThousand) {
    const PrimeSieve s(100'002);
    const auto r = goldbach_check(100'000, s);
    EXPECT_TRUE(r.pass);
    EXPECT_FALSE(r.truncated);
    EXPECT_EQ(r.scanned_through, 100'000u);
    EXPECT_TRUE(r.counterexamples.empty());
    ASSERT_FALSE(r.witnesses.empty());
    for (const auto& w : r.witnesses) {
        EXPECT_EQ(w.p + w.q, w.n);
        EXPECT_TRUE(trial_division_prime(w.p));
        EXPECT_TRUE(trial_division_prime(w.q));
    }
}

TEST(TwinPairs, PerStep) {
    const PrimeSieve s(1 << 10);
    auto pairs = [&](int n) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        for (const auto& tp : twin_pairs_in_step(StepIndex(n), s))
            out.emplace_back(tp.p, tp.q);
        return out;
    };
    using V = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
    EXPECT_EQ(pairs(3), (V{{5, 7}}));
    EXPECT_EQ(pairs(4), (V{{11, 13}}));
    EXPECT_EQ(pairs(5), (V{{17, 19}, {29, 31}}));
    EXPECT_EQ(pairs(6), (V{{41, 43}, {59, 61}}));
    EXPECT_EQ(pairs(7), (V{{71, 73}, {101, 103}, {107, 109}}));
    EXPECT_THROW(twin_pairs_in_step(StepIndex(2), s), InvalidArgument);
}

TEST(TwinPairs, StepsAndStraddlersCoverAllPairs) {
    const int max_step = 14;
    const PrimeSieve s(1 << max_step);
    std::set<std::uint64_t> from_steps;
    for (int n = 3; n <= max_step; ++n)
        for (const auto& tp : twin_pairs_in_step(StepIndex(n), s))
            from_steps.insert(tp.p);
    for (const auto& tp : straddling_twin_pairs(max_step, s))
        from_steps.insert(tp.p);
    std::set<std::uint64_t> all;
    for (std::uint64_t p = 2; p + 2 <= (1u << max_step); ++p)
        if (trial_division_prime(p) && trial_division_prime(p + 2))
            all.insert(p);
    EXPECT_EQ(from_steps, all);
    const auto straddle = straddling_twin_pairs(max_step, s);
    ASSERT_EQ(straddle.size(), 1u);
    EXPECT_EQ(straddle[0], (TwinPair{3, 5}));
}

TEST(TwinSteps, Report) {
    const PrimeSieve s(1 << 16);
    const auto r = twin_steps_check(16, s);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.witnesses.size(), 14u);
    EXPECT_EQ(r.witnesses[0].p, 5u);
    EXPECT_EQ(r.notes.size(), 1u);
}

TEST(StrongTwin, MatchesBruteForce) {
    const std::uint64_t limit = 10'000;
    const PrimeSieve s(limit + 2);
    const auto r = strong_twin_goldbach_check(limit, s);
    const auto oracle = strong_twin_failures_oracle(limit);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.counterexamples, oracle);
    ASSERT_FALSE(oracle.empty());
    EXPECT_EQ(oracle.front(), 94u);
    const std::vector<std::uint64_t> upto_1000 = {94, 96, 98, 400, 402, 404, 514, 516,
                                                  518, 784, 786, 788, 904, 906, 908};
    std::vector<std::uint64_t> head;
    for (auto e : r.counterexamples)
        if (e <= 1000)
            head.push_back(e);
    EXPECT_EQ(head, upto_1000);
}

TEST(StrongTwin, TwelvePasses) {
    const PrimeSieve s(20);
    const auto r = strong_twin_goldbach_check(12, s);
    EXPECT_TRUE(r.pass);
    ASSERT_EQ(r.witnesses.size(), 4u);
    EXPECT_EQ(r.witnesses.back().n, 12u);
    EXPECT_EQ(r.witnesses.back().p, 5u);
}

TEST(Audit, ThreadCountInvariant) {
    for (auto c : {Claim::Goldbach, Claim::StrongTwin, Claim::TwinSteps}) {
        AuditOptions o;
        o.limit = 300'000;
        o.max_step = 18;
        o.threads = 1;
        const auto one = report_json(audit_range({c}, o).front(), false);
        o.threads = 7;
        const auto many = report_json(audit_range({c}, o).front(), false);
        EXPECT_EQ(one, many) << claim_tag(c);
    }
}

TEST(Audit, BudgetTruncates) {
    AuditOptions o;
    o.limit = 2'000'000;
    o.budget_secs = 1e-9;
    const auto r = audit_range({Claim::Goldbach}, o).front();
    EXPECT_TRUE(r.truncated);
    EXPECT_FALSE(r.pass);
    EXPECT_LT(r.scanned_through, 2'000'000u);
}

TEST(Audit, ClaimTags) {
    EXPECT_EQ(claim_from_tag("goldbach"), Claim::Goldbach);
    EXPECT_EQ(claim_from_tag("twin-steps"), Claim::TwinSteps);
    EXPECT_EQ(claim_from_tag("strong-twin"), Claim::StrongTwin);
    EXPECT_FALSE(claim_from_tag("collatz"));
    EXPECT_EQ(claim_tag(Claim::StrongTwin), "strong-twin");
}

TEST(Audit, JsonShape) {
    const PrimeSieve s(102);
    const auto r = strong_twin_goldbach_check(100, s);
    const auto j = report_json(r, false);
    EXPECT_NE(j.find("\"claim\": \"strong-twin\""), std::string::npos);
    EXPECT_NE(j.find("\"pass\": false"), std::string::npos);
    EXPECT_NE(j.find("\"counterexamples\": [\n    94,"), std::string::npos);
    EXPECT_EQ(j.find("elapsed_ms"), std::string::npos);
    EXPECT_NE(report_json(r, true).find("elapsed_ms"), std::string::npos);
}
