#include "blockslide/fuzz.hpp"

#include <gtest/gtest.h>

namespace {

using namespace blockslide;

TEST(Fuzz, CasesStayInsideTheEnvelope)
{
    FuzzConfig cfg;
    for (std::uint64_t i = 0; i < 300; ++i) {
        const auto inst = make_fuzz_case(cfg, i);
        EXPECT_LE(inst.graph.vertex_count(), cfg.max_vertices);
        EXPECT_TRUE(is_connected(inst.graph));
        EXPECT_TRUE(is_block_graph(inst.graph));
        EXPECT_GE(inst.source.size(), 1u);
        EXPECT_LE(inst.source.size(), cfg.max_tokens);
        EXPECT_EQ(inst.source.size(), inst.target.size());
        EXPECT_EQ(inst, make_fuzz_case(cfg, i));
    }
}

TEST(Fuzz, SmallRunIsClean)
{
    FuzzConfig cfg;
    cfg.count = 300;
    cfg.seed = 42;
    const auto summary = run_fuzz(cfg);
    EXPECT_EQ(summary.cases, 300u);
    EXPECT_EQ(summary.passed, 300u);
    EXPECT_EQ(summary.yes + summary.no, 300u);
    EXPECT_FALSE(summary.failure.has_value());
}

TEST(Fuzz, EmptyRun)
{
    FuzzConfig cfg;
    cfg.count = 0;
    const auto summary = run_fuzz(cfg);
    EXPECT_EQ(summary.cases, 0u);
    EXPECT_FALSE(summary.failure.has_value());
}

TEST(Fuzz, CatchesACorruptedSolver)
{
    const Solver always_yes = [](const Graph& g, const TokenSet& a, const TokenSet& b) {
        auto v = decide(g, a, b);
        v.reachable = true;
        v.reason = Reason::Reachable;
        return v;
    };
    FuzzConfig cfg;
    cfg.count = 500;
    const auto summary = run_fuzz(cfg, always_yes);
    ASSERT_TRUE(summary.failure.has_value());
    EXPECT_EQ(summary.failure->seed, cfg.seed + summary.cases - 1);
    bool decision = false;
    for (const auto& v : summary.failure->violations)
        decision = decision || v.check == Check::Decision;
    EXPECT_TRUE(decision);
    const auto replay = check_case(summary.failure->instance, cfg.limits, always_yes);
    EXPECT_FALSE(replay.ok());
}

TEST(Fuzz, CatchesAnAsymmetricSolver)
{
    const Solver lopsided = [](const Graph& g, const TokenSet& a, const TokenSet& b) {
        auto v = decide(g, a, b);
        if (!a.empty() && !b.empty() && *a.begin() < *b.begin())
            v.reachable = !v.reachable;
        return v;
    };
    FuzzConfig cfg;
    cfg.count = 200;
    EXPECT_TRUE(run_fuzz(cfg, lopsided).failure.has_value());
}

TEST(Fuzz, ThrowingSolverIsReportedNotPropagated)
{
    const Solver broken = [](const Graph&, const TokenSet&, const TokenSet&) -> Verdict {
        throw std::runtime_error("boom");
    };
    const auto report = check_case(make_fuzz_case({}, 0), {}, broken);
    ASSERT_FALSE(report.ok());
    EXPECT_EQ(report.violations.front().check, Check::Exception);
}

} // namespace
