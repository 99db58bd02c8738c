#include "blockslide/decision.hpp"
#include "blockslide/error.hpp"
#include "blockslide/oracle.hpp"

#include "definitions.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

namespace {

using namespace blockslide;
using namespace fixtures;

RigidSet rigid_of(const Graph& g, const TokenSet& c)
{
    const auto bd = decompose(g);
    const auto ua = compute_ua(bd, compute_depths(bd));
    return rigid_vertices(bd, ua, compute_potentials(bd, ua, c));
}

TEST(Rigid, Examples)
{
    const auto s = star(3);
    EXPECT_EQ(rigid_of(s, tokens(s, {1, 2})).vertices, (std::vector<Vertex>{0}));
    EXPECT_TRUE(rigid_of(s, tokens(s, {1, 2})).contains(0));
    const auto p = path(3);
    EXPECT_TRUE(rigid_of(p, tokens(p, {0})).vertices.empty());
    const auto k = complete(5);
    EXPECT_TRUE(rigid_of(k, tokens(k, {2})).vertices.empty());
}

TEST(Rigid, NeverHoldsATokenAndMatchesDefinition)
{
    std::uint64_t seed = 1;
    for (const auto& g : random_block_graphs(100, 41, 6, 4, 12)) {
        const auto bd = decompose(g);
        const auto ua = compute_ua(bd, compute_depths(bd));
        const auto vs = random_independent(g, ++seed, 4);
        const auto c = tokens(g, vs);
        const auto pot = compute_potentials(bd, ua, c);
        const auto w = rigid_vertices(bd, ua, pot);
        const auto expected = defs::potentials(g, vs);
        for (Vertex u : bd.cut_vertices()) {
            int frozen = 0;
            for (PairId q = 0; q < bd.pair_count(); q += 2)
                if (bd.base(q) == u)
                    frozen += (expected.at(pair_key(bd, q)) == 0 && ua[q]) ? 1 : 0;
            EXPECT_EQ(w.contains(u), frozen >= 2) << "vertex " << u;
        }
        for (Vertex v : w.vertices)
            EXPECT_FALSE(c.contains(v));
    }
}

TEST(DecideConnected, Examples)
{
    const auto p = path(3);
    const auto v = decide_connected(p, decompose(p), tokens(p, {0}), tokens(p, {2}));
    EXPECT_TRUE(v.reachable);
    EXPECT_EQ(v.reason, Reason::Reachable);

    const auto s = star(3);
    const auto n = decide_connected(s, decompose(s), tokens(s, {1, 2}), tokens(s, {1, 3}));
    EXPECT_FALSE(n.reachable);
    EXPECT_EQ(n.reason, Reason::ComponentCountMismatch);
    EXPECT_EQ(n.rigid_source, (std::vector<Vertex>{0}));
    EXPECT_EQ(n.rigid_target, (std::vector<Vertex>{0}));
    ASSERT_EQ(n.pieces.size(), 3u);
    EXPECT_EQ(n.pieces[0].source_tokens, 1u);
    EXPECT_EQ(n.pieces[1].source_tokens, 1u);
    EXPECT_EQ(n.pieces[2].source_tokens, 0u);
    EXPECT_EQ(n.pieces[1].target_tokens, 0u);
    EXPECT_EQ(n.pieces[2].target_tokens, 1u);
}

TEST(DecideConnected, RejectsBadPreconditions)
{
    const auto p = path(3);
    const auto bd = decompose(p);
    try {
        decide_connected(p, bd, tokens(p, {0}), tokens(p, {0, 2}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolated);
    }
    const Graph two(4, {{0, 1}, {2, 3}});
    try {
        decide_connected(two, decompose(two), tokens(two, {0}), tokens(two, {0}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolated);
    }
}

TEST(Decide, ReflexiveOnRandomInputs)
{
    std::uint64_t seed = 3;
    for (const auto& g : random_block_graphs(50, 42, 20, 4, 100)) {
        const auto c = tokens(g, random_independent(g, ++seed, 10));
        EXPECT_TRUE(decide(g, c, c).reachable);
    }
}

TEST(Decide, DisconnectedExamples)
{
    const Graph g(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    const auto yes = decide(g, tokens(g, {0}), tokens(g, {2}));
    EXPECT_TRUE(yes.reachable);
    ASSERT_EQ(yes.components.size(), 2u);
    EXPECT_EQ(yes.components[1].source_tokens, 0u);

    const auto no = decide(g, tokens(g, {0}), tokens(g, {3}));
    EXPECT_FALSE(no.reachable);
    EXPECT_EQ(no.reason, Reason::UnequalSize);

    EXPECT_EQ(decide(g, tokens(g, {0}), tokens(g, {0, 2})).reason, Reason::UnequalSize);
}

TEST(Decide, MapsRigidVerticesBackToOriginalIds)
{
    // a path 0-1, then a star centred at 3 with leaves 2,4,5
    const Graph g(6, {{0, 1}, {2, 3}, {3, 4}, {3, 5}});
    const auto v = decide(g, tokens(g, {0, 2, 4}), tokens(g, {1, 2, 5}));
    EXPECT_FALSE(v.reachable);
    EXPECT_EQ(v.rigid_source, (std::vector<Vertex>{3}));
}

TEST(Decide, RejectsNonBlockGraphs)
{
    const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    try {
        decide(c4, tokens(c4, {0}), tokens(c4, {2}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotABlockGraph);
    }
}

TEST(Decide, ReasonNames)
{
    EXPECT_EQ(to_string(Reason::UnequalSize), "unequal-size");
    EXPECT_EQ(to_string(Reason::RigidMismatch), "rigid-mismatch");
    EXPECT_EQ(to_string(Reason::ComponentCountMismatch), "component-count-mismatch");
    EXPECT_EQ(to_string(Reason::Reachable), "reachable");
}

TEST(Decide, AgreesWithExhaustiveSearchAndIsSymmetric)
{
    std::uint64_t seed = 500;
    std::size_t yes = 0, no = 0;
    for (const auto& g : random_block_graphs(150, 43, 6, 3, 10)) {
        const auto a = random_independent(g, ++seed, 3);
        auto b = random_independent(g, ++seed, a.size());
        if (b.size() != a.size())
            continue;
        const bool truth = defs::reachable(g, a).contains(b);
        const auto c1 = tokens(g, a), c2 = tokens(g, b);
        const auto fwd = decide(g, c1, c2);
        const auto back = decide(g, c2, c1, {PotentialMode::Accelerated});
        EXPECT_EQ(fwd.reachable, truth);
        EXPECT_EQ(back.reachable, truth);
        EXPECT_EQ(fwd.reason == Reason::Reachable, fwd.reachable);
        if (truth)
            EXPECT_EQ(fwd.rigid_source, fwd.rigid_target);
        (truth ? yes : no)++;
    }
    EXPECT_GT(yes, 0u);
    EXPECT_GT(no, 0u);
}

TEST(Decide, NoRigidityLeftInsideTheComponentsOfGMinusW)
{
    std::uint64_t seed = 900;
    std::size_t checked = 0;
    for (const auto& g : random_block_graphs(300, 44, 8, 4, 30)) {
        const auto c = tokens(g, random_independent(g, ++seed, 6));
        const auto w = rigid_of(g, c);
        if (w.vertices.empty())
            continue;
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (!w.contains(v))
                keep.push_back(v);
        const auto rest = induced_subgraph(g, keep);
        for (const auto& comp : connected_components(rest.graph)) {
            const auto piece = induced_subgraph(rest.graph, comp);
            std::vector<Vertex> inside;
            for (Vertex v = 0; v < piece.graph.vertex_count(); ++v)
                if (c.contains(rest.to_parent[piece.to_parent[v]]))
                    inside.push_back(v);
            EXPECT_TRUE(rigid_of(piece.graph, tokens(piece.graph, inside)).vertices.empty());
            ++checked;
        }
    }
    EXPECT_GT(checked, 0u);
}

} // namespace
