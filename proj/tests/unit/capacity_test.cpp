#include "blockslide/capacity.hpp"
#include "blockslide/error.hpp"
#include "blockslide/oracle.hpp"

#include "definitions.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

namespace {

using namespace blockslide;
using namespace fixtures;

struct Bundle {
    Graph g;
    BlockDecomposition bd;
    UaTable ua;

    explicit Bundle(Graph graph) : g(std::move(graph)), bd(decompose(g)), ua(compute_ua(bd, compute_depths(bd))) {}

    PairId tv(std::vector<Vertex> b, Vertex u) const { return bd.id_of(to_vertex(block_with(bd, std::move(b)), u)); }
    PairId tb(Vertex u, std::vector<Vertex> b) const { return bd.id_of(to_block(u, block_with(bd, std::move(b)))); }
};

TEST(Restrict, Path3)
{
    const Bundle s(path(3));
    const PairId p = s.tv({0, 1}, 1);
    auto r = restrict_to(s.bd, tokens(s.g, {0, 2}), p);
    EXPECT_EQ(r.side_tokens, (std::vector<Vertex>{0}));
    EXPECT_EQ(r.interior_tokens, (std::vector<Vertex>{0}));
    r = restrict_to(s.bd, tokens(s.g, {1}), p);
    EXPECT_EQ(r.side_tokens, (std::vector<Vertex>{1}));
    EXPECT_TRUE(r.interior_tokens.empty());
    r = restrict_to(s.bd, tokens(s.g, {}), p);
    EXPECT_TRUE(r.side_tokens.empty());
    EXPECT_THROW(restrict_to(s.bd, tokens(s.g, {}), PairId{9}), Error);
}

TEST(Capacity, DepthZeroPairIsOneMinusInterior)
{
    const Bundle s(k4_pendant());
    const PairId p = s.tv({0, 1, 2, 3}, 0);
    EXPECT_EQ(capacity(s.bd, s.ua, tokens(s.g, {}), p), 1);
    EXPECT_EQ(capacity(s.bd, s.ua, tokens(s.g, {2}), p), 0);
    EXPECT_EQ(capacity(s.bd, s.ua, tokens(s.g, {0}), p), 1);
}

TEST(Capacity, Path3)
{
    const Bundle s(path(3));
    const auto c = tokens(s.g, {0});
    EXPECT_EQ(capacity(s.bd, s.ua, c, s.tv({0, 1}, 1)), 0);
    EXPECT_EQ(capacity(s.bd, s.ua, c, s.tv({1, 2}, 1)), 1);
    EXPECT_EQ(capacity(s.bd, s.ua, c, s.tb(1, {0, 1})), 1);
}

TEST(Capacity, StarWithTwoTokens)
{
    const Bundle s(star(3));
    const auto c = tokens(s.g, {1, 2});
    EXPECT_EQ(capacity(s.bd, s.ua, c, s.tv({0, 1}, 0)), 0);
    EXPECT_EQ(capacity(s.bd, s.ua, c, s.tv({0, 3}, 0)), 1);
    // two zero-capacity ua siblings
    EXPECT_EQ(capacity(s.bd, s.ua, c, s.tb(0, {0, 3})), 0);
}

TEST(Capacity, AgreesWithDefinitionAndSignBounds)
{
    std::uint64_t seed = 0;
    for (const auto& graph : random_block_graphs(80, 31, 6, 4, 12)) {
        const Bundle s(graph);
        for (int round = 0; round < 4; ++round) {
            const auto vs = random_independent(s.g, ++seed, 4);
            const auto c = tokens(s.g, vs);
            const auto table = capacity_table(s.bd, s.ua, c);
            for (PairId p = 0; p < s.bd.pair_count(); ++p) {
                EXPECT_EQ(table[p], defs::cap(s.g, vs, pair_key(s.bd, p)));
                EXPECT_GE(table[p], 0);
                bool attacked = false;
                for (Vertex w : s.g.neighbors(s.bd.base(p)))
                    attacked = attacked || (c.contains(w) && s.bd.in_side(p, w));
                if (s.ua[p] && !attacked)
                    EXPECT_GT(table[p], 0);
            }
        }
    }
}

TEST(Capacity, InteriorSumIdentity)
{
    // sum over u' in kappa(B,u) of |interior C[u',B]| = |interior C[B,u]| - |B cap interior C[B,u]|
    std::uint64_t seed = 100;
    for (const auto& graph : random_block_graphs(60, 32, 8, 4, 30)) {
        const Bundle s(graph);
        const auto c = tokens(s.g, random_independent(s.g, ++seed, 6));
        const auto inner = interior_counts(s.bd, c);
        for (PairId p = 0; p < s.bd.pair_count(); p += 2) {
            const BlockId b = s.bd.block_of_pair(p);
            const Vertex u = s.bd.base(p);
            int sum = 0;
            for (Vertex v : s.bd.kappa(b, u))
                sum += inner[s.bd.id_of(to_block(v, b))];
            int in_block = 0;
            for (Vertex x : s.bd.block(b))
                in_block += (x != u && c.contains(x)) ? 1 : 0;
            EXPECT_EQ(sum, inner[p] - in_block);
        }
    }
}

TEST(Potentials, Path3)
{
    const Bundle s(path(3));
    const auto t = compute_potentials(s.bd, s.ua, tokens(s.g, {0}));
    EXPECT_EQ(t.values, (std::vector<int>{0, 1, 1, 0}));
    EXPECT_EQ(t[s.tv({1, 2}, 1)], 1);
    EXPECT_EQ(t[s.tb(1, {0, 1})], 1);
}

TEST(Potentials, Star)
{
    const Bundle s(star(3));
    const auto t = compute_potentials(s.bd, s.ua, tokens(s.g, {1, 2}));
    EXPECT_EQ(t[s.tv({0, 1}, 0)], 0);
    EXPECT_EQ(t[s.tv({0, 2}, 0)], 0);
    EXPECT_EQ(t[s.tv({0, 3}, 0)], 1);
    for (Vertex leaf = 1; leaf <= 3; ++leaf)
        EXPECT_EQ(t[s.tb(0, {0, leaf})], 0);
}

TEST(Potentials, CliqueHasNoPairsAndOnePass)
{
    const Bundle s(complete(5));
    const auto t = compute_potentials(s.bd, s.ua, tokens(s.g, {3}));
    EXPECT_TRUE(t.values.empty());
    EXPECT_EQ(t.iteration_count, 1u);
    EXPECT_EQ(t.update_count, 0u);
}

TEST(Potentials, RejectsDisconnectedGraphs)
{
    const Bundle s(Graph(4, {{0, 1}, {2, 3}}));
    try {
        compute_potentials(s.bd, s.ua, tokens(s.g, {0}));
        FAIL() << "expected NotConnected";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotConnected);
    }
}

TEST(Potentials, EachPassRaisesExactlyOnePair)
{
    for (const auto& graph : random_block_graphs(40, 33, 8, 4, 40)) {
        const Bundle s(graph);
        const auto c = tokens(s.g, random_independent(s.g, graph.vertex_count(), 6));
        std::vector<int> snapshot(s.bd.pair_count(), 0);
        std::size_t updates = 0;
        PotentialOptions opts;
        opts.on_update = [&](const PotentialUpdate& u) {
            EXPECT_EQ(snapshot[u.pair], u.old_value);
            EXPECT_GT(u.new_value, u.old_value);
            snapshot[u.pair] = u.new_value;
            ++updates;
        };
        const auto t = compute_potentials(s.bd, s.ua, c, opts);
        EXPECT_EQ(t.values, snapshot);
        EXPECT_EQ(t.update_count, updates);
        EXPECT_EQ(t.iteration_count, updates + 1);
        EXPECT_LE(t.iteration_count, iteration_bound(s.bd));
    }
}

TEST(Potentials, MatchDefinitionByExhaustiveSearch)
{
    std::uint64_t seed = 7;
    for (const auto& graph : random_block_graphs(60, 34, 5, 3, 10)) {
        const Bundle s(graph);
        const auto vs = random_independent(s.g, ++seed, 3);
        const auto t = compute_potentials(s.bd, s.ua, tokens(s.g, vs));
        const auto expected = defs::potentials(s.g, vs);
        for (PairId p = 0; p < s.bd.pair_count(); ++p)
            EXPECT_EQ(t[p], expected.at(pair_key(s.bd, p)));
    }
}

TEST(Potentials, FixedPointAndBlockBound)
{
    std::uint64_t seed = 50;
    for (const auto& graph : random_block_graphs(80, 35, 10, 4, 60)) {
        const Bundle s(graph);
        const auto c = tokens(s.g, random_independent(s.g, ++seed, 10));
        const auto t = compute_potentials(s.bd, s.ua, c);
        EXPECT_TRUE(fixed_point_violations(s.bd, s.ua, c, t.values).empty());
        for (PairId p = 0; p < s.bd.pair_count(); ++p) {
            EXPECT_GE(t[p], 0);
            EXPECT_LE(static_cast<std::size_t>(t[p]), s.bd.side_block_count(p));
        }
    }
}

TEST(Potentials, FixedPointCheckerSpotsATamperedTable)
{
    const Bundle s(path(3));
    const auto c = tokens(s.g, {0});
    auto values = compute_potentials(s.bd, s.ua, c).values;
    ++values[2];
    EXPECT_FALSE(fixed_point_violations(s.bd, s.ua, c, values).empty());
}

TEST(Potentials, WorklistModeGivesTheSameTable)
{
    std::uint64_t seed = 90;
    for (const auto& graph : random_block_graphs(100, 36, 30, 5, 200)) {
        const Bundle s(graph);
        const auto c = tokens(s.g, random_independent(s.g, ++seed, 25));
        const auto slow = compute_potentials(s.bd, s.ua, c);
        const auto fast = compute_potentials(s.bd, s.ua, c, {PotentialMode::Accelerated, {}});
        EXPECT_EQ(slow.values, fast.values);
        EXPECT_LE(fast.iteration_count, iteration_bound(s.bd));
    }
}

} // namespace
