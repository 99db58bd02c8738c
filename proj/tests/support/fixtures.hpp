#pragma once

#include "blockslide/block_decomposition.hpp"
#include "blockslide/error.hpp"
#include "blockslide/generator.hpp"
#include "blockslide/graph.hpp"

#include "definitions.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace fixtures {

using namespace blockslide;

inline Graph path(std::size_t n)
{
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v)
        e.emplace_back(v, v + 1);
    return Graph(n, e);
}

// K1,k with centre 0.
inline Graph star(std::size_t leaves)
{
    std::vector<Edge> e;
    for (Vertex v = 1; v <= leaves; ++v)
        e.emplace_back(0, v);
    return Graph(leaves + 1, e);
}

inline Graph complete(std::size_t n)
{
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return Graph(n, e);
}

// K4 on 0..3 plus the pendant edge 0-4.
inline Graph k4_pendant()
{
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
}

inline TokenSet tokens(const Graph& g, std::vector<Vertex> vs)
{
    return TokenSet(g, std::move(vs));
}

/// The two-link chain: y2 - y1 - v1, triangles v1 x1 w1 and v2 x2 w2,
/// pendant u1 at v1, pendant u2 at v2, x1 - v2, and an optional path Z of
/// `z_len` vertices hanging off x2.
struct Chain {
    Graph graph;
    std::map<std::string, Vertex> id;
    std::vector<Vertex> z;
    std::vector<Vertex> a2; // A_2 = {y1,y2} + {x_i,u_i,v_i,w_i : i = 1,2}
};

inline Chain figure2_chain(std::size_t z_len)
{
    Chain c;
    const char* names[] = {"y2", "y1", "v1", "x1", "v2", "x2", "u1", "w1", "u2", "w2"};
    Vertex next = 0;
    for (const char* n : names)
        c.id[n] = next++;
    auto at = [&](const char* n) { return c.id.at(n); };
    std::vector<Edge> e{{at("y2"), at("y1")}, {at("y1"), at("v1")}, {at("v1"), at("x1")}, {at("x1"), at("v2")},
                        {at("v2"), at("x2")}, {at("v1"), at("u1")}, {at("v1"), at("w1")}, {at("x1"), at("w1")},
                        {at("v2"), at("u2")}, {at("v2"), at("w2")}, {at("x2"), at("w2")}};
    Vertex prev = at("x2");
    for (std::size_t i = 0; i < z_len; ++i) {
        c.z.push_back(next);
        e.emplace_back(prev, next);
        prev = next++;
    }
    c.graph = Graph(next, e);
    for (const char* n : names)
        c.a2.push_back(at(n));
    std::sort(c.a2.begin(), c.a2.end());
    return c;
}

inline BlockId block_with(const BlockDecomposition& bd, std::vector<Vertex> members)
{
    std::sort(members.begin(), members.end());
    for (BlockId b = 0; b < bd.block_count(); ++b) {
        auto blk = bd.block(b);
        if (std::equal(blk.begin(), blk.end(), members.begin(), members.end()))
            return b;
    }
    throw Error(ErrorKind::InvalidPair, "no such block");
}

inline PairId pair_id(const BlockDecomposition& bd, const defs::PairKey& k)
{
    const BlockId b = block_with(bd, k.block);
    return bd.id_of(k.to_block ? to_block(k.u, b) : to_vertex(b, k.u));
}

inline defs::PairKey pair_key(const BlockDecomposition& bd, PairId p)
{
    auto blk = bd.block(bd.block_of_pair(p));
    return {BlockDecomposition::direction(p) == Direction::ToBlock, bd.base(p), {blk.begin(), blk.end()}};
}

/// Connected block graphs from the library generator, capped in size so the
/// definitional oracles stay fast.
inline std::vector<Graph> random_block_graphs(std::size_t count, std::uint64_t seed, std::size_t max_blocks,
                                              std::size_t max_clique, std::size_t max_vertices)
{
    std::vector<Graph> out;
    SplitMix64 rng(seed);
    while (out.size() < count) {
        auto g = gen_block_graph({rng.next(), rng.between(1, max_blocks), max_clique, 0});
        if (g.vertex_count() <= max_vertices)
            out.push_back(std::move(g));
    }
    return out;
}

inline std::vector<Vertex> random_independent(const Graph& g, std::uint64_t seed, std::size_t max_size)
{
    SplitMix64 rng(seed);
    const auto size = rng.between(0, max_size);
    for (std::size_t s = size;; --s) {
        if (auto c = gen_independent_set(rng.next(), g, s))
            return {c->begin(), c->end()};
    }
}

} // namespace fixtures
