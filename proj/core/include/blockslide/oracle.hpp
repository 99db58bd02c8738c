#pragma once

#include "blockslide/block_decomposition.hpp"
#include "blockslide/graph.hpp"
#include "blockslide/structural.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace blockslide {

struct OracleLimits {
    std::size_t max_states = 2'000'000;
    std::uint64_t max_millis = 30'000;
};

/// Token sets reachable from a start set, in BFS order. State 0 is the start.
struct StateSpace {
    std::size_t vertex_count = 0;
    std::size_t token_count = 0;
    std::vector<Vertex> flat;
    /// BFS tree parent of each state; the start is its own parent.
    std::vector<std::uint32_t> parent;
    bool truncated = false;
    std::size_t levels = 0;
    std::size_t max_frontier = 0;

    std::size_t size() const noexcept { return parent.size(); }
    std::span<const Vertex> state(std::size_t i) const
    {
        return {flat.data() + i * token_count, token_count};
    }
    TokenSet token_set(std::size_t i) const;
};

/// Every independent set obtained by sliding one token along one edge,
/// ordered by (moved token, destination).
std::vector<TokenSet> successors(const Graph& g, const TokenSet& c);

/// Works on any simple graph. Throws Error{InvalidParams} for zero limits.
StateSpace enumerate_reachable(const Graph& g, const TokenSet& c, const OracleLimits& limits = {});

enum class OracleAnswer { Yes, No, Unknown };

OracleAnswer oracle_reachable(const Graph& g, const TokenSet& c1, const TokenSet& c2, const OracleLimits& limits = {});

/// max over reachable C' of cap(C'[p]) + |interior C'[p]| - |interior C[p]|,
/// or nullopt when the state space was truncated. Throws Error{InvalidPair}.
std::optional<int> oracle_potential(const Graph& g, const BlockDecomposition& bd, const UaTable& ua,
                                    const TokenSet& c, PairId p, const OracleLimits& limits = {});

/// The same maximum for every pair from one enumeration.
std::optional<std::vector<int>> oracle_potentials(const Graph& g, const BlockDecomposition& bd, const UaTable& ua,
                                                  const TokenSet& c, const OracleLimits& limits = {});

/// |interior C[p]| for every pair.
std::vector<int> interior_counts(const BlockDecomposition& bd, const TokenSet& c);

/// Vertices on which no visited state has a token. Throws Error{TruncatedSpace}.
std::vector<Vertex> never_token_vertices(const StateSpace& space);

} // namespace blockslide
