#pragma once

#include "blockslide/block_decomposition.hpp"
#include "blockslide/structural.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace blockslide {

/// C[p] (tokens on the side graph) and the interior C[p] minus the base.
struct Restriction {
    std::vector<Vertex> side_tokens;
    std::vector<Vertex> interior_tokens;
};

Restriction restrict_to(const BlockDecomposition& bd, const TokenSet& c, PairId p);

/// cap(C[p]) for every pair, indexed by PairId.
struct CapacityTable {
    std::vector<int> values;
    int operator[](PairId p) const { return values[p]; }
};

/// cap(B,u) = sum cap(v,B) over kappa + ua(B,u) - [a token of B other than u];
/// cap(u,B) = 0 if some B' in beta has cap 0 and ua true, else
/// sum (cap(B',u) - ua(B',u)) over beta + ua(u,B).
CapacityTable capacity_table(const BlockDecomposition& bd, const UaTable& ua, const TokenSet& c);
int capacity(const BlockDecomposition& bd, const UaTable& ua, const TokenSet& c, PairId p);

enum class PotentialMode {
    // one pass at a time in canonical order, restarting after every update
    Faithful,
    // dependency-driven worklist; same fixed point, fewer evaluations
    Accelerated,
};

struct PotentialUpdate {
    PairId pair;
    int old_value;
    int new_value;
};

struct PotentialOptions {
    PotentialMode mode = PotentialMode::Faithful;
    std::function<void(const PotentialUpdate&)> on_update;
};

struct PotentialTable {
    std::vector<int> values;
    /// Passes of the outer loop: one per update plus the final quiet pass.
    std::size_t iteration_count = 0;
    std::size_t update_count = 0;
    int operator[](PairId p) const { return values[p]; }
};

/// Least fixed point of the potential equations from the all-zero table.
/// The graph must be connected: throws Error{NotConnected} otherwise.
PotentialTable compute_potentials(const BlockDecomposition& bd, const UaTable& ua, const TokenSet& c,
                                  const PotentialOptions& options = {});

/// Pairs whose value differs from the right-hand side of its equation, with
/// the (u,B) equation being "0 if u is rigid, else the sum form".
std::vector<PairId> fixed_point_violations(const BlockDecomposition& bd, const UaTable& ua, const TokenSet& c,
                                           const std::vector<int>& values);

/// 2m(n+m-1)+1 for n cut vertices and m blocks.
std::size_t iteration_bound(const BlockDecomposition& bd);

} // namespace blockslide
