#pragma once

#include "blockslide/block_decomposition.hpp"
#include "blockslide/capacity.hpp"
#include "blockslide/graph.hpp"
#include "blockslide/structural.hpp"

#include <string_view>
#include <vector>

namespace blockslide {

/// Cut vertices u with two distinct blocks B, B' in B_u where
/// pot(B,u) = pot(B',u) = 0 and ua(B,u) = ua(B',u) = true.
struct RigidSet {
    std::vector<Vertex> vertices;

    bool contains(Vertex v) const;
    friend bool operator==(const RigidSet&, const RigidSet&) = default;
};

/// Throws InternalError if a member violates the consequence that every
/// (u,B) out of a rigid vertex has ua true and potential 0.
RigidSet rigid_vertices(const BlockDecomposition& bd, const UaTable& ua, const PotentialTable& pot);

enum class Reason { UnequalSize, RigidMismatch, ComponentCountMismatch, Reachable };

std::string_view to_string(Reason r);

struct PieceCount {
    std::vector<Vertex> vertices;
    std::size_t source_tokens = 0;
    std::size_t target_tokens = 0;
};

struct Verdict {
    bool reachable = false;
    Reason reason = Reason::UnequalSize;
    /// Rigid sets of source and target (original vertex ids, ascending).
    std::vector<Vertex> rigid_source;
    std::vector<Vertex> rigid_target;
    /// Connected components of the input graph with their token counts.
    std::vector<PieceCount> components;
    /// Components of G - W that were compared, over all decided components.
    std::vector<PieceCount> pieces;
};

struct DecideOptions {
    PotentialMode mode = PotentialMode::Faithful;
};

/// Single connected block graph with |c1| = |c2|.
/// Throws Error{PreconditionViolated}.
Verdict decide_connected(const Graph& g, const BlockDecomposition& bd, const TokenSet& c1, const TokenSet& c2,
                         const DecideOptions& options = {});

/// Any block graph. Throws Error{NotABlockGraph | NotIndependent | PreconditionViolated}.
Verdict decide(const Graph& g, const TokenSet& c1, const TokenSet& c2, const DecideOptions& options = {});

} // namespace blockslide
