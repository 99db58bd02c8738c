#pragma once

#include "blockslide/graph.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace blockslide {

using BlockId = std::uint32_t;
using PairId = std::uint32_t;

/// Orientation of a block-cut tree edge. `ToBlock` is the pair (u,B) whose
/// side is everything reachable from u without entering B; `ToVertex` is
/// (B,u) whose side is B together with what hangs off B away from u.
enum class Direction : std::uint8_t { ToVertex, ToBlock };

struct Pair {
    Direction direction;
    Vertex base;
    BlockId block;

    Pair reversed() const
    {
        return {direction == Direction::ToBlock ? Direction::ToVertex : Direction::ToBlock, base, block};
    }

    friend bool operator==(const Pair&, const Pair&) = default;
};

inline Pair to_block(Vertex u, BlockId b) { return {Direction::ToBlock, u, b}; }
inline Pair to_vertex(BlockId b, Vertex u) { return {Direction::ToVertex, u, b}; }

struct SideView {
    Pair pair;
    std::vector<Vertex> vertices;
};

/// Blocks, cut vertices and the rooted block-cut tree of a graph.
///
/// Block ids are canonical: blocks are sorted lexicographically by their
/// sorted member lists. An isolated vertex is a singleton block.
///
/// Pair ids follow the canonical pair order (base, then block, (B,u) before
/// (u,B)): incidence k between cut vertex u and block B owns ids 2k = (B,u)
/// and 2k+1 = (u,B), so reversal is `id ^ 1`.
///
/// Tree nodes: blocks are nodes 0..block_count()-1, cut vertex i (in sorted
/// order) is node block_count()+i. Each component's tree is rooted at its
/// smallest block.
class BlockDecomposition {
public:
    using Node = std::uint32_t;
    using Incidence = std::uint32_t;
    static constexpr Node no_node = ~Node{0};
    static constexpr Incidence no_incidence = ~Incidence{0};

    std::size_t vertex_count() const noexcept { return blocks_of_offsets_.size() - 1; }
    std::size_t block_count() const noexcept { return block_offsets_.size() - 1; }
    std::size_t component_count() const noexcept { return component_blocks_.size(); }
    std::size_t component_of(Vertex v) const { return vertex_component_[v]; }

    std::span<const Vertex> block(BlockId b) const { return span_of(block_members_, block_offsets_, b); }
    std::span<const BlockId> blocks_of(Vertex v) const { return span_of(blocks_of_, blocks_of_offsets_, v); }
    std::span<const Vertex> cut_vertices() const noexcept { return cut_vertices_; }
    bool is_cut(Vertex v) const { return cut_index_[v] != no_node; }
    /// Position of cut vertex u within cut_vertices().
    std::size_t cut_ordinal(Vertex u) const { return cut_index_[u]; }
    /// Incidences (u,B) of cut vertex u, ascending by block.
    std::span<const Incidence> cut_incidences(Vertex u) const { return span_of(cut_incidences_, cut_incidence_offsets_, cut_index_[u]); }
    /// Incidences (v,B) for v in K_B, ascending by v.
    std::span<const Incidence> block_incidences(BlockId b) const { return span_of(block_incidences_, block_incidence_offsets_, b); }

    /// K_B: cut vertices of the whole graph lying in block b, ascending.
    std::span<const Vertex> block_cut_vertices(BlockId b) const { return span_of(block_cuts_, block_cut_offsets_, b); }

    /// kappa(B,u) = K_B minus u. Throws Error{InvalidPair}.
    std::vector<Vertex> kappa(BlockId b, Vertex u) const;
    /// beta(u,B) = blocks containing u other than B. Throws Error{InvalidPair}.
    std::vector<BlockId> beta(Vertex u, BlockId b) const;

    // -- pairs -------------------------------------------------------------

    std::size_t pair_count() const noexcept { return 2 * incidence_vertex_.size(); }
    std::size_t incidence_count() const noexcept { return incidence_vertex_.size(); }
    std::vector<Pair> pairs() const;
    Pair pair(PairId id) const;
    std::optional<PairId> find(const Pair& p) const;
    /// Throws Error{InvalidPair} when p is not an edge of the block-cut tree.
    PairId id_of(const Pair& p) const;
    static PairId reverse(PairId id) noexcept { return id ^ 1U; }
    static Direction direction(PairId id) noexcept { return (id & 1U) ? Direction::ToBlock : Direction::ToVertex; }
    Vertex base(PairId id) const { return incidence_vertex_[id >> 1]; }
    BlockId block_of_pair(PairId id) const { return incidence_block_[id >> 1]; }

    /// True iff x is a vertex of the side graph G[p].
    bool in_side(PairId p, Vertex x) const;
    SideView side_vertices(const Pair& p) const;
    std::vector<Vertex> side_vertices(PairId p) const;
    /// Number of blocks of G[p].
    std::size_t side_block_count(PairId p) const;

    // -- rooted block-cut tree --------------------------------------------

    std::size_t node_count() const noexcept { return parent_incidence_.size(); }
    bool is_block_node(Node x) const noexcept { return x < block_count(); }
    Node block_node(BlockId b) const noexcept { return b; }
    Node cut_node(Vertex u) const { return static_cast<Node>(block_count()) + cut_index_[u]; }
    /// Tree node of a vertex: its own node if cut, else its unique block.
    Node node_of(Vertex x) const;
    /// Incidences adjacent to a tree node.
    std::span<const Incidence> node_incidences(Node x) const;
    /// Incidence joining x to its parent, or no_incidence for roots.
    Incidence parent_incidence(Node x) const { return parent_incidence_[x]; }
    /// Nodes in DFS preorder, components concatenated.
    std::span<const Node> preorder() const noexcept { return preorder_; }
    bool in_subtree(Node root, Node x) const { return tin_[root] <= tin_[x] && tin_[x] < tout_[root]; }

    /// Pair on incidence k whose side belongs to tree node x ("x seen from
    /// across k"), and the pair pointing the other way.
    static PairId pair_from(bool x_is_block, Incidence k) noexcept { return 2 * k + (x_is_block ? 0U : 1U); }
    static PairId pair_toward(bool x_is_block, Incidence k) noexcept { return 2 * k + (x_is_block ? 1U : 0U); }

private:
    friend BlockDecomposition decompose(const Graph& g);

    template <class T>
    static std::span<const T> span_of(const std::vector<T>& data, const std::vector<std::size_t>& off, std::size_t i)
    {
        return {data.data() + off[i], data.data() + off[i + 1]};
    }
    std::optional<Incidence> find_incidence(Vertex u, BlockId b) const;
    void build_tree();

    std::vector<std::size_t> block_offsets_;
    std::vector<Vertex> block_members_;
    std::vector<std::size_t> blocks_of_offsets_;
    std::vector<BlockId> blocks_of_;
    std::vector<Vertex> cut_vertices_;
    std::vector<Node> cut_index_;
    std::vector<std::size_t> block_cut_offsets_;
    std::vector<Vertex> block_cuts_;
    std::vector<std::size_t> vertex_component_;
    std::vector<std::size_t> component_blocks_;

    // incidence k: (incidence_vertex_[k], incidence_block_[k]) sorted by (u, B)
    std::vector<Vertex> incidence_vertex_;
    std::vector<BlockId> incidence_block_;
    std::vector<std::size_t> cut_incidence_offsets_;
    std::vector<std::size_t> block_incidence_offsets_;
    std::vector<Incidence> block_incidences_;
    std::vector<Incidence> cut_incidences_;

    std::vector<Incidence> parent_incidence_;
    std::vector<Node> preorder_;
    std::vector<std::uint32_t> tin_;
    std::vector<std::uint32_t> tout_;
    std::vector<std::size_t> subtree_blocks_;
};

/// Biconnected components via an iterative articulation-point DFS. Linear in
/// |V| + |E| plus the canonical sort of the blocks.
BlockDecomposition decompose(const Graph& g);

/// Every block induces a clique.
bool is_block_graph(const Graph& g);
bool is_block_graph(const Graph& g, const BlockDecomposition& bd);

} // namespace blockslide
