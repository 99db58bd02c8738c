#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace blockslide {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex ids 0..n-1.
///
/// Adjacency lists are sorted ascending and stored in one CSR array. The
/// graph is immutable once constructed.
class Graph {
public:
    Graph() = default;

    /// Throws Error{SelfLoop | DuplicateEdge | VertexOutOfRange}. Edges may be
    /// given in either orientation; they are stored as (min, max) and sorted.
    Graph(std::size_t vertex_count, std::span<const Edge> edges);
    Graph(std::size_t vertex_count, std::initializer_list<Edge> edges)
        : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const Vertex> neighbors(Vertex v) const
    {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(Vertex u, Vertex v) const;

    /// Canonical edge list: (u < v), lexicographically sorted.
    std::span<const Edge> edges() const noexcept { return edges_; }

    bool contains(Vertex v) const noexcept { return v < vertex_count(); }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
};

/// Independent set of a specific graph: sorted vertex list plus a membership
/// bitset sized to the host graph.
class TokenSet {
public:
    TokenSet() = default;

    /// Validates range, duplicates and independence against `g`.
    /// Throws Error{VertexOutOfRange | NotIndependent}.
    TokenSet(const Graph& g, std::vector<Vertex> vertices);

    /// Caller guarantees `sorted` is strictly increasing, in range and
    /// independent. Used on hot paths (oracle states, restrictions).
    static TokenSet from_sorted_unchecked(std::size_t vertex_count, std::vector<Vertex> sorted);

    std::size_t size() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }
    std::size_t universe() const noexcept { return universe_; }

    bool contains(Vertex v) const noexcept
    {
        return v < universe_ && ((bits_[v >> 6] >> (v & 63)) & 1U) != 0;
    }

    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    auto begin() const noexcept { return vertices_.begin(); }
    auto end() const noexcept { return vertices_.end(); }

    friend bool operator==(const TokenSet& a, const TokenSet& b) { return a.vertices_ == b.vertices_; }

private:
    std::size_t universe_ = 0;
    std::vector<Vertex> vertices_;
    std::vector<std::uint64_t> bits_;
};

/// True iff no edge of `g` has both endpoints in `s`. `s` may be unsorted
/// and may contain duplicates. Throws Error{VertexOutOfRange}.
bool is_independent(const Graph& g, std::span<const Vertex> s);

/// True iff some neighbour of `v` holds a token.
/// Throws Error{VertexOutOfRange}.
bool is_under_attack(const Graph& g, const TokenSet& c, Vertex v);

/// Connected components ordered by their minimum vertex; each sorted.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Subgraph induced by `vertices`, relabelled densely in ascending order of
/// the original ids. `to_parent[i]` is the original id of local vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

} // namespace blockslide
