#include "blockslide/graph.hpp"

#include "blockslide/error.hpp"

#include <algorithm>
#include <string>

namespace blockslide {

namespace {

void check_vertex(std::size_t n, Vertex v)
{
    if (v >= n)
        throw Error(ErrorKind::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " out of range for " + std::to_string(n) + " vertices");
}

} // namespace

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges)
{
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        check_vertex(vertex_count, u);
        check_vertex(vertex_count, v);
        if (u == v)
            throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw Error(ErrorKind::DuplicateEdge,
                    "duplicate edge " + std::to_string(dup->first) + "-" + std::to_string(dup->second));

    offsets_.assign(vertex_count + 1, 0);
    for (auto [u, v] : edges_) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (std::size_t i = 0; i < vertex_count; ++i)
        offsets_[i + 1] += offsets_[i];
    adjacency_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges_) {
        adjacency_[fill[u]++] = v;
        adjacency_[fill[v]++] = u;
    }
    for (std::size_t i = 0; i < vertex_count; ++i)
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    if (!contains(u) || !contains(v))
        return false;
    auto nu = neighbors(u);
    return std::binary_search(nu.begin(), nu.end(), v);
}

TokenSet::TokenSet(const Graph& g, std::vector<Vertex> vertices)
{
    for (Vertex v : vertices)
        check_vertex(g.vertex_count(), v);
    std::sort(vertices.begin(), vertices.end());
    auto dup = std::adjacent_find(vertices.begin(), vertices.end());
    if (dup != vertices.end())
        throw Error(ErrorKind::NotIndependent, "vertex " + std::to_string(*dup) + " listed twice");
    if (!is_independent(g, vertices))
        throw Error(ErrorKind::NotIndependent, "token set is not independent");
    *this = from_sorted_unchecked(g.vertex_count(), std::move(vertices));
}

TokenSet TokenSet::from_sorted_unchecked(std::size_t vertex_count, std::vector<Vertex> sorted)
{
    TokenSet t;
    t.universe_ = vertex_count;
    t.bits_.assign((vertex_count + 63) / 64, 0);
    for (Vertex v : sorted)
        t.bits_[v >> 6] |= std::uint64_t{1} << (v & 63);
    t.vertices_ = std::move(sorted);
    return t;
}

bool is_independent(const Graph& g, std::span<const Vertex> s)
{
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : s) {
        check_vertex(g.vertex_count(), v);
        in[v] = 1;
    }
    for (Vertex v : s)
        for (Vertex w : g.neighbors(v))
            if (in[w])
                return false;
    return true;
}

bool is_under_attack(const Graph& g, const TokenSet& c, Vertex v)
{
    check_vertex(g.vertex_count(), v);
    for (Vertex w : g.neighbors(v))
        if (c.contains(w))
            return true;
    return false;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        auto& comp = out.emplace_back();
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return connected_components(g).size() <= 1;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    InducedSubgraph sub;
    sub.to_parent.assign(vertices.begin(), vertices.end());
    for (Vertex v : sub.to_parent)
        check_vertex(g.vertex_count(), v);
    std::sort(sub.to_parent.begin(), sub.to_parent.end());
    sub.to_parent.erase(std::unique(sub.to_parent.begin(), sub.to_parent.end()), sub.to_parent.end());

    constexpr Vertex absent = ~Vertex{0};
    std::vector<Vertex> local(g.vertex_count(), absent);
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
        local[sub.to_parent[i]] = static_cast<Vertex>(i);

    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (local[u] != absent && local[v] != absent)
            edges.emplace_back(local[u], local[v]);
    sub.graph = Graph(sub.to_parent.size(), edges);
    return sub;
}

} // namespace blockslide
