#include "blockslide/decision.hpp"

#include "blockslide/error.hpp"

#include <algorithm>
#include <string>

namespace blockslide {

namespace {

std::vector<PieceCount> count_pieces(const Graph& g, const std::vector<char>& removed, const TokenSet& c1,
                                     const TokenSet& c2)
{
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(removed);
    std::vector<PieceCount> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        PieceCount piece;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            piece.vertices.push_back(v);
            piece.source_tokens += c1.contains(v) ? 1 : 0;
            piece.target_tokens += c2.contains(v) ? 1 : 0;
            for (Vertex w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(piece.vertices.begin(), piece.vertices.end());
        out.push_back(std::move(piece));
    }
    return out;
}

void check_tokens(const Graph& g, const TokenSet& c, const char* which)
{
    if (c.universe() != g.vertex_count())
        throw Error(ErrorKind::PreconditionViolated, std::string(which) + " token set belongs to a different graph");
    if (!is_independent(g, c.vertices()))
        throw Error(ErrorKind::NotIndependent, std::string(which) + " token set is not independent");
}

TokenSet localize(const TokenSet& c, const InducedSubgraph& sub)
{
    std::vector<Vertex> local;
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
        if (c.contains(sub.to_parent[i]))
            local.push_back(static_cast<Vertex>(i));
    return TokenSet::from_sorted_unchecked(sub.to_parent.size(), std::move(local));
}

void append_mapped(std::vector<Vertex>& out, const std::vector<Vertex>& local, const InducedSubgraph& sub)
{
    for (Vertex v : local)
        out.push_back(sub.to_parent[v]);
}

} // namespace

bool RigidSet::contains(Vertex v) const
{
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

RigidSet rigid_vertices(const BlockDecomposition& bd, const UaTable& ua, const PotentialTable& pot)
{
    RigidSet out;
    for (Vertex u : bd.cut_vertices()) {
        int frozen = 0;
        for (auto k : bd.cut_incidences(u)) {
            const PairId p = 2 * k;
            frozen += (pot[p] == 0 && ua[p]) ? 1 : 0;
        }
        if (frozen < 2)
            continue;
        for (auto k : bd.cut_incidences(u)) {
            const PairId p = 2 * k + 1;
            BLOCKSLIDE_ENSURE(ua[p] && pot[p] == 0, "rigid vertex with ua(u,B) false or pot(u,B) > 0");
        }
        out.vertices.push_back(u);
    }
    return out;
}

std::string_view to_string(Reason r)
{
    switch (r) {
    case Reason::UnequalSize: return "unequal-size";
    case Reason::RigidMismatch: return "rigid-mismatch";
    case Reason::ComponentCountMismatch: return "component-count-mismatch";
    case Reason::Reachable: return "reachable";
    }
    return "unknown";
}

Verdict decide_connected(const Graph& g, const BlockDecomposition& bd, const TokenSet& c1, const TokenSet& c2,
                         const DecideOptions& options)
{
    if (bd.vertex_count() != g.vertex_count() || bd.component_count() > 1)
        throw Error(ErrorKind::PreconditionViolated, "decide_connected needs a connected graph and its decomposition");
    check_tokens(g, c1, "source");
    check_tokens(g, c2, "target");
    if (c1.size() != c2.size())
        throw Error(ErrorKind::PreconditionViolated, "token sets differ in size");

    Verdict v;
    v.components.push_back({{}, c1.size(), c2.size()});
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        v.components.back().vertices.push_back(x);

    const auto ua = compute_ua(bd, compute_depths(bd));
    const PotentialOptions popts{options.mode, {}};
    const auto w1 = rigid_vertices(bd, ua, compute_potentials(bd, ua, c1, popts));
    const auto w2 = rigid_vertices(bd, ua, compute_potentials(bd, ua, c2, popts));
    v.rigid_source = w1.vertices;
    v.rigid_target = w2.vertices;
    if (w1 != w2) {
        v.reason = Reason::RigidMismatch;
        return v;
    }

    std::vector<char> removed(g.vertex_count(), 0);
    for (Vertex u : w1.vertices)
        removed[u] = 1;
    v.pieces = count_pieces(g, removed, c1, c2);
    const bool balanced = std::all_of(v.pieces.begin(), v.pieces.end(),
                                      [](const PieceCount& p) { return p.source_tokens == p.target_tokens; });
    v.reachable = balanced;
    v.reason = balanced ? Reason::Reachable : Reason::ComponentCountMismatch;
    return v;
}

Verdict decide(const Graph& g, const TokenSet& c1, const TokenSet& c2, const DecideOptions& options)
{
    const auto bd = decompose(g);
    if (!is_block_graph(g, bd))
        throw Error(ErrorKind::NotABlockGraph, "some block of the graph is not a clique");
    check_tokens(g, c1, "source");
    check_tokens(g, c2, "target");

    Verdict v;
    v.components = count_pieces(g, std::vector<char>(g.vertex_count(), 0), c1, c2);
    const bool sizes_match = c1.size() == c2.size() &&
                             std::all_of(v.components.begin(), v.components.end(), [](const PieceCount& p) {
                                 return p.source_tokens == p.target_tokens;
                             });
    if (!sizes_match) {
        v.reason = Reason::UnequalSize;
        return v;
    }

    v.reachable = true;
    v.reason = Reason::Reachable;
    for (const auto& comp : v.components) {
        if (comp.source_tokens == 0)
            continue;
        const auto sub = induced_subgraph(g, comp.vertices);
        const auto sub_bd = decompose(sub.graph);
        const auto part = decide_connected(sub.graph, sub_bd, localize(c1, sub), localize(c2, sub), options);
        append_mapped(v.rigid_source, part.rigid_source, sub);
        append_mapped(v.rigid_target, part.rigid_target, sub);
        for (auto piece : part.pieces) {
            for (auto& x : piece.vertices)
                x = sub.to_parent[x];
            v.pieces.push_back(std::move(piece));
        }
        if (!part.reachable && v.reachable) {
            v.reachable = false;
            v.reason = part.reason;
        }
    }
    std::sort(v.rigid_source.begin(), v.rigid_source.end());
    std::sort(v.rigid_target.begin(), v.rigid_target.end());
    return v;
}

} // namespace blockslide
