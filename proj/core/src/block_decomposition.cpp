#include "blockslide/block_decomposition.hpp"

#include "blockslide/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace blockslide {

namespace {

constexpr std::uint32_t unvisited = 0;

struct Frame {
    Vertex v;
    std::size_t next;
};

std::vector<std::vector<Vertex>> biconnected_blocks(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> disc(n, unvisited), low(n, 0);
    std::vector<Vertex> parent(n, 0);
    std::vector<std::vector<Vertex>> blocks;
    std::vector<Vertex> vstack;
    std::vector<Frame> frames;
    std::uint32_t timer = 0;

    for (Vertex s = 0; s < n; ++s) {
        if (disc[s] != unvisited)
            continue;
        disc[s] = low[s] = ++timer;
        if (g.degree(s) == 0) {
            blocks.push_back({s});
            continue;
        }
        parent[s] = s;
        vstack.push_back(s);
        frames.push_back({s, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            const Vertex v = f.v;
            auto nbrs = g.neighbors(v);
            if (f.next < nbrs.size()) {
                const Vertex w = nbrs[f.next++];
                if (disc[w] == unvisited) {
                    parent[w] = v;
                    disc[w] = low[w] = ++timer;
                    vstack.push_back(w);
                    frames.push_back({w, 0});
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            frames.pop_back();
            if (frames.empty())
                break;
            const Vertex p = frames.back().v;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) {
                auto& block = blocks.emplace_back();
                Vertex x;
                do {
                    x = vstack.back();
                    vstack.pop_back();
                    block.push_back(x);
                } while (x != v);
                block.push_back(p);
            }
        }
        vstack.clear();
    }
    for (auto& b : blocks)
        std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

} // namespace

BlockDecomposition decompose(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    BlockDecomposition bd;
    auto blocks = biconnected_blocks(g);

    bd.block_offsets_.assign(1, 0);
    for (const auto& b : blocks) {
        bd.block_members_.insert(bd.block_members_.end(), b.begin(), b.end());
        bd.block_offsets_.push_back(bd.block_members_.size());
    }

    std::vector<std::size_t> count(n + 1, 0);
    for (Vertex v : bd.block_members_)
        ++count[v + 1];
    std::partial_sum(count.begin(), count.end(), count.begin());
    bd.blocks_of_offsets_ = count;
    bd.blocks_of_.resize(bd.block_members_.size());
    {
        std::vector<std::size_t> fill(count.begin(), count.end() - 1);
        // blocks are visited in ascending id, so each list comes out sorted
        for (BlockId b = 0; b < blocks.size(); ++b)
            for (Vertex v : blocks[b])
                bd.blocks_of_[fill[v]++] = b;
    }

    bd.cut_index_.assign(n, BlockDecomposition::no_node);
    for (Vertex v = 0; v < n; ++v)
        if (bd.blocks_of(v).size() >= 2) {
            bd.cut_index_[v] = static_cast<BlockDecomposition::Node>(bd.cut_vertices_.size());
            bd.cut_vertices_.push_back(v);
        }

    bd.block_cut_offsets_.assign(1, 0);
    for (BlockId b = 0; b < blocks.size(); ++b) {
        for (Vertex v : blocks[b])
            if (bd.is_cut(v))
                bd.block_cuts_.push_back(v);
        bd.block_cut_offsets_.push_back(bd.block_cuts_.size());
    }

    // incidences sorted by (cut vertex, block)
    bd.cut_incidence_offsets_.assign(1, 0);
    for (Vertex u : bd.cut_vertices_) {
        for (BlockId b : bd.blocks_of(u)) {
            bd.incidence_vertex_.push_back(u);
            bd.incidence_block_.push_back(b);
        }
        bd.cut_incidence_offsets_.push_back(bd.incidence_vertex_.size());
    }
    bd.cut_incidences_.resize(bd.incidence_vertex_.size());
    std::iota(bd.cut_incidences_.begin(), bd.cut_incidences_.end(), BlockDecomposition::Incidence{0});

    bd.block_incidence_offsets_.assign(1, 0);
    for (BlockId b = 0; b < blocks.size(); ++b) {
        for (Vertex u : bd.block_cut_vertices(b))
            bd.block_incidences_.push_back(*bd.find_incidence(u, b));
        bd.block_incidence_offsets_.push_back(bd.block_incidences_.size());
    }

    auto comps = connected_components(g);
    bd.vertex_component_.assign(n, 0);
    bd.component_blocks_.assign(comps.size(), 0);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (Vertex v : comps[c])
            bd.vertex_component_[v] = c;
    for (BlockId b = 0; b < blocks.size(); ++b)
        ++bd.component_blocks_[bd.vertex_component_[blocks[b].front()]];

    bd.build_tree();
    return bd;
}

void BlockDecomposition::build_tree()
{
    const std::size_t nodes = block_count() + cut_vertices_.size();
    parent_incidence_.assign(nodes, no_incidence);
    tin_.assign(nodes, 0);
    tout_.assign(nodes, 0);
    subtree_blocks_.assign(nodes, 0);
    preorder_.clear();
    preorder_.reserve(nodes);

    std::vector<char> seen(nodes, 0);
    std::vector<Node> stack;
    for (Node root = 0; root < block_count(); ++root) {
        if (seen[root])
            continue;
        seen[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            Node x = stack.back();
            stack.pop_back();
            tin_[x] = static_cast<std::uint32_t>(preorder_.size());
            preorder_.push_back(x);
            auto incs = node_incidences(x);
            // push in reverse so children are visited in ascending order
            for (auto it = incs.rbegin(); it != incs.rend(); ++it) {
                const Incidence k = *it;
                const Node y = is_block_node(x) ? cut_node(incidence_vertex_[k]) : block_node(incidence_block_[k]);
                if (seen[y])
                    continue;
                seen[y] = 1;
                parent_incidence_[y] = k;
                stack.push_back(y);
            }
        }
    }

    std::vector<std::uint32_t> size(nodes, 1);
    for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it) {
        const Node x = *it;
        if (is_block_node(x))
            subtree_blocks_[x] += 1;
        const Incidence k = parent_incidence_[x];
        if (k == no_incidence)
            continue;
        const Node p = is_block_node(x) ? cut_node(incidence_vertex_[k]) : block_node(incidence_block_[k]);
        size[p] += size[x];
        subtree_blocks_[p] += subtree_blocks_[x];
    }
    for (Node x = 0; x < nodes; ++x)
        tout_[x] = tin_[x] + size[x];
}

std::span<const BlockDecomposition::Incidence> BlockDecomposition::node_incidences(Node x) const
{
    if (is_block_node(x))
        return span_of(block_incidences_, block_incidence_offsets_, x);
    return span_of(cut_incidences_, cut_incidence_offsets_, x - block_count());
}

BlockDecomposition::Node BlockDecomposition::node_of(Vertex x) const
{
    if (is_cut(x))
        return cut_node(x);
    return block_node(blocks_of(x).front());
}

std::optional<BlockDecomposition::Incidence> BlockDecomposition::find_incidence(Vertex u, BlockId b) const
{
    if (u >= vertex_count() || !is_cut(u))
        return std::nullopt;
    const std::size_t ci = cut_index_[u];
    auto first = incidence_block_.begin() + static_cast<std::ptrdiff_t>(cut_incidence_offsets_[ci]);
    auto last = incidence_block_.begin() + static_cast<std::ptrdiff_t>(cut_incidence_offsets_[ci + 1]);
    auto it = std::lower_bound(first, last, b);
    if (it == last || *it != b)
        return std::nullopt;
    return static_cast<Incidence>(it - incidence_block_.begin());
}

std::vector<Vertex> BlockDecomposition::kappa(BlockId b, Vertex u) const
{
    if (!find_incidence(u, b))
        throw Error(ErrorKind::InvalidPair, "kappa: (B" + std::to_string(b) + "," + std::to_string(u) + ") is not a pair");
    std::vector<Vertex> out;
    for (Vertex v : block_cut_vertices(b))
        if (v != u)
            out.push_back(v);
    return out;
}

std::vector<BlockId> BlockDecomposition::beta(Vertex u, BlockId b) const
{
    if (!find_incidence(u, b))
        throw Error(ErrorKind::InvalidPair, "beta: (" + std::to_string(u) + ",B" + std::to_string(b) + ") is not a pair");
    std::vector<BlockId> out;
    for (BlockId other : blocks_of(u))
        if (other != b)
            out.push_back(other);
    return out;
}

std::vector<Pair> BlockDecomposition::pairs() const
{
    std::vector<Pair> out;
    out.reserve(pair_count());
    for (PairId id = 0; id < pair_count(); ++id)
        out.push_back(pair(id));
    return out;
}

Pair BlockDecomposition::pair(PairId id) const
{
    if (id >= pair_count())
        throw Error(ErrorKind::InvalidPair, "pair id " + std::to_string(id) + " out of range");
    return {direction(id), incidence_vertex_[id >> 1], incidence_block_[id >> 1]};
}

std::optional<PairId> BlockDecomposition::find(const Pair& p) const
{
    auto k = find_incidence(p.base, p.block);
    if (!k)
        return std::nullopt;
    return 2 * *k + (p.direction == Direction::ToBlock ? 1U : 0U);
}

PairId BlockDecomposition::id_of(const Pair& p) const
{
    auto id = find(p);
    if (!id)
        throw Error(ErrorKind::InvalidPair,
                    "no block-cut tree edge between vertex " + std::to_string(p.base) + " and block " + std::to_string(p.block));
    return *id;
}

bool BlockDecomposition::in_side(PairId p, Vertex x) const
{
    const Vertex u = base(p);
    if (x >= vertex_count() || vertex_component_[x] != vertex_component_[u])
        return false;
    if (x == u)
        return true;
    const Node un = cut_node(u);
    const Node bn = block_node(block_of_pair(p));
    const Node xn = node_of(x);
    const bool block_below = parent_incidence_[bn] == (p >> 1);
    if (block_below) {
        const bool inside = in_subtree(bn, xn);
        return direction(p) == Direction::ToVertex ? inside : !inside;
    }
    const bool inside = in_subtree(un, xn);
    return direction(p) == Direction::ToBlock ? inside : !inside;
}

std::vector<Vertex> BlockDecomposition::side_vertices(PairId p) const
{
    if (p >= pair_count())
        throw Error(ErrorKind::InvalidPair, "pair id " + std::to_string(p) + " out of range");
    std::vector<Vertex> out;
    for (Vertex x = 0; x < vertex_count(); ++x)
        if (in_side(p, x))
            out.push_back(x);
    return out;
}

SideView BlockDecomposition::side_vertices(const Pair& p) const
{
    return {p, side_vertices(id_of(p))};
}

std::size_t BlockDecomposition::side_block_count(PairId p) const
{
    const Node un = cut_node(base(p));
    const Node bn = block_node(block_of_pair(p));
    const std::size_t total = component_blocks_[vertex_component_[base(p)]];
    if (parent_incidence_[bn] == (p >> 1))
        return direction(p) == Direction::ToVertex ? subtree_blocks_[bn] : total - subtree_blocks_[bn];
    return direction(p) == Direction::ToBlock ? subtree_blocks_[un] : total - subtree_blocks_[un];
}

bool is_block_graph(const Graph& g, const BlockDecomposition& bd)
{
    // Blocks partition the edges, and a block on k vertices holds at most
    // k(k-1)/2 of them, so equality holds exactly when every block is a clique.
    std::size_t clique_edges = 0;
    for (BlockId b = 0; b < bd.block_count(); ++b) {
        const std::size_t k = bd.block(b).size();
        clique_edges += k * (k - 1) / 2;
    }
    return clique_edges == g.edge_count();
}

bool is_block_graph(const Graph& g)
{
    return is_block_graph(g, decompose(g));
}

} // namespace blockslide
