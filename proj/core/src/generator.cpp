#include "blockslide/generator.hpp"

#include "blockslide/error.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace blockslide {

namespace {

constexpr int packing_restarts = 16;

// Decorrelates the sub-streams derived from one user seed.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream)
{
    SplitMix64 mix(seed ^ (stream * 0xD1B54A32D192ED03ULL));
    return mix.next();
}

} // namespace

std::uint64_t SplitMix64::below(std::uint64_t bound)
{
    if (bound == 0)
        throw Error(ErrorKind::InvalidParams, "empty range");
    // reject the top partial bucket so every residue is equally likely
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

Graph gen_block_graph(const GenParams& params)
{
    if (params.num_blocks == 0)
        throw Error(ErrorKind::InvalidParams, "num_blocks must be positive");
    if (params.max_clique < 2)
        throw Error(ErrorKind::InvalidParams, "max_clique must be at least 2");

    SplitMix64 rng(params.seed);
    std::vector<Edge> edges;
    std::size_t n = 0;
    auto add_clique = [&](std::vector<Vertex> members) {
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                edges.emplace_back(members[i], members[j]);
    };

    std::vector<Vertex> first(rng.between(2, params.max_clique));
    std::iota(first.begin(), first.end(), Vertex{0});
    n = first.size();
    add_clique(std::move(first));

    for (std::size_t b = 1; b < params.num_blocks; ++b) {
        const auto size = rng.between(2, params.max_clique);
        std::vector<Vertex> members{static_cast<Vertex>(rng.below(n))};
        for (std::uint64_t i = 1; i < size; ++i)
            members.push_back(static_cast<Vertex>(n++));
        add_clique(std::move(members));
    }

    std::vector<Vertex> relabel(n);
    std::iota(relabel.begin(), relabel.end(), Vertex{0});
    rng.shuffle(std::span<Vertex>(relabel));
    for (auto& [u, v] : edges) {
        u = relabel[u];
        v = relabel[v];
    }
    return Graph(n, edges);
}

std::optional<TokenSet> gen_independent_set(std::uint64_t seed, const Graph& g, std::size_t size)
{
    const std::size_t n = g.vertex_count();
    if (size == 0)
        return TokenSet::from_sorted_unchecked(n, {});
    if (size > n)
        return std::nullopt;

    SplitMix64 rng(seed);
    std::vector<Vertex> order(n);
    std::vector<char> blocked(n);
    for (int attempt = 0; attempt < packing_restarts; ++attempt) {
        std::iota(order.begin(), order.end(), Vertex{0});
        rng.shuffle(std::span<Vertex>(order));
        std::fill(blocked.begin(), blocked.end(), 0);
        std::vector<Vertex> chosen;
        for (Vertex v : order) {
            if (blocked[v])
                continue;
            chosen.push_back(v);
            blocked[v] = 1;
            for (Vertex w : g.neighbors(v))
                blocked[w] = 1;
            if (chosen.size() == size)
                break;
        }
        if (chosen.size() == size) {
            std::sort(chosen.begin(), chosen.end());
            return TokenSet::from_sorted_unchecked(n, std::move(chosen));
        }
    }
    return std::nullopt;
}

std::optional<GeneratedInstance> gen_instance(const GenParams& params)
{
    auto g = gen_block_graph({sub_seed(params.seed, 0), params.num_blocks, params.max_clique, 0});
    if (params.token_count > g.vertex_count())
        throw Error(ErrorKind::InvalidParams, "token_count exceeds the vertex count");
    auto source = gen_independent_set(sub_seed(params.seed, 1), g, params.token_count);
    auto target = gen_independent_set(sub_seed(params.seed, 2), g, params.token_count);
    if (!source || !target)
        return std::nullopt;
    return GeneratedInstance{std::move(g), std::move(*source), std::move(*target)};
}

} // namespace blockslide
