#pragma once

#include "blockslide/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>

namespace blockslide {

/// SplitMix64 (Steele, Lea, Flood). Fixed constants so a seed replays the
/// same instance on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    template <class T>
    void shuffle(std::span<T> items)
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::uint64_t state_;
};

struct GenParams {
    std::uint64_t seed = 0;
    std::size_t num_blocks = 1;
    std::size_t max_clique = 2;
    std::size_t token_count = 0;
};

/// Connected block graph with exactly num_blocks blocks: a first clique of
/// size in [2, max_clique], then fresh cliques glued at uniformly chosen
/// existing vertices, then a random relabelling.
/// Throws Error{InvalidParams}.
Graph gen_block_graph(const GenParams& params);

/// Shuffled greedy packing with 16 restarts; nullopt if none reached `size`.
std::optional<TokenSet> gen_independent_set(std::uint64_t seed, const Graph& g, std::size_t size);

struct GeneratedInstance {
    Graph graph;
    TokenSet source;
    TokenSet target;
};

/// Graph plus two independent sets of params.token_count, sampled from
/// sub-seeds of params.seed. nullopt if either set cannot be packed.
/// Throws Error{InvalidParams}.
std::optional<GeneratedInstance> gen_instance(const GenParams& params);

} // namespace blockslide
