#include "blockslide/oracle.hpp"

#include "blockslide/capacity.hpp"
#include "blockslide/error.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <string>
#include <unordered_set>

namespace blockslide {

namespace {

using Clock = std::chrono::steady_clock;

struct SmallKey {
    std::array<std::uint64_t, 2> bits{};
    friend bool operator==(const SmallKey&, const SmallKey&) = default;
};

struct SmallKeyHash {
    std::size_t operator()(const SmallKey& k) const noexcept
    {
        std::uint64_t h = k.bits[0] * 0x9E3779B97F4A7C15ULL;
        h ^= (k.bits[1] + 0x632BE59BD9B4E019ULL) * 0xBF58476D1CE4E5B9ULL;
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

struct SmallEncoder {
    using Key = SmallKey;
    using Hash = SmallKeyHash;
    Key operator()(std::span<const Vertex> s) const
    {
        Key k;
        for (Vertex v : s)
            k.bits[v >> 6] |= std::uint64_t{1} << (v & 63);
        return k;
    }
};

struct WideEncoder {
    using Key = std::string;
    using Hash = std::hash<std::string>;
    Key operator()(std::span<const Vertex> s) const
    {
        return {reinterpret_cast<const char*>(s.data()), s.size() * sizeof(Vertex)};
    }
};

void check_limits(const OracleLimits& lim)
{
    if (lim.max_states == 0 || lim.max_millis == 0)
        throw Error(ErrorKind::InvalidParams, "oracle limits must be positive");
}

// Calls emit(sorted successor) for every legal slide out of `s`. `occupied`
// must mark exactly the vertices of `s`.
template <class Emit>
void for_each_successor(const Graph& g, std::span<const Vertex> s, const std::vector<char>& occupied,
                        std::vector<Vertex>& scratch, Emit&& emit)
{
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Vertex u = s[i];
        for (Vertex v : g.neighbors(u)) {
            if (occupied[v])
                continue;
            bool free = true;
            for (Vertex w : g.neighbors(v))
                if (w != u && occupied[w]) {
                    free = false;
                    break;
                }
            if (!free)
                continue;
            scratch.assign(s.begin(), s.end());
            scratch[i] = v;
            // one element moved; restore order by local bubbling
            std::size_t j = i;
            while (j > 0 && scratch[j - 1] > scratch[j]) {
                std::swap(scratch[j - 1], scratch[j]);
                --j;
            }
            while (j + 1 < scratch.size() && scratch[j] > scratch[j + 1]) {
                std::swap(scratch[j], scratch[j + 1]);
                ++j;
            }
            emit(std::span<const Vertex>(scratch));
        }
    }
}

template <class Encoder, class Stop>
StateSpace bfs(const Graph& g, const TokenSet& c, const OracleLimits& lim, Stop&& stop)
{
    const auto deadline = Clock::now() + std::chrono::milliseconds(lim.max_millis);
    Encoder encode;
    StateSpace space;
    space.vertex_count = g.vertex_count();
    space.token_count = c.size();
    std::unordered_set<typename Encoder::Key, typename Encoder::Hash> seen;

    space.flat.assign(c.begin(), c.end());
    space.parent.push_back(0);
    seen.insert(encode(c.vertices()));
    if (stop(c.vertices()))
        return space;

    std::vector<char> occupied(g.vertex_count(), 0);
    std::vector<Vertex> scratch, current;
    std::size_t level_end = 1;
    bool done = false;
    for (std::size_t head = 0; head < space.size() && !done; ++head) {
        if (head == level_end) {
            ++space.levels;
            space.max_frontier = std::max(space.max_frontier, space.size() - level_end);
            level_end = space.size();
        }
        if ((head & 1023U) == 0 && Clock::now() > deadline) {
            space.truncated = true;
            break;
        }
        auto s = space.state(head);
        current.assign(s.begin(), s.end());
        for (Vertex v : current)
            occupied[v] = 1;
        for_each_successor(g, current, occupied, scratch, [&](std::span<const Vertex> next) {
            if (done || !seen.insert(encode(next)).second)
                return;
            if (space.size() >= lim.max_states) {
                space.truncated = true;
                done = true;
                return;
            }
            space.flat.insert(space.flat.end(), next.begin(), next.end());
            space.parent.push_back(static_cast<std::uint32_t>(head));
            if (stop(next))
                done = true;
        });
        for (Vertex v : current)
            occupied[v] = 0;
    }
    return space;
}

template <class Stop>
StateSpace explore(const Graph& g, const TokenSet& c, const OracleLimits& lim, Stop&& stop)
{
    check_limits(lim);
    if (c.universe() != g.vertex_count())
        throw Error(ErrorKind::PreconditionViolated, "token set belongs to a different graph");
    if (g.vertex_count() <= 128)
        return bfs<SmallEncoder>(g, c, lim, stop);
    return bfs<WideEncoder>(g, c, lim, stop);
}

} // namespace

TokenSet StateSpace::token_set(std::size_t i) const
{
    auto s = state(i);
    return TokenSet::from_sorted_unchecked(vertex_count, {s.begin(), s.end()});
}

std::vector<TokenSet> successors(const Graph& g, const TokenSet& c)
{
    std::vector<char> occupied(g.vertex_count(), 0);
    for (Vertex v : c)
        occupied[v] = 1;
    std::vector<Vertex> scratch;
    std::vector<TokenSet> out;
    for_each_successor(g, c.vertices(), occupied, scratch, [&](std::span<const Vertex> next) {
        out.push_back(TokenSet::from_sorted_unchecked(g.vertex_count(), {next.begin(), next.end()}));
    });
    return out;
}

StateSpace enumerate_reachable(const Graph& g, const TokenSet& c, const OracleLimits& limits)
{
    return explore(g, c, limits, [](std::span<const Vertex>) { return false; });
}

OracleAnswer oracle_reachable(const Graph& g, const TokenSet& c1, const TokenSet& c2, const OracleLimits& limits)
{
    check_limits(limits);
    if (c1.size() != c2.size())
        return OracleAnswer::No;
    bool found = false;
    const auto target = c2.vertices();
    auto space = explore(g, c1, limits, [&](std::span<const Vertex> s) {
        found = std::equal(s.begin(), s.end(), target.begin(), target.end());
        return found;
    });
    if (found)
        return OracleAnswer::Yes;
    return space.truncated ? OracleAnswer::Unknown : OracleAnswer::No;
}

std::vector<int> interior_counts(const BlockDecomposition& bd, const TokenSet& c)
{
    std::vector<int> out(bd.pair_count(), 0);
    for (PairId p = 0; p < bd.pair_count(); ++p)
        for (Vertex v : c)
            if (v != bd.base(p) && bd.in_side(p, v))
                ++out[p];
    return out;
}

std::optional<std::vector<int>> oracle_potentials(const Graph& g, const BlockDecomposition& bd, const UaTable& ua,
                                                  const TokenSet& c, const OracleLimits& limits)
{
    const auto space = enumerate_reachable(g, c, limits);
    if (space.truncated)
        return std::nullopt;
    const auto base = interior_counts(bd, c);
    std::vector<int> best(bd.pair_count(), 0);
    for (std::size_t i = 0; i < space.size(); ++i) {
        const auto state = space.token_set(i);
        const auto cap = capacity_table(bd, ua, state);
        const auto inner = interior_counts(bd, state);
        for (PairId p = 0; p < bd.pair_count(); ++p) {
            const int v = cap[p] + inner[p] - base[p];
            if (i == 0 || v > best[p])
                best[p] = v;
        }
    }
    return best;
}

std::optional<int> oracle_potential(const Graph& g, const BlockDecomposition& bd, const UaTable& ua,
                                    const TokenSet& c, PairId p, const OracleLimits& limits)
{
    if (p >= bd.pair_count())
        throw Error(ErrorKind::InvalidPair, "pair id " + std::to_string(p) + " out of range");
    auto all = oracle_potentials(g, bd, ua, c, limits);
    if (!all)
        return std::nullopt;
    return (*all)[p];
}

std::vector<Vertex> never_token_vertices(const StateSpace& space)
{
    if (space.truncated)
        throw Error(ErrorKind::TruncatedSpace, "state space was truncated");
    std::vector<char> hit(space.vertex_count, 0);
    for (Vertex v : space.flat)
        hit[v] = 1;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < space.vertex_count; ++v)
        if (!hit[v])
            out.push_back(v);
    return out;
}

} // namespace blockslide
