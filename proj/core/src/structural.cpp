#include "blockslide/structural.hpp"

#include "blockslide/error.hpp"
#include "tree_fold.hpp"

namespace blockslide {

namespace {

struct MaxAgg {
    std::size_t count = 0;
    PairId best_from = ~PairId{0};
    std::uint32_t best = 0;
    std::uint32_t second = 0;

    void add(PairId q, std::uint32_t v)
    {
        ++count;
        if (best_from == ~PairId{0} || v > best) {
            second = best;
            best = v;
            best_from = q;
        } else if (v > second) {
            second = v;
        }
    }

    MaxAgg without(PairId q, std::uint32_t) const
    {
        MaxAgg out = *this;
        --out.count;
        if (q == best_from)
            out.best = second;
        return out;
    }
};

struct CountAgg {
    std::size_t count = 0;
    std::size_t true_count = 0;

    void add(PairId, std::uint8_t v)
    {
        ++count;
        true_count += v;
    }

    CountAgg without(PairId, std::uint8_t v) const { return {count - 1, true_count - v}; }
};

} // namespace

DepthTable compute_depths(const BlockDecomposition& bd)
{
    auto values = detail::fold_pairs<std::uint32_t>(bd, MaxAgg{}, [&](PairId p, const MaxAgg& deps) {
        if (BlockDecomposition::direction(p) == Direction::ToVertex)
            return deps.count == 0 ? 0U : 1 + deps.best;
        // a cut vertex lies in at least two blocks, so beta(u,B) is never empty
        BLOCKSLIDE_ENSURE(deps.count > 0, "beta(u,B) empty for a cut vertex");
        return 1 + deps.best;
    });
    return {std::move(values)};
}

UaTable compute_ua(const BlockDecomposition& bd, const DepthTable& depths)
{
    auto values = detail::fold_pairs<std::uint8_t>(bd, CountAgg{}, [&](PairId p, const CountAgg& deps) -> std::uint8_t {
        if (BlockDecomposition::direction(p) == Direction::ToBlock)
            return deps.true_count > 0 ? 1 : 0;
        BLOCKSLIDE_ENSURE((depths[p] == 0) == (deps.count == 0), "depth table inconsistent with kappa");
        if (deps.count == 0)
            return 1;
        const bool all_ua = deps.true_count == deps.count;
        const bool block_is_cuts = bd.block(bd.block_of_pair(p)).size() == deps.count + 1;
        return (all_ua && block_is_cuts) ? 0 : 1;
    });
    return {std::move(values)};
}

} // namespace blockslide
