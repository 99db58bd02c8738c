#pragma once

#include "blockslide/block_decomposition.hpp"

#include <vector>

namespace blockslide::detail {

// Every pair value in this library has the shape
//
//     value(X seen from Y) = eval(pair, fold over Z in N(X) \ {Y} of value(Z seen from X))
//
// on the block-cut tree. `fold_pairs` evaluates all of them in O(|P|) with a
// rerooting pass: pairs pointing away from the root bottom-up, then pairs
// pointing toward the root top-down, using an aggregate that can drop one
// contribution.
//
// Agg must provide `void add(PairId, const T&)` and
// `Agg without(PairId, const T&) const`. Eval is `T(PairId, const Agg&)`.
template <class T, class Agg, class Eval>
std::vector<T> fold_pairs(const BlockDecomposition& bd, const Agg& empty, Eval&& eval)
{
    using Node = BlockDecomposition::Node;
    using Incidence = BlockDecomposition::Incidence;
    std::vector<T> value(bd.pair_count());
    auto order = bd.preorder();

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Node x = *it;
        const Incidence up = bd.parent_incidence(x);
        if (up == BlockDecomposition::no_incidence)
            continue;
        const bool xb = bd.is_block_node(x);
        Agg agg = empty;
        for (Incidence k : bd.node_incidences(x))
            if (k != up) {
                const PairId q = BlockDecomposition::pair_toward(xb, k);
                agg.add(q, value[q]);
            }
        const PairId p = BlockDecomposition::pair_from(xb, up);
        value[p] = eval(p, agg);
    }

    for (const Node x : order) {
        const bool xb = bd.is_block_node(x);
        const Incidence up = bd.parent_incidence(x);
        Agg all = empty;
        for (Incidence k : bd.node_incidences(x)) {
            const PairId q = BlockDecomposition::pair_toward(xb, k);
            all.add(q, value[q]);
        }
        for (Incidence k : bd.node_incidences(x)) {
            if (k == up)
                continue;
            const PairId q = BlockDecomposition::pair_toward(xb, k);
            const PairId p = BlockDecomposition::pair_from(xb, k);
            value[p] = eval(p, all.without(q, value[q]));
        }
    }
    return value;
}

} // namespace blockslide::detail
