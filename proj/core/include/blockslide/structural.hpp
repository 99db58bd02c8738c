#pragma once

#include "blockslide/block_decomposition.hpp"

#include <cstdint>
#include <vector>

namespace blockslide {

/// Depth d(p) of every pair, indexed by PairId.
struct DepthTable {
    std::vector<std::uint32_t> values;
    std::uint32_t operator[](PairId p) const { return values[p]; }
};

/// The token-independent flag ua(p), indexed by PairId.
struct UaTable {
    std::vector<std::uint8_t> values;
    bool operator[](PairId p) const { return values[p] != 0; }
    int as_int(PairId p) const { return values[p]; }
};

/// d(B,u) = 0 when kappa(B,u) is empty, else 1 + max d(v,B) over kappa;
/// d(u,B) = 1 + max d(B',u) over beta(u,B).
DepthTable compute_depths(const BlockDecomposition& bd);

/// ua(p) = true at depth 0; ua(B,u) = not(all ua(v,B) over kappa and
/// B = kappa + {u}); ua(u,B) = any ua(B',u) over beta.
UaTable compute_ua(const BlockDecomposition& bd, const DepthTable& depths);

} // namespace blockslide
