#pragma once

#include "blockslide/graph.hpp"

#include <string>
#include <string_view>

namespace blockslide {

/// A reconfiguration question: can `source` slide to `target` in `graph`?
struct Instance {
    Graph graph;
    TokenSet source;
    TokenSet target;

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Line format, 1-based vertex ids:
///
///     # comment
///     p <n> <m>
///     e <u> <v>      (exactly m lines)
///     s <v...>       (source tokens, may be empty)
///     t <v...>       (target tokens, may be empty)
///
/// Throws Error{SyntaxError | VertexOutOfRange | NotIndependent |
/// MissingSection | SelfLoop | DuplicateEdge}. Messages carry the line
/// number, and NotIndependent names the offending set.
Instance parse_instance(std::string_view text);

/// Inverse of parse_instance: canonical edge order, LF line endings.
std::string render_instance(const Instance& instance);

} // namespace blockslide
