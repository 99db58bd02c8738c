#include "blockslide/error.hpp"

#include <sstream>

namespace blockslide {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::SelfLoop: return "self-loop";
    case ErrorKind::DuplicateEdge: return "duplicate-edge";
    case ErrorKind::VertexOutOfRange: return "vertex-out-of-range";
    case ErrorKind::InvalidPair: return "invalid-pair";
    case ErrorKind::NotConnected: return "not-connected";
    case ErrorKind::NotABlockGraph: return "not-a-block-graph";
    case ErrorKind::NotIndependent: return "not-independent";
    case ErrorKind::PreconditionViolated: return "precondition-violated";
    case ErrorKind::InvalidParams: return "invalid-params";
    case ErrorKind::TruncatedSpace: return "truncated-space";
    case ErrorKind::SyntaxError: return "syntax-error";
    case ErrorKind::MissingSection: return "missing-section";
    }
    return "unknown";
}

void throw_internal(const char* expr, const char* file, int line, std::string_view what)
{
    std::ostringstream os;
    os << file << ':' << line << ": internal invariant `" << expr << "` failed: " << what;
    throw InternalError(os.str());
}

} // namespace blockslide
