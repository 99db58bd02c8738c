#pragma once

#include "blockslide/capacity.hpp"
#include "blockslide/decision.hpp"
#include "blockslide/instance.hpp"
#include "blockslide/oracle.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace blockslide {

struct FuzzConfig {
    std::size_t count = 1000;
    std::size_t max_blocks = 6;
    std::size_t max_clique = 4;
    std::size_t max_tokens = 4;
    std::uint64_t seed = 0;
    /// Generated graphs above this size are redrawn so the oracle stays cheap.
    std::size_t max_vertices = 12;
    OracleLimits limits{};
};

enum class Check {
    Decision,
    Symmetry,
    Potential,
    ModeAgreement,
    Capacity,
    FixedPoint,
    UpperBound,
    IterationBound,
    Rigidity,
    OracleTruncated,
    Exception,
};

std::string_view to_string(Check c);

struct Violation {
    Check check;
    std::string detail;
};

/// Replaceable decision procedure, so the harness can be tested against a
/// deliberately broken solver.
using Solver = std::function<Verdict(const Graph&, const TokenSet&, const TokenSet&)>;

Solver default_solver();

struct CaseReport {
    bool oracle_reachable = false;
    bool solver_reachable = false;
    std::size_t states = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// Instance number `index` of the corpus: seed = config.seed + index.
/// Always connected, at most max_vertices vertices, |source| = |target| >= 1.
Instance make_fuzz_case(const FuzzConfig& config, std::uint64_t index);

/// Runs every solver-vs-oracle comparison and invariant on one instance.
/// The graph must be a connected block graph.
CaseReport check_case(const Instance& instance, const OracleLimits& limits, const Solver& solver);

struct FuzzFailure {
    std::uint64_t seed;
    Instance instance;
    std::vector<Violation> violations;
};

struct FuzzSummary {
    std::size_t cases = 0;
    std::size_t passed = 0;
    std::size_t yes = 0;
    std::size_t no = 0;
    std::optional<FuzzFailure> failure;
};

/// Stops at the first failing case.
FuzzSummary run_fuzz(const FuzzConfig& config, const Solver& solver = default_solver());

} // namespace blockslide
