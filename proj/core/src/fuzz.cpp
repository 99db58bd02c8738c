#include "blockslide/fuzz.hpp"

#include "blockslide/error.hpp"
#include "blockslide/generator.hpp"

#include <algorithm>
#include <exception>

namespace blockslide {

namespace {

constexpr int max_redraws = 1000;

std::string pair_label(const BlockDecomposition& bd, PairId p)
{
    const std::string u = std::to_string(bd.base(p));
    const std::string b = "B" + std::to_string(bd.block_of_pair(p));
    return BlockDecomposition::direction(p) == Direction::ToBlock ? "(" + u + "," + b + ")" : "(" + b + "," + u + ")";
}

bool base_attacked_in_side(const Graph& g, const BlockDecomposition& bd, const TokenSet& c, PairId p)
{
    const Vertex u = bd.base(p);
    for (Vertex w : g.neighbors(u))
        if (c.contains(w) && bd.in_side(p, w))
            return true;
    return false;
}

void check_token_set(const Instance& inst, const BlockDecomposition& bd, const UaTable& ua, const TokenSet& c,
                     const char* which, const OracleLimits& limits, CaseReport& report)
{
    auto flag = [&](Check check, const std::string& detail) {
        report.violations.push_back({check, std::string(which) + ": " + detail});
    };
    const auto& g = inst.graph;

    const auto pot = compute_potentials(bd, ua, c, {PotentialMode::Faithful, {}});
    const auto fast = compute_potentials(bd, ua, c, {PotentialMode::Accelerated, {}});
    if (pot.values != fast.values)
        flag(Check::ModeAgreement, "worklist potentials differ from the pass-by-pass ones");
    if (pot.iteration_count > iteration_bound(bd))
        flag(Check::IterationBound, std::to_string(pot.iteration_count) + " passes exceed the bound " +
                                        std::to_string(iteration_bound(bd)));

    const auto expected = oracle_potentials(g, bd, ua, c, limits);
    if (!expected) {
        flag(Check::OracleTruncated, "potential enumeration truncated");
    } else {
        for (PairId p = 0; p < bd.pair_count(); ++p)
            if ((*expected)[p] != pot[p]) {
                flag(Check::Potential, "pot" + pair_label(bd, p) + " = " + std::to_string(pot[p]) + ", oracle " +
                                           std::to_string((*expected)[p]));
                break;
            }
    }

    const auto cap = capacity_table(bd, ua, c);
    for (PairId p = 0; p < bd.pair_count(); ++p) {
        if (cap[p] < 0)
            flag(Check::Capacity, "cap" + pair_label(bd, p) + " = " + std::to_string(cap[p]));
        else if (ua[p] && cap[p] == 0 && !base_attacked_in_side(g, bd, c, p))
            flag(Check::Capacity, "cap" + pair_label(bd, p) + " = 0 with ua true and a free base");
    }

    for (PairId p : fixed_point_violations(bd, ua, c, pot.values))
        flag(Check::FixedPoint, "pot" + pair_label(bd, p) + " off its equation");
    for (PairId p = 0; p < bd.pair_count(); ++p)
        if (static_cast<std::size_t>(pot[p]) > bd.side_block_count(p))
            flag(Check::UpperBound, "pot" + pair_label(bd, p) + " exceeds the block count of its side");

    const auto space = enumerate_reachable(g, c, limits);
    report.states += space.size();
    if (space.truncated) {
        flag(Check::OracleTruncated, "state space truncated");
        return;
    }
    const auto never = never_token_vertices(space);
    for (Vertex u : rigid_vertices(bd, ua, pot).vertices)
        if (!std::binary_search(never.begin(), never.end(), u))
            flag(Check::Rigidity, "rigid vertex " + std::to_string(u) + " receives a token");
}

} // namespace

std::string_view to_string(Check c)
{
    switch (c) {
    case Check::Decision: return "decision";
    case Check::Symmetry: return "symmetry";
    case Check::Potential: return "potential";
    case Check::ModeAgreement: return "mode-agreement";
    case Check::Capacity: return "capacity";
    case Check::FixedPoint: return "fixed-point";
    case Check::UpperBound: return "upper-bound";
    case Check::IterationBound: return "iteration-bound";
    case Check::Rigidity: return "rigidity";
    case Check::OracleTruncated: return "oracle-truncated";
    case Check::Exception: return "exception";
    }
    return "unknown";
}

Solver default_solver()
{
    return [](const Graph& g, const TokenSet& a, const TokenSet& b) { return decide(g, a, b); };
}

Instance make_fuzz_case(const FuzzConfig& config, std::uint64_t index)
{
    if (config.max_blocks == 0 || config.max_clique < 2 || config.max_tokens == 0)
        throw Error(ErrorKind::InvalidParams, "fuzz envelope needs blocks >= 1, clique >= 2, tokens >= 1");
    SplitMix64 rng(config.seed + index);
    for (int attempt = 0; attempt < max_redraws; ++attempt) {
        const auto blocks = rng.between(1, config.max_blocks);
        const auto tokens = rng.between(1, config.max_tokens);
        const auto graph_seed = rng.next();
        const auto source_seed = rng.next();
        const auto target_seed = rng.next();
        auto g = gen_block_graph({graph_seed, blocks, config.max_clique, 0});
        if (g.vertex_count() > config.max_vertices)
            continue;
        auto source = gen_independent_set(source_seed, g, tokens);
        auto target = gen_independent_set(target_seed, g, tokens);
        if (source && target)
            return {std::move(g), std::move(*source), std::move(*target)};
    }
    throw Error(ErrorKind::InvalidParams, "fuzz envelope admits no instance with at most " +
                                              std::to_string(config.max_vertices) + " vertices");
}

CaseReport check_case(const Instance& inst, const OracleLimits& limits, const Solver& solver)
{
    CaseReport report;
    try {
        const auto& g = inst.graph;
        const auto bd = decompose(g);
        const auto ua = compute_ua(bd, compute_depths(bd));

        const auto verdict = solver(g, inst.source, inst.target);
        report.solver_reachable = verdict.reachable;
        const auto answer = oracle_reachable(g, inst.source, inst.target, limits);
        if (answer == OracleAnswer::Unknown) {
            report.violations.push_back({Check::OracleTruncated, "reachability search truncated"});
        } else {
            report.oracle_reachable = answer == OracleAnswer::Yes;
            if (report.oracle_reachable != verdict.reachable)
                report.violations.push_back(
                    {Check::Decision, std::string("solver says ") + (verdict.reachable ? "YES" : "NO") + " (" +
                                          std::string(to_string(verdict.reason)) + "), oracle says " +
                                          (report.oracle_reachable ? "YES" : "NO")});
        }
        if (solver(g, inst.target, inst.source).reachable != verdict.reachable)
            report.violations.push_back({Check::Symmetry, "answer changes when source and target swap"});

        check_token_set(inst, bd, ua, inst.source, "source", limits, report);
        check_token_set(inst, bd, ua, inst.target, "target", limits, report);

        if (report.oracle_reachable && verdict.rigid_source != verdict.rigid_target)
            report.violations.push_back({Check::Rigidity, "reachable sets with different rigid vertices"});
    } catch (const std::exception& e) {
        report.violations.push_back({Check::Exception, e.what()});
    }
    return report;
}

FuzzSummary run_fuzz(const FuzzConfig& config, const Solver& solver)
{
    FuzzSummary summary;
    for (std::uint64_t i = 0; i < config.count; ++i) {
        auto inst = make_fuzz_case(config, i);
        auto report = check_case(inst, config.limits, solver);
        ++summary.cases;
        if (!report.ok()) {
            summary.failure = FuzzFailure{config.seed + i, std::move(inst), std::move(report.violations)};
            break;
        }
        ++summary.passed;
        ++(report.oracle_reachable ? summary.yes : summary.no);
    }
    return summary;
}

} // namespace blockslide
