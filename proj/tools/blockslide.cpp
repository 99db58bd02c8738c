// blockslide: decide token-sliding reachability on block graphs.
//
// Exit codes: 0 answered, 1 fuzz discrepancy, 2 bad input, 3 not a block
// graph, 4 internal error.

#include "blockslide/capacity.hpp"
#include "blockslide/decision.hpp"
#include "blockslide/error.hpp"
#include "blockslide/fuzz.hpp"
#include "blockslide/generator.hpp"
#include "blockslide/instance.hpp"
#include "blockslide/oracle.hpp"
#include "blockslide/structural.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

namespace bs = blockslide;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_discrepancy = 1;
constexpr int exit_input = 2;
constexpr int exit_not_block_graph = 3;
constexpr int exit_internal = 4;

std::string read_input(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw bs::Error(bs::ErrorKind::SyntaxError, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bs::Instance load(const std::string& path)
{
    return bs::parse_instance(read_input(path));
}

void require_block_graph(const bs::Graph& g)
{
    if (!bs::is_block_graph(g))
        throw bs::Error(bs::ErrorKind::NotABlockGraph, "input graph is not a block graph");
}

int cmd_decide(const std::string& path, bool accelerated)
{
    const auto inst = load(path);
    bs::DecideOptions opts;
    opts.mode = accelerated ? bs::PotentialMode::Accelerated : bs::PotentialMode::Faithful;
    const auto v = bs::decide(inst.graph, inst.source, inst.target, opts);
    std::cout << (v.reachable ? "YES" : "NO") << "\nreason: " << bs::to_string(v.reason) << '\n';
    return exit_ok;
}

// Block of the full graph holding local block `lb` of a component.
bs::BlockId global_block(const bs::BlockDecomposition& whole, const bs::BlockDecomposition& local,
                         const bs::InducedSubgraph& sub, bs::BlockId lb)
{
    const auto members = local.block(lb);
    const bs::Vertex a = sub.to_parent[members[0]];
    const bs::Vertex b = sub.to_parent[members[1]];
    for (bs::BlockId x : whole.blocks_of(a)) {
        const auto other = whole.blocks_of(b);
        if (std::find(other.begin(), other.end(), x) != other.end())
            return x;
    }
    throw bs::InternalError("component block has no counterpart in the full graph");
}

int cmd_potentials(const std::string& path, const std::string& which)
{
    const auto inst = load(path);
    require_block_graph(inst.graph);
    const auto& tokens = which == "target" ? inst.target : inst.source;
    const auto whole = bs::decompose(inst.graph);
    const auto comps = bs::connected_components(inst.graph);
    const bool sectioned = comps.size() > 1;

    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const auto sub = bs::induced_subgraph(inst.graph, comps[ci]);
        const auto bd = bs::decompose(sub.graph);
        std::vector<bs::Vertex> local_tokens;
        for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
            if (tokens.contains(sub.to_parent[i]))
                local_tokens.push_back(static_cast<bs::Vertex>(i));
        const auto c = bs::TokenSet::from_sorted_unchecked(sub.to_parent.size(), local_tokens);
        const auto depths = bs::compute_depths(bd);
        const auto ua = bs::compute_ua(bd, depths);
        const auto pot = bs::compute_potentials(bd, ua, c);

        std::vector<std::pair<bs::PairId, std::string>> lines;
        for (bs::PairId p = 0; p < bd.pair_count(); ++p) {
            const bs::Vertex u = sub.to_parent[bd.base(p)];
            const bs::BlockId b = global_block(whole, bd, sub, bd.block_of_pair(p));
            const bool to_block = bs::BlockDecomposition::direction(p) == bs::Direction::ToBlock;
            const bs::Pair global = to_block ? bs::to_block(u, b) : bs::to_vertex(b, u);
            const std::string uname = std::to_string(u + 1);
            const std::string bname = "B" + std::to_string(b);
            std::ostringstream line;
            line << "pot " << (to_block ? uname + "->" + bname : bname + "->" + uname) << " = " << pot[p]
                 << " ua=" << ua.as_int(p) << " d=" << depths[p];
            lines.emplace_back(whole.id_of(global), line.str());
        }
        std::sort(lines.begin(), lines.end());
        if (sectioned)
            std::cout << "component " << ci + 1 << '\n';
        for (const auto& [id, text] : lines)
            std::cout << text << '\n';
    }
    return exit_ok;
}

int cmd_oracle(const std::string& path, std::size_t max_states, std::uint64_t max_millis)
{
    const auto inst = load(path);
    const bs::OracleLimits lim{max_states, max_millis};
    const auto answer = bs::oracle_reachable(inst.graph, inst.source, inst.target, lim);
    switch (answer) {
    case bs::OracleAnswer::Yes: std::cout << "YES\n"; break;
    case bs::OracleAnswer::No: std::cout << "NO\n"; break;
    case bs::OracleAnswer::Unknown: std::cout << "UNKNOWN\n"; break;
    }
    return exit_ok;
}

int cmd_gen(std::size_t blocks, std::size_t max_clique, std::size_t tokens, std::uint64_t seed)
{
    auto inst = bs::gen_instance({seed, blocks, max_clique, tokens});
    if (!inst)
        throw bs::Error(bs::ErrorKind::InvalidParams,
                        "could not place " + std::to_string(tokens) + " independent tokens; try another seed");
    std::cout << "# blockslide gen --blocks " << blocks << " --max-clique " << max_clique << " --tokens " << tokens
              << " --seed " << seed << '\n'
              << bs::render_instance({std::move(inst->graph), std::move(inst->source), std::move(inst->target)});
    return exit_ok;
}

int cmd_fuzz(const bs::FuzzConfig& cfg, bool inject_fault, const std::string& dump_path)
{
    auto solver = bs::default_solver();
    if (inject_fault)
        solver = [](const bs::Graph& g, const bs::TokenSet& a, const bs::TokenSet& b) {
            auto v = bs::decide(g, a, b);
            v.reachable = !v.reachable;
            return v;
        };
    const auto summary = bs::run_fuzz(cfg, solver);
    if (!summary.failure) {
        std::cout << summary.passed << '/' << cfg.count << " ok\n";
        std::cerr << "yes=" << summary.yes << " no=" << summary.no << '\n';
        return exit_ok;
    }
    const auto& f = *summary.failure;
    std::cout << summary.passed << '/' << cfg.count << " ok\n"
              << "FAIL at seed " << f.seed << '\n';
    for (const auto& v : f.violations)
        std::cout << "  " << bs::to_string(v.check) << ": " << v.detail << '\n';
    std::ofstream out(dump_path, std::ios::binary);
    out << "# fuzz failure, seed " << f.seed << '\n';
    for (const auto& v : f.violations)
        out << "# " << bs::to_string(v.check) << ": " << v.detail << '\n';
    out << bs::render_instance(f.instance);
    std::cout << "instance written to " << dump_path << '\n';
    return exit_discrepancy;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Token sliding reconfiguration on block graphs"};
    app.require_subcommand(1);

    std::string path;
    bool accelerated = false;
    auto* decide = app.add_subcommand("decide", "Decide whether the target set is reachable from the source set");
    decide->add_option("file", path, "Instance file, or - for stdin")->required();
    decide->add_flag("--accelerated", accelerated, "Use the worklist potential evaluation");

    std::string which = "source";
    auto* potentials = app.add_subcommand("potentials", "Print the potential of every pair");
    potentials->add_option("file", path, "Instance file, or - for stdin")->required();
    potentials->add_option("--set", which, "Token set to evaluate")->check(CLI::IsMember({"source", "target"}));

    std::size_t max_states = bs::OracleLimits{}.max_states;
    std::uint64_t max_millis = bs::OracleLimits{}.max_millis;
    auto* oracle = app.add_subcommand("oracle", "Brute-force reachability by breadth-first search");
    oracle->add_option("file", path, "Instance file, or - for stdin")->required();
    oracle->add_option("--max-states", max_states, "State limit")->check(CLI::PositiveNumber);
    oracle->add_option("--max-millis", max_millis, "Time limit in milliseconds")->check(CLI::PositiveNumber);

    std::size_t blocks = 4, max_clique = 3, tokens = 2;
    std::uint64_t seed = 0;
    auto* gen = app.add_subcommand("gen", "Write a random instance to standard output");
    gen->add_option("--blocks", blocks, "Number of blocks")->check(CLI::PositiveNumber);
    gen->add_option("--max-clique", max_clique, "Largest block size")->check(CLI::Range(2, 1 << 20));
    gen->add_option("--tokens", tokens, "Tokens per set");
    gen->add_option("--seed", seed, "Random seed");

    bs::FuzzConfig cfg;
    bool inject_fault = false;
    std::string dump_path = "fuzz-failure.txt";
    auto* fuzz = app.add_subcommand("fuzz", "Compare the solver with the oracle on random instances");
    fuzz->add_option("--count", cfg.count, "Number of instances");
    fuzz->add_option("--max-blocks", cfg.max_blocks, "Largest block count")->check(CLI::PositiveNumber);
    fuzz->add_option("--max-clique", cfg.max_clique, "Largest block size")->check(CLI::Range(2, 1 << 20));
    fuzz->add_option("--max-tokens", cfg.max_tokens, "Largest token count")->check(CLI::PositiveNumber);
    fuzz->add_option("--max-vertices", cfg.max_vertices, "Redraw graphs above this size")->check(CLI::PositiveNumber);
    fuzz->add_option("--seed", cfg.seed, "First seed");
    fuzz->add_option("--dump", dump_path, "Where to write a failing instance");
    fuzz->add_flag("--inject-fault", inject_fault, "Negate every solver answer")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_input;
    }

    try {
        if (*decide)
            return cmd_decide(path, accelerated);
        if (*potentials)
            return cmd_potentials(path, which);
        if (*oracle)
            return cmd_oracle(path, max_states, max_millis);
        if (*gen)
            return cmd_gen(blocks, max_clique, tokens, seed);
        if (*fuzz)
            return cmd_fuzz(cfg, inject_fault, dump_path);
    } catch (const bs::Error& e) {
        std::cerr << "error (" << bs::to_string(e.kind()) << "): " << e.what() << '\n';
        return e.kind() == bs::ErrorKind::NotABlockGraph ? exit_not_block_graph : exit_input;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_input;
}
