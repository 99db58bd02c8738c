#include "blockslide/capacity.hpp"

#include "blockslide/error.hpp"
#include "tree_fold.hpp"

#include <deque>
#include <string>

namespace blockslide {

namespace {

void check_universe(const BlockDecomposition& bd, const TokenSet& c)
{
    if (c.universe() != bd.vertex_count())
        throw Error(ErrorKind::PreconditionViolated, "token set belongs to a graph with " + std::to_string(c.universe()) +
                                                         " vertices, expected " + std::to_string(bd.vertex_count()));
}

std::vector<int> block_token_counts(const BlockDecomposition& bd, const TokenSet& c)
{
    std::vector<int> out(bd.block_count(), 0);
    for (Vertex v : c)
        for (BlockId b : bd.blocks_of(v))
            ++out[b];
    return out;
}

// |B ∩ interior of (B,u)|: tokens of B other than u (at most one).
int block_interior(const BlockDecomposition& bd, const std::vector<int>& block_tokens, const TokenSet& c, PairId p)
{
    return block_tokens[bd.block_of_pair(p)] - (c.contains(bd.base(p)) ? 1 : 0);
}

struct CapAgg {
    const UaTable* ua = nullptr;
    int sum = 0;
    int ua_sum = 0;
    int zero_ua = 0;

    void add(PairId q, int v)
    {
        sum += v;
        ua_sum += ua->as_int(q);
        zero_ua += (v == 0 && (*ua)[q]) ? 1 : 0;
    }

    CapAgg without(PairId q, int v) const
    {
        CapAgg out = *this;
        out.sum -= v;
        out.ua_sum -= ua->as_int(q);
        out.zero_ua -= (v == 0 && (*ua)[q]) ? 1 : 0;
        return out;
    }
};

// Incremental state for the potential iteration. Every candidate value is
// O(1) from three running sums.
class PotentialState {
public:
    PotentialState(const BlockDecomposition& bd, const UaTable& ua, const TokenSet& c)
        : bd_(bd), ua_(ua), c_(c), y_(bd.pair_count(), 0), block_tokens_(block_token_counts(bd, c)),
          block_sum_(bd.block_count(), 0), vertex_sum_(bd.cut_vertices().size(), 0),
          zero_ua_(bd.cut_vertices().size(), 0)
    {
        for (PairId p = 0; p < bd.pair_count(); p += 2) {
            const std::size_t ci = bd.cut_ordinal(bd.base(p));
            vertex_sum_[ci] -= ua.as_int(p);
            zero_ua_[ci] += ua.as_int(p);
        }
    }

    int value(PairId p) const { return y_[p]; }

    int candidate(PairId p) const
    {
        if (BlockDecomposition::direction(p) == Direction::ToVertex) {
            const BlockId b = bd_.block_of_pair(p);
            // block_sum_ also counts (u,B) itself, which is not in kappa(B,u)
            return block_sum_[b] - y_[p ^ 1U] + ua_.as_int(p) - block_interior(bd_, block_tokens_, c_, p);
        }
        const std::size_t ci = bd_.cut_ordinal(bd_.base(p));
        if (zero_ua_[ci] >= 2)
            return y_[p];
        const PairId back = p ^ 1U;
        return vertex_sum_[ci] - (y_[back] - ua_.as_int(back)) + ua_.as_int(p);
    }

    void assign(PairId p, int v)
    {
        const int old = y_[p];
        if (BlockDecomposition::direction(p) == Direction::ToBlock) {
            block_sum_[bd_.block_of_pair(p)] += v - old;
        } else {
            const std::size_t ci = bd_.cut_ordinal(bd_.base(p));
            vertex_sum_[ci] += v - old;
            if (ua_[p])
                zero_ua_[ci] += (v == 0 ? 1 : 0) - (old == 0 ? 1 : 0);
        }
        y_[p] = v;
    }

    std::vector<int> take() { return std::move(y_); }

private:
    const BlockDecomposition& bd_;
    const UaTable& ua_;
    const TokenSet& c_;
    std::vector<int> y_;
    std::vector<int> block_tokens_;
    std::vector<int> block_sum_;
    std::vector<int> vertex_sum_;
    std::vector<int> zero_ua_;
};

void notify(const PotentialOptions& options, PairId p, int old_value, int new_value)
{
    if (options.on_update)
        options.on_update({p, old_value, new_value});
}

PotentialTable run_faithful(const BlockDecomposition& bd, PotentialState& st, const PotentialOptions& options)
{
    PotentialTable out;
    const auto pairs = static_cast<PairId>(bd.pair_count());
    bool updated = true;
    while (updated) {
        ++out.iteration_count;
        updated = false;
        for (PairId p = 0; p < pairs; ++p) {
            const int next = st.candidate(p);
            if (next > st.value(p)) {
                notify(options, p, st.value(p), next);
                st.assign(p, next);
                ++out.update_count;
                updated = true;
                break;
            }
        }
    }
    return out;
}

PotentialTable run_worklist(const BlockDecomposition& bd, PotentialState& st, const PotentialOptions& options)
{
    PotentialTable out;
    std::deque<PairId> queue;
    std::vector<char> queued(bd.pair_count(), 1);
    for (PairId p = 0; p < bd.pair_count(); ++p)
        queue.push_back(p);
    auto push = [&](PairId q) {
        if (!queued[q]) {
            queued[q] = 1;
            queue.push_back(q);
        }
    };

    while (!queue.empty()) {
        const PairId p = queue.front();
        queue.pop_front();
        queued[p] = 0;
        const int next = st.candidate(p);
        if (next <= st.value(p))
            continue;
        notify(options, p, st.value(p), next);
        st.assign(p, next);
        ++out.update_count;
        if (BlockDecomposition::direction(p) == Direction::ToBlock) {
            for (auto k : bd.block_incidences(bd.block_of_pair(p)))
                if (k != (p >> 1))
                    push(2 * k);
        } else {
            for (auto k : bd.cut_incidences(bd.base(p)))
                push(2 * k + 1);
        }
    }
    out.iteration_count = out.update_count + 1;
    return out;
}

} // namespace

Restriction restrict_to(const BlockDecomposition& bd, const TokenSet& c, PairId p)
{
    check_universe(bd, c);
    if (p >= bd.pair_count())
        throw Error(ErrorKind::InvalidPair, "pair id " + std::to_string(p) + " out of range");
    Restriction r;
    for (Vertex v : c)
        if (bd.in_side(p, v)) {
            r.side_tokens.push_back(v);
            if (v != bd.base(p))
                r.interior_tokens.push_back(v);
        }
    return r;
}

CapacityTable capacity_table(const BlockDecomposition& bd, const UaTable& ua, const TokenSet& c)
{
    check_universe(bd, c);
    const auto block_tokens = block_token_counts(bd, c);
    auto values = detail::fold_pairs<int>(bd, CapAgg{&ua}, [&](PairId p, const CapAgg& deps) {
        int v = 0;
        if (BlockDecomposition::direction(p) == Direction::ToVertex)
            v = deps.sum + ua.as_int(p) - block_interior(bd, block_tokens, c, p);
        else if (deps.zero_ua == 0)
            v = deps.sum - deps.ua_sum + ua.as_int(p);
        BLOCKSLIDE_ENSURE(v >= 0, "negative capacity");
        return v;
    });
    return {std::move(values)};
}

int capacity(const BlockDecomposition& bd, const UaTable& ua, const TokenSet& c, PairId p)
{
    if (p >= bd.pair_count())
        throw Error(ErrorKind::InvalidPair, "pair id " + std::to_string(p) + " out of range");
    return capacity_table(bd, ua, c)[p];
}

PotentialTable compute_potentials(const BlockDecomposition& bd, const UaTable& ua, const TokenSet& c,
                                  const PotentialOptions& options)
{
    check_universe(bd, c);
    if (bd.component_count() > 1)
        throw Error(ErrorKind::NotConnected, "potentials need a connected graph, got " +
                                                 std::to_string(bd.component_count()) + " components");
    if (ua.values.size() != bd.pair_count())
        throw Error(ErrorKind::PreconditionViolated, "ua table does not match the decomposition");

    PotentialState st(bd, ua, c);
    PotentialTable out = options.mode == PotentialMode::Faithful ? run_faithful(bd, st, options)
                                                                 : run_worklist(bd, st, options);
    out.values = st.take();
    return out;
}

std::vector<PairId> fixed_point_violations(const BlockDecomposition& bd, const UaTable& ua, const TokenSet& c,
                                           const std::vector<int>& values)
{
    check_universe(bd, c);
    BLOCKSLIDE_ENSURE(values.size() == bd.pair_count(), "value table size mismatch");
    const auto block_tokens = block_token_counts(bd, c);
    std::vector<PairId> bad;
    for (PairId p = 0; p < bd.pair_count(); ++p) {
        int rhs = 0;
        if (BlockDecomposition::direction(p) == Direction::ToVertex) {
            for (auto k : bd.block_incidences(bd.block_of_pair(p)))
                if (k != (p >> 1))
                    rhs += values[2 * k + 1];
            rhs += ua.as_int(p) - block_interior(bd, block_tokens, c, p);
        } else {
            int zero_ua = 0;
            int sum = 0;
            for (auto k : bd.cut_incidences(bd.base(p))) {
                const PairId q = 2 * k;
                zero_ua += (values[q] == 0 && ua[q]) ? 1 : 0;
                if (k != (p >> 1))
                    sum += values[q] - ua.as_int(q);
            }
            rhs = zero_ua >= 2 ? 0 : sum + ua.as_int(p);
        }
        if (values[p] != rhs)
            bad.push_back(p);
    }
    return bad;
}

std::size_t iteration_bound(const BlockDecomposition& bd)
{
    const std::size_t n = bd.cut_vertices().size();
    const std::size_t m = bd.block_count();
    if (m == 0)
        return 1;
    return 2 * m * (n + m - 1) + 1;
}

} // namespace blockslide
