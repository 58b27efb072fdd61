#include "ttlab/census.hpp"

#include <array>
#include <atomic>

#include "ttlab/construct.hpp"
#include "ttlab/embed.hpp"
#include "ttlab/enumerate.hpp"
#include "ttlab/error.hpp"
#include "ttlab/parallel.hpp"
#include "ttlab/search.hpp"

namespace ttlab {

namespace {

void check_capacity(int n, GraphMode mode)
{
    if (n < 0)
        throw ArgumentError("vertex count must be nonnegative");
    if (n > census_limit(mode))
        throw CapacityError("exact counting is limited to n <= " + std::to_string(census_limit(mode)) + " in "
                            + (mode == GraphMode::Digraph ? "digraph" : "oriented") + " mode, got n = "
                            + std::to_string(n));
}

void check_parts(int parts, int size)
{
    if (parts < 1 || size < 1)
        throw ArgumentError("part count and level size must be at least 1");
}

/// Depth-first assignment of pair states in lexicographic pair order. An arc
/// is kept only if `admissible(graph, i, j)` still holds afterwards; since
/// both tracked properties are destroyed by adding arcs, a rejected arc
/// rejects every completion.
template <typename Admissible, typename Leaf>
class PairDfs
{
public:
    PairDfs(int n, GraphMode mode, Admissible admissible, Leaf leaf)
        : pairs_(lex_pairs(n)), states_(pair_states(mode)), graph_(n), admissible_(admissible), leaf_(leaf)
    {
    }

    bool apply_prefix(const std::vector<PairState> & prefix)
    {
        for (std::size_t p = 0; p < prefix.size(); ++p) {
            auto [i, j] = pairs_[p];
            graph_.set_state(i, j, prefix[p]);
            if (prefix[p] != PairState::None && ! admissible_(graph_, i, j))
                return false;
        }
        return true;
    }

    void run(std::size_t from) { descend(from); }

private:
    void descend(std::size_t p)
    {
        if (p == pairs_.size()) {
            leaf_(static_cast<const Digraph &>(graph_));
            return;
        }
        auto [i, j] = pairs_[p];
        for (PairState s : states_) {
            graph_.set_state(i, j, s);
            if (s == PairState::None || admissible_(graph_, i, j))
                descend(p + 1);
        }
        graph_.set_state(i, j, PairState::None);
    }

    std::vector<std::pair<int, int>> pairs_;
    std::span<const PairState> states_;
    Digraph graph_;
    Admissible admissible_;
    Leaf leaf_;
};

constexpr int kPrefixDepth = 3;

/// Runs the pruned enumeration over prefix blocks in parallel, summing per-block leaf counts.
template <typename Admissible, typename LeafCount>
std::uint64_t parallel_dfs_count(int n, GraphMode mode, int threads, Admissible admissible, LeafCount leaf_count)
{
    auto prefixes = pair_prefixes(n, mode, kPrefixDepth);
    std::vector<std::uint64_t> block(prefixes.size(), 0);
    parallel_for(prefixes.size(), threads, [&](std::size_t task) {
        std::uint64_t & total = block[task];
        PairDfs dfs(n, mode, admissible, [&](const Digraph & g) { total += leaf_count(g); });
        if (dfs.apply_prefix(prefixes[task]))
            dfs.run(prefixes[task].size());
    });
    std::uint64_t sum = 0;
    for (auto c : block)
        sum += c;
    return sum;
}

/// Whether the vertices of `s` (|s| = 2t) split into t-sets A, B with every arc A -> B present.
bool spans_pair_blowup(const Digraph & g, VertexMask s, int size)
{
    // enumerate t-subsets A of s by walking submasks
    for (VertexMask a = s; a; a = (a - 1) & s) {
        if (popcount(a) != size)
            continue;
        VertexMask b = s & ~a;
        bool complete = true;
        for (VertexMask rest = a; rest && complete; rest &= rest - 1)
            complete = (g.out_mask(std::countr_zero(rest)) & b) == b;
        if (complete)
            return true;
    }
    return false;
}

} // namespace

int census_limit(GraphMode mode) { return mode == GraphMode::Digraph ? 5 : 6; }

BigInt count_free(int n, const BlowupSpec & spec, GraphMode mode, const CensusOptions & options)
{
    check_capacity(n, mode);
    if (spec.levels < 1 || spec.size < 1)
        throw ArgumentError("blow-up needs at least one level of at least one vertex");
    if (spec.vertices() > n)
        return BigInt(graph_count(n, mode));

    auto admissible = [spec](const Digraph & g, int i, int j) {
        return ! has_blowup_through(g, spec, bit(i) | bit(j));
    };
    // a pattern without arcs is contained in every graph on enough vertices
    if (spec.levels == 1)
        return 0;
    return BigInt(parallel_dfs_count(n, mode, options.threads, admissible, [](const Digraph &) { return 1; }));
}

bool admits_partition(const Digraph & g, int parts, int size)
{
    check_parts(parts, size);
    int n = g.order();
    if (parts >= n)
        return true;

    // good[s]: s induces a T_2^t-free graph. The family is closed under
    // subsets, and a copy spans exactly 2t vertices, so only sets of that size
    // need a direct test.
    std::size_t total = std::size_t{1} << n;
    std::vector<std::uint8_t> good(total, 0);
    for (std::size_t s = 0; s < total; ++s) {
        auto mask = static_cast<VertexMask>(s);
        int count = popcount(mask);
        if (count < 2 * size) {
            good[s] = 1;
            continue;
        }
        bool subsets_good = true;
        for (VertexMask rest = mask; rest && subsets_good; rest &= rest - 1)
            subsets_good = good[mask & ~(rest & -rest)];
        good[s] = subsets_good && (count > 2 * size || ! spans_pair_blowup(g, mask, size));
    }

    // fewest good sets covering each mask; covers by down-closed sets are partitions
    std::vector<std::uint8_t> cover(total, 0xff);
    cover[0] = 0;
    for (std::size_t m = 1; m < total; ++m) {
        auto mask = static_cast<VertexMask>(m);
        VertexMask low = mask & -mask;
        VertexMask others = mask & ~low;
        std::uint8_t best = 0xff;
        for (VertexMask sub = others;; sub = (sub - 1) & others) {
            VertexMask part = sub | low;
            if (good[part] && cover[mask & ~part] != 0xff)
                best = std::min<std::uint8_t>(best, static_cast<std::uint8_t>(cover[mask & ~part] + 1));
            if (sub == 0)
                break;
        }
        cover[m] = best;
    }
    return cover[total - 1] <= parts;
}

namespace {

auto partite_admissible(int parts, int size)
{
    return [parts, size](const Digraph & g, int, int) { return admits_partition(g, parts, size); };
}

} // namespace

BigInt count_partite(int n, int parts, int size, GraphMode mode, const CensusOptions & options)
{
    check_capacity(n, mode);
    check_parts(parts, size);
    return BigInt(parallel_dfs_count(n, mode, options.threads, partite_admissible(parts, size),
                                     [](const Digraph &) { return 1; }));
}

void for_each_partite(int n, int parts, int size, GraphMode mode, const std::function<void(const Digraph &)> & visit)
{
    check_capacity(n, mode);
    check_parts(parts, size);
    PairDfs dfs(n, mode, partite_admissible(parts, size), visit);
    dfs.run(0);
}

int partite_bound_exponent(int n, int parts, int size)
{
    check_parts(parts, size);
    int m = n / parts;
    if (m < 2)
        return 0;
    return extremal(m, BlowupSpec{2, size}, Weight::rational(2, 1), {GraphMode::Oriented, 1}).best.f1;
}

BigInt lower_bound_partite(int n, int parts, int size)
{
    if (n < 1)
        throw ArgumentError("vertex count must be at least 1");
    int exponent = partite_bound_exponent(n, parts, size);
    BigInt bound = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(turan_edges(n, parts)));
    return bound << exponent;
}

CensusReport ratio_report(int n, int parts, int size, GraphMode mode, const CensusOptions & options)
{
    check_capacity(n, mode);
    check_parts(parts, size);
    BlowupSpec spec{parts + 1, size};

    CensusReport report;
    report.n = n;
    report.parts = parts;
    report.size = size;
    report.mode = mode;
    report.free_count = count_free(n, spec, mode, options);

    std::atomic<std::uint64_t> not_free{0};
    report.partite_count = BigInt(parallel_dfs_count(n, mode, options.threads, partite_admissible(parts, size),
                                                     [&](const Digraph & g) {
                                                         if (! is_free(g, spec))
                                                             ++not_free;
                                                         return 1;
                                                     }));
    report.partite_not_free = BigInt(not_free.load());
    report.ratio = BigRational(report.free_count, report.partite_count);
    report.lower_bound_exponent = n >= 1 ? partite_bound_exponent(n, parts, size) : 0;
    report.lower_bound = n >= 1 ? lower_bound_partite(n, parts, size) : BigInt(1);
    return report;
}

} // namespace ttlab
