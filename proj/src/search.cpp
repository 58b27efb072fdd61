#include "ttlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <mutex>
#include <stdexcept>

#include "ttlab/construct.hpp"
#include "ttlab/embed.hpp"
#include "ttlab/enumerate.hpp"
#include "ttlab/error.hpp"
#include "ttlab/parallel.hpp"

namespace ttlab {

namespace {

using States = std::vector<PairState>;

void check_spec(const BlowupSpec & spec)
{
    if (spec.levels < 2 || spec.size < 1)
        throw ArgumentError("extremal search needs a blow-up with at least two levels");
}

Digraph from_states(int n, const States & states)
{
    Digraph g(n);
    int p = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.set_state(i, j, states[static_cast<std::size_t>(p++)]);
    return g;
}

States to_states(const Digraph & g)
{
    States s;
    for (auto [i, j] : lex_pairs(g.order()))
        s.push_back(g.state(i, j));
    return s;
}

struct Incumbent
{
    WeightedSize best;
    States states;
};

/// The best solution found so far, shared between workers. Workers keep a
/// private copy and refresh it when the version counter moves; a stale copy
/// only weakens pruning.
class SharedIncumbent
{
public:
    SharedIncumbent(const Weight & weight, Incumbent initial) : weight_(weight), value_(std::move(initial)) {}

    void offer(const Incumbent & candidate)
    {
        std::lock_guard lock(mutex_);
        auto c = weight_.compare(candidate.best, value_.best);
        if (c > 0 || (c == 0 && candidate.states < value_.states)) {
            value_ = candidate;
            ++version_;
        }
    }

    bool refresh(Incumbent & local, std::uint64_t & seen) const
    {
        if (version_.load(std::memory_order_acquire) == seen)
            return false;
        std::lock_guard lock(mutex_);
        local = value_;
        seen = version_.load();
        return true;
    }

    Incumbent get() const
    {
        std::lock_guard lock(mutex_);
        return value_;
    }

private:
    const Weight & weight_;
    mutable std::mutex mutex_;
    Incumbent value_;
    std::atomic<std::uint64_t> version_{1};
};

class BranchAndBound
{
public:
    BranchAndBound(int n, const BlowupSpec & spec, const Weight & weight, GraphMode mode, SharedIncumbent & shared)
        : n_(n), spec_(spec), weight_(weight), mode_(mode), shared_(shared), pairs_(lex_pairs(n)), graph_(n),
          current_(pairs_.size(), PairState::None)
    {
        shared_.refresh(local_, seen_);
        // largest weight first, so good incumbents appear early
        if (mode == GraphMode::Digraph)
            order_ = {PairState::Both, PairState::Fwd, PairState::Bwd, PairState::None};
        else
            order_ = {PairState::Fwd, PairState::Bwd, PairState::None};
    }

    /// Fixes the first pairs; returns false if the prefix already contains the pattern.
    bool apply_prefix(const States & prefix)
    {
        for (std::size_t p = 0; p < prefix.size(); ++p)
            if (! assign(static_cast<int>(p), prefix[p]))
                return false;
        return true;
    }

    void run(int from) { descend(from); }

    std::uint64_t explored() const { return explored_; }

private:
    bool assign(int p, PairState s)
    {
        auto [i, j] = pairs_[static_cast<std::size_t>(p)];
        current_[static_cast<std::size_t>(p)] = s;
        if (s == PairState::None)
            return true;
        graph_.set_state(i, j, s);
        if (has_blowup_through(graph_, spec_, bit(i) | bit(j))) {
            graph_.set_state(i, j, PairState::None);
            current_[static_cast<std::size_t>(p)] = PairState::None;
            return false;
        }
        if (s == PairState::Both)
            ++size_.f2;
        else
            ++size_.f1;
        return true;
    }

    void unassign(int p)
    {
        auto [i, j] = pairs_[static_cast<std::size_t>(p)];
        PairState s = current_[static_cast<std::size_t>(p)];
        if (s == PairState::Both)
            --size_.f2;
        else if (s != PairState::None)
            --size_.f1;
        graph_.set_state(i, j, PairState::None);
        current_[static_cast<std::size_t>(p)] = PairState::None;
    }

    bool prefix_after_witness(int p) const
    {
        return std::lexicographical_compare(local_.states.begin(), local_.states.begin() + p, current_.begin(),
                                            current_.begin() + p);
    }

    void descend(int p)
    {
        if ((++explored_ & 0xfffU) == 0)
            shared_.refresh(local_, seen_);

        int remaining = static_cast<int>(pairs_.size()) - p;
        WeightedSize bound = size_;
        if (mode_ == GraphMode::Digraph)
            bound.f2 += remaining;
        else
            bound.f1 += remaining;
        auto c = weight_.compare(bound, local_.best);
        if (c < 0)
            return;
        // an equal bound can only matter for a subtree that may hold a smaller encoding
        if (c == 0 && prefix_after_witness(p))
            return;

        if (remaining == 0) {
            if (c > 0 || current_ < local_.states) {
                local_ = Incumbent{size_, current_};
                shared_.offer(local_);
                shared_.refresh(local_, seen_);
            }
            return;
        }

        for (PairState s : order_) {
            if (! assign(p, s))
                continue;
            descend(p + 1);
            unassign(p);
        }
    }

    int n_;
    BlowupSpec spec_;
    const Weight & weight_;
    GraphMode mode_;
    SharedIncumbent & shared_;
    std::vector<std::pair<int, int>> pairs_;
    Digraph graph_;
    States current_;
    WeightedSize size_;
    Incumbent local_;
    std::uint64_t seen_ = 0;
    std::uint64_t explored_ = 0;
    std::vector<PairState> order_;
};

Digraph turan_start(int n, int parts, GraphMode mode)
{
    return mode == GraphMode::Digraph ? make_dtr(n, parts) : make_forward_turan(n, parts);
}

} // namespace

ExtremalResult extremal(int n, const BlowupSpec & spec, const Weight & weight, const ExtremalOptions & options)
{
    check_spec(spec);
    if (n < 0)
        throw ArgumentError("vertex count must be nonnegative");
    if (n > kExtremalMaxVertices)
        throw CapacityError("extremal search is limited to n <= " + std::to_string(kExtremalMaxVertices)
                            + ", got n = " + std::to_string(n));

    Digraph start = turan_start(n, spec.levels - 1, options.mode);
    if (! is_free(start, spec))
        throw std::logic_error("Turan start graph contains the forbidden blow-up");
    SharedIncumbent shared(weight, Incumbent{weighted_size(start), to_states(start)});

    std::atomic<std::uint64_t> explored{0};
    int threads = resolve_threads(options.threads);
    if (threads <= 1) {
        BranchAndBound search(n, spec, weight, options.mode, shared);
        search.run(0);
        explored = search.explored();
    }
    else {
        auto prefixes = pair_prefixes(n, options.mode, 3);
        parallel_for(prefixes.size(), threads, [&](std::size_t task) {
            BranchAndBound search(n, spec, weight, options.mode, shared);
            if (search.apply_prefix(prefixes[task]))
                search.run(static_cast<int>(prefixes[task].size()));
            explored += search.explored();
        });
    }

    Incumbent final = shared.get();
    ExtremalResult result;
    result.n = n;
    result.spec = spec;
    result.weight = weight;
    result.mode = options.mode;
    result.best = final.best;
    result.witness = from_states(n, final.states);
    result.explored = explored;
    return result;
}

ExtremalResult extremal_naive(int n, const BlowupSpec & spec, const Weight & weight, const ExtremalOptions & options)
{
    check_spec(spec);
    int limit = options.mode == GraphMode::Digraph ? 5 : 6;
    if (n < 0)
        throw ArgumentError("vertex count must be nonnegative");
    if (n > limit)
        throw CapacityError("naive enumeration is limited to n <= " + std::to_string(limit) + " in "
                            + (options.mode == GraphMode::Digraph ? "digraph" : "oriented") + " mode");

    bool pattern_fits = spec.vertices() <= n;
    Digraph pattern = pattern_fits ? realize(spec) : Digraph{};

    struct Block
    {
        bool found = false;
        WeightedSize best;
        Digraph witness;
        std::uint64_t visited = 0;
    };
    auto prefixes = pair_prefixes(n, options.mode, 2);
    std::vector<Block> blocks(prefixes.size());

    parallel_for(prefixes.size(), options.threads, [&](std::size_t task) {
        Block & block = blocks[task];
        for_each_graph(n, options.mode, prefixes[task], [&](const Digraph & g) {
            ++block.visited;
            WeightedSize w = weighted_size(g);
            if (block.found && weight.compare(w, block.best) <= 0)
                return;
            if (pattern_fits && contains(g, pattern))
                return;
            // graphs arrive in increasing encoding order, so the first of each value wins
            block.found = true;
            block.best = w;
            block.witness = g;
        });
    });

    ExtremalResult result;
    result.n = n;
    result.spec = spec;
    result.weight = weight;
    result.mode = options.mode;
    bool found = false;
    for (const Block & block : blocks) {
        result.explored += block.visited;
        if (block.found && (! found || weight.compare(block.best, result.best) > 0)) {
            found = true;
            result.best = block.best;
            result.witness = block.witness;
        }
    }
    return result;
}

namespace {

class PartitionSearch
{
public:
    PartitionSearch(const Digraph & g, std::vector<int> sizes)
        : g_(g), sizes_(std::move(sizes)), count_(sizes_.size(), 0), assign_(static_cast<std::size_t>(g.order()), 0)
    {
    }

    void run() { place(0, 0); }

    int best() const { return best_; }
    const std::vector<int> & best_assign() const { return best_assign_; }

private:
    int arcs_between(int u, int v) const { return int{g_.has_arc(u, v)} + int{g_.has_arc(v, u)}; }

    void place(int v, int cost)
    {
        if (cost >= best_)
            return;
        int n = g_.order();
        if (v == n) {
            best_ = cost;
            best_assign_ = assign_;
            return;
        }
        int r = static_cast<int>(sizes_.size());
        for (int c = 0; c < r; ++c) {
            auto cu = static_cast<std::size_t>(c);
            if (count_[cu] == sizes_[cu])
                continue;
            // classes of equal size are interchangeable: open them in order
            if (count_[cu] == 0 && c > 0 && sizes_[cu - 1] == sizes_[cu] && count_[cu - 1] == 0)
                continue;
            int delta = 0;
            for (int u = 0; u < v; ++u) {
                int arcs = arcs_between(u, v);
                delta += assign_[static_cast<std::size_t>(u)] == c ? arcs : 2 - arcs;
            }
            assign_[static_cast<std::size_t>(v)] = c;
            ++count_[cu];
            place(v + 1, cost + delta);
            --count_[cu];
        }
    }

    const Digraph & g_;
    std::vector<int> sizes_;
    std::vector<int> count_;
    std::vector<int> assign_;
    int best_ = INT_MAX;
    std::vector<int> best_assign_;
};

} // namespace

EditDistanceResult edit_distance_to_dtr(const Digraph & g, int parts)
{
    if (parts < 1)
        throw ArgumentError("part count must be at least 1");
    if (g.order() > 12)
        throw CapacityError("edit distance is limited to n <= 12, got n = " + std::to_string(g.order()));

    PartitionSearch search(g, turan_part_sizes(g.order(), parts));
    search.run();

    EditDistanceResult result;
    result.graph = g;
    result.parts = parts;
    result.distance = search.best();
    result.partition = Partition{parts, search.best_assign()};
    return result;
}

} // namespace ttlab
