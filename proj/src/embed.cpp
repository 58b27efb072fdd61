#include "ttlab/embed.hpp"

#include <array>

#include "ttlab/error.hpp"

namespace ttlab {

namespace {

using Domains = std::array<VertexMask, kMaxVertices>;

int lowest(VertexMask m) { return std::countr_zero(m); }

/// Candidate images for each pattern vertex, filtered by degree lower bounds.
Domains initial_domains(const Digraph & host, const Digraph & pattern)
{
    Domains d{};
    for (int u = 0; u < pattern.order(); ++u)
        for (int x = 0; x < host.order(); ++x)
            if (host.out_degree(x) >= pattern.out_degree(u) && host.in_degree(x) >= pattern.in_degree(u))
                d[u] |= bit(x);
    return d;
}

/// Restricts the domains of `targets` after mapping pattern vertex u to host vertex x.
/// Returns false on a wipe-out.
bool propagate(const Digraph & host, const Digraph & pattern, Domains & d, VertexMask targets, int u, int x)
{
    for (VertexMask rest = targets; rest; rest &= rest - 1) {
        int v = lowest(rest);
        VertexMask dv = d[v] & ~bit(x);
        if (pattern.has_arc(u, v))
            dv &= host.out_mask(x);
        if (pattern.has_arc(v, u))
            dv &= host.in_mask(x);
        if (! dv)
            return false;
        d[v] = dv;
    }
    return true;
}

// Assigns pattern vertices in index order and images in increasing order, so
// the first complete assignment is the lexicographically least embedding.
bool search_least(const Digraph & host, const Digraph & pattern, const Domains & d, int u, std::vector<int> & map)
{
    int h = pattern.order();
    if (u == h)
        return true;
    VertexMask later = full_mask(h) & ~full_mask(u + 1);
    for (VertexMask cand = d[u]; cand; cand &= cand - 1) {
        int x = lowest(cand);
        Domains next = d;
        if (! propagate(host, pattern, next, later, u, x))
            continue;
        map[u] = x;
        if (search_least(host, pattern, next, u + 1, map))
            return true;
    }
    return false;
}

// Fail-first: always branch on the unassigned pattern vertex with the fewest candidates.
std::uint64_t count_all(const Digraph & host, const Digraph & pattern, const Domains & d, VertexMask unassigned)
{
    if (! unassigned)
        return 1;
    int best = -1;
    int best_size = kMaxVertices + 1;
    for (VertexMask rest = unassigned; rest; rest &= rest - 1) {
        int v = lowest(rest);
        int size = popcount(d[v]);
        if (size < best_size) {
            best = v;
            best_size = size;
        }
    }
    VertexMask others = unassigned & ~bit(best);
    if (! others)
        return static_cast<std::uint64_t>(best_size);

    std::uint64_t total = 0;
    for (VertexMask cand = d[best]; cand; cand &= cand - 1) {
        int x = lowest(cand);
        Domains next = d;
        if (propagate(host, pattern, next, others, best, x))
            total += count_all(host, pattern, next, others);
    }
    return total;
}

class ChainSearch
{
public:
    ChainSearch(const Digraph & host, const BlowupSpec & spec, VertexMask required)
        : host_(host), levels_(spec.levels), size_(spec.size), required_(required)
    {
    }

    bool run(VertexMask allowed)
    {
        chosen_.assign(static_cast<std::size_t>(levels_), 0);
        if (spec_vertices() > popcount(allowed) || (required_ & ~allowed))
            return false;
        return level(0, allowed, 0);
    }

    const std::vector<VertexMask> & levels() const { return chosen_; }

private:
    int spec_vertices() const { return levels_ * size_; }

    bool level(int l, VertexMask common, VertexMask used)
    {
        if (l == levels_)
            return (required_ & ~used) == 0;
        VertexMask pool = common & ~used;
        VertexMask missing = required_ & ~used;
        if (missing & ~pool)
            return false;
        if (popcount(pool) < (levels_ - l) * size_)
            return false;

        int after = (levels_ - l - 1) * size_;
        VertexMask candidates = 0;
        for (VertexMask rest = pool; rest; rest &= rest - 1) {
            int x = lowest(rest);
            if (popcount(pool & host_.out_mask(x)) >= after)
                candidates |= bit(x);
        }
        return pick(l, candidates, size_, common, used, 0);
    }

    // Chooses the remaining `left` members of level l from `rest` (increasing order).
    bool pick(int l, VertexMask rest, int left, VertexMask common, VertexMask used, VertexMask chosen)
    {
        if (left == 0) {
            chosen_[static_cast<std::size_t>(l)] = chosen;
            return level(l + 1, common, used | chosen);
        }
        int after = (levels_ - l - 1) * size_;
        VertexMask missing = required_ & ~used & ~chosen;
        while (popcount(rest) >= left) {
            // every missing required vertex is either still selectable here or reachable later
            if (missing & ~rest & ~common)
                return false;
            int x = lowest(rest);
            rest &= rest - 1;
            VertexMask next_common = common & host_.out_mask(x);
            if (popcount(next_common & ~used & ~chosen & ~bit(x)) < after)
                continue;
            if (pick(l, rest, left - 1, next_common, used, chosen | bit(x)))
                return true;
        }
        return false;
    }

    const Digraph & host_;
    int levels_;
    int size_;
    VertexMask required_;
    std::vector<VertexMask> chosen_;
};

} // namespace

std::optional<Embedding> contains(const Digraph & host, const Digraph & pattern)
{
    int h = pattern.order();
    if (h > host.order())
        return std::nullopt;
    Domains d = initial_domains(host, pattern);
    for (int u = 0; u < h; ++u)
        if (! d[u])
            return std::nullopt;
    Embedding e{std::vector<int>(static_cast<std::size_t>(h), -1)};
    if (! search_least(host, pattern, d, 0, e.map))
        return std::nullopt;
    return e;
}

bool is_embedding(const Digraph & host, const Digraph & pattern, const Embedding & candidate)
{
    int h = pattern.order();
    if (static_cast<int>(candidate.map.size()) != h)
        return false;
    VertexMask seen = 0;
    for (int x : candidate.map) {
        if (x < 0 || x >= host.order() || (seen & bit(x)))
            return false;
        seen |= bit(x);
    }
    for (int u = 0; u < h; ++u)
        for (int v = 0; v < h; ++v)
            if (pattern.has_arc(u, v) && ! host.has_arc(candidate.map[u], candidate.map[v]))
                return false;
    return true;
}

std::uint64_t count_embeddings(const Digraph & host, const Digraph & pattern)
{
    int h = pattern.order();
    if (h > host.order())
        return 0;
    Domains d = initial_domains(host, pattern);
    for (int u = 0; u < h; ++u)
        if (! d[u])
            return 0;
    return count_all(host, pattern, d, full_mask(h));
}

std::uint64_t automorphism_count(const Digraph & pattern) { return count_embeddings(pattern, pattern); }

std::uint64_t count_copies(const Digraph & host, const Digraph & pattern)
{
    return count_embeddings(host, pattern) / automorphism_count(pattern);
}

bool is_free_within(const Digraph & host, const BlowupSpec & spec, VertexMask allowed)
{
    if (spec.levels < 1 || spec.size < 1)
        throw ArgumentError("blow-up needs at least one level of at least one vertex");
    ChainSearch search(host, spec, 0);
    return ! search.run(allowed & full_mask(host.order()));
}

bool is_free(const Digraph & host, const BlowupSpec & spec)
{
    return is_free_within(host, spec, full_mask(host.order()));
}

bool has_blowup_through(const Digraph & host, const BlowupSpec & spec, VertexMask required)
{
    ChainSearch search(host, spec, required);
    return search.run(full_mask(host.order()));
}

std::optional<std::vector<VertexMask>> find_blowup(const Digraph & host, const BlowupSpec & spec)
{
    ChainSearch search(host, spec, 0);
    if (! search.run(full_mask(host.order())))
        return std::nullopt;
    return search.levels();
}

bool partition_ok(const Digraph & host, const Partition & partition, int size)
{
    if (static_cast<int>(partition.assign.size()) != host.order())
        throw ArgumentError("partition covers " + std::to_string(partition.assign.size()) + " vertices, graph has "
                            + std::to_string(host.order()));
    for (int c : partition.assign)
        if (c < 0 || c >= partition.classes)
            throw ArgumentError("class index " + std::to_string(c) + " outside [0, "
                                + std::to_string(partition.classes) + ")");
    BlowupSpec pair_spec{2, size};
    for (int c = 0; c < partition.classes; ++c)
        if (! is_free_within(host, pair_spec, partition.members(c)))
            return false;
    return true;
}

} // namespace ttlab
