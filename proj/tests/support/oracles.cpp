#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ttlab/construct.hpp"
#include "ttlab/embed.hpp"
#include "ttlab/enumerate.hpp"

namespace ttlab::oracle {

namespace {

bool preserves_arcs(const Digraph & host, const Digraph & pattern, const std::vector<int> & map)
{
    for (int u = 0; u < pattern.order(); ++u)
        for (int v = 0; v < pattern.order(); ++v)
            if (pattern.has_arc(u, v) && ! host.has_arc(map[u], map[v]))
                return false;
    return true;
}

/// Visits injective maps [h] -> [n] in lexicographic order until visit returns true.
bool for_each_injection(int h, int n, const std::function<bool(const std::vector<int> &)> & visit)
{
    std::vector<int> map;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<bool()> extend = [&]() -> bool {
        if (static_cast<int>(map.size()) == h)
            return visit(map);
        for (int x = 0; x < n; ++x) {
            if (used[x])
                continue;
            used[x] = true;
            map.push_back(x);
            bool stop = extend();
            map.pop_back();
            used[x] = false;
            if (stop)
                return true;
        }
        return false;
    };
    return extend();
}

} // namespace

std::uint64_t count_embeddings(const Digraph & host, const Digraph & pattern)
{
    std::uint64_t total = 0;
    for_each_injection(pattern.order(), host.order(), [&](const std::vector<int> & map) {
        total += preserves_arcs(host, pattern, map);
        return false;
    });
    return total;
}

std::optional<std::vector<int>> least_embedding(const Digraph & host, const Digraph & pattern)
{
    std::optional<std::vector<int>> found;
    for_each_injection(pattern.order(), host.order(), [&](const std::vector<int> & map) {
        if (! preserves_arcs(host, pattern, map))
            return false;
        found = map;
        return true;
    });
    return found;
}

BigInt count_free(int n, const BlowupSpec & spec, GraphMode mode)
{
    if (spec.vertices() > n)
        return BigInt(graph_count(n, mode));
    Digraph pattern = realize(spec);
    std::uint64_t total = 0;
    for_each_graph(n, mode, [&](const Digraph & g) { total += ! contains(g, pattern).has_value(); });
    return BigInt(total);
}

bool admits_partition(const Digraph & g, int parts, int size)
{
    int n = g.order();
    Partition p{parts, std::vector<int>(static_cast<std::size_t>(n), 0)};
    while (true) {
        if (partition_ok(g, p, size))
            return true;
        int v = 0;
        while (v < n && p.assign[static_cast<std::size_t>(v)] == parts - 1)
            p.assign[static_cast<std::size_t>(v++)] = 0;
        if (v == n)
            return false;
        ++p.assign[static_cast<std::size_t>(v)];
    }
}

BigInt count_partite(int n, int parts, int size, GraphMode mode)
{
    std::uint64_t total = 0;
    for_each_graph(n, mode, [&](const Digraph & g) { total += oracle::admits_partition(g, parts, size); });
    return BigInt(total);
}

Ratio density_m(const BlowupSpec & spec)
{
    Digraph h = realize(spec);
    int n = h.order();
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (h.has_arc(u, v))
                arcs.emplace_back(u, v);

    Ratio best(-1);
    for (VertexMask s = 0; s < (VertexMask{1} << n); ++s) {
        int vertices = popcount(s);
        if (vertices < 3)
            continue;
        std::vector<std::size_t> inside;
        for (std::size_t a = 0; a < arcs.size(); ++a)
            if ((s & bit(arcs[a].first)) && (s & bit(arcs[a].second)))
                inside.push_back(a);
        for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << inside.size()); ++subset) {
            int e = std::popcount(subset);
            if (e < 2)
                continue;
            best = std::max(best, Ratio(e - 1, vertices - 2));
        }
    }
    return best;
}

int edit_distance(const Digraph & g, int parts)
{
    int n = g.order();
    auto sizes = turan_part_sizes(n, parts);
    std::sort(sizes.begin(), sizes.end());
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    int best = -1;
    while (true) {
        std::vector<int> count(static_cast<std::size_t>(parts), 0);
        for (int c : assign)
            ++count[static_cast<std::size_t>(c)];
        std::sort(count.begin(), count.end());
        if (count == sizes) {
            int diff = 0;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (u != v)
                        diff += g.has_arc(u, v) != (assign[u] != assign[v]);
            if (best < 0 || diff < best)
                best = diff;
        }
        int v = 0;
        while (v < n && assign[static_cast<std::size_t>(v)] == parts - 1)
            assign[static_cast<std::size_t>(v++)] = 0;
        if (v == n)
            break;
        ++assign[static_cast<std::size_t>(v)];
    }
    return best;
}

Digraph random_graph(int n, GraphMode mode, std::mt19937_64 & rng)
{
    auto states = pair_states(mode);
    std::uniform_int_distribution<std::size_t> pick(0, states.size() - 1);
    Digraph g(n);
    for (auto [i, j] : lex_pairs(n))
        g.set_state(i, j, states[pick(rng)]);
    return g;
}

Digraph relabel(const Digraph & g, const std::vector<int> & perm)
{
    Digraph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (g.has_arc(u, v))
                out.add_arc(perm[u], perm[v]);
    return out;
}

} // namespace ttlab::oracle
