#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ttlab/digraph.hpp"

namespace ttlab {

/// Pair states available in a mode, in encoding order.
std::span<const PairState> pair_states(GraphMode mode);

/// 3^C(n,2) or 4^C(n,2); throws CapacityError if it does not fit in 64 bits.
std::uint64_t graph_count(int n, GraphMode mode);

/// All assignments of the first `depth` pairs, in encoding order.
std::vector<std::vector<PairState>> pair_prefixes(int n, GraphMode mode, int depth);

/// Visits every labelled graph on n vertices whose first pairs carry the
/// states in `prefix`, in increasing encoding order. The graph passed to
/// `visit` is reused between calls.
template <typename Visit>
void for_each_graph(int n, GraphMode mode, std::span<const PairState> prefix, Visit && visit)
{
    auto pairs = lex_pairs(n);
    auto states = pair_states(mode);
    int base = static_cast<int>(states.size());
    int fixed = static_cast<int>(prefix.size());
    int total = static_cast<int>(pairs.size());

    Digraph g(n);
    for (int p = 0; p < fixed; ++p)
        g.set_state(pairs[p].first, pairs[p].second, prefix[p]);

    std::vector<int> digit(pairs.size(), 0);
    while (true) {
        visit(static_cast<const Digraph &>(g));
        int p = total - 1;
        while (p >= fixed && digit[p] == base - 1) {
            digit[p] = 0;
            g.set_state(pairs[p].first, pairs[p].second, states[0]);
            --p;
        }
        if (p < fixed)
            return;
        ++digit[p];
        g.set_state(pairs[p].first, pairs[p].second, states[digit[p]]);
    }
}

template <typename Visit>
void for_each_graph(int n, GraphMode mode, Visit && visit)
{
    for_each_graph(n, mode, std::span<const PairState>{}, std::forward<Visit>(visit));
}

} // namespace ttlab
