#include "ttlab/enumerate.hpp"

#include <array>
#include <limits>

#include "ttlab/error.hpp"

namespace ttlab {

std::span<const PairState> pair_states(GraphMode mode)
{
    static constexpr std::array<PairState, 4> all{PairState::None, PairState::Fwd, PairState::Bwd,
                                                  PairState::Both};
    return mode == GraphMode::Digraph ? std::span<const PairState>(all)
                                      : std::span<const PairState>(all.data(), 3);
}

std::uint64_t graph_count(int n, GraphMode mode)
{
    std::uint64_t base = pair_states(mode).size();
    std::uint64_t total = 1;
    for (int p = 0; p < pair_count(n); ++p) {
        if (total > std::numeric_limits<std::uint64_t>::max() / base)
            throw CapacityError("graph count on " + std::to_string(n) + " vertices overflows 64 bits");
        total *= base;
    }
    return total;
}

std::vector<std::vector<PairState>> pair_prefixes(int n, GraphMode mode, int depth)
{
    depth = std::min(depth, pair_count(n));
    std::vector<std::vector<PairState>> out{{}};
    for (int d = 0; d < depth; ++d) {
        std::vector<std::vector<PairState>> next;
        for (const auto & prefix : out)
            for (PairState s : pair_states(mode)) {
                next.push_back(prefix);
                next.back().push_back(s);
            }
        out = std::move(next);
    }
    return out;
}

} // namespace ttlab
