#include "ttlab/digraph.hpp"

#include "ttlab/error.hpp"

namespace ttlab {

std::vector<std::pair<int, int>> lex_pairs(int n)
{
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(pair_count(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    return pairs;
}

Digraph::Digraph(int n) : n_(n)
{
    if (n < 0)
        throw ArgumentError("vertex count must be nonnegative");
    if (n > kMaxVertices)
        throw CapacityError("digraphs are limited to " + std::to_string(kMaxVertices) + " vertices, got "
                            + std::to_string(n));
}

PairState Digraph::state(int i, int j) const noexcept
{
    if (i > j)
        std::swap(i, j);
    unsigned fwd = (out_[i] >> j) & 1U;
    unsigned bwd = (out_[j] >> i) & 1U;
    return static_cast<PairState>(fwd | (bwd << 1));
}

void Digraph::set_state(int i, int j, PairState s) noexcept
{
    if (i > j) {
        std::swap(i, j);
        // keep the meaning of Fwd/Bwd relative to the ordered pair
        if (s == PairState::Fwd)
            s = PairState::Bwd;
        else if (s == PairState::Bwd)
            s = PairState::Fwd;
    }
    auto v = static_cast<unsigned>(s);
    if (v & 1U)
        add_arc(i, j);
    else
        remove_arc(i, j);
    if (v & 2U)
        add_arc(j, i);
    else
        remove_arc(j, i);
}

void Digraph::add_arc(int u, int v) noexcept
{
    out_[u] = static_cast<std::uint16_t>(out_[u] | bit(v));
    in_[v] = static_cast<std::uint16_t>(in_[v] | bit(u));
}

void Digraph::remove_arc(int u, int v) noexcept
{
    out_[u] = static_cast<std::uint16_t>(out_[u] & ~bit(v));
    in_[v] = static_cast<std::uint16_t>(in_[v] & ~bit(u));
}

int Digraph::arc_count() const noexcept
{
    int total = 0;
    for (int u = 0; u < n_; ++u)
        total += std::popcount(out_[u]);
    return total;
}

int Digraph::f2() const noexcept
{
    int twice = 0;
    for (int u = 0; u < n_; ++u)
        twice += std::popcount(static_cast<std::uint16_t>(out_[u] & in_[u]));
    return twice / 2;
}

int Digraph::f1() const noexcept { return arc_count() - 2 * f2(); }

Digraph Digraph::induced(VertexMask mask) const
{
    std::array<int, kMaxVertices> index{};
    int m = 0;
    for (int v = 0; v < n_; ++v)
        if (mask & bit(v))
            index[v] = m++;
    Digraph sub(m);
    for (int u = 0; u < n_; ++u) {
        if (! (mask & bit(u)))
            continue;
        for (int v = 0; v < n_; ++v)
            if ((mask & bit(v)) && has_arc(u, v))
                sub.add_arc(index[u], index[v]);
    }
    return sub;
}

bool Digraph::operator==(const Digraph & other) const noexcept
{
    return n_ == other.n_ && out_ == other.out_;
}

std::strong_ordering Digraph::operator<=>(const Digraph & other) const noexcept
{
    if (auto c = n_ <=> other.n_; c != 0)
        return c;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (auto c = state(i, j) <=> other.state(i, j); c != 0)
                return c;
    return std::strong_ordering::equal;
}

VertexMask Partition::members(int c) const
{
    VertexMask m = 0;
    for (std::size_t v = 0; v < assign.size(); ++v)
        if (assign[v] == c)
            m |= bit(static_cast<int>(v));
    return m;
}

} // namespace ttlab
