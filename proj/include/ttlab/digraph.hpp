#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace ttlab {

/// Hard upper bound on the number of vertices of any Digraph.
inline constexpr int kMaxVertices = 16;

/// Bit set over vertices 0..15.
using VertexMask = std::uint32_t;

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }
inline constexpr VertexMask full_mask(int n) { return n >= 32 ? ~VertexMask{0} : bit(n) - 1; }
inline int popcount(VertexMask m) { return std::popcount(m); }

/// State of an unordered pair {i, j} with i < j. The numeric values are the
/// digits of the text encoding, so they also define the encoding order.
enum class PairState : std::uint8_t
{
    None = 0,
    Fwd = 1,  // i -> j
    Bwd = 2,  // j -> i
    Both = 3,
};

/// Whether enumeration and search range over all digraphs or oriented graphs only.
enum class GraphMode
{
    Oriented,
    Digraph,
};

/// Number of unordered pairs on n vertices.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Pairs (i, j), i < j, in lexicographic order. This is the order used by the
/// encoding, by enumeration and by the branch-and-bound solver.
std::vector<std::pair<int, int>> lex_pairs(int n);

/// Labelled digraph on at most 16 vertices without self-loops, stored as
/// out- and in-neighbourhood bit masks.
class Digraph
{
public:
    Digraph() = default;
    explicit Digraph(int n);

    int order() const noexcept { return n_; }

    bool has_arc(int u, int v) const noexcept { return (out_[u] >> v) & 1U; }
    VertexMask out_mask(int u) const noexcept { return out_[u]; }
    VertexMask in_mask(int u) const noexcept { return in_[u]; }
    int out_degree(int u) const noexcept { return std::popcount(out_[u]); }
    int in_degree(int u) const noexcept { return std::popcount(in_[u]); }

    /// State of the pair {i, j}; i and j may be given in either order.
    PairState state(int i, int j) const noexcept;
    void set_state(int i, int j, PairState s) noexcept;

    void add_arc(int u, int v) noexcept;
    void remove_arc(int u, int v) noexcept;

    /// Pairs joined by exactly one arc.
    int f1() const noexcept;
    /// Pairs joined by arcs in both directions.
    int f2() const noexcept;
    int arc_count() const noexcept;
    bool is_oriented() const noexcept { return f2() == 0; }

    /// Subdigraph induced by the vertices of `mask`, relabelled in increasing order.
    Digraph induced(VertexMask mask) const;

    bool operator==(const Digraph & other) const noexcept;
    /// Orders by vertex count, then by pair states in lexicographic pair order.
    /// For a fixed vertex count this is the order of the text encodings.
    std::strong_ordering operator<=>(const Digraph & other) const noexcept;

private:
    int n_ = 0;
    std::array<std::uint16_t, kMaxVertices> out_{};
    std::array<std::uint16_t, kMaxVertices> in_{};
};

/// Parameters of the blow-up T_k^t: k levels of t independent vertices each,
/// with every arc from an earlier level to a later one.
struct BlowupSpec
{
    int levels = 1;
    int size = 1;

    int vertices() const noexcept { return levels * size; }
    int arcs() const noexcept { return size * size * levels * (levels - 1) / 2; }

    bool operator==(const BlowupSpec &) const = default;
};

/// Assignment of vertices to classes 0..classes-1. Classes may be empty.
struct Partition
{
    int classes = 0;
    std::vector<int> assign;

    /// Vertex set of class c.
    VertexMask members(int c) const;
};

} // namespace ttlab
