#include "ttlab/construct.hpp"

#include "ttlab/error.hpp"

namespace ttlab {

Digraph blowup(int levels, int size)
{
    if (levels < 1 || size < 1)
        throw ArgumentError("blow-up needs at least one level of at least one vertex");
    if (levels * size > kMaxVertices)
        throw CapacityError("blow-up T_" + std::to_string(levels) + "^" + std::to_string(size) + " has "
                            + std::to_string(levels * size) + " vertices; the limit is "
                            + std::to_string(kMaxVertices));
    int n = levels * size;
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u / size < v / size)
                g.add_arc(u, v);
    return g;
}

std::vector<int> turan_part_sizes(int n, int r)
{
    if (n < 0 || r < 1)
        throw ArgumentError("Turan partition needs n >= 0 and r >= 1");
    std::vector<int> sizes(static_cast<std::size_t>(r), n / r);
    for (int i = 0; i < n % r; ++i)
        ++sizes[static_cast<std::size_t>(i)];
    return sizes;
}

Partition turan_partition(int n, int r)
{
    Partition p{r, {}};
    auto sizes = turan_part_sizes(n, r);
    for (int c = 0; c < r; ++c)
        for (int k = 0; k < sizes[static_cast<std::size_t>(c)]; ++k)
            p.assign.push_back(c);
    return p;
}

std::int64_t turan_edges(int n, int r)
{
    // every edge joins two distinct parts
    std::int64_t total = 0;
    std::int64_t earlier = 0;
    for (int s : turan_part_sizes(n, r)) {
        total += earlier * s;
        earlier += s;
    }
    return total;
}

namespace {

template <typename Join>
Digraph complete_multipartite(int n, int r, Join join)
{
    Partition p = turan_partition(n, r);
    Digraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p.assign[static_cast<std::size_t>(i)] != p.assign[static_cast<std::size_t>(j)])
                join(g, i, j);
    return g;
}

} // namespace

Digraph make_dtr(int n, int r)
{
    return complete_multipartite(n, r, [](Digraph & g, int i, int j) { g.set_state(i, j, PairState::Both); });
}

Digraph make_forward_turan(int n, int r)
{
    return complete_multipartite(n, r, [](Digraph & g, int i, int j) { g.set_state(i, j, PairState::Fwd); });
}

} // namespace ttlab
