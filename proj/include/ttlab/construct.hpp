#pragma once

#include <cstdint>
#include <vector>

#include "ttlab/digraph.hpp"

namespace ttlab {

/// T_k^t on vertices 0..k*t-1; level l occupies the block [l*t, (l+1)*t).
/// Throws CapacityError when k*t > 16 and ArgumentError when k or t is < 1.
Digraph blowup(int levels, int size);

inline Digraph realize(const BlowupSpec & spec) { return blowup(spec.levels, spec.size); }

/// Part sizes of the balanced r-partition of n vertices, larger parts first.
std::vector<int> turan_part_sizes(int n, int r);

/// The partition of 0..n-1 into consecutive blocks of turan_part_sizes(n, r).
Partition turan_partition(int n, int r);

/// t_r(n): edges of the Turan graph Tu_r(n).
std::int64_t turan_edges(int n, int r);

/// DT_r(n): Tu_r(n) with every edge replaced by a pair of opposite arcs.
Digraph make_dtr(int n, int r);

/// Tu_r(n) with each edge oriented from the smaller to the larger vertex.
Digraph make_forward_turan(int n, int r);

} // namespace ttlab
