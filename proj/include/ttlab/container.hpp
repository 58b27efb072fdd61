#pragma once

#include <cstdint>

#include <boost/rational.hpp>

#include "ttlab/digraph.hpp"

namespace ttlab {

using Ratio = boost::rational<std::int64_t>;

/// m(H) = max over subgraphs H' with e(H') > 1 of (e(H') - 1) / (v(H') - 2), for H = T_k^t.
struct DensityResult
{
    BlowupSpec spec;
    Ratio m;
    /// Vertices of realize(spec) spanning the maximiser.
    VertexMask vertices = 0;
    /// The maximiser: all arcs of H inside `vertices`, relabelled in increasing order.
    Digraph argmax;
};

/// For a fixed vertex set the value grows with the arc count, so the maximum
/// is taken over vertex subsets of size >= 3 with all their arcs. Ties go to
/// the smaller vertex set, then to the smaller encoding.
/// Throws ArgumentError when T_k^t has fewer than two arcs.
DensityResult density_m(const BlowupSpec & spec);

struct ContainerExponent
{
    DensityResult density;
    /// 2 - 1/m(H).
    Ratio exponent;
    int n = 0;
    /// n^{2 - 1/m} * log2(n); the constant factor of the container bound is unknown.
    double bound_shape = 0.0;
};

ContainerExponent container_exponent(int n, const BlowupSpec & spec);

} // namespace ttlab
