#pragma once

#include <cstdint>

#include "ttlab/digraph.hpp"
#include "ttlab/weight.hpp"

namespace ttlab {

struct ExtremalOptions
{
    GraphMode mode = GraphMode::Digraph;
    /// Worker threads; 0 means one per hardware thread.
    int threads = 1;
};

/// Maximum weighted size over T_k^t-free graphs on n vertices.
struct ExtremalResult
{
    int n = 0;
    BlowupSpec spec;
    Weight weight = Weight::rational(2, 1);
    GraphMode mode = GraphMode::Digraph;
    /// (f1, f2) of the optimum.
    WeightedSize best;
    /// Encoding-least graph attaining `best`.
    Digraph witness;
    /// Search nodes visited (depends on the thread schedule when threads > 1).
    std::uint64_t explored = 0;
};

/// Practical bound for the branch-and-bound solver.
inline constexpr int kExtremalMaxVertices = 8;

/// Exact ex_a(n, T_k^t) by branch and bound over pair states in lexicographic
/// pair order. The incumbent starts at the Turan construction with k-1 parts;
/// a subtree is cut when even giving every undecided pair weight a cannot beat
/// it. The witness is the least optimum in encoding order regardless of the
/// thread schedule.
///
/// Throws ArgumentError when spec.levels < 2 and CapacityError when n > 8.
ExtremalResult extremal(int n, const BlowupSpec & spec, const Weight & weight, const ExtremalOptions & options = {});

/// Unpruned enumeration of every graph; an independent check on extremal().
/// Refuses n > 5 for digraphs and n > 6 for oriented graphs.
ExtremalResult extremal_naive(int n, const BlowupSpec & spec, const Weight & weight,
                              const ExtremalOptions & options = {});

struct EditDistanceResult
{
    Digraph graph;
    int parts = 0;
    /// Arcs present inside classes plus arc slots missing between classes.
    int distance = 0;
    Partition partition;
};

/// Fewest single-arc additions or removals turning `g` into a copy of DT_r(n),
/// minimised over vertex partitions with the Turan part sizes. n <= 12.
EditDistanceResult edit_distance_to_dtr(const Digraph & g, int parts);

} // namespace ttlab
