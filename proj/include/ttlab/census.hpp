#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ttlab/digraph.hpp"

namespace ttlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct CensusOptions
{
    int threads = 1;
};

/// Enumeration bound of the exact counters: 6 vertices for oriented graphs,
/// 5 for digraphs.
int census_limit(GraphMode mode);

/// Labelled T_k^t-free graphs on [n], by depth-first assignment of pair states
/// that abandons a branch as soon as an added arc completes a copy.
BigInt count_free(int n, const BlowupSpec & spec, GraphMode mode, const CensusOptions & options = {});

/// Whether V(g) splits into at most `parts` classes each inducing a T_2^t-free graph.
bool admits_partition(const Digraph & g, int parts, int size);

/// Labelled graphs on [n] admitting a partition into at most `parts` classes
/// (any sizes, empty allowed) whose induced subgraphs are all T_2^t-free.
BigInt count_partite(int n, int parts, int size, GraphMode mode, const CensusOptions & options = {});

/// Calls visit(g) for every graph counted by count_partite, in encoding order.
void for_each_partite(int n, int parts, int size, GraphMode mode, const std::function<void(const Digraph &)> & visit);

/// Exponent E of the partite lower bound: the most arcs of a T_2^t-free
/// oriented graph on floor(n / parts) vertices.
int partite_bound_exponent(int n, int parts, int size);

/// 3^{t_r(n)} * 2^E with E = partite_bound_exponent(n, r, t).
BigInt lower_bound_partite(int n, int parts, int size);

struct CensusReport
{
    int n = 0;
    int parts = 0;
    int size = 0;
    GraphMode mode = GraphMode::Oriented;
    BigInt free_count;
    BigInt partite_count;
    /// free_count / partite_count.
    BigRational ratio;
    BigInt lower_bound;
    int lower_bound_exponent = 0;
    /// Members of the partite family that nevertheless contain T_{r+1}^t.
    BigInt partite_not_free;
};

/// Both counts for T_{r+1}^t, their exact ratio and the lower bound. Reports only.
CensusReport ratio_report(int n, int parts, int size, GraphMode mode, const CensusOptions & options = {});

} // namespace ttlab
