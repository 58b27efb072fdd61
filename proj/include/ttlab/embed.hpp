#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ttlab/digraph.hpp"

namespace ttlab {

/// Injective map from the vertices of a pattern H into a host G such that
/// every arc u->v of H lands on an arc map[u]->map[v] of G. Containment is
/// not induced: extra arcs of G between image vertices are irrelevant.
struct Embedding
{
    std::vector<int> map;

    bool operator==(const Embedding &) const = default;
};

/// The lexicographically least embedding of `pattern` into `host`, if any.
std::optional<Embedding> contains(const Digraph & host, const Digraph & pattern);

/// Whether `candidate` is a valid embedding of `pattern` into `host`.
bool is_embedding(const Digraph & host, const Digraph & pattern, const Embedding & candidate);

/// Number of injective arc-preserving maps from `pattern` into `host`.
std::uint64_t count_embeddings(const Digraph & host, const Digraph & pattern);

/// |Aut(H)|, counted as embeddings of H into itself.
std::uint64_t automorphism_count(const Digraph & pattern);

/// Embeddings divided by |Aut(pattern)|: unlabelled copies of the pattern in the host.
std::uint64_t count_copies(const Digraph & host, const Digraph & pattern);

// Blow-up specific search. A copy of T_k^t is a chain of k disjoint t-sets
// L_1, ..., L_k with an arc from every vertex of L_i to every vertex of L_j
// for all i < j. The level sets need not be independent in the host.

/// Whether the host contains no copy of T_k^t.
bool is_free(const Digraph & host, const BlowupSpec & spec);

/// Whether the subdigraph induced by `allowed` contains no copy of T_k^t.
bool is_free_within(const Digraph & host, const BlowupSpec & spec, VertexMask allowed);

/// Whether some copy of T_k^t in the host uses every vertex of `required`.
/// With required = {u, v} after adding arcs between u and v to a T_k^t-free
/// graph, this decides whether the graph is still free.
bool has_blowup_through(const Digraph & host, const BlowupSpec & spec, VertexMask required);

/// The level sets of a copy of T_k^t in the host, if any.
std::optional<std::vector<VertexMask>> find_blowup(const Digraph & host, const BlowupSpec & spec);

/// Whether every class of `partition` induces a T_2^t-free subdigraph.
/// Throws ArgumentError if the partition does not cover the host or uses
/// a class index outside [0, classes).
bool partition_ok(const Digraph & host, const Partition & partition, int size);

} // namespace ttlab
