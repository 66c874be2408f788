#pragma once

#include <vector>

#include "phcavd/graph.hpp"

namespace phcavd {

// Ordered clique partition of one connected component. Cliques carry their
// within-clique ("clockwise") vertex order; mark/compress rules rely on it.
// Circular partitions allow edges between the last and first clique.
struct CliquePartition {
    bool circular = false;
    std::vector<std::vector<int>> cliques;
    int component_id = -1;

    int clique_count() const { return static_cast<int>(cliques.size()); }
};

// True iff the partition covers the component with disjoint cliques, edges
// only join consecutive cliques (indices mod t when circular), and every
// vertex sees a prefix of the next clique and a suffix of the previous one
// under the within-clique orders.
bool verify_partition(const Graph& c, const CliquePartition& p);

// Builds a verified nice clique partition of a connected proper Helly
// circular-arc component: 3-sweep lexicographic BFS for the interval case,
// a maximal-clique cut reducing to it for the circular case, greedy cuts
// gated by verify_partition, exhaustive order search below
// kExhaustiveOrderLimit vertices as a last resort.
// Throws NotPhcaError on non-PHCA input, std::logic_error when disconnected
// or when no verified partition could be constructed.
CliquePartition nice_clique_partition(const Graph& c);

inline constexpr int kExhaustiveOrderLimit = 12;

}  // namespace phcavd
