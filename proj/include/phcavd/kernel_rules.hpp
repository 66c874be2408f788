#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phcavd/clique_partition.hpp"
#include "phcavd/graph.hpp"
#include "phcavd/modulator.hpp"

namespace phcavd {

// One applied rule, recorded in the input graph's label space so traces can
// be replayed against the original instance.
struct TraceEvent {
    std::string rule;
    int k_before = 0;
    int k_after = 0;
    std::vector<std::int64_t> deleted_labels;
    std::vector<std::int64_t> added_labels;
    std::vector<std::pair<std::int64_t, std::int64_t>> added_edges;
    std::map<std::string, std::int64_t> params;
};

// The unit every rule transforms: graph, budget, nice modulator and a
// verified clique partition per component of G - T (partitions and
// components hold current graph ids).
struct Instance {
    Graph graph;
    int k = 0;
    ModulatorBundle bundle;
    std::vector<VertexSet> components;
    std::vector<CliquePartition> partitions;
};

// Components and partitions of G - T, rebuilt from scratch.
Instance build_instance(Graph graph, int k, ModulatorBundle bundle);

// G - T is PHCA, every partition verifies, k >= 0.
bool verify_instance(const Instance& inst);

struct MarkedClique {
    int component = -1;
    int clique_index = -1;
    VertexSet marked;
};

// Marking scheme for one clique: for every disjoint A, B over T with
// |A|, |B| <= 2, the vertices of the clique adjacent to all of A and none of
// B are marked — all of them if at most 2(k+1), else the leftmost k+1 and
// rightmost k+1 under the within-clique order.
MarkedClique mark1(const Instance& inst, int component, int clique_index);

struct RuleOutcome {
    enum class Status { NotApplicable, Applied, NoInstance };
    Status status = Status::NotApplicable;
    Instance next;          // Applied only; stale bundle when restart_required
    TraceEvent event;       // Applied or NoInstance
    bool restart_required = false;  // k decreased: modulator must be rebuilt
};

// Deletes the lexicographically smallest unmarked clique vertex (k fixed).
// Gated on a guaranteed oracle: its safety leans on the necessity of W.
RuleOutcome rule_bound_clique(const Instance& inst);

// Deletes v in T carried by k+1 leaf-disjoint claws into G - T (k drops).
RuleOutcome rule_claw_center(const Instance& inst);

// Deletes v in T with neighbors in more than 6(k+1) cliques of one
// component's partition (k drops).
RuleOutcome rule_clique_spread(const Instance& inst);

// Replaces the middle of a 50k-clique N(T)-free run by a fresh clique of
// min-cut size between the run's inner boundary cliques (k fixed).
// Gated on k >= 1.
RuleOutcome rule_compress_chunk(const Instance& inst);

// Deletes v in T with neighbors in at least 3(k+1) components (k drops).
RuleOutcome rule_component_spread(const Instance& inst);

// Keeps only the k+1 smallest-representative interval components that have
// no neighbor in T; the at-most-one non-interval component is never touched.
RuleOutcome rule_drop_interval_components(const Instance& inst);

// Wraps the modulator-level singleton rule into instance form.
RuleOutcome rule_singleton_w(const Instance& inst);

}  // namespace phcavd
