#pragma once

#include <optional>
#include <vector>

#include "phcavd/graph.hpp"
#include "phcavd/solver.hpp"

namespace phcavd {

// copy(G, U, t): every u in U gains t twins forming a clique with u, wired to
// all of u's neighbors and their twins. Twin ids follow the originals:
// id n + j encodes (U[j / t], j % t + 1); twins inherit their original's
// label. Makes U effectively undeletable for budgets at most t.
Graph copy_graph(const Graph& g, const VertexSet& u, int t);

// Result of the redundant-solution routine. When no_instance is false, w is
// an ell-necessary family (guaranteed oracles only) and m hits every
// obstruction not covered by w in more than r vertices.
struct RedIvdResult {
    bool no_instance = false;
    VertexSet m;
    std::vector<VertexSet> w;
    // Introspection for the size-bound checks: cumulative tuple-store and
    // solution sizes after each round 0..r.
    std::vector<std::int64_t> tuple_counts;
    std::vector<std::int64_t> m_sizes;
    int oracle_calls = 0;
};

// The tuple-driven redundant-solution loop: seed with an oracle solution,
// then per tuple call the oracle on copy(G, tuple, c*ell); oversized answers
// move the tuple set into W, small answers extend M and spawn longer tuples.
// c*ell substitutes the guaranteed factor wherever the classic 6*ell appears;
// with an unguaranteed oracle the no-instance exit is suppressed.
RedIvdResult red_phcavd(const Graph& g, int ell, int r, const ApproxOracle& oracle);

struct EfficientModulator {
    bool no_instance = false;
    VertexSet t1;
    VertexSet approx_part;      // T': oracle solution
    VertexSet hitting_part;     // T'': union of the reduced obstruction family
    std::int64_t family_size = 0;
    std::int64_t reduced_family_size = 0;
};

inline constexpr int kDefaultObstructionSetSize = 11;  // largest small obstruction

// T1 = T' (oracle solution) + union of the sunflower-reduced family of all
// minimal small obstruction sets. G - T1 is proper Helly circular-arc.
// A no-instance is declared when |T'| > factor*k under a guaranteed oracle,
// or when |T''| exceeds the combinatorial bound d * d!(k+1)^d.
// d below kDefaultObstructionSetSize drops larger obstruction sets from the
// family and requires unfaithful = true.
EfficientModulator build_efficient_modulator(const Graph& g, int k,
                                             const ApproxOracle& oracle,
                                             int d = kDefaultObstructionSetSize,
                                             bool unfaithful = false);

// T = T1 (hits small obstructions) + M (redundant solution) with the
// necessary family W over subsets of M.
struct ModulatorBundle {
    VertexSet t1;
    VertexSet m;
    std::vector<VertexSet> w;
    VertexSet t;
    int ell = 0;
    int r = 0;
    ApproxOracle oracle;
};

ModulatorBundle assemble_nice_modulator(VertexSet t1, VertexSet m,
                                        std::vector<VertexSet> w, int ell, int r,
                                        const ApproxOracle& oracle);

// Reduction step for singleton W-sets: delete the smallest such v, decrement
// the budget, drop every W-set containing v (now hit) and remap the rest to
// the reduced graph's ids.
struct SingletonRuleOutcome {
    enum class Status { NotApplicable, Applied, NoInstance };
    Status status = Status::NotApplicable;
    Graph graph;
    int k = -1;
    std::vector<VertexSet> w;
    int deleted_vertex = -1;  // id in the pre-rule graph
};

SingletonRuleOutcome singleton_w_rule(const Graph& g, int k,
                                      const std::vector<VertexSet>& w);

}  // namespace phcavd
