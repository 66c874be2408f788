#pragma once

#include <optional>

#include "phcavd/graph.hpp"

namespace phcavd {

// A deletion set whose removal leaves a proper Helly circular-arc graph,
// together with the factor its producer declares. Producers verify the
// PHCA property before returning.
struct Solution {
    VertexSet deleted;
    int factor = 1;          // declared approximation factor c
    bool guaranteed = true;  // false: heuristic, the factor is not a bound
};

// Pluggable PHCAVD solver handle. Size-threshold logic downstream compares
// against factor*budget wherever a guaranteed factor is assumed; with the
// heuristic oracle those no-instance conclusions are suppressed.
struct ApproxOracle {
    enum class Kind { Exact, Greedy };
    Kind kind = Kind::Exact;
    int factor = 1;
    bool guaranteed = true;

    static ApproxOracle exact() { return {Kind::Exact, 1, true}; }
    static ApproxOracle greedy(int declared_factor = 6) {
        return {Kind::Greedy, declared_factor, false};
    }
};

// Minimum-size deletion set of size <= k, if one exists. Branches on the
// vertices of a found obstruction (iterative deepening); the reported set is
// the lexicographically smallest optimum for graphs up to
// kLexRefinementLimit vertices, and a deterministic optimum above that.
std::optional<Solution> exact_solve(const Graph& g, int k);

// Same, restricted to solutions disjoint from `forbidden`. Equivalent to
// solving copy(G, forbidden, t) for t >= k without materializing the twins.
std::optional<Solution> exact_solve_avoiding(const Graph& g, int k,
                                             const VertexSet& forbidden);

inline constexpr int kLexRefinementLimit = 20;

// Exact kind: a true minimum solution. Greedy kind: repeatedly pick an
// obstruction, delete all its vertices if small and just its centre for a
// Monad; verified before returning.
Solution approx_solve(const ApproxOracle& oracle, const Graph& g);

// Minimum-cardinality S such that no path joins A\S to B\S in G-S; S may
// intersect A and B. Vertex-splitting reduction to maximum flow with
// deterministic augmentation; the cut is the source-side canonical one.
VertexSet min_vertex_cut(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace phcavd
