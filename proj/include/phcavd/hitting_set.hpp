#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "phcavd/graph.hpp"

namespace phcavd {

// Family of small vertex sets to be hit by a budget-k deletion set.
struct SetFamily {
    VertexSet universe;
    std::vector<VertexSet> sets;  // sorted, nonempty, each of size <= d
    int d = 1;
    int k = 0;
};

struct Sunflower {
    VertexSet core;
    std::vector<std::size_t> petals;  // indices into the family's set list
};

// d! * (k+1)^d, the family size below which no reduction happens. Saturates
// instead of overflowing.
std::int64_t sunflower_bound(int d, int k);

// Recursive greedy sunflower search: take a maximal disjoint subfamily, or
// recurse on the most frequent element. Succeeds whenever
// |F| > d!(p-1)^d forces a sunflower with p petals, possibly also earlier.
std::optional<Sunflower> find_sunflower(const SetFamily& f, int p);

// Repeatedly finds a sunflower with k+2 petals and discards the
// lexicographically largest petal set, until |F'| <= d!(k+1)^d. Preserves
// minimal hitting sets of size <= k in both directions.
SetFamily reduce_family(const SetFamily& f);

}  // namespace phcavd
