#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace phcavd {

// Sorted list of vertex ids of one graph.
using VertexSet = std::vector<int>;

// Fixed-width bit row used for adjacency tests and set algebra.
class Bitrow {
public:
    Bitrow() = default;
    explicit Bitrow(int n) : nbits_(n), words_((n + 63) / 64, 0) {}

    void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int size() const { return nbits_; }
    int count() const;
    bool intersects(const Bitrow& other) const;
    int count_and(const Bitrow& other) const;

    bool operator==(const Bitrow&) const = default;

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

// Immutable simple graph. Vertices are dense ids 0..n-1; every vertex carries
// a label that survives induced subgraphs, so rule applications stay traceable
// back to the input graph.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);
    Graph(int n, const std::vector<std::pair<int, int>>& edges,
          std::vector<std::int64_t> labels);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }
    const Bitrow& neighbor_bits(int v) const { return adj_[v]; }

    std::int64_t label(int v) const { return labels_[v]; }
    const std::vector<std::int64_t>& labels() const { return labels_; }
    // Dense id holding the given label, or -1.
    int vertex_with_label(std::int64_t lab) const;

    // Edges as (u, v) with u < v, ordered lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    void check_vertex(int v) const;

    bool same_labelled_graph(const Graph& other) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<Bitrow> adj_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<std::int64_t> labels_;
};

// G[S]: vertex set S, exactly the edges of G inside S, labels carried over.
// Throws std::invalid_argument on ids outside the host graph.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// G - S.
Graph delete_vertices(const Graph& g, const VertexSet& s);

// Open neighborhood of v as a sorted VertexSet.
VertexSet neighborhood(const Graph& g, int v);

// Maximal connected vertex sets, ordered by smallest contained id.
std::vector<VertexSet> connected_components(const Graph& g);

// Sorted-set helpers shared across the reduction rules.
bool set_contains(const VertexSet& s, int v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

}  // namespace phcavd
