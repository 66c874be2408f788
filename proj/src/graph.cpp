#include "phcavd/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace phcavd {

int Bitrow::count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool Bitrow::intersects(const Bitrow& other) const {
    std::size_t k = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < k; ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

int Bitrow::count_and(const Bitrow& other) const {
    std::size_t k = std::min(words_.size(), other.words_.size());
    int c = 0;
    for (std::size_t i = 0; i < k; ++i) c += std::popcount(words_[i] & other.words_[i]);
    return c;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges)
    : Graph(n, edges, {}) {}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::vector<std::int64_t> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    if (labels_.empty()) {
        labels_.resize(n_);
        std::iota(labels_.begin(), labels_.end(), 0);
    }
    if (static_cast<int>(labels_.size()) != n_)
        throw std::invalid_argument("graph: label count does not match vertex count");
    adj_.assign(n_, Bitrow(n_));
    nbrs_.assign(n_, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop");
        if (adj_[u].test(v)) throw std::invalid_argument("graph: duplicate edge");
        adj_[u].set(v);
        adj_[v].set(u);
        nbrs_[u].push_back(v);
        nbrs_[v].push_back(u);
        ++m_;
    }
    for (auto& lst : nbrs_) std::sort(lst.begin(), lst.end());
}

int Graph::vertex_with_label(std::int64_t lab) const {
    for (int v = 0; v < n_; ++v)
        if (labels_[v] == lab) return v;
    return -1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : nbrs_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("unknown vertex identifier");
}

bool Graph::same_labelled_graph(const Graph& other) const {
    if (n_ != other.n_ || m_ != other.m_) return false;
    std::vector<std::pair<std::int64_t, int>> mine, theirs;
    for (int v = 0; v < n_; ++v) mine.emplace_back(labels_[v], v);
    for (int v = 0; v < n_; ++v) theirs.emplace_back(other.labels_[v], v);
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    for (int i = 0; i < n_; ++i)
        if (mine[i].first != theirs[i].first) return false;
    auto edge_labels = [](const Graph& g) {
        std::vector<std::pair<std::int64_t, std::int64_t>> es;
        for (auto [u, v] : g.edges()) {
            auto a = g.label(u), b = g.label(v);
            es.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(es.begin(), es.end());
        return es;
    };
    return edge_labels(*this) == edge_labels(other);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    VertexSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> old_to_new(g.vertex_count(), -1);
    std::vector<std::int64_t> labels;
    labels.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        g.check_vertex(sorted[i]);
        old_to_new[sorted[i]] = static_cast<int>(i);
        labels.push_back(g.label(sorted[i]));
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : sorted)
        for (int v : g.neighbors(u))
            if (u < v && old_to_new[v] >= 0)
                edges.emplace_back(old_to_new[u], old_to_new[v]);
    return Graph(static_cast<int>(sorted.size()), edges, std::move(labels));
}

Graph delete_vertices(const Graph& g, const VertexSet& s) {
    Bitrow drop(g.vertex_count());
    for (int v : s) {
        g.check_vertex(v);
        drop.set(v);
    }
    VertexSet keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!drop.test(v)) keep.push_back(v);
    return induced_subgraph(g, keep);
}

VertexSet neighborhood(const Graph& g, int v) {
    g.check_vertex(v);
    return g.neighbors(v);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        stack.push_back(s);
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace phcavd
