#include "phcavd/clique_partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "phcavd/recognition.hpp"

namespace phcavd {

namespace {

// Lexicographic BFS by partition refinement over the given vertices; ties
// within the first slice go to the vertex with the largest priority.
std::vector<int> lbfs(const Graph& g, const std::vector<int>& verts,
                      const std::vector<int>& prio) {
    std::vector<std::vector<int>> slices{verts};
    std::vector<int> order;
    order.reserve(verts.size());
    while (!slices.empty()) {
        auto& head = slices.front();
        std::size_t pick = 0;
        for (std::size_t i = 1; i < head.size(); ++i)
            if (prio[head[i]] > prio[head[pick]]) pick = i;
        int v = head[pick];
        head.erase(head.begin() + static_cast<std::ptrdiff_t>(pick));
        if (head.empty()) slices.erase(slices.begin());
        order.push_back(v);
        std::vector<std::vector<int>> next;
        for (auto& slice : slices) {
            std::vector<int> in, out;
            for (int u : slice) (g.adjacent(u, v) ? in : out).push_back(u);
            if (!in.empty()) next.push_back(std::move(in));
            if (!out.empty()) next.push_back(std::move(out));
        }
        slices = std::move(next);
    }
    return order;
}

// Corneil's 3-sweep LBFS; on a connected proper interval component the
// result is an umbrella (indifference) order.
std::vector<int> proper_interval_order(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> prio(g.vertex_count(), 0);
    for (int v : verts) prio[v] = -v;
    std::vector<int> sigma = lbfs(g, verts, prio);
    for (int sweep = 0; sweep < 2; ++sweep) {
        for (std::size_t i = 0; i < sigma.size(); ++i) prio[sigma[i]] = static_cast<int>(i);
        sigma = lbfs(g, verts, prio);
    }
    return sigma;
}

std::vector<std::vector<int>> greedy_cut(const Graph& g, const std::vector<int>& order) {
    std::vector<std::vector<int>> cliques;
    for (int v : order) {
        bool fits = !cliques.empty();
        if (fits)
            for (int u : cliques.back())
                if (!g.adjacent(u, v)) {
                    fits = false;
                    break;
                }
        if (fits)
            cliques.back().push_back(v);
        else
            cliques.push_back({v});
    }
    return cliques;
}

std::optional<CliquePartition> cut_and_verify(const Graph& c, const std::vector<int>& order,
                                              bool circular) {
    CliquePartition p;
    p.circular = circular;
    p.cliques = greedy_cut(c, order);
    if (!(circular && p.clique_count() < 3) && verify_partition(c, p)) return p;
    // Maximal blocks can be too coarse (C_4 pairs up into two cliques);
    // singleton cliques are the other canonical cut of the same order.
    if (static_cast<int>(p.cliques.size()) < c.vertex_count()) {
        p.cliques.clear();
        for (int v : order) p.cliques.push_back({v});
        if (!(circular && p.clique_count() < 3) && verify_partition(c, p)) return p;
    }
    return std::nullopt;
}

// Greedily grown maximal clique containing the seed, smallest ids first.
std::vector<int> maximal_clique_from(const Graph& g, int seed) {
    std::vector<int> k{seed};
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == seed) continue;
        bool ok = true;
        for (int u : k)
            if (!g.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (ok) k.push_back(v);
    }
    std::sort(k.begin(), k.end());
    return k;
}

// Exhaustive search over vertex orders with consecutive-adjacency pruning;
// only used for tiny components when the constructive routes fail.
bool order_search(const Graph& c, std::vector<int>& order, std::vector<bool>& used,
                  bool circular, CliquePartition& out) {
    int n = c.vertex_count();
    if (static_cast<int>(order.size()) == n) {
        if (auto p = cut_and_verify(c, order, circular)) {
            out = *p;
            return true;
        }
        return false;
    }
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        if (!order.empty() && !c.adjacent(order.back(), v)) continue;
        used[v] = true;
        order.push_back(v);
        if (order_search(c, order, used, circular, out)) return true;
        order.pop_back();
        used[v] = false;
    }
    return false;
}

}  // namespace

bool verify_partition(const Graph& c, const CliquePartition& p) {
    int n = c.vertex_count();
    int t = p.clique_count();
    if (t == 0) return n == 0;
    if (p.circular && t < 3) return false;
    std::vector<int> clique_of(n, -1), pos_in(n, -1);
    for (int i = 0; i < t; ++i) {
        if (p.cliques[i].empty()) return false;
        for (std::size_t j = 0; j < p.cliques[i].size(); ++j) {
            int v = p.cliques[i][j];
            if (v < 0 || v >= n || clique_of[v] >= 0) return false;
            clique_of[v] = i;
            pos_in[v] = static_cast<int>(j);
        }
    }
    for (int v = 0; v < n; ++v)
        if (clique_of[v] < 0) return false;
    for (int i = 0; i < t; ++i)
        for (std::size_t a = 0; a < p.cliques[i].size(); ++a)
            for (std::size_t b = a + 1; b < p.cliques[i].size(); ++b)
                if (!c.adjacent(p.cliques[i][a], p.cliques[i][b])) return false;
    auto gap = [&](int i, int j) {
        int d = std::abs(i - j);
        if (p.circular) d = std::min(d, t - d);
        return d;
    };
    for (auto [u, v] : c.edges())
        if (gap(clique_of[u], clique_of[v]) > 1) return false;
    // Umbrella order: neighbors in the next clique form a prefix of it,
    // neighbors in the previous clique a suffix.
    for (int v = 0; v < n; ++v) {
        int i = clique_of[v];
        int next = (i + 1 < t) ? i + 1 : (p.circular ? 0 : -1);
        int prev = (i > 0) ? i - 1 : (p.circular ? t - 1 : -1);
        if (next >= 0 && next != i) {
            int cnt = 0, maxpos = -1;
            for (int u : c.neighbors(v))
                if (clique_of[u] == next) {
                    ++cnt;
                    maxpos = std::max(maxpos, pos_in[u]);
                }
            if (cnt > 0 && maxpos != cnt - 1) return false;
        }
        if (prev >= 0 && prev != i && prev != next) {
            int sz = static_cast<int>(p.cliques[prev].size());
            int cnt = 0, minpos = sz;
            for (int u : c.neighbors(v))
                if (clique_of[u] == prev) {
                    ++cnt;
                    minpos = std::min(minpos, pos_in[u]);
                }
            if (cnt > 0 && minpos != sz - cnt) return false;
        }
    }
    return true;
}

CliquePartition nice_clique_partition(const Graph& c) {
    int n = c.vertex_count();
    if (n == 0) throw std::logic_error("nice_clique_partition: empty graph");
    if (connected_components(c).size() != 1)
        throw std::logic_error("nice_clique_partition: graph is not connected");
    auto rec = is_phca(c);
    if (!rec.member)
        throw NotPhcaError("nice_clique_partition: input is not proper Helly circular-arc",
                           *rec.certificate);

    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    bool interval = !find_hole_avoiding(c, {}).has_value();

    if (interval) {
        std::vector<int> sigma = proper_interval_order(c, all);
        if (auto p = cut_and_verify(c, sigma, false)) return *p;
        std::reverse(sigma.begin(), sigma.end());
        if (auto p = cut_and_verify(c, sigma, false)) return *p;
    } else {
        // Cut the circle on a maximal clique K: the rest is a proper interval
        // graph whose umbrella order, followed by K, is a circular arc order.
        int seed_tries = std::min(n, 32);
        for (int seed = 0; seed < seed_tries; ++seed) {
            std::vector<int> k = maximal_clique_from(c, seed);
            if (static_cast<int>(k.size()) == n) break;  // clique is chordal
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (!set_contains(k, v)) rest.push_back(v);
            Graph h = induced_subgraph(c, rest);
            if (connected_components(h).size() != 1) continue;
            if (find_hole_avoiding(h, {}).has_value()) continue;
            std::vector<int> hverts(h.vertex_count());
            std::iota(hverts.begin(), hverts.end(), 0);
            std::vector<int> base = proper_interval_order(h, hverts);
            for (int dir = 0; dir < 2; ++dir) {
                if (dir == 1) std::reverse(base.begin(), base.end());
                std::vector<int> sigma_h;
                for (int v : base) sigma_h.push_back(rest[v]);
                // Sort K by how deep each vertex reaches into the tail of
                // sigma_h (descending), then into its head (ascending).
                std::vector<int> posn(n, -1);
                for (std::size_t i = 0; i < sigma_h.size(); ++i) posn[sigma_h[i]] = static_cast<int>(i);
                int m = static_cast<int>(sigma_h.size());
                auto reach = [&](int w) {
                    int suf = 0, pre = 0;
                    for (int i = m - 1; i >= 0 && c.adjacent(w, sigma_h[i]); --i) ++suf;
                    for (int i = 0; i < m && c.adjacent(w, sigma_h[i]); ++i) ++pre;
                    return std::pair<int, int>(suf, pre);
                };
                std::vector<std::tuple<int, int, int>> keyed;
                for (int w : k) {
                    auto [suf, pre] = reach(w);
                    keyed.emplace_back(-suf, pre, w);
                }
                std::sort(keyed.begin(), keyed.end());
                std::vector<int> full = sigma_h;
                for (auto& [s, pr, w] : keyed) full.push_back(w);
                for (int rot = 0; rot < n; ++rot) {
                    std::vector<int> rotated(full.begin() + rot, full.end());
                    rotated.insert(rotated.end(), full.begin(), full.begin() + rot);
                    if (auto p = cut_and_verify(c, rotated, true)) return *p;
                }
            }
        }
    }

    if (n <= kExhaustiveOrderLimit) {
        CliquePartition out;
        std::vector<int> order;
        std::vector<bool> used(n, false);
        if (order_search(c, order, used, !interval, out)) return out;
    }
    throw std::logic_error("nice_clique_partition: no verified partition found (n=" +
                           std::to_string(n) + ")");
}

}  // namespace phcavd
