#include "phcavd/obstruction.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace phcavd {

namespace {

struct PatternDef {
    ObstructionKind kind;
    int order;
    int diam;
    bool adj[6][6];
};

PatternDef make_pattern(ObstructionKind kind, int order, int diam,
                        std::initializer_list<std::pair<int, int>> edges) {
    PatternDef p{kind, order, diam, {}};
    for (auto [u, v] : edges) {
        p.adj[u][v] = true;
        p.adj[v][u] = true;
    }
    return p;
}

const std::array<PatternDef, 6>& fixed_patterns() {
    static const std::array<PatternDef, 6> defs = {
        make_pattern(ObstructionKind::Claw, 4, 2, {{0, 1}, {0, 2}, {0, 3}}),
        make_pattern(ObstructionKind::Net, 6, 3,
                     {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}),
        make_pattern(ObstructionKind::Tent, 6, 2,
                     {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 0}, {5, 2}}),
        make_pattern(ObstructionKind::W4, 5, 2,
                     {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}),
        make_pattern(ObstructionKind::W5, 6, 2,
                     {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                      {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}}),
        make_pattern(ObstructionKind::CoC6, 6, 2,
                     {{0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 0}, {5, 1}, {0, 3}, {1, 4}, {2, 5}}),
    };
    return defs;
}

// Does an injective, adjacency- and non-adjacency-preserving map from the
// chosen vertices into the pattern exist? With |chosen| == pattern order this
// is exactly an induced isomorphism.
bool roles_assignable(const PatternDef& p, const Graph& g, const std::vector<int>& chosen,
                      std::size_t idx, unsigned used, std::array<int, 6>& role) {
    if (idx == chosen.size()) return true;
    for (int r = 0; r < p.order; ++r) {
        if (used & (1u << r)) continue;
        bool ok = true;
        for (std::size_t j = 0; j < idx && ok; ++j)
            ok = p.adj[r][role[j]] == g.adjacent(chosen[idx], chosen[j]);
        if (!ok) continue;
        role[idx] = r;
        if (roles_assignable(p, g, chosen, idx + 1, used | (1u << r), role)) return true;
    }
    return false;
}

bool partial_witness_feasible(const PatternDef& p, const Graph& g,
                              const std::vector<int>& chosen) {
    std::array<int, 6> role{};
    return roles_assignable(p, g, chosen, 0, 0, role);
}

// Vertices within the given hop distance of s (including s).
std::vector<int> ball(const Graph& g, int s, int radius) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> out{s};
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (dist[u] == radius) continue;
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                out.push_back(w);
                q.push(w);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Enumerates witness sets of the pattern in lexicographic (sorted-set) order.
// emit returns true to stop the search.
bool witness_dfs(const PatternDef& p, const Graph& g, const std::vector<int>& cand,
                 std::size_t from, std::vector<int>& chosen,
                 const std::function<bool(const VertexSet&)>& emit) {
    if (static_cast<int>(chosen.size()) == p.order) return emit(chosen);
    std::size_t need = p.order - chosen.size();
    for (std::size_t i = from; i + need <= cand.size(); ++i) {
        chosen.push_back(cand[i]);
        if (partial_witness_feasible(p, g, chosen))
            if (witness_dfs(p, g, cand, i + 1, chosen, emit)) return true;
        chosen.pop_back();
    }
    return false;
}

bool scan_pattern(const PatternDef& p, const Graph& g,
                  const std::function<bool(const VertexSet&)>& emit) {
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::vector<int> cand;
        for (int v : ball(g, s, p.diam))
            if (v > s) cand.push_back(v);
        if (static_cast<int>(cand.size()) + 1 < p.order) continue;
        std::vector<int> chosen{s};
        if (witness_dfs(p, g, cand, 0, chosen, emit)) return true;
    }
    return false;
}

// ---- chordality with certificates, over an active-vertex mask ----

std::vector<int> active_vertices(const Bitrow& active) {
    std::vector<int> out;
    for (int v = 0; v < active.size(); ++v)
        if (active.test(v)) out.push_back(v);
    return out;
}

// Maximum cardinality search; smallest id breaks weight ties. Returns the
// visit order (reverse of it is the elimination order to test).
std::vector<int> mcs_order(const Graph& g, const Bitrow& active) {
    std::vector<int> order;
    std::vector<int> weight(g.vertex_count(), 0);
    std::set<std::pair<int, int>> pq;  // (-weight, v)
    for (int v = 0; v < g.vertex_count(); ++v)
        if (active.test(v)) pq.insert({0, v});
    std::vector<bool> done(g.vertex_count(), false);
    while (!pq.empty()) {
        int v = pq.begin()->second;
        pq.erase(pq.begin());
        done[v] = true;
        order.push_back(v);
        for (int u : g.neighbors(v)) {
            if (!active.test(u) || done[u]) continue;
            pq.erase({-weight[u], u});
            ++weight[u];
            pq.insert({-weight[u], u});
        }
    }
    return order;
}

bool is_chordal_masked(const Graph& g, const Bitrow& active) {
    std::vector<int> visit = mcs_order(g, active);
    int na = static_cast<int>(visit.size());
    std::vector<int> elim_pos(g.vertex_count(), -1);
    for (int i = 0; i < na; ++i) elim_pos[visit[i]] = na - 1 - i;
    for (int v : visit) {
        int parent = -1;
        for (int u : g.neighbors(v))
            if (active.test(u) && elim_pos[u] > elim_pos[v])
                if (parent < 0 || elim_pos[u] < elim_pos[parent]) parent = u;
        if (parent < 0) continue;
        for (int u : g.neighbors(v))
            if (active.test(u) && elim_pos[u] > elim_pos[v] && u != parent &&
                !g.adjacent(parent, u))
                return false;
    }
    return true;
}

std::optional<std::vector<int>> masked_bfs_path(const Graph& g, const Bitrow& allowed,
                                                int x, int y) {
    if (x == y) return std::vector<int>{x};
    std::vector<int> parent(g.vertex_count(), -2);
    std::queue<int> q;
    parent[x] = -1;
    q.push(x);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (!allowed.test(w) || parent[w] != -2) continue;
            parent[w] = u;
            if (w == y) {
                std::vector<int> path;
                for (int t = y; t != -1; t = parent[t]) path.push_back(t);
                std::reverse(path.begin(), path.end());
                return path;
            }
            q.push(w);
        }
    }
    return std::nullopt;
}

// Precondition: the active subgraph is not chordal. Finds v with two
// nonadjacent neighbors x, y joined by a path avoiding the rest of N[v];
// v plus the shortest such path is an induced cycle of length >= 4.
std::vector<int> extract_hole_masked(const Graph& g, const Bitrow& active) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!active.test(v)) continue;
        std::vector<int> nb;
        for (int u : g.neighbors(v))
            if (active.test(u)) nb.push_back(u);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int x = nb[i], y = nb[j];
                if (g.adjacent(x, y)) continue;
                Bitrow allowed = active;
                allowed.reset(v);
                for (int u : nb)
                    if (u != x && u != y) allowed.reset(u);
                if (auto path = masked_bfs_path(g, allowed, x, y)) {
                    std::vector<int> cycle{v};
                    cycle.insert(cycle.end(), path->begin(), path->end());
                    return cycle;
                }
            }
        }
    }
    throw std::logic_error("hole extraction failed on a non-chordal graph");
}

std::optional<std::vector<int>> find_hole_masked(const Graph& g, const Bitrow& active) {
    if (active.count() < 4) return std::nullopt;
    if (is_chordal_masked(g, active)) return std::nullopt;
    return extract_hole_masked(g, active);
}

// True-twin class representatives (class minima), ascending. u, v are true
// twins iff their closed neighborhoods coincide.
std::vector<int> twin_representatives(const Graph& g) {
    std::map<std::vector<std::uint64_t>, int> seen;
    std::vector<int> reps;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::uint64_t> key((g.vertex_count() + 63) / 64, 0);
        for (int u : g.neighbors(v)) key[u >> 6] |= std::uint64_t{1} << (u & 63);
        key[v >> 6] |= std::uint64_t{1} << (v & 63);
        if (seen.emplace(std::move(key), v).second) reps.push_back(v);
    }
    return reps;
}

std::optional<Obstruction> find_any_direct(const Graph& g) {
    if (auto o = find_fixed_obstruction(g)) return o;
    return find_monad(g);
}

}  // namespace

std::string kind_name(ObstructionKind kind) {
    switch (kind) {
        case ObstructionKind::Claw: return "claw";
        case ObstructionKind::Net: return "net";
        case ObstructionKind::Tent: return "tent";
        case ObstructionKind::W4: return "w4";
        case ObstructionKind::W5: return "w5";
        case ObstructionKind::CoC6: return "co-c6";
        case ObstructionKind::Monad: return "monad";
    }
    return "?";
}

bool verify_obstruction(const Graph& g, const Obstruction& o) {
    for (int v : o.vertices)
        if (v < 0 || v >= g.vertex_count()) return false;
    if (!std::is_sorted(o.vertices.begin(), o.vertices.end())) return false;
    if (std::adjacent_find(o.vertices.begin(), o.vertices.end()) != o.vertices.end())
        return false;
    if (o.kind == ObstructionKind::Monad) {
        int len = static_cast<int>(o.hole.size());
        if (len < 4) return false;
        if (o.size() != len + 1) return false;
        VertexSet expect = o.hole;
        expect.push_back(o.centre);
        std::sort(expect.begin(), expect.end());
        if (expect != o.vertices) return false;
        for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j) {
                bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
                if (g.adjacent(o.hole[i], o.hole[j]) != consecutive) return false;
            }
        for (int h : o.hole)
            if (h == o.centre || g.adjacent(h, o.centre)) return false;
        return true;
    }
    for (const PatternDef& p : fixed_patterns()) {
        if (p.kind != o.kind) continue;
        if (o.size() != p.order) return false;
        return partial_witness_feasible(p, g, o.vertices);
    }
    return false;
}

Graph make_claw() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

Graph make_net() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }

Graph make_tent() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 0}, {5, 2}});
}

Graph make_w4() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}); }

Graph make_w5() {
    return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                     {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
}

Graph make_co_c6() {
    return Graph(6, {{0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 0}, {5, 1}, {0, 3}, {1, 4}, {2, 5}});
}

Graph make_cycle(int len) {
    if (len < 3) throw std::invalid_argument("cycle length must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
    return Graph(len, edges);
}

Graph make_monad(int hole_len) {
    if (hole_len < 4) throw std::invalid_argument("monad hole length must be >= 4");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < hole_len; ++i) edges.emplace_back(i, (i + 1) % hole_len);
    return Graph(hole_len + 1, edges);
}

std::optional<Obstruction> find_fixed_obstruction(const Graph& g) {
    for (const PatternDef& p : fixed_patterns()) {
        std::optional<Obstruction> found;
        scan_pattern(p, g, [&](const VertexSet& w) {
            found = Obstruction{p.kind, w, {}, -1};
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> find_hole_avoiding(const Graph& g, const VertexSet& f) {
    Bitrow active(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) active.set(v);
    for (int v : f) {
        g.check_vertex(v);
        active.reset(v);
    }
    return find_hole_masked(g, active);
}

std::optional<Obstruction> find_monad(const Graph& g) {
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        Bitrow active(n);
        for (int u = 0; u < n; ++u) active.set(u);
        active.reset(v);
        for (int u : g.neighbors(v)) active.reset(u);
        if (auto hole = find_hole_masked(g, active)) {
            VertexSet verts = *hole;
            verts.push_back(v);
            std::sort(verts.begin(), verts.end());
            return Obstruction{ObstructionKind::Monad, verts, *hole, v};
        }
    }
    return std::nullopt;
}

std::optional<Obstruction> find_any_obstruction(const Graph& g) {
    std::vector<int> reps = twin_representatives(g);
    if (static_cast<int>(reps.size()) == g.vertex_count()) return find_any_direct(g);
    Graph h = induced_subgraph(g, reps);
    auto o = find_any_direct(h);
    if (!o) return std::nullopt;
    for (int& v : o->vertices) v = reps[v];
    std::sort(o->vertices.begin(), o->vertices.end());
    for (int& v : o->hole) v = reps[v];
    if (o->centre >= 0) o->centre = reps[o->centre];
    return o;
}

std::vector<VertexSet> enumerate_minimal_small_obstructions(const Graph& g) {
    std::set<VertexSet> out;
    for (const PatternDef& p : fixed_patterns()) {
        scan_pattern(p, g, [&](const VertexSet& w) {
            out.insert(w);
            return false;
        });
    }
    // Monads of size < 12: induced cycles of length 4..10 plus a non-adjacent
    // centre. Cycles are enumerated from their smallest vertex, one direction.
    constexpr int kMaxHole = kSmallObstructionLimit - 2;
    std::vector<VertexSet> holes;
    std::vector<int> path;
    for (int s = 0; s < g.vertex_count(); ++s) {
        path.assign(1, s);
        auto dfs = [&](auto&& self) -> void {
            int last = path.back();
            for (int u : g.neighbors(last)) {
                if (u <= s) continue;
                if (path.size() == 1) {
                    path.push_back(u);
                    self(self);
                    path.pop_back();
                    continue;
                }
                // An induced path keeps u away from every vertex except the
                // current endpoint; adjacency to s is only valid as closure.
                bool bad = false;
                for (std::size_t i = 1; i + 1 < path.size() && !bad; ++i)
                    bad = path[i] == u || g.adjacent(path[i], u);
                if (bad) continue;
                if (g.adjacent(u, s)) {
                    if (path.size() >= 3 && path[1] < u) {
                        VertexSet hole(path.begin(), path.end());
                        hole.push_back(u);
                        holes.push_back(hole);
                    }
                    continue;
                }
                if (static_cast<int>(path.size()) + 1 < kMaxHole) {
                    path.push_back(u);
                    self(self);
                    path.pop_back();
                }
            }
        };
        dfs(dfs);
    }
    for (const VertexSet& hole : holes) {
        Bitrow touched(g.vertex_count());
        for (int h : hole) {
            touched.set(h);
            for (int u : g.neighbors(h)) touched.set(u);
        }
        for (int c = 0; c < g.vertex_count(); ++c) {
            if (touched.test(c)) continue;
            VertexSet witness = hole;
            witness.push_back(c);
            std::sort(witness.begin(), witness.end());
            out.insert(std::move(witness));
        }
    }
    return {out.begin(), out.end()};
}

std::vector<Obstruction> greedy_claw_packing_at(const Graph& g, int v,
                                                const VertexSet& allowed) {
    g.check_vertex(v);
    for (int u : allowed) {
        g.check_vertex(u);
        if (u == v) throw std::invalid_argument("claw packing: centre in allowed set");
    }
    std::vector<int> cand;
    for (int u : g.neighbors(v))
        if (set_contains(allowed, u)) cand.push_back(u);
    std::vector<bool> used(g.vertex_count(), false);
    std::vector<Obstruction> claws;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        if (used[cand[i]]) continue;
        for (std::size_t j = i + 1; j < cand.size(); ++j) {
            if (used[cand[i]]) break;
            if (used[cand[j]] || g.adjacent(cand[i], cand[j])) continue;
            for (std::size_t l = j + 1; l < cand.size(); ++l) {
                if (used[cand[l]] || g.adjacent(cand[i], cand[l]) ||
                    g.adjacent(cand[j], cand[l]))
                    continue;
                VertexSet w{v, cand[i], cand[j], cand[l]};
                std::sort(w.begin(), w.end());
                claws.push_back(Obstruction{ObstructionKind::Claw, w, {}, -1});
                used[cand[i]] = used[cand[j]] = used[cand[l]] = true;
                break;
            }
            if (used[cand[i]]) break;
        }
    }
    return claws;
}

}  // namespace phcavd
