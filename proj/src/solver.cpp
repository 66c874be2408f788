#include "phcavd/solver.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "phcavd/obstruction.hpp"
#include "phcavd/recognition.hpp"

namespace phcavd {

namespace {

struct BranchSearch {
    const Graph& g;
    const Bitrow& forbidden;
    VertexSet removed;
    std::optional<VertexSet> found;

    bool run(const Bitrow& alive, int budget) {
        VertexSet kept;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (alive.test(v)) kept.push_back(v);
        Graph h = induced_subgraph(g, kept);
        auto o = find_any_obstruction(h);
        if (!o) {
            found = removed;
            return true;
        }
        if (budget == 0) return false;
        for (int hv : o->vertices) {
            int v = kept[hv];
            if (forbidden.test(v)) continue;
            Bitrow next = alive;
            next.reset(v);
            removed.push_back(v);
            if (run(next, budget - 1)) return true;
            removed.pop_back();
        }
        return false;
    }
};

bool phca_after_deleting(const Graph& g, const VertexSet& s) {
    return !find_any_obstruction(delete_vertices(g, s)).has_value();
}

// Lexicographically first size-r subset of candidates (ascending ids) whose
// deletion leaves a PHCA graph.
std::optional<VertexSet> lex_min_solution(const Graph& g, int r, const Bitrow& forbidden) {
    std::vector<int> cand;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!forbidden.test(v)) cand.push_back(v);
    VertexSet pick;
    auto rec = [&](auto&& self, std::size_t from) -> bool {
        if (static_cast<int>(pick.size()) == r) return phca_after_deleting(g, pick);
        std::size_t need = r - pick.size();
        for (std::size_t i = from; i + need <= cand.size(); ++i) {
            pick.push_back(cand[i]);
            if (self(self, i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (rec(rec, 0)) return pick;
    return std::nullopt;
}

std::optional<Solution> exact_core(const Graph& g, int k, const Bitrow& forbidden) {
    if (k < 0) return std::nullopt;
    for (int size = 0; size <= k; ++size) {
        BranchSearch search{g, forbidden, {}, std::nullopt};
        Bitrow alive(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) alive.set(v);
        if (!search.run(alive, size)) continue;
        VertexSet best = *search.found;
        std::sort(best.begin(), best.end());
        int optimum = static_cast<int>(best.size());
        if (g.vertex_count() <= kLexRefinementLimit && optimum > 0)
            if (auto lex = lex_min_solution(g, optimum, forbidden)) best = *lex;
        return Solution{best, 1, true};
    }
    return std::nullopt;
}

}  // namespace

std::optional<Solution> exact_solve(const Graph& g, int k) {
    return exact_core(g, k, Bitrow(g.vertex_count()));
}

std::optional<Solution> exact_solve_avoiding(const Graph& g, int k,
                                             const VertexSet& forbidden) {
    Bitrow mask(g.vertex_count());
    for (int v : forbidden) {
        g.check_vertex(v);
        mask.set(v);
    }
    return exact_core(g, k, mask);
}

Solution approx_solve(const ApproxOracle& oracle, const Graph& g) {
    if (oracle.kind == ApproxOracle::Kind::Exact) {
        auto sol = exact_solve(g, g.vertex_count());
        if (!sol) throw std::logic_error("exact oracle failed on a solvable instance");
        return *sol;
    }
    VertexSet deleted;
    Graph h = g;
    std::vector<int> alive(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) alive[v] = v;
    while (auto o = find_any_obstruction(h)) {
        VertexSet doomed;
        if (o->kind == ObstructionKind::Monad)
            doomed.push_back(o->centre);
        else
            doomed = o->vertices;
        VertexSet keep_local;
        for (int v = 0; v < h.vertex_count(); ++v)
            if (!set_contains(doomed, v)) keep_local.push_back(v);
        for (int v : doomed) deleted.push_back(alive[v]);
        std::vector<int> next_alive;
        for (int v : keep_local) next_alive.push_back(alive[v]);
        alive = std::move(next_alive);
        h = induced_subgraph(h, keep_local);
    }
    std::sort(deleted.begin(), deleted.end());
    if (!phca_after_deleting(g, deleted))
        throw std::logic_error("greedy oracle produced an unverified solution");
    return Solution{deleted, oracle.factor, false};
}

VertexSet min_vertex_cut(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (int v : a) g.check_vertex(v);
    for (int v : b) g.check_vertex(v);
    if (!set_intersection(a, b).empty())
        throw std::invalid_argument("min_vertex_cut: A and B must be disjoint");

    // Vertex splitting: node 2v is v_in, 2v+1 is v_out; source/sink appended.
    int n = g.vertex_count();
    int source = 2 * n, sink = 2 * n + 1;
    int node_count = 2 * n + 2;
    const int inf = n + 5;
    struct Arc {
        int to, cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out(node_count);
    auto add_arc = [&](int u, int v, int cap) {
        out[u].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({v, cap});
        out[v].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({u, 0});
    };
    for (int v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (auto [u, v] : g.edges()) {
        add_arc(2 * u + 1, 2 * v, inf);
        add_arc(2 * v + 1, 2 * u, inf);
    }
    for (int v : a) add_arc(source, 2 * v, inf);
    for (int v : b) add_arc(2 * v + 1, sink, inf);

    // Edmonds-Karp; BFS over arcs in insertion order keeps it deterministic.
    std::vector<int> parent_arc(node_count);
    auto bfs = [&]() -> bool {
        std::fill(parent_arc.begin(), parent_arc.end(), -1);
        std::queue<int> q;
        q.push(source);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int id : out[u]) {
                if (arcs[id].cap <= 0) continue;
                int w = arcs[id].to;
                if (w == source || parent_arc[w] >= 0) continue;
                parent_arc[w] = id;
                if (w == sink) return true;
                q.push(w);
            }
        }
        return false;
    };
    while (bfs()) {
        int push = inf;
        for (int w = sink; w != source;) {
            int id = parent_arc[w];
            push = std::min(push, arcs[id].cap);
            w = arcs[id ^ 1].to;
        }
        for (int w = sink; w != source;) {
            int id = parent_arc[w];
            arcs[id].cap -= push;
            arcs[id ^ 1].cap += push;
            w = arcs[id ^ 1].to;
        }
    }
    // Residual reachability from the source; cut vertices are those whose
    // in-node is reachable but whose out-node is not.
    std::vector<bool> reach(node_count, false);
    std::queue<int> q;
    reach[source] = true;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int id : out[u])
            if (arcs[id].cap > 0 && !reach[arcs[id].to]) {
                reach[arcs[id].to] = true;
                q.push(arcs[id].to);
            }
    }
    VertexSet cut;
    for (int v = 0; v < n; ++v)
        if (reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
    return cut;
}

}  // namespace phcavd
