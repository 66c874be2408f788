#include "phcavd/modulator.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "phcavd/hitting_set.hpp"
#include "phcavd/obstruction.hpp"

namespace phcavd {

namespace {

// Oracle answer for one copy(G, U, cap) call; exceeded means |A| > cap.
struct CopyCallResult {
    bool exceeded = false;
    VertexSet fresh;  // (A intersect V(G)) minus U, sorted
};

CopyCallResult oracle_on_copy(const ApproxOracle& oracle, const Graph& g,
                              const VertexSet& u, int cap) {
    if (oracle.kind == ApproxOracle::Kind::Exact) {
        // A minimal solution of copy(G, U, cap) never touches a twin class,
        // so solving G with U forbidden is the same call without the twins.
        auto sol = exact_solve_avoiding(g, cap, u);
        if (!sol) return {true, {}};
        return {false, set_difference(sol->deleted, u)};
    }
    Graph cg = copy_graph(g, u, cap);
    Solution a = approx_solve(oracle, cg);
    if (static_cast<int>(a.deleted.size()) > cap) return {true, {}};
    VertexSet originals;
    for (int v : a.deleted)
        if (v < g.vertex_count()) originals.push_back(v);
    return {false, set_difference(originals, u)};
}

}  // namespace

Graph copy_graph(const Graph& g, const VertexSet& u, int t) {
    if (t < 0) throw std::invalid_argument("copy_graph: negative twin count");
    for (int v : u) g.check_vertex(v);
    int n = g.vertex_count();
    int extra = static_cast<int>(u.size()) * t;
    std::vector<std::int64_t> labels = g.labels();
    labels.resize(n + extra);
    auto twin_id = [&](std::size_t j, int i) {
        return n + static_cast<int>(j) * t + (i - 1);
    };
    for (std::size_t j = 0; j < u.size(); ++j)
        for (int i = 1; i <= t; ++i) labels[twin_id(j, i)] = g.label(u[j]);
    std::vector<std::pair<int, int>> edges = g.edges();
    std::vector<int> slot(n, -1);
    for (std::size_t j = 0; j < u.size(); ++j) slot[u[j]] = static_cast<int>(j);
    for (std::size_t j = 0; j < u.size(); ++j) {
        int v = u[j];
        for (int i = 1; i <= t; ++i) {
            int vi = twin_id(j, i);
            edges.emplace_back(v, vi);  // twin to its own original
            for (int i2 = i + 1; i2 <= t; ++i2)
                edges.emplace_back(vi, twin_id(j, i2));  // twin clique
            for (int w : g.neighbors(v)) {
                edges.emplace_back(vi, w);  // twin to original neighbors
                if (slot[w] >= 0 && w > v)
                    for (int i2 = 1; i2 <= t; ++i2)
                        edges.emplace_back(vi, twin_id(slot[w], i2));  // twin to twin
            }
        }
    }
    return Graph(n + extra, edges, std::move(labels));
}

RedIvdResult red_phcavd(const Graph& g, int ell, int r, const ApproxOracle& oracle) {
    if (ell < 0) throw std::invalid_argument("red_phcavd: negative budget");
    if (r < 0) throw std::invalid_argument("red_phcavd: negative redundancy");
    const int cap = oracle.factor * ell;

    RedIvdResult res;
    Solution m0 = approx_solve(oracle, g);
    ++res.oracle_calls;
    if (static_cast<int>(m0.deleted.size()) > cap && oracle.guaranteed) {
        res.no_instance = true;
        return res;
    }

    std::set<VertexSet> w;
    VertexSet m = m0.deleted;
    std::vector<std::vector<int>> frontier;  // tuples of length i, in insertion order
    for (int v : m0.deleted) frontier.push_back({v});
    std::int64_t stored_tuples = static_cast<std::int64_t>(frontier.size());
    res.tuple_counts.push_back(stored_tuples);
    res.m_sizes.push_back(static_cast<std::int64_t>(m.size()));

    for (int round = 1; round <= r; ++round) {
        std::vector<std::vector<int>> next;
        for (const std::vector<int>& tup : frontier) {
            VertexSet u(tup.begin(), tup.end());
            std::sort(u.begin(), u.end());
            CopyCallResult call = oracle_on_copy(oracle, g, u, cap);
            ++res.oracle_calls;
            if (call.exceeded) {
                w.insert(u);
                continue;
            }
            for (int fresh : call.fresh) {
                std::vector<int> longer = tup;
                longer.push_back(fresh);
                next.push_back(std::move(longer));
            }
            m = set_union(m, call.fresh);
        }
        stored_tuples += static_cast<std::int64_t>(next.size());
        res.tuple_counts.push_back(stored_tuples);
        res.m_sizes.push_back(static_cast<std::int64_t>(m.size()));
        frontier = std::move(next);
    }

    res.m = std::move(m);
    res.w.assign(w.begin(), w.end());
    return res;
}

EfficientModulator build_efficient_modulator(const Graph& g, int k,
                                             const ApproxOracle& oracle, int d,
                                             bool unfaithful) {
    if (k < 0) throw std::invalid_argument("build_efficient_modulator: negative budget");
    if (d < 1) throw std::invalid_argument("build_efficient_modulator: d must be >= 1");
    if (d < kDefaultObstructionSetSize && !unfaithful)
        throw std::invalid_argument(
            "build_efficient_modulator: d below the obstruction catalog size needs "
            "the unfaithful flag");

    EfficientModulator out;
    Solution approx = approx_solve(oracle, g);
    out.approx_part = approx.deleted;
    if (oracle.guaranteed &&
        static_cast<int>(approx.deleted.size()) > oracle.factor * k) {
        out.no_instance = true;
        return out;
    }

    std::vector<VertexSet> family = enumerate_minimal_small_obstructions(g);
    if (d < kDefaultObstructionSetSize) {
        std::erase_if(family,
                      [&](const VertexSet& s) { return static_cast<int>(s.size()) > d; });
    }
    out.family_size = static_cast<std::int64_t>(family.size());
    if (!family.empty()) {
        VertexSet universe(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) universe[v] = v;
        SetFamily f{universe, std::move(family), d, k};
        SetFamily reduced = reduce_family(f);
        out.reduced_family_size = static_cast<std::int64_t>(reduced.sets.size());
        for (const VertexSet& s : reduced.sets)
            out.hitting_part = set_union(out.hitting_part, s);
    }
    std::int64_t limit = sunflower_bound(d, k);
    if (static_cast<std::int64_t>(out.hitting_part.size()) >
        limit * static_cast<std::int64_t>(d)) {
        out.no_instance = true;
        return out;
    }
    out.t1 = set_union(out.approx_part, out.hitting_part);
    return out;
}

ModulatorBundle assemble_nice_modulator(VertexSet t1, VertexSet m,
                                        std::vector<VertexSet> w, int ell, int r,
                                        const ApproxOracle& oracle) {
    for (const VertexSet& set : w)
        if (!set_difference(set, m).empty())
            throw std::logic_error("nice modulator: W-set not contained in M");
    ModulatorBundle b;
    b.t = set_union(t1, m);
    b.t1 = std::move(t1);
    b.m = std::move(m);
    b.w = std::move(w);
    b.ell = ell;
    b.r = r;
    b.oracle = oracle;
    return b;
}

SingletonRuleOutcome singleton_w_rule(const Graph& g, int k,
                                      const std::vector<VertexSet>& w) {
    int victim = -1;
    for (const VertexSet& set : w)
        if (set.size() == 1 && (victim < 0 || set[0] < victim)) victim = set[0];
    if (victim < 0) return {};

    SingletonRuleOutcome out;
    out.deleted_vertex = victim;
    if (k - 1 < 0) {
        out.status = SingletonRuleOutcome::Status::NoInstance;
        return out;
    }
    out.status = SingletonRuleOutcome::Status::Applied;
    out.graph = delete_vertices(g, {victim});
    out.k = k - 1;
    for (const VertexSet& set : w) {
        if (set_contains(set, victim)) continue;  // hit by the deletion
        VertexSet remapped;
        for (int v : set) remapped.push_back(v > victim ? v - 1 : v);
        out.w.push_back(std::move(remapped));
    }
    return out;
}

}  // namespace phcavd
