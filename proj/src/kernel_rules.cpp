#include "phcavd/kernel_rules.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "phcavd/obstruction.hpp"
#include "phcavd/recognition.hpp"
#include "phcavd/solver.hpp"

namespace phcavd {

namespace {

std::vector<VertexSet> components_avoiding(const Graph& g, const VertexSet& t) {
    Bitrow skip(g.vertex_count());
    for (int v : t) skip.set(v);
    std::vector<VertexSet> comps;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s] || skip.test(s)) continue;
        VertexSet comp;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w] && !skip.test(w)) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

CliquePartition to_local(const CliquePartition& host, const VertexSet& comp) {
    CliquePartition local = host;
    for (auto& q : local.cliques)
        for (int& v : q) {
            auto it = std::lower_bound(comp.begin(), comp.end(), v);
            v = static_cast<int>(it - comp.begin());
        }
    return local;
}

CliquePartition to_host(const CliquePartition& local, const VertexSet& comp) {
    CliquePartition host = local;
    for (auto& q : host.cliques)
        for (int& v : q) v = comp[v];
    return host;
}

bool partition_verifies_host(const Graph& g, const VertexSet& comp,
                             const CliquePartition& host) {
    Graph local = induced_subgraph(g, comp);
    bool chordal = !find_hole_avoiding(local, {}).has_value();
    if (host.circular == chordal) return false;  // circular iff a hole exists
    return verify_partition(local, to_local(host, comp));
}

// Accepts the graph plus hinted partitions (current ids); every component of
// G - T gets its hint when it verifies, and a fresh partition otherwise.
Instance finish_instance(Graph graph, int k, ModulatorBundle bundle,
                         std::vector<CliquePartition> hints) {
    Instance inst;
    inst.graph = std::move(graph);
    inst.k = k;
    inst.bundle = std::move(bundle);
    inst.components = components_avoiding(inst.graph, inst.bundle.t);
    for (std::size_t ci = 0; ci < inst.components.size(); ++ci) {
        const VertexSet& comp = inst.components[ci];
        CliquePartition chosen;
        bool have = false;
        for (const CliquePartition& hint : hints) {
            VertexSet covered;
            for (const auto& q : hint.cliques)
                for (int v : q) covered.push_back(v);
            std::sort(covered.begin(), covered.end());
            if (covered != comp) continue;
            if (partition_verifies_host(inst.graph, comp, hint)) {
                chosen = hint;
                have = true;
            }
            break;
        }
        if (!have) {
            Graph local = induced_subgraph(inst.graph, comp);
            chosen = to_host(nice_clique_partition(local), comp);
        }
        chosen.component_id = static_cast<int>(ci);
        inst.partitions.push_back(std::move(chosen));
    }
    return inst;
}

// Deletes vertices outside T, remapping the bundle and repairing partitions
// (doomed vertices dropped, empty cliques removed, order preserved).
Instance apply_deletion_same_k(const Instance& inst, const VertexSet& doomed) {
    if (!set_intersection(doomed, inst.bundle.t).empty())
        throw std::logic_error("rule deletion touched the modulator");
    Graph next = delete_vertices(inst.graph, doomed);
    std::vector<int> newid(inst.graph.vertex_count(), -1);
    int counter = 0;
    for (int v = 0; v < inst.graph.vertex_count(); ++v)
        if (!set_contains(doomed, v)) newid[v] = counter++;
    auto remap_set = [&](const VertexSet& s) {
        VertexSet out;
        for (int v : s)
            if (newid[v] >= 0) out.push_back(newid[v]);
        return out;
    };
    ModulatorBundle bundle = inst.bundle;
    bundle.t1 = remap_set(bundle.t1);
    bundle.m = remap_set(bundle.m);
    bundle.t = remap_set(bundle.t);
    for (auto& set : bundle.w) set = remap_set(set);
    std::vector<CliquePartition> hints;
    for (const CliquePartition& p : inst.partitions) {
        CliquePartition hint;
        hint.circular = p.circular;
        for (const auto& q : p.cliques) {
            std::vector<int> mapped;
            for (int v : q)
                if (newid[v] >= 0) mapped.push_back(newid[v]);
            if (!mapped.empty()) hint.cliques.push_back(std::move(mapped));
        }
        if (!hint.cliques.empty()) hints.push_back(std::move(hint));
    }
    return finish_instance(std::move(next), inst.k, std::move(bundle), std::move(hints));
}

TraceEvent deletion_event(const Instance& inst, const std::string& rule,
                          const VertexSet& doomed, int k_after) {
    TraceEvent ev;
    ev.rule = rule;
    ev.k_before = inst.k;
    ev.k_after = k_after;
    for (int v : doomed) ev.deleted_labels.push_back(inst.graph.label(v));
    return ev;
}

RuleOutcome k_decrement_outcome(const Instance& inst, const std::string& rule, int v) {
    RuleOutcome out;
    out.event = deletion_event(inst, rule, {v}, inst.k - 1);
    if (inst.k - 1 < 0) {
        out.status = RuleOutcome::Status::NoInstance;
        return out;
    }
    out.status = RuleOutcome::Status::Applied;
    out.restart_required = true;
    out.next.graph = delete_vertices(inst.graph, {v});
    out.next.k = inst.k - 1;
    return out;
}

}  // namespace

Instance build_instance(Graph graph, int k, ModulatorBundle bundle) {
    Graph rest = delete_vertices(graph, bundle.t);
    auto rec = is_phca(rest);
    if (!rec.member)
        throw NotPhcaError("instance: G - T is not proper Helly circular-arc",
                           *rec.certificate);
    return finish_instance(std::move(graph), k, std::move(bundle), {});
}

bool verify_instance(const Instance& inst) {
    if (inst.k < 0) return false;
    if (!is_phca(delete_vertices(inst.graph, inst.bundle.t)).member) return false;
    if (inst.components != components_avoiding(inst.graph, inst.bundle.t)) return false;
    if (inst.partitions.size() != inst.components.size()) return false;
    for (std::size_t i = 0; i < inst.components.size(); ++i) {
        VertexSet covered;
        for (const auto& q : inst.partitions[i].cliques)
            for (int v : q) covered.push_back(v);
        std::sort(covered.begin(), covered.end());
        if (covered != inst.components[i]) return false;
        if (!partition_verifies_host(inst.graph, inst.components[i], inst.partitions[i]))
            return false;
    }
    return true;
}

MarkedClique mark1(const Instance& inst, int component, int clique_index) {
    const std::vector<int>& q = inst.partitions.at(component).cliques.at(clique_index);
    const VertexSet& t = inst.bundle.t;
    int nt = static_cast<int>(t.size());
    int cap = 2 * (inst.k + 1);
    Bitrow marked(inst.graph.vertex_count());

    std::vector<int> a_set, b_set, hits;
    auto process = [&]() {
        hits.clear();
        for (int v : q) {
            bool ok = true;
            for (int a : a_set)
                if (!inst.graph.adjacent(v, a)) {
                    ok = false;
                    break;
                }
            if (ok)
                for (int b : b_set)
                    if (inst.graph.adjacent(v, b)) {
                        ok = false;
                        break;
                    }
            if (ok) hits.push_back(v);
        }
        if (static_cast<int>(hits.size()) <= cap) {
            for (int v : hits) marked.set(v);
        } else {
            for (int i = 0; i <= inst.k; ++i) {
                marked.set(hits[i]);
                marked.set(hits[hits.size() - 1 - i]);
            }
        }
    };
    // All disjoint A, B over T with |A| <= 2 and |B| <= 2, empty sets included.
    std::vector<std::vector<int>> a_choices{{}};
    for (int i = 0; i < nt; ++i) {
        a_choices.push_back({t[i]});
        for (int j = i + 1; j < nt; ++j) a_choices.push_back({t[i], t[j]});
    }
    for (const auto& a : a_choices) {
        a_set = a;
        std::vector<int> rest;
        for (int v : t)
            if (!std::count(a.begin(), a.end(), v)) rest.push_back(v);
        int nr = static_cast<int>(rest.size());
        b_set.clear();
        process();
        for (int i = 0; i < nr; ++i) {
            b_set = {rest[i]};
            process();
            for (int j = i + 1; j < nr; ++j) {
                b_set = {rest[i], rest[j]};
                process();
            }
        }
    }
    MarkedClique out;
    out.component = component;
    out.clique_index = clique_index;
    for (int v : q)
        if (marked.test(v)) out.marked.push_back(v);
    std::sort(out.marked.begin(), out.marked.end());
    return out;
}

RuleOutcome rule_bound_clique(const Instance& inst) {
    if (!inst.bundle.oracle.guaranteed) return {};
    int victim = -1;
    for (std::size_t ci = 0; ci < inst.partitions.size(); ++ci) {
        for (int qi = 0; qi < inst.partitions[ci].clique_count(); ++qi) {
            MarkedClique mc = mark1(inst, static_cast<int>(ci), qi);
            for (int v : inst.partitions[ci].cliques[qi])
                if (!set_contains(mc.marked, v) && (victim < 0 || v < victim)) victim = v;
        }
    }
    if (victim < 0) return {};
    RuleOutcome out;
    out.status = RuleOutcome::Status::Applied;
    out.event = deletion_event(inst, "bound-clique", {victim}, inst.k);
    out.next = apply_deletion_same_k(inst, {victim});
    return out;
}

RuleOutcome rule_claw_center(const Instance& inst) {
    VertexSet allowed;
    for (int v = 0; v < inst.graph.vertex_count(); ++v)
        if (!set_contains(inst.bundle.t, v)) allowed.push_back(v);
    for (int v : inst.bundle.t) {
        auto claws = greedy_claw_packing_at(inst.graph, v, allowed);
        if (static_cast<int>(claws.size()) >= inst.k + 1) {
            RuleOutcome out = k_decrement_outcome(inst, "claw-center", v);
            out.event.params["claws"] = static_cast<std::int64_t>(claws.size());
            return out;
        }
    }
    return {};
}

RuleOutcome rule_clique_spread(const Instance& inst) {
    int limit = 6 * (inst.k + 1);
    std::vector<int> comp_of(inst.graph.vertex_count(), -1);
    std::vector<int> clique_of(inst.graph.vertex_count(), -1);
    for (std::size_t ci = 0; ci < inst.partitions.size(); ++ci)
        for (int qi = 0; qi < inst.partitions[ci].clique_count(); ++qi)
            for (int v : inst.partitions[ci].cliques[qi]) {
                comp_of[v] = static_cast<int>(ci);
                clique_of[v] = qi;
            }
    for (int v : inst.bundle.t) {
        std::map<int, std::set<int>> per_comp;
        for (int u : inst.graph.neighbors(v))
            if (comp_of[u] >= 0) per_comp[comp_of[u]].insert(clique_of[u]);
        for (auto& [comp, cliques] : per_comp) {
            if (static_cast<int>(cliques.size()) > limit) {
                RuleOutcome out = k_decrement_outcome(inst, "clique-spread", v);
                out.event.params["component"] = comp;
                out.event.params["cliques"] = static_cast<std::int64_t>(cliques.size());
                return out;
            }
        }
    }
    return {};
}

RuleOutcome rule_component_spread(const Instance& inst) {
    int limit = 3 * (inst.k + 1);
    std::vector<int> comp_of(inst.graph.vertex_count(), -1);
    for (std::size_t ci = 0; ci < inst.components.size(); ++ci)
        for (int v : inst.components[ci]) comp_of[v] = static_cast<int>(ci);
    for (int v : inst.bundle.t) {
        std::set<int> comps;
        for (int u : inst.graph.neighbors(v))
            if (comp_of[u] >= 0) comps.insert(comp_of[u]);
        if (static_cast<int>(comps.size()) >= limit) {
            RuleOutcome out = k_decrement_outcome(inst, "component-spread", v);
            out.event.params["components"] = static_cast<std::int64_t>(comps.size());
            return out;
        }
    }
    return {};
}

RuleOutcome rule_drop_interval_components(const Instance& inst) {
    std::vector<std::size_t> candidates;
    for (std::size_t ci = 0; ci < inst.components.size(); ++ci) {
        bool touches_t = false;
        for (int v : inst.components[ci]) {
            for (int u : inst.graph.neighbors(v))
                if (set_contains(inst.bundle.t, u)) {
                    touches_t = true;
                    break;
                }
            if (touches_t) break;
        }
        if (touches_t) continue;
        Graph local = induced_subgraph(inst.graph, inst.components[ci]);
        if (is_interval_component(local)) candidates.push_back(ci);
    }
    if (static_cast<int>(candidates.size()) <= inst.k + 1) return {};
    VertexSet doomed;
    for (std::size_t i = inst.k + 1; i < candidates.size(); ++i)
        doomed = set_union(doomed, inst.components[candidates[i]]);
    RuleOutcome out;
    out.status = RuleOutcome::Status::Applied;
    out.event = deletion_event(inst, "drop-interval-components", doomed, inst.k);
    out.event.params["dropped_components"] =
        static_cast<std::int64_t>(candidates.size()) - (inst.k + 1);
    out.next = apply_deletion_same_k(inst, doomed);
    return out;
}

RuleOutcome rule_singleton_w(const Instance& inst) {
    if (!inst.bundle.oracle.guaranteed) return {};
    auto res = singleton_w_rule(inst.graph, inst.k, inst.bundle.w);
    if (res.status == SingletonRuleOutcome::Status::NotApplicable) return {};
    RuleOutcome out;
    out.event = deletion_event(inst, "singleton-w", {res.deleted_vertex}, inst.k - 1);
    if (res.status == SingletonRuleOutcome::Status::NoInstance) {
        out.status = RuleOutcome::Status::NoInstance;
        return out;
    }
    out.status = RuleOutcome::Status::Applied;
    out.restart_required = true;
    out.next.graph = std::move(res.graph);
    out.next.k = res.k;
    return out;
}

RuleOutcome rule_compress_chunk(const Instance& inst) {
    if (inst.k < 1 || inst.bundle.t.empty()) return {};
    const int k = inst.k;
    std::int64_t t_size = static_cast<std::int64_t>(inst.bundle.t.size());
    std::int64_t threshold = 300 * t_size * k * (k + 1);
    const int window = 50 * k;

    Bitrow near_t(inst.graph.vertex_count());
    for (int v : inst.bundle.t)
        for (int u : inst.graph.neighbors(v)) near_t.set(u);

    for (std::size_t ci = 0; ci < inst.partitions.size(); ++ci) {
        const CliquePartition& part = inst.partitions[ci];
        int t = part.clique_count();
        if (static_cast<std::int64_t>(t) <= threshold) continue;

        std::vector<bool> good(t, false);
        for (int qi = 0; qi < t; ++qi)
            for (int v : part.cliques[qi])
                if (near_t.test(v)) {
                    good[qi] = true;
                    break;
                }
        int start = -1;
        int limit = part.circular ? t : t - window + 1;
        for (int s = 0; s < limit && start < 0; ++s) {
            bool clean = true;
            for (int j = 0; j < window && clean; ++j)
                clean = !good[(s + j) % t];
            if (clean) start = s;
        }
        if (start < 0)
            throw std::logic_error(
                "compress-chunk: no N(T)-free run despite the clique-count bound");

        auto clique_at = [&](int run_index) -> const std::vector<int>& {
            return part.cliques[(start + run_index - 1) % t];  // run is 1-based
        };
        VertexSet boundary_a(clique_at(20 * k).begin(), clique_at(20 * k).end());
        VertexSet boundary_b(clique_at(30 * k).begin(), clique_at(30 * k).end());
        std::sort(boundary_a.begin(), boundary_a.end());
        std::sort(boundary_b.begin(), boundary_b.end());

        VertexSet doomed;  // F: run cliques 20k+1 .. 30k-1
        for (int j = 20 * k + 1; j <= 30 * k - 1; ++j)
            for (int v : clique_at(j)) doomed.push_back(v);
        std::sort(doomed.begin(), doomed.end());

        // Distance sanity: the deep window is at least 15k steps from T.
        {
            std::vector<int> dist(inst.graph.vertex_count(), -1);
            std::queue<int> bfs;
            for (int v : inst.bundle.t) {
                dist[v] = 0;
                bfs.push(v);
            }
            while (!bfs.empty()) {
                int u = bfs.front();
                bfs.pop();
                for (int w : inst.graph.neighbors(u))
                    if (dist[w] < 0) {
                        dist[w] = dist[u] + 1;
                        bfs.push(w);
                    }
            }
            for (int j = 15 * k; j <= 35 * k; ++j)
                for (int v : clique_at(j))
                    if (dist[v] >= 0 && dist[v] < 15 * k)
                        throw std::logic_error("compress-chunk: window too close to T");
        }

        VertexSet run_vertices;
        for (int j = 1; j <= window; ++j)
            for (int v : clique_at(j)) run_vertices.push_back(v);
        std::sort(run_vertices.begin(), run_vertices.end());
        Graph run = induced_subgraph(inst.graph, run_vertices);
        auto local_of = [&](const VertexSet& s) {
            VertexSet out;
            for (int v : s) {
                auto it = std::lower_bound(run_vertices.begin(), run_vertices.end(), v);
                out.push_back(static_cast<int>(it - run_vertices.begin()));
            }
            return out;
        };
        int tau = static_cast<int>(
            min_vertex_cut(run, local_of(boundary_a), local_of(boundary_b)).size());
        if (tau < 1)
            throw std::logic_error("compress-chunk: zero cut inside a connected component");

        // Build the replacement graph: drop F, append the fresh clique S.
        int old_n = inst.graph.vertex_count();
        std::vector<int> newid(old_n, -1);
        int counter = 0;
        for (int v = 0; v < old_n; ++v)
            if (!set_contains(doomed, v)) newid[v] = counter++;
        int kept = counter;
        std::vector<std::int64_t> labels;
        for (int v = 0; v < old_n; ++v)
            if (newid[v] >= 0) labels.push_back(inst.graph.label(v));
        std::int64_t fresh = 0;
        for (int v = 0; v < old_n; ++v) fresh = std::max(fresh, inst.graph.label(v) + 1);
        std::vector<int> s_ids(tau);
        std::vector<std::int64_t> s_labels(tau);
        for (int i = 0; i < tau; ++i) {
            s_ids[i] = kept + i;
            s_labels[i] = fresh + i;
            labels.push_back(s_labels[i]);
        }
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : inst.graph.edges())
            if (newid[u] >= 0 && newid[v] >= 0) edges.emplace_back(newid[u], newid[v]);
        TraceEvent ev = deletion_event(inst, "compress-chunk", doomed, inst.k);
        for (int i = 0; i < tau; ++i) {
            ev.added_labels.push_back(s_labels[i]);
            for (int j = i + 1; j < tau; ++j) {
                edges.emplace_back(s_ids[i], s_ids[j]);
                ev.added_edges.emplace_back(s_labels[i], s_labels[j]);
            }
            for (int v : boundary_a) {
                edges.emplace_back(s_ids[i], newid[v]);
                ev.added_edges.emplace_back(s_labels[i], inst.graph.label(v));
            }
            for (int v : boundary_b) {
                edges.emplace_back(s_ids[i], newid[v]);
                ev.added_edges.emplace_back(s_labels[i], inst.graph.label(v));
            }
        }
        ev.params["tau"] = tau;
        ev.params["component"] = static_cast<std::int64_t>(ci);
        ev.params["run_start"] = start;
        Graph next(kept + tau, edges, std::move(labels));

        ModulatorBundle bundle = inst.bundle;
        auto remap_set = [&](const VertexSet& s) {
            VertexSet out;
            for (int v : s)
                if (newid[v] >= 0) out.push_back(newid[v]);
            return out;
        };
        bundle.t1 = remap_set(bundle.t1);
        bundle.m = remap_set(bundle.m);
        bundle.t = remap_set(bundle.t);
        for (auto& set : bundle.w) set = remap_set(set);

        std::vector<CliquePartition> hints;
        for (std::size_t pi = 0; pi < inst.partitions.size(); ++pi) {
            CliquePartition hint;
            hint.circular = inst.partitions[pi].circular;
            if (pi != ci) {
                for (const auto& q : inst.partitions[pi].cliques) {
                    std::vector<int> mapped;
                    for (int v : q) mapped.push_back(newid[v]);
                    hint.cliques.push_back(std::move(mapped));
                }
            } else {
                // Rebuild the run: ..., Q_20k, S, Q_30k, ... in circular order.
                int f_lo = 20 * k + 1, f_hi = 30 * k - 1;
                for (int qi = 0; qi < t; ++qi) {
                    int run_index = ((qi - start + t) % t) + 1;
                    if (run_index >= f_lo && run_index <= f_hi) continue;
                    std::vector<int> mapped;
                    for (int v : part.cliques[qi]) mapped.push_back(newid[v]);
                    hint.cliques.push_back(std::move(mapped));
                    if (run_index == 20 * k) hint.cliques.push_back(s_ids);
                }
            }
            hints.push_back(std::move(hint));
        }
        RuleOutcome out;
        out.status = RuleOutcome::Status::Applied;
        out.event = std::move(ev);
        out.next = finish_instance(std::move(next), inst.k, std::move(bundle),
                                   std::move(hints));
        return out;
    }
    return {};
}

}  // namespace phcavd
