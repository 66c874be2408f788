#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phcavd/graph.hpp"

namespace phcavd {

// Forbidden induced subgraphs of proper Helly circular-arc graphs: six fixed
// patterns plus the Monad family (hole of length >= 4 with a centre adjacent
// to none of it).
enum class ObstructionKind { Claw, Net, Tent, W4, W5, CoC6, Monad };

std::string kind_name(ObstructionKind kind);

// Obstructions of size < 12 are "small"; the only larger ones are Monads.
inline constexpr int kSmallObstructionLimit = 12;

struct Obstruction {
    ObstructionKind kind;
    VertexSet vertices;     // sorted
    std::vector<int> hole;  // Monad only: cycle in traversal order
    int centre = -1;        // Monad only

    int size() const { return static_cast<int>(vertices.size()); }
    bool small() const { return size() < kSmallObstructionLimit; }
};

// Checks the witness against its host graph: vertices induce exactly the
// named pattern; Monads additionally carry a valid hole/centre split.
bool verify_obstruction(const Graph& g, const Obstruction& o);

// The six forbidden patterns as standalone graphs, plus C*_l builders.
// Useful to tests and the obstruction catalog checks.
Graph make_claw();
Graph make_net();
Graph make_tent();
Graph make_w4();
Graph make_w5();
Graph make_co_c6();
Graph make_cycle(int len);
Graph make_monad(int hole_len);  // C*_l: hole plus isolated centre (last id)

// Searches the six fixed patterns in order claw, net, tent, W4, W5, co-C6;
// within a kind returns the lexicographically smallest witness set.
std::optional<Obstruction> find_fixed_obstruction(const Graph& g);

// Induced cycle of length >= 4 in G - F, if any: G - F is chordal iff the
// result is absent (perfect-elimination certificate; a hole is extracted
// from the failure otherwise).
std::optional<std::vector<int>> find_hole_avoiding(const Graph& g, const VertexSet& f);

// Smallest centre first: scans v ascending for a hole in G - N[v].
std::optional<Obstruction> find_monad(const Graph& g);

// Fixed obstruction if any, else Monad; absent iff G is proper Helly
// circular-arc. Internally contracts true-twin classes first, which keeps
// copy-style graphs cheap (no obstruction contains two true twins).
std::optional<Obstruction> find_any_obstruction(const Graph& g);

// Every minimal vertex set of size < 12 inducing an obstruction,
// deduplicated and sorted. Pattern-directed: per fixed kind, plus Monads
// with hole length 4..10 via bounded induced-cycle enumeration.
std::vector<VertexSet> enumerate_minimal_small_obstructions(const Graph& g);

// Greedy packing of claws centred at v with leaves drawn from `allowed`,
// pairwise disjoint outside {v}; single pass over ascending leaf triples.
// A lower bound on the maximum packing, not an exact one.
std::vector<Obstruction> greedy_claw_packing_at(const Graph& g, int v,
                                                const VertexSet& allowed);

}  // namespace phcavd
