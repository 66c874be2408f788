#include "phcavd/hitting_set.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace phcavd {

namespace {

void validate(const SetFamily& f) {
    if (f.d < 1) throw std::invalid_argument("set family: d must be >= 1");
    if (f.k < 0) throw std::invalid_argument("set family: k must be >= 0");
    for (const VertexSet& s : f.sets) {
        if (s.empty()) throw std::invalid_argument("set family: empty member set");
        if (static_cast<int>(s.size()) > f.d)
            throw std::invalid_argument("set family: member larger than d");
        if (!std::is_sorted(s.begin(), s.end()))
            throw std::invalid_argument("set family: member not sorted");
        for (int v : s)
            if (!set_contains(f.universe, v))
                throw std::invalid_argument("set family: member outside universe");
    }
}

std::optional<Sunflower> sunflower_rec(const std::vector<VertexSet>& sets,
                                       const std::vector<std::size_t>& index, int p) {
    if (static_cast<int>(sets.size()) < p) return std::nullopt;
    // Greedy maximal pairwise-disjoint subfamily, ascending order.
    std::vector<std::size_t> disjoint;
    VertexSet touched;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!set_intersection(sets[i], touched).empty()) continue;
        disjoint.push_back(i);
        touched = set_union(touched, sets[i]);
    }
    if (static_cast<int>(disjoint.size()) >= p) {
        Sunflower s;
        for (std::size_t i : disjoint) s.petals.push_back(index[i]);
        return s;
    }
    // Recurse on the most frequent element (smallest id on ties).
    std::map<int, int> freq;
    for (const VertexSet& s : sets)
        for (int v : s) ++freq[v];
    int x = -1, best = 0;
    for (auto [v, c] : freq)
        if (c > best) {
            best = c;
            x = v;
        }
    if (best <= 1) return std::nullopt;
    std::vector<VertexSet> sub;
    std::vector<std::size_t> sub_index;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!set_contains(sets[i], x)) continue;
        sub.push_back(set_difference(sets[i], {x}));
        sub_index.push_back(index[i]);
    }
    auto inner = sunflower_rec(sub, sub_index, p);
    if (!inner) return std::nullopt;
    inner->core = set_union(inner->core, {x});
    return inner;
}

}  // namespace

std::int64_t sunflower_bound(int d, int k) {
    std::int64_t bound = 1;
    const std::int64_t cap = std::numeric_limits<std::int64_t>::max() / 2;
    for (int i = 2; i <= d; ++i) {
        if (bound > cap / i) return cap;
        bound *= i;
    }
    for (int i = 0; i < d; ++i) {
        if (bound > cap / (k + 1)) return cap;
        bound *= (k + 1);
    }
    return bound;
}

std::optional<Sunflower> find_sunflower(const SetFamily& f, int p) {
    if (p < 1) throw std::invalid_argument("find_sunflower: p must be >= 1");
    validate(f);
    std::vector<std::size_t> index(f.sets.size());
    for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;
    return sunflower_rec(f.sets, index, p);
}

SetFamily reduce_family(const SetFamily& f) {
    validate(f);
    if (f.sets.empty()) throw std::invalid_argument("reduce_family: empty family");
    std::int64_t bound = sunflower_bound(f.d, f.k);
    SetFamily out = f;
    while (static_cast<std::int64_t>(out.sets.size()) > bound) {
        auto s = find_sunflower(out, f.k + 2);
        if (!s)
            throw std::logic_error(
                "reduce_family: no sunflower found above the counting bound");
        std::size_t drop = s->petals.front();
        for (std::size_t i : s->petals)
            if (out.sets[i] > out.sets[drop]) drop = i;
        out.sets.erase(out.sets.begin() + static_cast<std::ptrdiff_t>(drop));
    }
    return out;
}

}  // namespace phcavd
