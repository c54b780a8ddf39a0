#include "etg/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace etg {

namespace {

// orbit count of the generator action on a list of keyed items
int orbit_count(const std::vector<std::pair<int, int>>& items,
                const std::vector<Permutation>& gens, bool ordered) {
    std::map<std::pair<int, int>, int> index;
    for (size_t i = 0; i < items.size(); ++i) index[items[i]] = static_cast<int>(i);
    std::vector<int> parent(items.size());
    for (size_t i = 0; i < items.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < items.size(); ++i)
        for (const auto& g : gens) {
            int a = g(items[i].first), b = g(items[i].second);
            if (!ordered && a > b) std::swap(a, b);
            int j = index.at({a, b});
            int ra = find(static_cast<int>(i)), rb = find(j);
            if (ra != rb) parent[ra] = rb;
        }
    int cnt = 0;
    for (size_t i = 0; i < items.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++cnt;
    return cnt;
}

} // namespace

int edge_orbit_count(const Graph& x, const std::vector<Permutation>& gens) {
    std::vector<std::pair<int, int>> edges = x.edges();
    if (edges.empty()) return 0;
    return orbit_count(edges, gens, false);
}

int arc_orbit_count(const Graph& x, const std::vector<Permutation>& gens) {
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : x.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    if (arcs.empty()) return 0;
    return orbit_count(arcs, gens, true);
}

ClassificationFlags classify(const Graph& x) { return classify(x, canonical_form(x)); }

ClassificationFlags classify(const Graph& x, const CanonResult& canon) {
    ClassificationFlags f;
    int n = x.vertex_count();
    f.connected = is_connected(x);
    f.valencies = valency_multiset(x);
    f.regular = n == 0 || f.valencies.front() == f.valencies.back();
    f.bipartite = n >= 2 && is_bipartite(x);
    f.worthy = is_worthy(x);
    f.aut_order = canon.aut_order;

    bool vt = true;
    for (int v = 0; v < n; ++v)
        if (canon.orbit_of[v] != canon.orbit_of[0]) vt = false;
    f.vertex_transitive = vt;

    int eo = edge_orbit_count(x, canon.aut_generators);
    int ao = arc_orbit_count(x, canon.aut_generators);
    f.edge_transitive = eo <= 1;
    f.arc_transitive = ao <= 1;
    bool has_edge = x.edge_count() > 0;
    f.half_arc_transitive =
        has_edge && f.vertex_transitive && f.edge_transitive && !f.arc_transitive;
    f.semi_symmetric = f.regular && f.edge_transitive && !f.vertex_transitive;
    return f;
}

PermGroup part_preserving_subgroup(const Graph& x) {
    if (!is_connected(x)) throw std::invalid_argument("part_preserving_subgroup: graph not connected");
    auto coloring = bipartition_coloring(x);
    if (!coloring || x.vertex_count() < 2)
        throw std::invalid_argument("part_preserving_subgroup: graph not bipartite");
    PermGroup aut = automorphism_group(x);
    const auto& side = *coloring;

    auto swaps_parts = [&](const Permutation& g) { return side[g(0)] != side[0]; };

    std::vector<Permutation> preserving, swapping;
    for (const auto& g : aut.generators())
        (swaps_parts(g) ? swapping : preserving).push_back(g);
    if (swapping.empty()) return aut;

    // Schreier generators of the kernel of the part-swap homomorphism, with
    // transversal {id, s0}.
    const Permutation& s0 = swapping[0];
    std::vector<Permutation> kernel = preserving;
    for (const auto& g : swapping)
        if (!compose(g, s0.inverse()).is_identity()) kernel.push_back(compose(g, s0.inverse()));
    for (const auto& g : preserving) kernel.push_back(conjugate(g, s0.inverse()));
    for (const auto& g : swapping) kernel.push_back(compose(s0, g));
    PermGroup part_group(x.vertex_count(), std::move(kernel));
    return part_group;
}

} // namespace etg
