#pragma once

#include "etg/canon.hpp"
#include "etg/graph.hpp"
#include "etg/permgroup.hpp"

namespace etg {

struct ClassificationFlags {
    bool connected = false;
    bool regular = false;
    bool bipartite = false;
    bool worthy = false;
    bool vertex_transitive = false;
    bool edge_transitive = false;
    bool arc_transitive = false;
    bool half_arc_transitive = false;
    bool semi_symmetric = false;
    std::vector<int> valencies; // sorted multiset
    GroupOrder aut_order = 1;
};

// Flags are computed from Aut(X) orbits on vertices, edges and arcs. K_1
// follows the census conventions: vertex- and arc-transitive, regular,
// worthy, and not bipartite.
ClassificationFlags classify(const Graph& x);
ClassificationFlags classify(const Graph& x, const CanonResult& canon);

int edge_orbit_count(const Graph& x, const std::vector<Permutation>& aut_gens);
int arc_orbit_count(const Graph& x, const std::vector<Permutation>& aut_gens);

// Subgroup of Aut(X) preserving the two parts setwise (index 1 or 2);
// X must be bipartite and connected.
PermGroup part_preserving_subgroup(const Graph& x);

} // namespace etg
