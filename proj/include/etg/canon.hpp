#pragma once

#include "etg/graph.hpp"
#include "etg/permgroup.hpp"

#include <string>
#include <vector>

namespace etg {

// Canonical labeling plus the automorphism generators discovered on the way.
struct CanonResult {
    std::vector<int> labeling;                // vertex -> canonical position
    std::string canonical_string;             // graph6 of the relabeled graph
    std::vector<Permutation> aut_generators;  // generate Aut(X)
    std::vector<int> orbit_of;                // vertex -> least vertex in its orbit
    GroupOrder aut_order = 1;

    Permutation labeling_perm() const { return Permutation(labeling); }
};

// Equitable-refinement / individualization search. The canonical string is
// relabeling-invariant; vertices sharing an initial color stay exchangeable.
CanonResult canonical_form(const Graph& g);
CanonResult canonical_form_colored(const Graph& g, const std::vector<int>& colors);

PermGroup automorphism_group(const Graph& g);

} // namespace etg
