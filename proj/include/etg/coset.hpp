#pragma once

#include "etg/permgroup.hpp"

namespace etg {

// Transitive action of `group` on the right cosets of `subgroup`.
struct CosetAction {
    PermGroup group;
    PermGroup subgroup;
    int degree = 0; // index |G:H|
    std::vector<Permutation> images_of_generators; // one per group.generators()
    std::vector<Permutation> coset_reps;           // reps[0] = identity

    PermGroup image() const { return PermGroup(degree, images_of_generators); }
};

CosetAction coset_action(const PermGroup& g, const PermGroup& h);

// Largest subgroup of h that is normal in g (the kernel of the coset action).
PermGroup core(const PermGroup& g, const PermGroup& h);

// Generators of g acting on its own points plus the cosets of h (degree
// g.degree() + |G:H|); the census builds bipartite orbital graphs from this.
std::vector<Permutation> combined_action_generators(const PermGroup& g, const CosetAction& act);

} // namespace etg
