#pragma once

#include "etg/permgroup.hpp"

#include <optional>

namespace etg {

// True iff some g in `ambient` conjugates h1 onto h2. Invariant prefilters
// (order, orbit-length multiset, cycle-type multiset) then a witness scan.
bool are_conjugate_subgroups(const PermGroup& ambient, const PermGroup& h1, const PermGroup& h2);

// One representative per conjugacy class of subgroups of g. Cyclic extension
// from the trivial group (adding elements of prime order modulo the current
// subgroup inside its normalizer) seeded with the perfect subgroups found by
// a two-generator sweep. Throws if order(g) exceeds order_bound.
std::vector<PermGroup> subgroups_up_to_conjugacy(const PermGroup& g, uint64_t order_bound = 100000);

// One representative per conjugacy class of subgroups of index m, using the
// normal-Hall-subgroup reduction when one is found among normal closures of
// Sylow subgroups, else filtering the full lattice. m = 0 is rejected;
// m not dividing |G| gives an empty list.
std::vector<PermGroup> subgroups_of_index(const PermGroup& g, int m);

// The index-m classes whose core in g is trivial.
std::vector<PermGroup> corefree_subgroups_of_index(const PermGroup& g, int m);

PermGroup normal_closure(const PermGroup& g, const PermGroup& h);
PermGroup derived_subgroup(const PermGroup& g);
PermGroup sylow_subgroup(const PermGroup& g, int p);
std::optional<PermGroup> normal_hall_subgroup(const PermGroup& g);

} // namespace etg
