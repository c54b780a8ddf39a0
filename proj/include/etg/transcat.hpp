#pragma once

#include "etg/permgroup.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace etg {

inline constexpr int kCatalogueDefaultCap = 8;
inline constexpr const char* kEngineVersion = "etg-0.1.0";

// One transitive permutation group of its degree, up to conjugacy in the full
// symmetric group of that degree.
struct CatalogueEntry {
    int degree = 0;
    int index = 0; // 1-based within the degree, assigned after sorting
    uint64_t order = 0;
    std::vector<Permutation> generators;

    PermGroup group() const { return PermGroup(degree, generators); }
};

struct Catalogue {
    int max_degree = 0;
    std::string provenance;
    std::map<int, std::vector<CatalogueEntry>> entries;

    const std::vector<CatalogueEntry>& at_degree(int k) const;
    bool has_degree(int k) const { return entries.count(k) > 0; }
};

// All transitive permutation groups of degree k up to S_k-conjugacy.
// Degrees up to 8 come from the subgroup lattice of S_k directly; degrees 9
// and 10 combine transitive subgroups of the block-imprimitivity wreath
// products with a socle sweep for the primitive groups.
std::vector<PermGroup> transitive_groups_of_degree(int k);

// pre: max_degree <= 8 unless long_run is set (hard cap 10)
Catalogue build_catalogue(int max_degree, bool long_run = false);

void save_catalogue(const Catalogue& cat, const std::string& path);
Catalogue load_catalogue(const std::string& path);
void write_catalogue(const Catalogue& cat, std::ostream& out);
Catalogue read_catalogue(std::istream& in, const std::string& name);

} // namespace etg
