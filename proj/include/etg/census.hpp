#pragma once

#include "etg/classify.hpp"
#include "etg/graph.hpp"
#include "etg/transcat.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace etg {

// A requested order needs group degrees beyond what the catalogue covers.
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CensusRecord {
    Graph graph; // carries designated parts for bipartite-pipeline output
    std::string canonical;
    ClassificationFlags flags;
    std::string provenance;
};

// Table 1 column layout: Tot, Reg, Bpte, VT, AT, Wthy.
using TableRow = std::array<int, 6>;

struct CensusTable {
    std::map<int, TableRow> rows;
};

class CensusEngine {
public:
    explicit CensusEngine(Catalogue cat, int workers = 1)
        : cat_(std::move(cat)), workers_(workers) {}

    const Catalogue& catalogue() const { return cat_; }

    // worker count for the per-(group, subgroup-class) work items; results
    // are merged in a fixed order, so any count gives identical output
    void set_workers(int workers) { workers_ = workers; }

    // All worthy edge-transitive bipartite connected graphs with parts of
    // sizes k and m, one per isomorphism class. Runs over the degree-k
    // catalogue groups and their core-free index-m subgroup classes; builds
    // one graph per point-stabilizer orbit on the coset side (with the early
    // whole-group check) plus the unions over equal-sized orbit pairs, then
    // filters connectedness, worthiness and duplicates.
    const std::vector<CensusRecord>& bipartite_worthy(int k, int m);

    // All connected bipartite edge-transitive graphs of order n: worthy ones
    // plus blow-ups of smaller worthy ones.
    std::vector<CensusRecord> bipartite_all(int n);

    // All connected vertex-transitive graphs of order n via unions of
    // point-stabilizer orbits over the degree-n catalogue.
    std::vector<CensusRecord> vertex_transitive(int n);

    // All connected edge-transitive graphs of order n (vertex-transitive
    // non-bipartite side united with the bipartite side).
    std::vector<CensusRecord> full_census(int n);

private:
    Catalogue cat_;
    int workers_ = 1;
    std::map<std::pair<int, int>, std::vector<CensusRecord>> worthy_memo_;
};

CensusTable tabulate(const std::map<int, std::vector<CensusRecord>>& records_by_order);

std::string census_csv(const std::vector<CensusRecord>& records);
std::string table_csv(const CensusTable& table);
std::string flags_csv_row(int n, const std::string& graph6, const ClassificationFlags& f);

} // namespace etg
