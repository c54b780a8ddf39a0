#pragma once

#include "etg/census.hpp"
#include "etg/graph.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace etg {

// Exhaustive isomorph-free generation of graphs of order n by canonical
// augmentation: each graph on k vertices is extended by one vertex with every
// neighbor subset (deduplicated under Aut of the parent), and a child is kept
// only when the new vertex lies in the orbit of the canonically chosen
// deletable vertex. Streams each class exactly once.
//
// workers > 1 parallelizes over parents with a deterministic merge; the
// serial path is the reference implementation.
void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit,
                    int workers = 1);

// pre: n <= 9 (10 behind the long flag); returns connected graphs only
std::vector<Graph> exhaustive_connected_graphs(int n, bool long_run = false, int workers = 1);

// Second, slower strategy for cross-validation: depth-first extension of
// lex-maximal adjacency codes (column order), one canonical labeled graph
// per class. Practical for n <= 8.
std::vector<Graph> orderly_connected_graphs(int n);

struct OracleCensus {
    int n = 0;
    TableRow row{0, 0, 0, 0, 0, 0};         // Tot, Reg, Bpte, VT, AT, Wthy over ET graphs
    std::vector<CensusRecord> et_graphs;    // classified, sorted by canonical form
    uint64_t connected_count = 0;           // all connected graphs seen
};

OracleCensus oracle_census(int n, bool long_run = false, int workers = 1);

// Reference counts derived independently of the generator: unlabeled graph
// totals via Burnside's lemma over cycle types, and connected totals via the
// inverse Euler transform.
namespace reference_counts {
uint64_t unlabeled_graphs(int n);
uint64_t unlabeled_connected_graphs(int n);
} // namespace reference_counts

} // namespace etg
