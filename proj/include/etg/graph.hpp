#pragma once

#include "etg/perm.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace etg {

// Simple undirected graph with bitset adjacency rows and an optional
// designated bipartition (parts U and W).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int words_per_row() const { return words_; }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const {
        return (adj_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
    }
    int degree(int v) const;
    int edge_count() const;
    std::span<const uint64_t> row(int v) const {
        return {adj_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
    }
    std::vector<std::pair<int, int>> edges() const; // u < v, sorted
    std::vector<int> neighbors(int v) const;

    Graph relabel(const Permutation& p) const; // vertex v becomes p(v)

    // designated bipartition
    bool has_bipartition() const { return side_.has_value(); }
    void set_bipartition(const std::vector<int>& part_u, const std::vector<int>& part_w);
    void clear_bipartition() { side_.reset(); }
    const std::vector<int8_t>& sides() const; // 0 = U, 1 = W
    std::vector<int> part(int side) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> adj_;
    std::optional<std::vector<int8_t>> side_;
};

bool is_connected(const Graph& x);
// true + 2-coloring if bipartite (each connected component 2-colored
// starting from its lowest vertex)
std::optional<std::vector<int8_t>> bipartition_coloring(const Graph& x);
bool is_bipartite(const Graph& x);

// distinct vertices have distinct neighbourhoods
bool is_worthy(const Graph& x);
std::vector<int> valency_multiset(const Graph& x); // sorted degrees

// classes of vertices sharing a neighbourhood, each sorted, ordered by
// smallest member
std::vector<std::vector<int>> twin_classes(const Graph& x);
Graph twin_quotient(const Graph& x);

// replace each U-vertex by k copies and each W-vertex by m copies, each edge
// by a complete bipartite block; requires a designated bipartition
Graph blow_up(const Graph& y, int k, int m);

// --- builders used across the census and tests ---
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b); // designated parts
Graph path_graph(int n);
Graph star_graph(int leaves); // K_{1,leaves}
Graph petersen_graph();

} // namespace etg
