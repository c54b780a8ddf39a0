#include "etg/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace etg {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), adj_(static_cast<size_t>(n) * words_, 0) {
    if (n < 0) throw std::invalid_argument("graph order must be >= 0");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[static_cast<size_t>(u) * words_ + v / 64] |= uint64_t(1) << (v % 64);
    adj_[static_cast<size_t>(v) * words_ + u / 64] |= uint64_t(1) << (u % 64);
}

int Graph::degree(int v) const {
    int d = 0;
    for (int w = 0; w < words_; ++w)
        d += std::popcount(adj_[static_cast<size_t>(v) * words_ + w]);
    return d;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
        uint64_t bits = adj_[static_cast<size_t>(v) * words_ + w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

Graph Graph::relabel(const Permutation& p) const {
    if (p.degree() != n_) throw std::invalid_argument("relabel: permutation degree mismatch");
    Graph g(n_);
    for (auto [u, v] : edges()) g.add_edge(p(u), p(v));
    if (side_) {
        std::vector<int8_t> s(n_);
        for (int v = 0; v < n_; ++v) s[p(v)] = (*side_)[v];
        g.side_ = std::move(s);
    }
    return g;
}

void Graph::set_bipartition(const std::vector<int>& part_u, const std::vector<int>& part_w) {
    std::vector<int8_t> s(n_, -1);
    for (int v : part_u) s.at(v) = 0;
    for (int v : part_w) {
        if (s.at(v) == 0) throw std::invalid_argument("bipartition parts overlap");
        s[v] = 1;
    }
    for (int v = 0; v < n_; ++v)
        if (s[v] < 0) throw std::invalid_argument("bipartition does not cover all vertices");
    for (auto [u, v] : edges())
        if (s[u] == s[v]) throw std::invalid_argument("bipartition has an intra-part edge");
    side_ = std::move(s);
}

const std::vector<int8_t>& Graph::sides() const {
    if (!side_) throw std::logic_error("graph has no designated bipartition");
    return *side_;
}

std::vector<int> Graph::part(int side) const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (sides()[v] == side) out.push_back(v);
    return out;
}

bool is_connected(const Graph& x) {
    int n = x.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : x.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == n;
}

std::optional<std::vector<int8_t>> bipartition_coloring(const Graph& x) {
    int n = x.vertex_count();
    std::vector<int8_t> color(n, -1);
    for (int start = 0; start < n; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : x.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = static_cast<int8_t>(1 - color[v]);
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool is_bipartite(const Graph& x) { return bipartition_coloring(x).has_value(); }

bool is_worthy(const Graph& x) {
    int n = x.vertex_count();
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    auto less = [&](int a, int b) {
        return std::lexicographical_compare(x.row(a).begin(), x.row(a).end(), x.row(b).begin(),
                                            x.row(b).end());
    };
    std::sort(order.begin(), order.end(), less);
    for (int i = 0; i + 1 < n; ++i)
        if (std::equal(x.row(order[i]).begin(), x.row(order[i]).end(), x.row(order[i + 1]).begin()))
            return false;
    return true;
}

std::vector<int> valency_multiset(const Graph& x) {
    std::vector<int> d;
    for (int v = 0; v < x.vertex_count(); ++v) d.push_back(x.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<std::vector<int>> twin_classes(const Graph& x) {
    std::map<std::vector<uint64_t>, std::vector<int>> buckets;
    for (int v = 0; v < x.vertex_count(); ++v) {
        std::vector<uint64_t> key(x.row(v).begin(), x.row(v).end());
        buckets[std::move(key)].push_back(v);
    }
    std::vector<std::vector<int>> classes;
    for (auto& [key, verts] : buckets) classes.push_back(verts);
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return classes;
}

Graph twin_quotient(const Graph& x) {
    auto classes = twin_classes(x);
    int m = static_cast<int>(classes.size());
    std::vector<int> cls_of(x.vertex_count());
    for (int c = 0; c < m; ++c)
        for (int v : classes[c]) cls_of[v] = c;
    Graph q(m);
    for (auto [u, v] : x.edges())
        if (!q.adjacent(cls_of[u], cls_of[v])) q.add_edge(cls_of[u], cls_of[v]);
    if (x.has_bipartition()) {
        std::vector<int> pu, pw;
        for (int c = 0; c < m; ++c)
            (x.sides()[classes[c][0]] == 0 ? pu : pw).push_back(c);
        q.set_bipartition(pu, pw);
    }
    return q;
}

Graph blow_up(const Graph& y, int k, int m) {
    if (!y.has_bipartition()) throw std::invalid_argument("blow_up requires a designated bipartition");
    if (k < 1 || m < 1) throw std::invalid_argument("blow_up multiplicities must be positive");
    auto part_u = y.part(0), part_w = y.part(1);
    int n = k * static_cast<int>(part_u.size()) + m * static_cast<int>(part_w.size());
    // copies of U-vertices first, then copies of W-vertices
    std::vector<int> first_copy(y.vertex_count(), -1);
    int next = 0;
    for (int v : part_u) {
        first_copy[v] = next;
        next += k;
    }
    for (int v : part_w) {
        first_copy[v] = next;
        next += m;
    }
    Graph g(n);
    for (auto [a, b] : y.edges()) {
        int u = y.sides()[a] == 0 ? a : b;
        int w = y.sides()[a] == 0 ? b : a;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < m; ++j) g.add_edge(first_copy[u] + i, first_copy[w] + j);
    }
    std::vector<int> pu, pw;
    for (int v : part_u)
        for (int i = 0; i < k; ++i) pu.push_back(first_copy[v] + i);
    for (int v : part_w)
        for (int j = 0; j < m; ++j) pw.push_back(first_copy[v] + j);
    g.set_bipartition(pu, pw);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    if (n < 3) return g;
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    std::vector<int> pu, pw;
    for (int u = 0; u < a; ++u) pu.push_back(u);
    for (int w = 0; w < b; ++w) pw.push_back(a + w);
    for (int u = 0; u < a; ++u)
        for (int w = 0; w < b; ++w) g.add_edge(u, a + w);
    g.set_bipartition(pu, pw);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(i, i + 5);                // spokes
        g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return g;
}

} // namespace etg
