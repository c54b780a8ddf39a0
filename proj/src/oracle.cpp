#include "etg/oracle.hpp"

#include "etg/canon.hpp"
#include "etg/graph6.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace etg {

namespace {

constexpr int kMaxOracleN = 10;

// compact graph for the generation levels (n <= 10)
struct SG {
    int n = 0;
    std::array<uint16_t, kMaxOracleN> adj{};

    bool connected() const {
        if (n <= 1) return true;
        uint16_t seen = 1, frontier = 1;
        while (frontier) {
            uint16_t next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier & (uint16_t(1) << v)) next |= adj[v];
            frontier = next & ~seen;
            seen |= next;
        }
        return std::popcount(static_cast<unsigned>(seen)) == n;
    }

    Graph to_graph() const {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (adj[u] & (uint16_t(1) << v)) g.add_edge(u, v);
        return g;
    }
};

uint16_t apply_to_mask(const Permutation& p, uint16_t mask) {
    uint16_t out = 0;
    while (mask) {
        int b = std::countr_zero(static_cast<unsigned>(mask));
        mask &= mask - 1;
        out |= uint16_t(1) << p(b);
    }
    return out;
}

// cheap isomorphism-invariant vertex score; "minimal score" narrows the
// candidates for the canonical deletable vertex before a full canon run
uint64_t vertex_score(const SG& g, int v) {
    int deg = std::popcount(static_cast<unsigned>(g.adj[v]));
    std::array<int, kMaxOracleN> nbr_deg{};
    int k = 0;
    uint16_t m = g.adj[v];
    uint64_t common = 0;
    while (m) {
        int u = std::countr_zero(static_cast<unsigned>(m));
        m &= m - 1;
        nbr_deg[k++] = std::popcount(static_cast<unsigned>(g.adj[u]));
        common += std::popcount(static_cast<unsigned>(g.adj[u] & g.adj[v]));
    }
    std::sort(nbr_deg.begin(), nbr_deg.begin() + k);
    uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < k; ++i) {
        h ^= static_cast<uint64_t>(nbr_deg[i]) + 0x9e3779b9ull;
        h *= 1099511628211ull;
    }
    h ^= common * 0x2545f4914f6cdd1dull;
    return (static_cast<uint64_t>(deg) << 56) ^ (h >> 8);
}

// children of one parent that pass the canonical-augmentation rule
std::vector<SG> children_of(const SG& parent) {
    std::vector<SG> out;
    int k = parent.n;
    int child_n = k + 1;
    CanonResult pc = canonical_form(parent.to_graph());
    bool parent_rigid = pc.aut_order == 1;

    for (uint32_t sub = 0; sub < (1u << k); ++sub) {
        uint16_t s = static_cast<uint16_t>(sub);
        if (!parent_rigid) {
            // keep only the minimum of the Aut(parent)-orbit of the subset
            uint16_t best = s;
            std::vector<uint16_t> orbit{s};
            bool is_min = true;
            for (size_t head = 0; head < orbit.size() && is_min; ++head)
                for (const auto& a : pc.aut_generators) {
                    uint16_t t = apply_to_mask(a, orbit[head]);
                    if (t < best) {
                        is_min = false;
                        break;
                    }
                    if (std::find(orbit.begin(), orbit.end(), t) == orbit.end()) orbit.push_back(t);
                }
            if (!is_min) continue;
        }
        SG child;
        child.n = child_n;
        child.adj = parent.adj;
        child.adj[k] = s;
        for (int v = 0; v < k; ++v)
            if (s & (uint16_t(1) << v)) child.adj[v] |= uint16_t(1) << k;

        // canonical deletable vertex: among minimal-score vertices, the one
        // at the last canonical position; accept iff the new vertex shares
        // its orbit
        uint64_t best_score = ~0ull;
        std::array<uint64_t, kMaxOracleN + 1> scores{};
        for (int v = 0; v < child_n; ++v) {
            scores[v] = vertex_score(child, v);
            best_score = std::min(best_score, scores[v]);
        }
        if (scores[k] != best_score) continue;
        int ties = 0;
        for (int v = 0; v < child_n; ++v)
            if (scores[v] == best_score) ++ties;
        if (ties == 1) {
            out.push_back(child);
            continue;
        }
        CanonResult cc = canonical_form(child.to_graph());
        int chosen = -1, chosen_pos = -1;
        for (int v = 0; v < child_n; ++v)
            if (scores[v] == best_score && cc.labeling[v] > chosen_pos) {
                chosen = v;
                chosen_pos = cc.labeling[v];
            }
        if (cc.orbit_of[k] == cc.orbit_of[chosen]) out.push_back(child);
    }
    return out;
}

std::vector<SG> next_level(const std::vector<SG>& level, int workers) {
    std::vector<std::vector<SG>> slots(level.size());
    if (workers > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
#endif
        for (size_t i = 0; i < level.size(); ++i) slots[i] = children_of(level[i]);
    } else {
        for (size_t i = 0; i < level.size(); ++i) slots[i] = children_of(level[i]);
    }
    std::vector<SG> out;
    for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
    return out;
}

} // namespace

void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit,
                    int workers) {
    if (n < 1 || n > kMaxOracleN)
        throw std::invalid_argument("for_each_graph: order must be between 1 and 10");
    std::vector<SG> level{SG{1, {}}};
    for (int k = 2; k < n; ++k) level = next_level(level, workers);
    if (n == 1) {
        visit(Graph(1));
        return;
    }
    // stream the final level chunk by chunk to bound memory
    const size_t chunk = 512;
    for (size_t base = 0; base < level.size(); base += chunk) {
        size_t end = std::min(level.size(), base + chunk);
        std::vector<std::vector<SG>> slots(end - base);
        if (workers > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(workers)
#endif
            for (size_t i = base; i < end; ++i) slots[i - base] = children_of(level[i]);
        } else {
            for (size_t i = base; i < end; ++i) slots[i - base] = children_of(level[i]);
        }
        for (const auto& s : slots)
            for (const auto& g : s) {
                if (connected_only && !g.connected()) continue;
                visit(g.to_graph());
            }
    }
}

std::vector<Graph> exhaustive_connected_graphs(int n, bool long_run, int workers) {
    int cap = long_run ? 10 : 9;
    if (n < 1 || n > cap)
        throw std::invalid_argument("exhaustive enumeration capped at order " + std::to_string(cap) +
                                    (long_run ? "" : " (use the long-run flag for 10)"));
    std::vector<Graph> out;
    for_each_graph(n, true, [&](const Graph& g) { out.push_back(g); }, workers);
    return out;
}

// ---------------------------------------------------------------------------
// orderly generation (second strategy, cross-check only)

namespace {

// candidate column codes (adjacency of position j to positions 0..j-1, most
// significant bit first) must never beat the identity labeling
bool lexmax_canonical(const SG& g) {
    int k = g.n;
    std::array<int, kMaxOracleN> sigma{};
    std::array<bool, kMaxOracleN> used{};

    // explores relabelings whose columns tie the original so far; returns
    // false as soon as one strictly beats it
    std::function<bool(int)> place = [&](int j) -> bool {
        if (j == k) return true;
        for (int v = 0; v < k; ++v) {
            if (used[v]) continue;
            int cand = 0, orig = 0;
            for (int i = 0; i < j; ++i) {
                cand = (cand << 1) | ((g.adj[v] >> sigma[i]) & 1);
                orig = (orig << 1) | ((g.adj[j] >> i) & 1);
            }
            if (cand < orig) continue;
            if (cand > orig) return false;
            sigma[j] = v;
            used[v] = true;
            bool ok = place(j + 1);
            used[v] = false;
            if (!ok) return false;
        }
        return true;
    };
    return place(0);
}

void orderly_extend(const SG& g, int n, std::vector<Graph>& out) {
    if (g.n == n) {
        if (g.connected()) out.push_back(g.to_graph());
        return;
    }
    int k = g.n;
    for (uint32_t sub = 0; sub < (1u << k); ++sub) {
        SG child;
        child.n = k + 1;
        child.adj = g.adj;
        child.adj[k] = static_cast<uint16_t>(sub);
        for (int v = 0; v < k; ++v)
            if (sub & (1u << v)) child.adj[v] |= uint16_t(1) << k;
        if (lexmax_canonical(child)) orderly_extend(child, n, out);
    }
}

} // namespace

std::vector<Graph> orderly_connected_graphs(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("orderly generation is practical for n <= 8 only");
    std::vector<Graph> out;
    orderly_extend(SG{1, {}}, n, out);
    return out;
}

// ---------------------------------------------------------------------------

OracleCensus oracle_census(int n, bool long_run, int workers) {
    OracleCensus result;
    result.n = n;
    int cap = long_run ? 10 : 9;
    if (n < 1 || n > cap)
        throw std::invalid_argument("oracle census capped at order " + std::to_string(cap) +
                                    (long_run ? "" : " (use the long-run flag for 10)"));

    for_each_graph(
        n, true,
        [&](const Graph& g) {
            ++result.connected_count;
            // a connected edge-transitive graph has at most two distinct
            // valencies, every edge joins the same degree pair, and every
            // edge lies in the same number of triangles
            auto vals = valency_multiset(g);
            if (std::unique(vals.begin(), vals.end()) - vals.begin() > 2) return;
            auto edges = g.edges();
            if (!edges.empty()) {
                auto pair_of = [&](int u, int v) {
                    int a = g.degree(u), b = g.degree(v);
                    return a < b ? std::pair{a, b} : std::pair{b, a};
                };
                auto common = [&](int u, int v) {
                    int c = 0;
                    for (int w = 0; w < g.words_per_row(); ++w)
                        c += std::popcount(g.row(u)[w] & g.row(v)[w]);
                    return c;
                };
                auto p0 = pair_of(edges[0].first, edges[0].second);
                int c0 = common(edges[0].first, edges[0].second);
                for (const auto& [u, v] : edges) {
                    if (pair_of(u, v) != p0 || common(u, v) != c0) return;
                }
            }
            CanonResult canon = canonical_form(g);
            ClassificationFlags f = classify(g, canon);
            if (!f.edge_transitive) return;
            CensusRecord rec;
            rec.graph = g;
            rec.canonical = canon.canonical_string;
            rec.flags = f;
            rec.provenance = "oracle n=" + std::to_string(n);
            result.et_graphs.push_back(std::move(rec));
        },
        workers);

    std::sort(result.et_graphs.begin(), result.et_graphs.end(),
              [](const CensusRecord& a, const CensusRecord& b) { return a.canonical < b.canonical; });
    for (const auto& r : result.et_graphs) {
        ++result.row[0];
        if (r.flags.regular) ++result.row[1];
        if (r.flags.bipartite) ++result.row[2];
        if (r.flags.vertex_transitive) ++result.row[3];
        if (r.flags.arc_transitive) ++result.row[4];
        if (r.flags.worthy) ++result.row[5];
    }
    return result;
}

// ---------------------------------------------------------------------------
// reference counts (independent of the generators above)

namespace reference_counts {

namespace {

// sum over cycle types of S_n: (#perms of that type) * 2^(pair cycles)
unsigned __int128 burnside_total(int n) {
    unsigned __int128 total = 0;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            // count permutations with this cycle type
            unsigned __int128 count = 1;
            for (int i = 2; i <= n; ++i) count *= i; // n!
            std::map<int, int> mult;
            for (int p : parts) ++mult[p];
            for (auto [len, m] : mult) {
                for (int i = 0; i < m; ++i) count /= len;
                for (int i = 2; i <= m; ++i) count /= i;
            }
            // cycles of the induced action on unordered pairs
            int c2 = 0;
            for (size_t i = 0; i < parts.size(); ++i) {
                c2 += parts[i] / 2;
                for (size_t j = i + 1; j < parts.size(); ++j) c2 += std::gcd(parts[i], parts[j]);
            }
            total += count * ((unsigned __int128)1 << c2);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    rec(n, n);
    unsigned __int128 fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    return total / fact;
}

} // namespace

uint64_t unlabeled_graphs(int n) {
    if (n == 0) return 1;
    return static_cast<uint64_t>(burnside_total(n));
}

uint64_t unlabeled_connected_graphs(int n) {
    // inverse Euler transform: n*g_n = sum_{k=1..n} b_k g_{n-k} with
    // b_k = sum_{d|k} d*c_d
    std::vector<uint64_t> g(n + 1), c(n + 1, 0), b(n + 1, 0);
    g[0] = 1;
    for (int i = 1; i <= n; ++i) g[i] = unlabeled_graphs(i);
    for (int k = 1; k <= n; ++k) {
        uint64_t rhs = static_cast<uint64_t>(k) * g[k];
        for (int j = 1; j < k; ++j) rhs -= b[j] * g[k - j];
        // rhs = b_k; extract c_k from b_k = sum_{d|k, d<k} d*c_d + k*c_k
        uint64_t partial = 0;
        for (int d = 1; d < k; ++d)
            if (k % d == 0) partial += static_cast<uint64_t>(d) * c[d];
        b[k] = rhs;
        c[k] = (rhs - partial) / k;
    }
    return c[n];
}

} // namespace reference_counts

} // namespace etg
