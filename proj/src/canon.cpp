#include "etg/canon.hpp"

#include "etg/graph6.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace etg {

namespace {

struct Partition {
    std::vector<int> order;      // vertices in position order
    std::vector<int> pos;        // inverse of order
    std::vector<int> cell_begin; // per position: begin of its cell
    std::vector<int> cell_len;   // valid at begin positions

    int n() const { return static_cast<int>(order.size()); }

    bool discrete() const {
        for (int b = 0; b < n();) {
            if (cell_len[b] > 1) return false;
            b += cell_len[b];
        }
        return true;
    }
};

inline uint64_t mix(uint64_t h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

struct Searcher {
    const Graph& g;
    int n;
    int words;
    std::vector<uint64_t> scratch_mask;

    // search state
    bool have_first = false;
    std::vector<uint64_t> first_trace;
    std::string first_string;
    std::vector<int> first_labeling;

    bool have_best = false;
    std::vector<uint64_t> best_trace;
    std::string best_string;
    std::vector<int> best_labeling;

    std::vector<Permutation> aut_gens;

    explicit Searcher(const Graph& graph)
        : g(graph), n(graph.vertex_count()), words(graph.words_per_row()),
          scratch_mask(graph.words_per_row()) {}

    // splits every cell by neighbor counts into the given cell until stable;
    // appends one hash per pass to the trace
    void refine(Partition& p, std::vector<uint64_t>& trace) {
        bool changed = true;
        std::vector<int> counts(n);
        while (changed) {
            changed = false;
            uint64_t pass_hash = 1469598103934665603ull;
            for (int sb = 0; sb < n;) {
                int slen = p.cell_len[sb];
                // splitter cell mask
                std::fill(scratch_mask.begin(), scratch_mask.end(), 0);
                for (int i = sb; i < sb + slen; ++i) {
                    int v = p.order[i];
                    scratch_mask[v / 64] |= uint64_t(1) << (v % 64);
                }
                for (int cb = 0; cb < n;) {
                    int clen = p.cell_len[cb];
                    if (clen >= 2) {
                        bool differ = false;
                        int first_count = -1;
                        for (int i = cb; i < cb + clen; ++i) {
                            int v = p.order[i];
                            int c = 0;
                            auto row = g.row(v);
                            for (int w = 0; w < words; ++w)
                                c += std::popcount(row[w] & scratch_mask[w]);
                            counts[v] = c;
                            if (i == cb)
                                first_count = c;
                            else if (c != first_count)
                                differ = true;
                        }
                        if (differ) {
                            changed = true;
                            std::stable_sort(p.order.begin() + cb, p.order.begin() + cb + clen,
                                             [&](int a, int b) { return counts[a] < counts[b]; });
                            int run = cb;
                            pass_hash = mix(pass_hash, static_cast<uint64_t>(cb) << 20);
                            for (int i = cb; i < cb + clen; ++i) {
                                p.pos[p.order[i]] = i;
                                if (i > cb && counts[p.order[i]] != counts[p.order[i - 1]]) {
                                    p.cell_len[run] = i - run;
                                    pass_hash = mix(pass_hash, (uint64_t(counts[p.order[i - 1]]) << 32) |
                                                                   uint64_t(i - run));
                                    run = i;
                                }
                                p.cell_begin[i] = run;
                            }
                            p.cell_len[run] = cb + clen - run;
                            pass_hash = mix(pass_hash, (uint64_t(counts[p.order[cb + clen - 1]]) << 32) |
                                                           uint64_t(cb + clen - run));
                        }
                    }
                    cb += clen;
                }
                sb += slen;
            }
            if (changed) trace.push_back(pass_hash);
        }
        // stable cell structure summary
        uint64_t h = 0x9ae16a3b2f90404full;
        for (int b = 0; b < n;) {
            h = mix(h, (uint64_t(b) << 16) | uint64_t(p.cell_len[b]));
            b += p.cell_len[b];
        }
        trace.push_back(h);
    }

    int target_cell(const Partition& p) const {
        int best = -1, best_len = n + 1;
        for (int b = 0; b < n;) {
            int len = p.cell_len[b];
            if (len >= 2 && len < best_len) {
                best = b;
                best_len = len;
            }
            b += len;
        }
        return best;
    }

    std::string leaf_string(const Partition& p) const {
        // adjacency of the relabeled graph: vertex at position i gets label i
        Graph h(n);
        for (int i = 0; i < n; ++i) {
            int v = p.order[i];
            for (int u : g.neighbors(v))
                if (p.pos[u] < i) h.add_edge(p.pos[u], i);
        }
        return graph6_encode(h);
    }

    // -1 / 0 / +1 ordering on traces (elementwise, shorter first on ties)
    static int cmp_prefix(const std::vector<uint64_t>& trace, const std::vector<uint64_t>& ref) {
        size_t k = std::min(trace.size(), ref.size());
        for (size_t i = 0; i < k; ++i) {
            if (trace[i] < ref[i]) return -1;
            if (trace[i] > ref[i]) return +1;
        }
        if (trace.size() == ref.size()) return 0;
        return trace.size() < ref.size() ? -1 : +1;
    }

    // equal on the common prefix: the node can still lead to leaves whose
    // trace matches the reference
    static bool prefix_compatible(const std::vector<uint64_t>& trace,
                                  const std::vector<uint64_t>& ref) {
        size_t k = std::min(trace.size(), ref.size());
        for (size_t i = 0; i < k; ++i)
            if (trace[i] != ref[i]) return false;
        return true;
    }

    void handle_leaf(const Partition& p, std::vector<uint64_t>& trace) {
        std::string s = leaf_string(p);
        std::vector<int> labeling(n);
        for (int v = 0; v < n; ++v) labeling[v] = p.pos[v];

        auto record_aut = [&](const std::vector<int>& other_labeling) {
            // identical leaf strings certify that v -> other^-1(labeling(v))
            // preserves adjacency
            std::vector<int> inv_other(n);
            for (int v = 0; v < n; ++v) inv_other[other_labeling[v]] = v;
            std::vector<int> img(n);
            for (int v = 0; v < n; ++v) img[v] = inv_other[labeling[v]];
            Permutation a(img);
            if (!a.is_identity()) aut_gens.push_back(std::move(a));
        };

        if (!have_first) {
            have_first = true;
            first_trace = trace;
            first_string = s;
            first_labeling = labeling;
            have_best = true;
            best_trace = trace;
            best_string = s;
            best_labeling = labeling;
            return;
        }
        if (s == first_string) record_aut(first_labeling);
        if (s == best_string && best_labeling != first_labeling) record_aut(best_labeling);
        int cb = cmp_prefix(trace, best_trace);
        if (cb < 0 || (cb == 0 && s < best_string)) {
            best_trace = trace;
            best_string = s;
            best_labeling = labeling;
        }
    }

    void search(Partition p, std::vector<uint64_t> trace, std::vector<int> prefix) {
        if (p.discrete()) {
            handle_leaf(p, trace);
            return;
        }
        int tb = target_cell(p);
        int tlen = p.cell_len[tb];
        std::vector<int> cell(p.order.begin() + tb, p.order.begin() + tb + tlen);
        std::vector<int> branched;
        for (int v : cell) {
            // orbit pruning: skip v if an automorphism fixing the prefix
            // pointwise maps an already-branched vertex to v
            bool skip = false;
            if (!branched.empty()) {
                std::vector<int> reach = branched;
                std::vector<char> seen(n, 0);
                for (int b : branched) seen[b] = 1;
                for (size_t head = 0; head < reach.size() && !skip; ++head) {
                    for (const auto& a : aut_gens) {
                        bool fixes = true;
                        for (int q : prefix)
                            if (a(q) != q) {
                                fixes = false;
                                break;
                            }
                        if (!fixes) continue;
                        int w = a(reach[head]);
                        if (!seen[w]) {
                            seen[w] = 1;
                            reach.push_back(w);
                        }
                        if (w == v) {
                            skip = true;
                            break;
                        }
                    }
                }
            }
            if (skip) continue;
            branched.push_back(v);

            Partition child = p;
            // individualize v: split the target cell as [v | rest]
            {
                int vp = child.pos[v];
                std::swap(child.order[tb], child.order[vp]);
                child.pos[child.order[vp]] = vp;
                child.pos[v] = tb;
                child.cell_len[tb] = 1;
                child.cell_begin[tb] = tb;
                int rest = tb + 1;
                child.cell_len[rest] = tlen - 1;
                for (int i = rest; i < tb + tlen; ++i) child.cell_begin[i] = rest;
            }
            std::vector<uint64_t> child_trace = trace;
            child_trace.push_back(mix(0x517cc1b727220a95ull, uint64_t(tb)));
            refine(child, child_trace);

            // prune branches that can no longer contribute the canonical
            // leaf or a first-path automorphism
            if (have_first) {
                int cb = cmp_prefix(child_trace, best_trace);
                if (cb > 0 && !prefix_compatible(child_trace, first_trace)) continue;
            }
            std::vector<int> child_prefix = prefix;
            child_prefix.push_back(v);
            search(std::move(child), std::move(child_trace), std::move(child_prefix));
        }
    }
};

CanonResult run_canon(const Graph& g, const std::vector<int>& colors) {
    int n = g.vertex_count();
    if (n == 0) {
        CanonResult r;
        r.canonical_string = graph6_encode(g);
        return r;
    }
    Searcher s(g);
    Partition root;
    root.order.resize(n);
    std::iota(root.order.begin(), root.order.end(), 0);
    std::stable_sort(root.order.begin(), root.order.end(),
                     [&](int a, int b) { return colors[a] < colors[b]; });
    root.pos.resize(n);
    root.cell_begin.resize(n);
    root.cell_len.assign(n, 0);
    for (int i = 0; i < n; ++i) root.pos[root.order[i]] = i;
    int run = 0;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && colors[root.order[i]] != colors[root.order[i - 1]]) {
            root.cell_len[run] = i - run;
            run = i;
        }
        root.cell_begin[i] = run;
    }
    root.cell_len[run] = n - run;

    std::vector<uint64_t> trace;
    uint64_t h = 0;
    for (int b = 0; b < n;) {
        h = mix(h, (uint64_t(b) << 16) | uint64_t(root.cell_len[b]));
        b += root.cell_len[b];
    }
    trace.push_back(h);
    s.refine(root, trace);
    s.search(std::move(root), std::move(trace), {});

    CanonResult r;
    r.labeling = s.best_labeling;
    r.canonical_string = s.best_string;
    r.aut_generators = s.aut_gens;
    PermGroup aut(n, s.aut_gens);
    r.aut_order = aut.order();
    r.orbit_of.resize(n);
    {
        std::vector<int> rep(n, -1);
        for (int v = 0; v < n; ++v) {
            if (rep[v] >= 0) continue;
            std::vector<int> stack{v};
            rep[v] = v;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (const auto& a : s.aut_gens) {
                    if (rep[a(x)] < 0) {
                        rep[a(x)] = v;
                        stack.push_back(a(x));
                    }
                }
            }
        }
        r.orbit_of = rep;
    }
    return r;
}

} // namespace

CanonResult canonical_form(const Graph& g) {
    return run_canon(g, std::vector<int>(g.vertex_count(), 0));
}

CanonResult canonical_form_colored(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.vertex_count())
        throw std::invalid_argument("canonical_form_colored: color count mismatch");
    return run_canon(g, colors);
}

PermGroup automorphism_group(const Graph& g) {
    CanonResult r = canonical_form(g);
    return PermGroup(g.vertex_count(), r.aut_generators);
}

} // namespace etg
