#include "etg/census.hpp"

#include "etg/coset.hpp"
#include "etg/graph6.hpp"
#include "etg/subgroups.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace etg {

namespace {

CensusRecord make_record(Graph g, std::string provenance) {
    CensusRecord rec;
    CanonResult canon = canonical_form(g);
    rec.canonical = canon.canonical_string;
    rec.flags = classify(g, canon);
    rec.graph = std::move(g);
    rec.provenance = std::move(provenance);
    return rec;
}

// edge-set closure of {u, w} under the generators (unordered pairs)
std::vector<std::pair<int, int>> edge_orbit(int n, const std::vector<Permutation>& gens, int u,
                                            int w) {
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> queue;
    auto norm = [](int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
    queue.push_back(norm(u, w));
    seen.insert(queue[0]);
    for (size_t head = 0; head < queue.size(); ++head) {
        auto [a, b] = queue[head];
        for (const auto& g : gens) {
            auto e = norm(g(a), g(b));
            if (seen.insert(e).second) queue.push_back(e);
        }
    }
    (void)n;
    return queue;
}

Graph swap_parts(const Graph& g) {
    Graph h = g;
    h.set_bipartition(g.part(1), g.part(0));
    return h;
}

} // namespace

const std::vector<CensusRecord>& CensusEngine::bipartite_worthy(int k, int m) {
    if (k > m) std::swap(k, m);
    auto key = std::make_pair(k, m);
    auto it = worthy_memo_.find(key);
    if (it != worthy_memo_.end()) return it->second;

    // the worthy search enumerates subgroup lattices of degree-k groups,
    // which is desk-scale only up to degree 8
    if (k > kCatalogueDefaultCap || !cat_.has_degree(k))
        throw CapabilityError("bipartite worthy search blocked at parts (" + std::to_string(k) +
                              "," + std::to_string(m) + "): transitive groups of degree " +
                              std::to_string(k) + " exceed the search cap");

    // one independent work item per catalogue group; the per-entry record
    // lists are merged and deduplicated in entry order afterwards
    const auto& entries = cat_.at_degree(k);
    std::vector<std::vector<CensusRecord>> slots(entries.size());

    auto process_entry = [&](size_t ei) {
        const CatalogueEntry& entry = entries[ei];
        std::vector<CensusRecord>& found = slots[ei];
        PermGroup g = entry.group();
        if (order_to_u64(g.order()) % static_cast<uint64_t>(m) != 0) return;
        auto classes = corefree_subgroups_of_index(g, m);
        for (size_t ci = 0; ci < classes.size(); ++ci) {
            CosetAction act = coset_action(g, classes[ci]);
            std::vector<Permutation> combined = combined_action_generators(g, act);
            PermGroup big(k + m, combined);
            PermGroup stab_u = big.stabilizer(0);

            std::vector<std::vector<int>> worbits;
            for (const auto& orb : stab_u.orbits())
                if (orb[0] >= k) worbits.push_back(orb);

            std::string tag = "deg" + std::to_string(k) + "." + std::to_string(entry.index) +
                              " H#" + std::to_string(ci + 1);

            auto emit = [&](const std::vector<std::pair<int, int>>& edges, bool need_et_check,
                            const std::string& prov) {
                Graph x(k + m);
                for (auto [a, b] : edges) x.add_edge(a, b);
                std::vector<int> pu, pw;
                for (int v = 0; v < k; ++v) pu.push_back(v);
                for (int v = k; v < k + m; ++v) pw.push_back(v);
                x.set_bipartition(pu, pw);
                if (!is_connected(x) || !is_worthy(x)) return;
                CensusRecord rec = make_record(std::move(x), prov);
                if (need_et_check && !rec.flags.edge_transitive) return;
                found.push_back(std::move(rec));
            };

            // single-orbit graphs, with the early whole-group check
            for (const auto& orb : worbits) {
                int w = *std::min_element(orb.begin(), orb.end());
                PermGroup stab_w = big.stabilizer(w);
                std::vector<Permutation> joint = stab_u.generators();
                for (const auto& p : stab_w.generators()) joint.push_back(p);
                if (PermGroup(k + m, joint).order() != big.order()) continue;
                emit(edge_orbit(k + m, combined, 0, w), false, tag + " orbit@" + std::to_string(w));
            }

            // unions over pairs of equal-sized orbits; these are not
            // automatically edge-transitive, so the check runs afterwards
            for (size_t i = 0; i < worbits.size(); ++i)
                for (size_t j = i + 1; j < worbits.size(); ++j) {
                    if (worbits[i].size() != worbits[j].size()) continue;
                    int w1 = *std::min_element(worbits[i].begin(), worbits[i].end());
                    int w2 = *std::min_element(worbits[j].begin(), worbits[j].end());
                    auto edges = edge_orbit(k + m, combined, 0, w1);
                    auto more = edge_orbit(k + m, combined, 0, w2);
                    edges.insert(edges.end(), more.begin(), more.end());
                    emit(edges, true,
                         tag + " orbits@" + std::to_string(w1) + "+" + std::to_string(w2));
                }
        }
    };

    if (workers_ > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers_)
#endif
        for (size_t ei = 0; ei < entries.size(); ++ei) process_entry(ei);
    } else {
        for (size_t ei = 0; ei < entries.size(); ++ei) process_entry(ei);
    }

    std::vector<CensusRecord> records;
    std::set<std::string> seen;
    for (auto& slot : slots)
        for (auto& rec : slot)
            if (seen.insert(rec.canonical).second) records.push_back(std::move(rec));
    std::sort(records.begin(), records.end(),
              [](const CensusRecord& a, const CensusRecord& b) { return a.canonical < b.canonical; });
    return worthy_memo_.emplace(key, std::move(records)).first->second;
}

std::vector<CensusRecord> CensusEngine::bipartite_all(int n) {
    // a quotient pair (kq, mq) is needed iff some (a,b) >= 1 solves
    // a*kq + b*mq = n (in either part orientation)
    std::vector<std::pair<int, int>> needed;
    for (int kq = 1; kq <= n / 2; ++kq) {
        for (int mq = kq; kq + mq <= n; ++mq) {
            bool usable = false;
            for (int a = 1; a * kq + mq <= n && !usable; ++a)
                if ((n - a * kq) % mq == 0) usable = true;
            if (kq != mq)
                for (int a = 1; a * mq + kq <= n && !usable; ++a)
                    if ((n - a * mq) % kq == 0) usable = true;
            if (usable) needed.emplace_back(kq, mq);
        }
    }
    for (auto [kq, mq] : needed)
        if (kq > kCatalogueDefaultCap || !cat_.has_degree(kq))
            throw CapabilityError("bipartite worthy search blocked at parts (" +
                                  std::to_string(kq) + "," + std::to_string(mq) +
                                  "): transitive groups of degree " + std::to_string(kq) +
                                  " exceed the search cap");

    std::vector<CensusRecord> out;
    std::set<std::string> seen;
    for (auto [kq, mq] : needed) {
        for (const auto& worthy : bipartite_worthy(kq, mq)) {
            auto blow_all = [&](const Graph& base, int up, int wp) {
                for (int a = 1; a * up <= n; ++a) {
                    int rest = n - a * up;
                    if (rest <= 0 || rest % wp != 0) continue;
                    int b = rest / wp;
                    Graph big = blow_up(base, a, b);
                    CensusRecord rec = make_record(
                        std::move(big), "blowup(" + worthy.canonical + "," + std::to_string(a) +
                                            "," + std::to_string(b) + ")");
                    if (seen.insert(rec.canonical).second) out.push_back(std::move(rec));
                }
            };
            int up = static_cast<int>(worthy.graph.part(0).size());
            int wp = static_cast<int>(worthy.graph.part(1).size());
            blow_all(worthy.graph, up, wp);
            if (up != wp) blow_all(swap_parts(worthy.graph), wp, up);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const CensusRecord& a, const CensusRecord& b) { return a.canonical < b.canonical; });
    return out;
}

std::vector<CensusRecord> CensusEngine::vertex_transitive(int n) {
    std::vector<CensusRecord> out;
    if (n == 1) {
        out.push_back(make_record(Graph(1), "K1"));
        return out;
    }
    if (!cat_.has_degree(n))
        throw CapabilityError("vertex-transitive census needs transitive groups of degree " +
                              std::to_string(n));
    std::set<std::string> seen;
    for (const auto& entry : cat_.at_degree(n)) {
        PermGroup g = entry.group();
        PermGroup stab = g.stabilizer(0);
        std::vector<std::vector<int>> orbs;
        for (const auto& o : stab.orbits())
            if (!(o.size() == 1 && o[0] == 0)) orbs.push_back(o);
        int r = static_cast<int>(orbs.size());
        for (unsigned mask = 1; mask < (1u << r); ++mask) {
            std::set<std::pair<int, int>> edges;
            for (int i = 0; i < r; ++i) {
                if (!(mask & (1u << i))) continue;
                int w = orbs[i][0];
                for (auto e : edge_orbit(n, g.generators(), 0, w)) edges.insert(e);
            }
            Graph x(n);
            for (auto [a, b] : edges) x.add_edge(a, b);
            if (!is_connected(x)) continue;
            CensusRecord rec = make_record(
                std::move(x), "vt deg" + std::to_string(n) + "." + std::to_string(entry.index) +
                                  " mask=" + std::to_string(mask));
            if (seen.insert(rec.canonical).second) out.push_back(std::move(rec));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const CensusRecord& a, const CensusRecord& b) { return a.canonical < b.canonical; });
    return out;
}

std::vector<CensusRecord> CensusEngine::full_census(int n) {
    std::vector<CensusRecord> out;
    if (n == 1) {
        out.push_back(make_record(Graph(1), "K1"));
        return out;
    }
    std::set<std::string> seen;
    for (auto& rec : bipartite_all(n)) {
        if (!rec.flags.edge_transitive) continue; // blow-ups of ET stay ET; defensive
        if (seen.insert(rec.canonical).second) out.push_back(std::move(rec));
    }
    for (auto& rec : vertex_transitive(n)) {
        if (!rec.flags.edge_transitive || rec.flags.bipartite) continue;
        if (seen.insert(rec.canonical).second) out.push_back(std::move(rec));
    }
    std::sort(out.begin(), out.end(),
              [](const CensusRecord& a, const CensusRecord& b) { return a.canonical < b.canonical; });
    return out;
}

CensusTable tabulate(const std::map<int, std::vector<CensusRecord>>& records_by_order) {
    CensusTable t;
    for (const auto& [n, records] : records_by_order) {
        TableRow row{0, 0, 0, 0, 0, 0};
        for (const auto& r : records) {
            ++row[0];
            if (r.flags.regular) ++row[1];
            if (r.flags.bipartite) ++row[2];
            if (r.flags.vertex_transitive) ++row[3];
            if (r.flags.arc_transitive) ++row[4];
            if (r.flags.worthy) ++row[5];
        }
        if (!(row[4] <= row[3] && row[3] <= row[0] && row[1] <= row[0] && row[5] <= row[0]))
            throw std::logic_error("census table row violates column inequalities");
        t.rows[n] = row;
    }
    return t;
}

std::string flags_csv_row(int n, const std::string& graph6, const ClassificationFlags& f) {
    std::ostringstream out;
    out << n << "," << graph6 << "," << f.connected << "," << f.regular << "," << f.bipartite << ","
        << f.worthy << "," << f.vertex_transitive << "," << f.edge_transitive << ","
        << f.arc_transitive << "," << f.half_arc_transitive << "," << f.semi_symmetric << ","
        << order_to_string(f.aut_order);
    return out.str();
}

std::string census_csv(const std::vector<CensusRecord>& records) {
    std::ostringstream out;
    out << "n,graph6,connected,regular,bipartite,worthy,vt,et,at,hat,semisym,aut_order\n";
    for (const auto& r : records)
        out << flags_csv_row(r.graph.vertex_count(), r.canonical, r.flags) << "\n";
    return out.str();
}

std::string table_csv(const CensusTable& t) {
    std::ostringstream out;
    out << "n,tot,reg,bpte,vt,at,wthy\n";
    for (const auto& [n, row] : t.rows) {
        out << n;
        for (int v : row) out << "," << v;
        out << "\n";
    }
    return out.str();
}

} // namespace etg
