// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one result line per criterion. Long-running parts are gated
// behind --long (or ETG_LONG=1).

#include "etg/census.hpp"
#include "etg/classify.hpp"
#include "etg/constructions.hpp"
#include "etg/coset.hpp"
#include "etg/graph6.hpp"
#include "etg/oracle.hpp"
#include "etg/subgroups.hpp"
#include "etg/table1.hpp"
#include "etg/transcat.hpp"

#include <algorithm>
#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif
#include <cstdio>
#include <cstring>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace etg;

namespace {

struct Reporter {
    int failures = 0;
    std::chrono::steady_clock::time_point start;

    void begin() { start = std::chrono::steady_clock::now(); }

    void report(int criterion, bool pass, const std::string& detail) {
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        printf("criterion %d: %s (%s) [%.1fs]\n", criterion, pass ? "PASS" : "FAIL",
               detail.c_str(), secs);
        fflush(stdout);
        if (!pass) ++failures;
    }
};

bool g_long = false;

std::string row_text(const TableRow& r) {
    std::ostringstream out;
    for (size_t i = 0; i < r.size(); ++i) out << (i ? "/" : "") << r[i];
    return out.str();
}

// independent isomorphism test by permutation backtracking with degree pruning
bool brute_isomorphic(const Graph& a, const Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (valency_multiset(a) != valency_multiset(b)) return false;
    std::vector<int> map(n, -1), used(n, 0);
    std::function<bool(int)> place = [&](int v) {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || a.degree(v) != b.degree(w)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (a.adjacent(u, v) != b.adjacent(map[u], w)) ok = false;
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (place(v + 1)) return true;
            used[w] = 0;
        }
        return false;
    };
    return place(0);
}

// ---------------------------------------------------------------------------

void criterion1(Reporter& rep, CensusEngine& engine) {
    rep.begin();
    std::map<int, std::vector<CensusRecord>> by_order;
    for (int n = 1; n <= 8; ++n) by_order[n] = engine.full_census(n);
    CensusTable t = tabulate(by_order);
    bool pass = true;
    std::string detail = "rows 1..8 group pipeline";
    for (int n = 1; n <= 8; ++n)
        if (t.rows.at(n) != reference_table().at(n)) {
            pass = false;
            detail = "row " + std::to_string(n) + " computed " + row_text(t.rows.at(n)) +
                     " expected " + row_text(reference_table().at(n));
            break;
        }
    rep.report(1, pass, detail);
}

void criterion2(Reporter& rep) {
    rep.begin();
    OracleCensus oc9 = oracle_census(9, false, 2);
    bool pass = oc9.row == reference_table().at(9);
    std::string detail = "row 9 oracle " + row_text(oc9.row);
    if (g_long) {
        OracleCensus oc10 = oracle_census(10, true, 2);
        if (oc10.row != reference_table().at(10)) pass = false;
        detail += ", row 10 oracle " + row_text(oc10.row);
    } else {
        detail += ", row 10 skipped (enable with --long)";
    }
    rep.report(2, pass, detail);
}

void criterion3(Reporter& rep, CensusEngine& engine) {
    rep.begin();
    const int expect[] = {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5, 12, 6, 13, 15, 18};
    bool pass = true;
    std::string detail = "Bpte 11..16 =";
    for (int n = 11; n <= 16; ++n) {
        auto recs = engine.bipartite_all(n);
        int bpte = static_cast<int>(recs.size());
        detail += " " + std::to_string(bpte);
        if (bpte != expect[n]) pass = false;
        if (reference_table().at(n)[2] != expect[n]) pass = false;
    }
    rep.report(3, pass, detail);
}

void criterion4(Reporter& rep, CensusEngine& engine) {
    rep.begin();
    bool pass = true;
    std::string fail_reason;
    auto expect_fail = [&](const std::string& why) {
        pass = false;
        if (fail_reason.empty()) fail_reason = why;
    };

    // parts (4,6): exactly one worthy graph, biregular 3/2 with 12 edges
    {
        const auto& recs = engine.bipartite_worthy(4, 6);
        if (recs.size() != 1)
            expect_fail("(4,6) count " + std::to_string(recs.size()));
        else {
            const auto& g = recs[0].graph;
            if (g.edge_count() != 12 ||
                valency_multiset(g) != std::vector<int>{2, 2, 2, 2, 2, 2, 3, 3, 3, 3})
                expect_fail("(4,6) structure");
        }
    }
    // parts (5,5): exactly C10 and K55 minus a perfect matching
    {
        const auto& recs = engine.bipartite_worthy(5, 5);
        Graph k55m(10);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                if (i != j) k55m.add_edge(i, 5 + j);
        std::set<std::string> expect{canonical_form(cycle_graph(10)).canonical_string,
                                     canonical_form(k55m).canonical_string};
        std::set<std::string> got;
        for (const auto& r : recs) got.insert(r.canonical);
        if (got != expect) expect_fail("(5,5) set");
    }
    // parts (1,9), (2,8), (3,7): empty
    for (auto [k, m] : {std::pair{1, 9}, {2, 8}, {3, 7}})
        if (!engine.bipartite_worthy(k, m).empty())
            expect_fail("(" + std::to_string(k) + "," + std::to_string(m) + ") nonempty");

    // order-10 decomposition: 5 + 5 + 3, with the unworthy five being the
    // complete bipartite graphs
    auto full = engine.full_census(10);
    int nonbip = 0, unworthy = 0, worthy_bip = 0;
    std::set<std::string> unworthy_set;
    for (const auto& r : full) {
        if (!r.flags.bipartite)
            ++nonbip;
        else if (r.flags.worthy)
            ++worthy_bip;
        else {
            ++unworthy;
            unworthy_set.insert(r.canonical);
        }
    }
    if (full.size() != 13 || nonbip != 5 || unworthy != 5 || worthy_bip != 3)
        expect_fail("decomposition " + std::to_string(full.size()) + "=" +
                    std::to_string(nonbip) + "+" + std::to_string(unworthy) + "+" +
                    std::to_string(worthy_bip));
    std::set<std::string> expect_unworthy;
    for (int k = 1; k <= 5; ++k)
        expect_unworthy.insert(canonical_form(complete_bipartite(k, 10 - k)).canonical_string);
    if (unworthy_set != expect_unworthy) expect_fail("unworthy blow-up set");

    // cross-check the full order-10 set against the oracle when enabled
    std::string detail = "worked example reproduced";
    if (g_long) {
        OracleCensus oc = oracle_census(10, true, 2);
        std::set<std::string> a, b;
        for (const auto& r : oc.et_graphs) a.insert(r.canonical);
        for (const auto& r : full) b.insert(r.canonical);
        if (a != b) expect_fail("oracle disagreement at order 10");
        detail += " (oracle-confirmed)";
    }
    rep.report(4, pass, pass ? detail : fail_reason);
}

void criterion5(Reporter& rep) {
    rep.begin();
    bool pass = true;
    std::string fail;
    for (int k = 3; k <= 5 && pass; ++k) {
        FolkmanPair fp = folkman_blowup(k);
        ClassificationFlags f = classify(fp.blowup);
        int d = 2 * k * (k - 1);
        bool ok = fp.blowup.vertex_count() == 4 * k * k && f.regular && f.edge_transitive &&
                  !f.vertex_transitive && f.semi_symmetric && !f.worthy;
        for (int v = 0; v < fp.blowup.vertex_count(); ++v)
            if (fp.blowup.degree(v) != d) ok = false;
        auto classes = twin_classes(fp.blowup);
        int c2 = 0, ck = 0;
        for (const auto& c : classes) {
            if (c.size() == 2) ++c2;
            if (c.size() == static_cast<size_t>(k)) ++ck;
        }
        if (c2 != k * k || ck != 2 * k) ok = false;
        long num = d, den = fp.blowup.vertex_count() / 2, g = std::gcd(num, den);
        if (num / g != k - 1 || den / g != k) ok = false;
        if (!ok) {
            pass = false;
            fail = "k=" + std::to_string(k);
        }
    }
    rep.report(5, pass, pass ? "k=3,4,5 semi-symmetric, unworthy, d/n=(k-1)/k" : fail);
}

void criterion6(Reporter& rep) {
    rep.begin();
    SymplecticGQ gq = symplectic_gq(3);
    auto [levi, comp] = levi_and_complement(gq);
    ClassificationFlags fl = classify(levi);
    ClassificationFlags fc = classify(comp);
    bool pass = comp.vertex_count() == 80 && comp.degree(0) == 36 && fc.semi_symmetric &&
                fc.worthy && levi.degree(0) == 4 && fl.regular && fl.edge_transitive &&
                !fl.vertex_transitive && fl.aut_order == fc.aut_order && fl.aut_order == 51840;
    std::string detail = "q=3 levi/complement aut=" + order_to_string(fl.aut_order);
    if (g_long) {
        SymplecticGQ gq5 = symplectic_gq(5);
        auto [levi5, comp5] = levi_and_complement(gq5);
        bool reg = true;
        for (int v = 0; v < comp5.vertex_count(); ++v)
            if (comp5.degree(v) != 150) reg = false;
        if (!(comp5.vertex_count() == 312 && reg && is_worthy(comp5))) pass = false;
        detail += ", q=5 regular+worthy checked";
    } else {
        detail += ", q=5 skipped (enable with --long)";
    }
    rep.report(6, pass, detail);
}

void criterion7(Reporter& rep, CensusEngine& engine) {
    rep.begin();
    bool pass = true;
    std::string fail;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            fail = what;
        }
    };

    // orbit-stabilizer on the catalogue corpus (87 groups of degree <= 8)
    int group_count = 0, os_checks = 0;
    for (int k = 1; k <= 8; ++k)
        for (const auto& e : engine.catalogue().at_degree(k)) {
            PermGroup g = e.group();
            ++group_count;
            for (int v = 0; v < g.degree(); v += 3) {
                check(g.order() == GroupOrder(g.orbit(v).size()) * g.stabilizer(v).order(),
                      "orbit-stabilizer");
                ++os_checks;
            }
            // BSGS order versus closure enumeration for orders <= 10^4
            if (e.order <= 10000)
                check(order_to_u64(g.order()) ==
                          closure_elements(g.degree(), g.generators(), 20000).size(),
                      "bsgs-vs-closure");
        }
    check(group_count >= 50 && os_checks >= 50, "corpus size");

    // canonical-form soundness and completeness: exhaustive brute-force
    // partition comparison for n <= 6
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        std::vector<Permutation> perms, inverses;
        std::vector<int> img = v;
        do {
            perms.emplace_back(img);
        } while (std::next_permutation(img.begin(), img.end()));
        for (const auto& p : perms) inverses.push_back(p.inverse());
        std::map<uint64_t, std::set<std::string>> by_brute;
        std::map<std::string, std::set<uint64_t>> by_canon;
        int bits = n * (n - 1) / 2;
        for (uint64_t code = 0; code < (uint64_t(1) << bits); ++code) {
            Graph g(n);
            int bit = 0;
            for (int b = 1; b < n; ++b)
                for (int a = 0; a < b; ++a) {
                    if (code & (uint64_t(1) << bit)) g.add_edge(a, b);
                    ++bit;
                }
            uint64_t best = ~0ull;
            for (const auto& pinv : inverses) {
                uint64_t c = 0;
                int bb = 0;
                for (int b = 1; b < n; ++b)
                    for (int a = 0; a < b; ++a) {
                        if (g.adjacent(pinv(a), pinv(b))) c |= uint64_t(1) << bb;
                        ++bb;
                    }
                best = std::min(best, c);
            }
            std::string cs = canonical_form(g).canonical_string;
            by_brute[best].insert(cs);
            by_canon[cs].insert(best);
        }
        for (const auto& [k2, v2] : by_brute) check(v2.size() == 1, "canon completeness n<=6");
        for (const auto& [k2, v2] : by_canon) check(v2.size() == 1, "canon soundness n<=6");
    }

    // n = 7: the 1044 generated representatives are pairwise non-isomorphic
    // by permutation search, their canonical strings are pairwise distinct,
    // the count matches the Burnside total, and forms are relabel-invariant
    {
        std::vector<Graph> reps;
        for_each_graph(7, false, [&](const Graph& g) { reps.push_back(g); }, 2);
        check(reps.size() == reference_counts::unlabeled_graphs(7), "n=7 class count");
        std::set<std::string> forms;
        std::vector<std::string> form_of;
        for (const auto& g : reps) {
            std::string s = canonical_form(g).canonical_string;
            form_of.push_back(s);
            forms.insert(s);
        }
        check(forms.size() == reps.size(), "n=7 canonical distinctness");
        std::mt19937 rng(2024);
        for (size_t i = 0; i < reps.size(); i += 37) {
            std::vector<int> im(7);
            std::iota(im.begin(), im.end(), 0);
            std::shuffle(im.begin(), im.end(), rng);
            check(canonical_form(reps[i].relabel(Permutation(im))).canonical_string == form_of[i],
                  "n=7 invariance");
        }
        // invariant-bucketed pairwise isomorphism search
        std::map<std::vector<int>, std::vector<size_t>> buckets;
        for (size_t i = 0; i < reps.size(); ++i) {
            std::vector<int> key = valency_multiset(reps[i]);
            key.push_back(reps[i].edge_count());
            buckets[key].push_back(i);
        }
        for (const auto& [key, idxs] : buckets)
            for (size_t a = 0; a < idxs.size(); ++a)
                for (size_t b = a + 1; b < idxs.size(); ++b)
                    if (brute_isomorphic(reps[idxs[a]], reps[idxs[b]])) {
                        check(false, "n=7 pairwise isomorphism");
                    }
    }

    // structural property suites over every bipartite edge-transitive census
    // graph with n <= 16
    for (int n = 2; n <= 16; ++n) {
        auto recs = engine.bipartite_all(n);
        for (const auto& r : recs) {
            const Graph& x = r.graph;
            // blow-up/quotient round trip
            Graph q = twin_quotient(x);
            auto tc = twin_classes(x);
            std::set<size_t> usizes, wsizes;
            for (const auto& c : tc)
                (x.sides()[c[0]] == 0 ? usizes : wsizes).insert(c.size());
            check(usizes.size() == 1 && wsizes.size() == 1, "uniform twin-class sizes per part");
            Graph rebuilt = blow_up(q, static_cast<int>(*usizes.begin()),
                                    static_cast<int>(*wsizes.begin()));
            check(canonical_form(rebuilt).canonical_string ==
                      canonical_form(x).canonical_string,
                  "blow-up/quotient round trip");

            PermGroup g = part_preserving_subgroup(x);
            auto coloring = *bipartition_coloring(x);

            // worthy graphs: faithful action on each part
            if (r.flags.worthy) {
                for (int side = 0; side <= 1; ++side) {
                    std::vector<int> fixed;
                    for (int v = 0; v < x.vertex_count(); ++v)
                        if (coloring[v] == side) fixed.push_back(v);
                    check(g.pointwise_stabilizer(fixed).order() == 1, "faithful part action on worthy graphs");
                }
            }

            // transitive on each part
            for (int side = 0; side <= 1; ++side) {
                std::vector<int> part;
                for (int v = 0; v < x.vertex_count(); ++v)
                    if (coloring[v] == side) part.push_back(v);
                auto orb = g.orbit(part[0]);
                check(orb.size() == part.size(), "part transitivity");
            }

            // dichotomy
            int edge_orbits = edge_orbit_count(x, g.generators());
            bool case_a = true, case_b = true;
            for (int v = 0; v < x.vertex_count(); ++v) {
                PermGroup gv = g.stabilizer(v);
                std::vector<size_t> sizes;
                std::set<int> done;
                for (int w : x.neighbors(v)) {
                    if (done.count(w)) continue;
                    auto orb = gv.orbit(w);
                    std::vector<int> inside;
                    for (int z : orb)
                        if (x.adjacent(v, z)) inside.push_back(z);
                    for (int z : inside) done.insert(z);
                    sizes.push_back(inside.size());
                }
                if (sizes.size() != 1) case_a = false;
                if (!(sizes.size() == 2 && sizes[0] == sizes[1])) case_b = false;
            }
            if (case_a) {
                check(edge_orbits == 1, "stabilizer-transitive case: edge transitivity");
                for (auto [v, w] : x.edges()) {
                    PermGroup gv = g.stabilizer(v);
                    PermGroup gw = g.stabilizer(w);
                    std::vector<Permutation> joint = gv.generators();
                    for (const auto& p : gw.generators()) joint.push_back(p);
                    check(PermGroup(x.vertex_count(), joint).order() == g.order(),
                          "stabilizer-transitive case: edge stabilizers generate");
                }
            } else {
                check(case_b, "local orbit dichotomy");
                check(r.flags.half_arc_transitive, "split-orbit case: half-arc-transitivity");
                check(edge_orbits == 2, "split-orbit case: two edge orbits");
            }
        }
    }

    // edge-transitive but not vertex-transitive forces bipartite, over every
    // connected graph of order <= 8 from the oracle
    for (int n = 2; n <= 8; ++n) {
        OracleCensus oc = oracle_census(n, false, 2);
        for (const auto& r : oc.et_graphs)
            if (!r.flags.vertex_transitive) check(r.flags.bipartite, "et-not-vt implies bipartite");
    }

    rep.report(7, pass, pass ? "property suites clean" : fail);
}

void criterion8(Reporter& rep) {
    rep.begin();
    const size_t expect[] = {0, 1, 1, 2, 5, 5, 16};
    bool pass = true;
    std::string detail = "degrees 1..6:";
    for (int k = 1; k <= 6; ++k) {
        size_t got = transitive_groups_of_degree(k).size();
        detail += " " + std::to_string(got);
        if (got != expect[k]) pass = false;
    }
    if (g_long) {
        size_t got10 = transitive_groups_of_degree(10).size();
        detail += ", degree 10: " + std::to_string(got10);
        if (got10 != 45) pass = false;
    } else {
        detail += ", degree 10 skipped (enable with --long)";
    }
    rep.report(8, pass, detail);
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--long") == 0) g_long = true;
    if (const char* env = std::getenv("ETG_LONG"))
        if (std::string(env) != "0") g_long = true;

    printf("acceptance suite (%s mode)\n", g_long ? "long" : "default");
    int workers = 1;
#ifdef _OPENMP
    workers = omp_get_max_threads();
#endif
    CensusEngine engine(load_catalogue(ETG_DATA_DIR "/transitive_groups.cat"), workers);

    Reporter rep;
    criterion1(rep, engine);
    criterion2(rep);
    criterion3(rep, engine);
    criterion4(rep, engine);
    criterion5(rep);
    criterion6(rep);
    criterion7(rep, engine);
    criterion8(rep);

    printf("out of desk scale, reported as skipped by verify-table: full census to order 47, "
           "bipartite to 63, the 1894/3309 totals, half-arc-transitive counts (smallest order "
           "27)\n");
    printf("%s\n", rep.failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT");
    return rep.failures == 0 ? 0 : 1;
}
