#include "doctest.h"
#include "test_helpers.hpp"

#include "etg/canon.hpp"
#include "etg/classify.hpp"
#include "etg/graph.hpp"
#include "etg/oracle.hpp"

#include <map>
#include <random>
#include <set>

using namespace etg;
using namespace etg::testhelp;

TEST_SUITE_BEGIN("canon");

namespace {

Permutation random_perm(int n, std::mt19937& rng) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
}

// true canonical form by brute force: the minimum adjacency bitmask over all
// relabelings (n <= 7); takes precomputed inverse permutations
uint64_t brute_min_code(const Graph& g, const std::vector<Permutation>& inverses) {
    uint64_t best = ~0ull;
    for (const auto& pinv : inverses) {
        uint64_t code = 0;
        int bit = 0;
        for (int v = 1; v < g.vertex_count(); ++v)
            for (int u = 0; u < v; ++u) {
                if (g.adjacent(pinv(u), pinv(v))) code |= uint64_t(1) << bit;
                ++bit;
            }
        best = std::min(best, code);
    }
    return best;
}

// adjacency preservation on edges suffices: a permutation maps the finite
// edge set into itself injectively, hence onto
uint64_t brute_aut_count(const Graph& g, const std::vector<Permutation>& all_perms) {
    uint64_t cnt = 0;
    for (const auto& p : all_perms) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (!g.adjacent(p(u), p(v))) {
                ok = false;
                break;
            }
        if (ok) ++cnt;
    }
    return cnt;
}

std::vector<Permutation> all_perms_of(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace

TEST_CASE("relabeling invariance") {
    std::mt19937 rng(7);
    std::vector<Graph> samples = {petersen_graph(), cycle_graph(9), complete_bipartite(3, 4),
                                  star_graph(5), path_graph(7)};
    for (const auto& g : samples) {
        std::string base = canonical_form(g).canonical_string;
        for (int t = 0; t < 100; ++t) {
            Graph h = g.relabel(random_perm(g.vertex_count(), rng));
            CHECK(canonical_form(h).canonical_string == base);
        }
    }
}

TEST_CASE("distinct graphs get distinct forms") {
    CHECK(canonical_form(path_graph(3)).canonical_string !=
          canonical_form(cycle_graph(3)).canonical_string);
}

TEST_CASE("exhaustive soundness and completeness up to n=6") {
    // partition of all labeled graphs by our canonical string must equal the
    // partition by the brute-force minimum relabeling code
    for (int n = 1; n <= 6; ++n) {
        auto perms = all_perms_of(n);
        std::vector<Permutation> inverses;
        for (const auto& p : perms) inverses.push_back(p.inverse());
        int bits = n * (n - 1) / 2;
        std::map<uint64_t, std::set<std::string>> by_brute;
        std::map<std::string, std::set<uint64_t>> by_canon;
        for (uint64_t code = 0; code < (uint64_t(1) << bits); ++code) {
            Graph g(n);
            int bit = 0;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u) {
                    if (code & (uint64_t(1) << bit)) g.add_edge(u, v);
                    ++bit;
                }
            uint64_t bmin = brute_min_code(g, inverses);
            std::string cs = canonical_form(g).canonical_string;
            by_brute[bmin].insert(cs);
            by_canon[cs].insert(bmin);
        }
        for (const auto& [k, v] : by_brute) CHECK(v.size() == 1);
        for (const auto& [k, v] : by_canon) CHECK(v.size() == 1);
    }
}

TEST_CASE("automorphism group orders match brute force") {
    auto perms5 = all_perms_of(5);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g(5);
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v)
                if (rng() % 2) g.add_edge(u, v);
        CHECK(order_to_u64(canonical_form(g).aut_order) == brute_aut_count(g, perms5));
    }
    auto perms7 = all_perms_of(7);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g(7);
        for (int u = 0; u < 7; ++u)
            for (int v = u + 1; v < 7; ++v)
                if (rng() % 2) g.add_edge(u, v);
        CHECK(order_to_u64(canonical_form(g).aut_order) == brute_aut_count(g, perms7));
    }
}

TEST_CASE("automorphism orders across every 7-vertex graph") {
    // one representative per isomorphism class, each checked against the
    // 5040-permutation brute count
    auto perms7 = all_perms_of(7);
    std::vector<Graph> reps;
    for_each_graph(7, false, [&](const Graph& g) { reps.push_back(g); });
    REQUIRE(reps.size() == 1044);
    for (const auto& g : reps)
        CHECK(order_to_u64(canonical_form(g).aut_order) == brute_aut_count(g, perms7));
}

TEST_CASE("automorphism generators preserve adjacency") {
    for (const Graph& g : {petersen_graph(), complete_bipartite(4, 6), cycle_graph(12)}) {
        auto c = canonical_form(g);
        for (const auto& a : c.aut_generators) CHECK(g.relabel(a) == g);
    }
}

TEST_CASE("known automorphism group orders") {
    CHECK(canonical_form(complete_graph(5)).aut_order == 120);
    CHECK(canonical_form(cycle_graph(10)).aut_order == 20);
    CHECK(canonical_form(petersen_graph()).aut_order == 120);
    CHECK(canonical_form(complete_bipartite(4, 6)).aut_order == GroupOrder(24) * 720);
    CHECK(canonical_form(star_graph(9)).aut_order == 362880);
}

TEST_CASE("colored canonical form separates colored copies") {
    Graph g = cycle_graph(6);
    std::vector<int> colors_a{0, 1, 0, 1, 0, 1};
    std::vector<int> colors_b{0, 0, 1, 1, 0, 1};
    CHECK(canonical_form_colored(g, colors_a).canonical_string !=
          canonical_form_colored(g, colors_b).canonical_string);
    CHECK_THROWS_AS(canonical_form_colored(g, {0, 1}), std::invalid_argument);
}

TEST_SUITE_END();
