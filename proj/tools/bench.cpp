// Benchmark comparing the OpenMP work loops against the serial reference
// paths, verifying identical output along the way.

#include "etg/census.hpp"
#include "etg/graph6.hpp"
#include "etg/oracle.hpp"
#include "etg/transcat.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace etg;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int available_workers() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 8;
    int workers = available_workers();
    printf("benchmark order %d, %d workers available\n\n", n, workers);

    // 1. exhaustive generation + classification sweep
    {
        auto t0 = std::chrono::steady_clock::now();
        OracleCensus serial = oracle_census(n, n >= 10, 1);
        double ts = seconds_since(t0);

        auto t1 = std::chrono::steady_clock::now();
        OracleCensus parallel = oracle_census(n, n >= 10, workers);
        double tp = seconds_since(t1);

        bool same = serial.row == parallel.row &&
                    serial.et_graphs.size() == parallel.et_graphs.size() &&
                    serial.connected_count == parallel.connected_count;
        for (size_t i = 0; same && i < serial.et_graphs.size(); ++i)
            same = serial.et_graphs[i].canonical == parallel.et_graphs[i].canonical;

        printf("oracle census n=%d: serial %.2fs, parallel %.2fs, speedup %.2fx, outputs %s\n", n,
               ts, tp, ts / tp, same ? "identical" : "DIFFER");
        if (!same) return 1;
    }

    // 2. generation only (no classification)
    {
        auto run = [&](int w) {
            uint64_t count = 0;
            auto t0 = std::chrono::steady_clock::now();
            for_each_graph(n, true, [&](const Graph&) { ++count; }, w);
            return std::pair{count, seconds_since(t0)};
        };
        auto [c1, ts] = run(1);
        auto [c2, tp] = run(workers);
        printf("generation n=%d: serial %.2fs, parallel %.2fs, speedup %.2fx, counts %llu/%llu %s\n",
               n, ts, tp, ts / tp, (unsigned long long)c1, (unsigned long long)c2,
               c1 == c2 ? "equal" : "DIFFER");
        if (c1 != c2) return 1;
    }

    // 3. bipartite census work items (per catalogue group)
    {
        const char* cat_path = std::getenv("ETG_CATALOGUE");
        std::string path = cat_path ? cat_path : "data/transitive_groups.cat";
        Catalogue cat;
        try {
            cat = load_catalogue(path);
        } catch (const std::exception& e) {
            printf("census benchmark skipped: %s\n", e.what());
            return 0;
        }
        auto run = [&](int w) {
            CensusEngine engine(cat, w);
            auto t0 = std::chrono::steady_clock::now();
            auto recs = engine.bipartite_all(12);
            return std::pair{recs, seconds_since(t0)};
        };
        auto [a, ts] = run(1);
        auto [b, tp] = run(workers);
        bool same = a.size() == b.size();
        for (size_t i = 0; same && i < a.size(); ++i) same = a[i].canonical == b[i].canonical;
        printf("bipartite census n=12: serial %.2fs, parallel %.2fs, speedup %.2fx, outputs %s\n",
               ts, tp, ts / tp, same ? "identical" : "DIFFER");
        if (!same) return 1;
    }

    return 0;
}
