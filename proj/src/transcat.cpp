#include "etg/transcat.hpp"

#include "etg/coset.hpp"
#include "etg/subgroups.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace etg {

namespace {

// ---------------------------------------------------------------------------
// packed degree<=16 permutation helpers for the socle sweep

uint64_t pidentity(int n) {
    uint64_t k = 0;
    for (int i = 0; i < n; ++i) k |= static_cast<uint64_t>(i) << (4 * i);
    return k;
}

inline int pget(uint64_t p, int i) { return static_cast<int>((p >> (4 * i)) & 15); }

uint64_t pcompose(uint64_t p, uint64_t q, int n) {
    uint64_t r = 0;
    for (int i = 0; i < n; ++i)
        r |= static_cast<uint64_t>(pget(q, pget(p, i))) << (4 * i);
    return r;
}

uint64_t pconj(uint64_t x, uint64_t g, int n) {
    uint64_t r = 0;
    for (int i = 0; i < n; ++i)
        r |= static_cast<uint64_t>(pget(g, pget(x, i))) << (4 * pget(g, i));
    return r;
}

uint64_t pack(const Permutation& p) { return p.packed_key(); }

Permutation unpack(uint64_t k, int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = pget(k, i);
    return Permutation(img);
}

// ---------------------------------------------------------------------------

PermGroup wreath_on_blocks(int block_size, int block_count) {
    int n = block_size * block_count;
    std::vector<Permutation> gens;
    // S_{block_size} on the first block
    if (block_size >= 2) {
        std::vector<int> t(n);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[0], t[1]);
        gens.emplace_back(t);
        if (block_size >= 3) {
            std::vector<int> c(n);
            std::iota(c.begin(), c.end(), 0);
            for (int i = 0; i < block_size; ++i) c[i] = (i + 1) % block_size;
            gens.emplace_back(c);
        }
    }
    // S_{block_count} permuting the blocks
    auto block_perm = [&](const std::vector<int>& bp) {
        std::vector<int> img(n);
        for (int b = 0; b < block_count; ++b)
            for (int i = 0; i < block_size; ++i) img[b * block_size + i] = bp[b] * block_size + i;
        return Permutation(img);
    };
    if (block_count >= 2) {
        std::vector<int> t(block_count);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[0], t[1]);
        gens.push_back(block_perm(t));
        if (block_count >= 3) {
            std::vector<int> c(block_count);
            for (int i = 0; i < block_count; ++i) c[i] = (i + 1) % block_count;
            gens.push_back(block_perm(c));
        }
    }
    return PermGroup(n, std::move(gens));
}

// Minimal block system through points 0 and v; true if a nontrivial one exists.
bool has_nontrivial_blocks(const PermGroup& g) {
    int n = g.degree();
    for (int v = 1; v < n; ++v) {
        // union-find seeded with {0, v}
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) parent[a] = b;
        };
        unite(0, v);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x = 0; x < n; ++x) {
                int rx = find(x);
                if (rx == x) continue;
                for (const auto& s : g.generators()) {
                    int a = find(s(x)), b = find(s(rx));
                    if (a != b) {
                        unite(a, b);
                        changed = true;
                    }
                }
            }
        }
        int block = find(0);
        int size = 0;
        for (int x = 0; x < n; ++x)
            if (find(x) == block) ++size;
        if (size < n) return true; // proper block of size >= 2
    }
    return false;
}

bool is_primitive(const PermGroup& g) { return g.is_transitive() && !has_nontrivial_blocks(g); }

// Conjugacy-invariant fingerprint used to group candidates before witness scans.
struct GroupSignature {
    uint64_t order;
    std::vector<std::pair<std::vector<int>, int>> type_histogram; // (cycle type, count)

    bool operator==(const GroupSignature&) const = default;
    bool operator<(const GroupSignature& o) const {
        if (order != o.order) return order < o.order;
        return type_histogram < o.type_histogram;
    }
};

GroupSignature signature_of(const PermGroup& g) {
    GroupSignature sig;
    sig.order = order_to_u64(g.order());
    std::map<std::vector<int>, int> hist;
    g.for_each_element([&](const Permutation& e) {
        ++hist[e.cycle_type()];
        return true;
    });
    sig.type_histogram.assign(hist.begin(), hist.end());
    return sig;
}

// Dedup a candidate list under S_n-conjugacy.
std::vector<PermGroup> dedup_in_symmetric(int n, const std::vector<PermGroup>& cands) {
    PermGroup sym = PermGroup::symmetric(n);
    std::vector<PermGroup> reps;
    std::vector<GroupSignature> sigs;
    for (const auto& c : cands) {
        GroupSignature sig = signature_of(c);
        bool dup = false;
        for (size_t i = 0; i < reps.size(); ++i) {
            if (!(sigs[i] == sig)) continue;
            if (are_conjugate_subgroups(sym, c, reps[i])) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            reps.push_back(c);
            sigs.push_back(std::move(sig));
        }
    }
    return reps;
}

// Even prime-order class representatives of S_n, one canonical element per
// cycle type (p-cycles repeated k times, rest fixed).
std::vector<Permutation> even_prime_type_reps(int n) {
    std::vector<Permutation> reps;
    for (int p : {2, 3, 5, 7, 11, 13}) {
        if (p > n) break;
        for (int k = 1; k * p <= n; ++k) {
            // sign of k cycles of length p: (p-1)*k transpositions
            if (((p - 1) * k) % 2 != 0) continue;
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 0);
            for (int c = 0; c < k; ++c) {
                int base = c * p;
                for (int i = 0; i < p; ++i) img[base + i] = base + (i + 1) % p;
            }
            reps.emplace_back(img);
        }
    }
    return reps;
}

// Centralizer generators in S_n of an element with k p-cycles and fixed
// points, laid out as produced by even_prime_type_reps: cycle rotations,
// adjacent cycle swaps, and the symmetric group on the fixed points.
std::vector<Permutation> centralizer_gens_for_rep(const Permutation& x) {
    int n = x.degree();
    std::vector<std::vector<int>> cycles;
    std::vector<int> fixed;
    std::vector<char> done(n, 0);
    for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        if (x(i) == i) {
            fixed.push_back(i);
            done[i] = 1;
            continue;
        }
        std::vector<int> cyc;
        int j = i;
        do {
            cyc.push_back(j);
            done[j] = 1;
            j = x(j);
        } while (j != i);
        cycles.push_back(cyc);
    }
    std::vector<Permutation> gens;
    for (const auto& cyc : cycles) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        for (size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = cyc[(i + 1) % cyc.size()];
        gens.emplace_back(img);
    }
    for (size_t c = 0; c + 1 < cycles.size(); ++c) {
        if (cycles[c].size() != cycles[c + 1].size()) continue;
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        for (size_t i = 0; i < cycles[c].size(); ++i) {
            img[cycles[c][i]] = cycles[c + 1][i];
            img[cycles[c + 1][i]] = cycles[c][i];
        }
        gens.emplace_back(img);
    }
    if (fixed.size() >= 2) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        std::swap(img[fixed[0]], img[fixed[1]]);
        gens.emplace_back(img);
        if (fixed.size() >= 3) {
            std::vector<int> rot(n);
            std::iota(rot.begin(), rot.end(), 0);
            for (size_t i = 0; i < fixed.size(); ++i) rot[fixed[i]] = fixed[(i + 1) % fixed.size()];
            gens.emplace_back(rot);
        }
    }
    return gens;
}

// Bochert's bound: a primitive group of degree n not containing A_n has
// order at most n! / floor((n+1)/2)!.
uint64_t primitive_order_bound(int n) {
    uint64_t num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    uint64_t den = 1;
    for (int i = 2; i <= (n + 1) / 2; ++i) den *= i;
    return num / den;
}

// Transitive socle candidates for the primitive groups of degree n: closures
// of two even prime-order elements, bounded by Bochert's bound, deduplicated
// by centralizer orbits of the second generator.
std::vector<PermGroup> socle_sweep(int n) {
    uint64_t bound = primitive_order_bound(n);
    // universe: even prime-order elements of S_n
    std::vector<uint64_t> universe;
    {
        PermGroup alt = PermGroup::alternating(n);
        alt.for_each_element([&](const Permutation& e) {
            if (e.is_identity()) return true;
            int ord = e.element_order();
            bool prime = true;
            for (int d = 2; d * d <= ord; ++d)
                if (ord % d == 0) prime = false;
            if (prime) universe.push_back(pack(e));
            return true;
        });
    }
    std::sort(universe.begin(), universe.end());

    std::vector<PermGroup> cands;
    for (const auto& xrep : even_prime_type_reps(n)) {
        uint64_t xp = pack(xrep);
        std::vector<uint64_t> cgens;
        for (const auto& c : centralizer_gens_for_rep(xrep)) cgens.push_back(pack(c));
        std::unordered_set<uint64_t> visited;
        for (uint64_t y : universe) {
            if (y == xp || visited.count(y)) continue;
            std::vector<uint64_t> orb{y};
            visited.insert(y);
            for (size_t head = 0; head < orb.size(); ++head)
                for (uint64_t c : cgens) {
                    uint64_t z = pconj(orb[head], c, n);
                    if (visited.insert(z).second) orb.push_back(z);
                }
            // transitivity of <x, y> on points first
            {
                std::vector<char> seen(n, 0);
                std::vector<int> stack{0};
                seen[0] = 1;
                int cnt = 1;
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (uint64_t gp : {xp, y}) {
                        int w = pget(gp, v);
                        if (!seen[w]) {
                            seen[w] = 1;
                            ++cnt;
                            stack.push_back(w);
                        }
                    }
                }
                if (cnt < n) continue;
            }
            // bounded closure
            std::unordered_set<uint64_t> seen{pidentity(n)};
            std::vector<uint64_t> memb{pidentity(n)};
            bool aborted = false;
            for (size_t head = 0; head < memb.size() && !aborted; ++head)
                for (uint64_t gp : {xp, y}) {
                    uint64_t z = pcompose(memb[head], gp, n);
                    if (seen.insert(z).second) {
                        memb.push_back(z);
                        if (memb.size() > bound) {
                            aborted = true;
                            break;
                        }
                    }
                }
            if (aborted) continue;
            PermGroup t(n, {unpack(xp, n), unpack(y, n)});
            // socles of primitive groups: a primitive action, a regular
            // elementary abelian group, or a perfect (simple here) group
            bool keep = is_primitive(t);
            if (!keep && order_to_u64(t.order()) == static_cast<uint64_t>(n)) {
                bool abelian = true;
                for (const auto& a : t.generators())
                    for (const auto& b : t.generators())
                        if (compose(a, b) != compose(b, a)) abelian = false;
                int eo = t.generators().empty() ? 1 : t.generators()[0].element_order();
                bool prime_exponent = true;
                for (const auto& a : t.generators())
                    if (a.element_order() != eo) prime_exponent = false;
                keep = abelian && prime_exponent;
            }
            if (!keep) keep = is_whole_group(t, derived_subgroup(t));
            if (keep) cands.push_back(std::move(t));
        }
    }
    return dedup_in_symmetric(n, cands);
}

// Groups between T and its normalizer in S_n, via the regular quotient.
std::vector<PermGroup> overgroups_in_normalizer(int n, const PermGroup& t) {
    PermGroup sym = PermGroup::symmetric(n);
    std::vector<Permutation> ngens = t.generators();
    PermGroup cur = t;
    sym.for_each_element([&](const Permutation& g) {
        bool norm = true;
        for (const auto& s : t.generators())
            if (!t.contains(conjugate(s, g))) {
                norm = false;
                break;
            }
        if (norm && !cur.contains(g)) {
            ngens.push_back(g);
            cur = PermGroup(n, ngens);
        }
        return true;
    });
    PermGroup norm(n, ngens);
    uint64_t idx = order_to_u64(norm.order() / t.order());
    std::vector<PermGroup> out{t};
    if (idx == 1) return out;
    if (idx > 200) return out; // socle sweep only needs small quotients

    CosetAction qa = coset_action(norm, t);
    PermGroup quotient = qa.image();
    for (const auto& hq : subgroups_up_to_conjugacy(quotient)) {
        if (hq.order() == 1) continue;
        std::vector<Permutation> gens = t.generators();
        for (const auto& q : hq.generators()) gens.push_back(qa.coset_reps[q(0)]);
        out.emplace_back(n, std::move(gens));
    }
    return out;
}

std::vector<PermGroup> transitive_via_composite(int n) {
    std::vector<PermGroup> cands;
    for (int d = 2; d < n; ++d) {
        if (n % d != 0) continue;
        PermGroup w = wreath_on_blocks(d, n / d);
        for (const auto& h : subgroups_up_to_conjugacy(w))
            if (h.is_transitive()) cands.push_back(h);
    }
    cands.push_back(PermGroup::alternating(n));
    cands.push_back(PermGroup::symmetric(n));
    for (const auto& t : socle_sweep(n))
        for (const auto& g : overgroups_in_normalizer(n, t))
            if (g.is_transitive()) cands.push_back(g);
    return dedup_in_symmetric(n, cands);
}

} // namespace

std::vector<PermGroup> transitive_groups_of_degree(int k) {
    if (k < 1 || k > 10)
        throw std::invalid_argument("transitive_groups_of_degree: supported degrees are 1..10");
    if (k == 1) return {PermGroup::trivial(1)};
    if (k <= 8) {
        std::vector<PermGroup> out;
        for (const auto& h : subgroups_up_to_conjugacy(PermGroup::symmetric(k)))
            if (h.is_transitive()) out.push_back(h);
        return out;
    }
    return transitive_via_composite(k);
}

Catalogue build_catalogue(int max_degree, bool long_run) {
    int cap = long_run ? 10 : kCatalogueDefaultCap;
    if (max_degree < 1 || max_degree > cap)
        throw std::invalid_argument("catalogue degree cap exceeded (max " + std::to_string(cap) +
                                    (long_run ? ")" : "; use the long-run flag for 9-10)"));
    Catalogue cat;
    cat.max_degree = max_degree;
    cat.provenance = std::string("engine=") + kEngineVersion +
                     " max_degree=" + std::to_string(max_degree);
    for (int k = 1; k <= max_degree; ++k) {
        std::vector<CatalogueEntry> list;
        for (const auto& g : transitive_groups_of_degree(k)) {
            CatalogueEntry e;
            e.degree = k;
            e.order = order_to_u64(g.order());
            e.generators = g.generators();
            list.push_back(std::move(e));
        }
        std::sort(list.begin(), list.end(), [](const CatalogueEntry& a, const CatalogueEntry& b) {
            if (a.order != b.order) return a.order < b.order;
            std::ostringstream sa, sb;
            for (const auto& g : a.generators) sa << g.to_cycles() << '\n';
            for (const auto& g : b.generators) sb << g.to_cycles() << '\n';
            return sa.str() < sb.str();
        });
        for (size_t i = 0; i < list.size(); ++i) list[i].index = static_cast<int>(i) + 1;
        cat.entries[k] = std::move(list);
    }
    return cat;
}

const std::vector<CatalogueEntry>& Catalogue::at_degree(int k) const {
    auto it = entries.find(k);
    if (it == entries.end())
        throw std::runtime_error("catalogue does not cover degree " + std::to_string(k));
    return it->second;
}

void write_catalogue(const Catalogue& cat, std::ostream& out) {
    out << "TRANSCAT v1 maxdeg=" << cat.max_degree << " " << cat.provenance << "\n";
    for (const auto& [k, list] : cat.entries) {
        for (const auto& e : list) {
            out << "DEGREE " << e.degree << " INDEX " << e.index << " ORDER " << e.order << "\n";
            for (const auto& g : e.generators) out << g.to_cycles() << "\n";
            out << "\n";
        }
    }
}

void save_catalogue(const Catalogue& cat, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write catalogue file " + path);
    write_catalogue(cat, out);
}

Catalogue read_catalogue(std::istream& in, const std::string& name) {
    Catalogue cat;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error(name + ":" + std::to_string(lineno) + ": " + msg);
    };
    if (!std::getline(in, line)) fail("empty catalogue file");
    ++lineno;
    {
        std::istringstream head(line);
        std::string magic, ver, maxdeg;
        head >> magic >> ver >> maxdeg;
        if (magic != "TRANSCAT" || ver != "v1" || maxdeg.rfind("maxdeg=", 0) != 0)
            fail("bad catalogue header");
        cat.max_degree = std::stoi(maxdeg.substr(7));
        std::string rest;
        std::getline(head, rest);
        cat.provenance = rest.empty() ? "" : rest.substr(1);
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream rec(line);
        std::string kw1, kw2, kw3;
        int degree, index;
        uint64_t order;
        rec >> kw1 >> degree >> kw2 >> index >> kw3 >> order;
        if (kw1 != "DEGREE" || kw2 != "INDEX" || kw3 != "ORDER" || rec.fail())
            fail("bad record header: " + line);
        std::string entry_name =
            "entry " + std::to_string(degree) + "." + std::to_string(index);
        CatalogueEntry e;
        e.degree = degree;
        e.index = index;
        e.order = order;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) break;
            try {
                e.generators.push_back(Permutation::parse_cycles(degree, line));
            } catch (const std::exception& ex) {
                fail(entry_name + ": " + ex.what());
            }
        }
        PermGroup g(degree, e.generators);
        if (!g.is_transitive()) fail(entry_name + ": group is not transitive");
        if (order_to_u64(g.order()) != order)
            fail(entry_name + ": recorded order " + std::to_string(order) +
                 " does not match computed " + order_to_string(g.order()));
        cat.entries[degree].push_back(std::move(e));
    }
    for (auto& [k, list] : cat.entries) {
        std::sort(list.begin(), list.end(),
                  [](const CatalogueEntry& a, const CatalogueEntry& b) { return a.index < b.index; });
        for (size_t i = 0; i < list.size(); ++i)
            if (list[i].index != static_cast<int>(i) + 1)
                throw std::runtime_error(name + ": degree " + std::to_string(k) +
                                         " entry indexes are not 1..n");
    }
    return cat;
}

Catalogue load_catalogue(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open catalogue file " + path);
    return read_catalogue(in, path);
}

} // namespace etg
