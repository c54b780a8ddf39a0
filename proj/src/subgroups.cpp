#include "etg/subgroups.hpp"

#include "etg/coset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace etg {

namespace {

bool is_prime_int(int v) {
    if (v < 2) return false;
    for (int d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// Materialized ambient group for lattice work. Elements are indexed in
// lexicographic order of their image arrays; index 0 is the identity.
struct GroupCtx {
    int degree = 0;
    std::vector<Permutation> elems;
    std::vector<int32_t> gen_idx; // ambient generators
    std::unordered_map<uint64_t, int32_t> packed_index; // degree <= 16 only
    std::unordered_map<Permutation, int32_t, PermHash> slow_index;
    bool packed = false;
    std::vector<int32_t> inv;
    std::vector<int32_t> cls;        // conjugacy class id per element
    std::vector<int32_t> class_reps; // min element index per class
    std::vector<int8_t> even;

    explicit GroupCtx(const PermGroup& g) {
        degree = g.degree();
        elems = g.elements(200000);
        std::sort(elems.begin(), elems.end());
        packed = degree <= 16;
        for (int32_t i = 0; i < size(); ++i) {
            if (packed)
                packed_index.emplace(elems[i].packed_key(), i);
            else
                slow_index.emplace(elems[i], i);
        }
        inv.resize(elems.size());
        even.resize(elems.size());
        for (int32_t i = 0; i < size(); ++i) {
            inv[i] = index_of(elems[i].inverse());
            even[i] = elems[i].is_even() ? 1 : 0;
        }
        for (const auto& s : g.generators()) gen_idx.push_back(index_of(s));
        build_classes();
    }

    int32_t size() const { return static_cast<int32_t>(elems.size()); }

    int32_t index_of(const Permutation& p) const {
        if (packed) {
            auto it = packed_index.find(p.packed_key());
            return it == packed_index.end() ? -1 : it->second;
        }
        auto it = slow_index.find(p);
        return it == slow_index.end() ? -1 : it->second;
    }

    int32_t mul(int32_t a, int32_t b) const { return index_of(compose(elems[a], elems[b])); }
    int32_t conj(int32_t x, int32_t by) const {
        return index_of(conjugate(elems[x], elems[by]));
    }

    void build_classes() {
        cls.assign(elems.size(), -1);
        int32_t next = 0;
        for (int32_t i = 0; i < size(); ++i) {
            if (cls[i] >= 0) continue;
            int32_t id = next++;
            class_reps.push_back(i);
            std::vector<int32_t> frontier{i};
            cls[i] = id;
            while (!frontier.empty()) {
                int32_t x = frontier.back();
                frontier.pop_back();
                for (int32_t s : gen_idx) {
                    int32_t y = conj(x, s);
                    if (cls[y] < 0) {
                        cls[y] = id;
                        frontier.push_back(y);
                    }
                }
            }
        }
    }

    // Generators of the centralizer of elems[x], via Schreier generators of
    // the conjugation-orbit stabilizer.
    std::vector<int32_t> centralizer_generators(int32_t x) const {
        std::unordered_map<int32_t, int32_t> trans; // class member -> transversal elem
        std::vector<int32_t> orbit{x};
        trans.emplace(x, 0);
        for (size_t head = 0; head < orbit.size(); ++head) {
            int32_t m = orbit[head];
            for (int32_t s : gen_idx) {
                int32_t y = conj(m, s);
                if (!trans.count(y)) {
                    trans.emplace(y, mul(trans[m], s));
                    orbit.push_back(y);
                }
            }
        }
        uint64_t target = elems.size() / orbit.size();
        std::vector<int32_t> gens;
        if (target == 1) return gens;
        PermGroup cent(degree, {});
        for (size_t head = 0; head < orbit.size() && order_to_u64(cent.order()) < target; ++head) {
            int32_t m = orbit[head];
            for (int32_t s : gen_idx) {
                int32_t y = conj(m, s);
                int32_t cand = mul(mul(trans[m], s), inv[trans[y]]);
                if (cand == 0) continue;
                if (cent.contains(elems[cand])) continue;
                gens.push_back(cand);
                std::vector<Permutation> ps;
                for (int32_t gi : gens) ps.push_back(elems[gi]);
                cent = PermGroup(degree, std::move(ps));
                if (order_to_u64(cent.order()) >= target) break;
            }
        }
        return gens;
    }
};

struct SubClass {
    uint64_t order = 0;
    std::vector<int32_t> members; // sorted element indices
    std::vector<int32_t> gen_idx;
    std::vector<std::pair<int32_t, int32_t>> class_multiset; // (class id, count)
    std::vector<int> orbit_sizes;                            // sorted
    std::unordered_set<int32_t> member_set;

    void finish(const GroupCtx& ctx) {
        order = members.size();
        member_set = std::unordered_set<int32_t>(members.begin(), members.end());
        std::map<int32_t, int32_t> counts;
        for (int32_t m : members) ++counts[ctx.cls[m]];
        class_multiset.assign(counts.begin(), counts.end());
        std::vector<int> comp(ctx.degree, -1);
        int ncomp = 0;
        for (int v = 0; v < ctx.degree; ++v) {
            if (comp[v] >= 0) continue;
            std::vector<int> stack{v};
            comp[v] = ncomp;
            while (!stack.empty()) {
                int s = stack.back();
                stack.pop_back();
                for (int32_t gi : gen_idx) {
                    int y = ctx.elems[gi](s);
                    if (comp[y] < 0) {
                        comp[y] = ncomp;
                        stack.push_back(y);
                    }
                }
            }
            ++ncomp;
        }
        orbit_sizes.assign(ncomp, 0);
        for (int v = 0; v < ctx.degree; ++v) ++orbit_sizes[comp[v]];
        std::sort(orbit_sizes.begin(), orbit_sizes.end());
    }

    bool same_signature(const SubClass& o) const {
        return order == o.order && orbit_sizes == o.orbit_sizes &&
               class_multiset == o.class_multiset;
    }
};

bool conjugate_witness(const GroupCtx& ctx, const SubClass& a, const SubClass& b) {
    for (int32_t g = 0; g < ctx.size(); ++g) {
        bool ok = true;
        for (int32_t gi : a.gen_idx) {
            if (!b.member_set.count(ctx.conj(gi, g))) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// The index-2 subgroup of even elements, or the whole group if none are odd.
std::vector<int32_t> even_part_members(const GroupCtx& ctx) {
    std::vector<int32_t> out;
    for (int32_t i = 0; i < ctx.size(); ++i)
        if (ctx.even[i]) out.push_back(i);
    return out;
}

bool is_perfect_members(const GroupCtx& ctx, const std::vector<int32_t>& gens,
                        size_t member_count) {
    // derived subgroup = closure of generator commutators under products and
    // conjugation by the subgroup generators
    std::vector<int32_t> dgens;
    for (int32_t a : gens)
        for (int32_t b : gens) {
            int32_t c = ctx.mul(ctx.mul(ctx.inv[a], ctx.inv[b]), ctx.mul(a, b));
            if (c != 0) dgens.push_back(c);
        }
    std::sort(dgens.begin(), dgens.end());
    dgens.erase(std::unique(dgens.begin(), dgens.end()), dgens.end());
    std::unordered_set<int32_t> dset{0};
    std::vector<int32_t> dlist{0};
    for (size_t head = 0; head < dlist.size(); ++head) {
        for (int32_t s : dgens) {
            int32_t y = ctx.mul(dlist[head], s);
            if (dset.insert(y).second) dlist.push_back(y);
        }
        for (int32_t s : gens) {
            int32_t y = ctx.conj(dlist[head], s);
            if (dset.insert(y).second) dlist.push_back(y);
        }
        if (dlist.size() > member_count) return false;
    }
    return dlist.size() == member_count;
}

std::vector<SubClass> perfect_seed_classes(const GroupCtx& ctx) {
    std::vector<SubClass> seeds;
    std::vector<int32_t> evens = even_part_members(ctx);
    if (static_cast<int32_t>(evens.size()) == 1) return seeds; // only identity even
    uint64_t even_order = evens.size();
    uint64_t half = even_order / 2;

    auto add_seed = [&](std::vector<int32_t> gens, std::vector<int32_t> members) {
        if (!is_perfect_members(ctx, gens, members.size())) return;
        SubClass cand;
        cand.members = std::move(members);
        cand.gen_idx = std::move(gens);
        cand.finish(ctx);
        for (const auto& existing : seeds) {
            if (!existing.same_signature(cand)) continue;
            if (existing.members == cand.members) return;
            if (conjugate_witness(ctx, cand, existing)) return;
        }
        seeds.push_back(std::move(cand));
    };

    // The even part itself (closures that pass half of it must equal it).
    {
        std::vector<int32_t> egens;
        PermGroup probe(ctx.degree, {});
        for (int32_t e : evens) {
            if (e == 0 || probe.contains(ctx.elems[e])) continue;
            egens.push_back(e);
            std::vector<Permutation> ps;
            for (int32_t gi : egens) ps.push_back(ctx.elems[gi]);
            probe = PermGroup(ctx.degree, std::move(ps));
            if (order_to_u64(probe.order()) == even_order) break;
        }
        add_seed(egens, evens);
    }

    for (int32_t rep : ctx.class_reps) {
        if (rep == 0 || !ctx.even[rep]) continue;
        std::vector<int32_t> cgens = ctx.centralizer_generators(rep);
        std::unordered_set<int32_t> visited;
        for (int32_t y : evens) {
            if (y == 0 || y == rep || visited.count(y)) continue;
            std::vector<int32_t> orb{y};
            visited.insert(y);
            for (size_t head = 0; head < orb.size(); ++head)
                for (int32_t c : cgens) {
                    int32_t z = ctx.conj(orb[head], c);
                    if (visited.insert(z).second) orb.push_back(z);
                }
            // closure of <rep, y>, abandoned past half the even part
            std::unordered_set<int32_t> seen{0};
            std::vector<int32_t> memb{0};
            bool aborted = false;
            for (size_t head = 0; head < memb.size() && !aborted; ++head)
                for (int32_t s : {rep, y}) {
                    int32_t z = ctx.mul(memb[head], s);
                    if (seen.insert(z).second) {
                        memb.push_back(z);
                        if (memb.size() > half) {
                            aborted = true;
                            break;
                        }
                    }
                }
            if (aborted) continue; // it is the whole even part, already seeded
            if (memb.size() < 60) continue; // smaller groups are soluble
            std::sort(memb.begin(), memb.end());
            add_seed({rep, y}, std::move(memb));
        }
    }
    return seeds;
}

std::vector<SubClass> lattice_classes(const GroupCtx& ctx) {
    uint64_t n = ctx.size();
    std::vector<SubClass> classes;
    auto add_class = [&](SubClass cand) -> bool {
        for (const auto& existing : classes) {
            if (!existing.same_signature(cand)) continue;
            if (existing.members == cand.members) return false;
            if (conjugate_witness(ctx, cand, existing)) return false;
        }
        classes.push_back(std::move(cand));
        return true;
    };

    {
        SubClass triv;
        triv.members = {0};
        triv.finish(ctx);
        classes.push_back(std::move(triv));
    }
    for (auto& s : perfect_seed_classes(ctx)) add_class(std::move(s));

    std::set<std::pair<uint64_t, size_t>> todo;
    for (size_t i = 0; i < classes.size(); ++i) todo.insert({classes[i].order, i});

    while (!todo.empty()) {
        size_t hi = todo.begin()->second;
        todo.erase(todo.begin());
        std::vector<int32_t> members = classes[hi].members;
        std::vector<int32_t> gen_idx = classes[hi].gen_idx;
        std::unordered_set<int32_t> member_set(members.begin(), members.end());
        uint64_t horder = members.size();
        if (horder == n) continue;

        // normalizer scan (everything normalizes the trivial subgroup)
        std::vector<int32_t> normalizer;
        if (gen_idx.empty()) {
            normalizer.resize(n);
            std::iota(normalizer.begin(), normalizer.end(), 0);
        } else {
            for (int32_t x = 0; x < static_cast<int32_t>(n); ++x) {
                bool ok = true;
                for (int32_t gi : gen_idx)
                    if (!member_set.count(ctx.conj(gi, x))) {
                        ok = false;
                        break;
                    }
                if (ok) normalizer.push_back(x);
            }
        }

        std::unordered_set<int32_t> covered;
        for (int32_t x : normalizer) {
            if (covered.count(x)) continue;
            for (int32_t h : members) covered.insert(ctx.mul(h, x));
            if (member_set.count(x)) continue;
            int32_t pw = x;
            int t = 1;
            while (!member_set.count(pw)) {
                pw = ctx.mul(pw, x);
                ++t;
            }
            if (!is_prime_int(t)) continue;
            SubClass cand;
            cand.members.reserve(horder * t);
            int32_t xp = 0;
            for (int i = 0; i < t; ++i) {
                for (int32_t h : members) cand.members.push_back(ctx.mul(h, xp));
                xp = ctx.mul(xp, x);
            }
            std::sort(cand.members.begin(), cand.members.end());
            cand.gen_idx = gen_idx;
            cand.gen_idx.push_back(x);
            cand.finish(ctx);
            uint64_t corder = cand.order;
            if (add_class(std::move(cand))) todo.insert({corder, classes.size() - 1});
        }
    }

    std::sort(classes.begin(), classes.end(), [](const SubClass& a, const SubClass& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.members < b.members;
    });
    return classes;
}

} // namespace

bool are_conjugate_subgroups(const PermGroup& ambient, const PermGroup& h1, const PermGroup& h2) {
    if (!is_subgroup(ambient, h1) || !is_subgroup(ambient, h2))
        throw std::invalid_argument("are_conjugate_subgroups: not subgroups of the ambient group");
    if (h1.order() != h2.order()) return false;

    auto orbit_sizes = [](const PermGroup& h) {
        std::vector<int> sizes;
        for (const auto& o : h.orbits()) sizes.push_back(static_cast<int>(o.size()));
        std::sort(sizes.begin(), sizes.end());
        return sizes;
    };
    if (orbit_sizes(h1) != orbit_sizes(h2)) return false;

    if (h1.order() <= 100000) {
        auto type_multiset = [](const PermGroup& h) {
            std::vector<std::vector<int>> types;
            for (const auto& e : h.elements()) types.push_back(e.cycle_type());
            std::sort(types.begin(), types.end());
            return types;
        };
        if (type_multiset(h1) != type_multiset(h2)) return false;
    }

    bool found = false;
    ambient.for_each_element([&](const Permutation& g) {
        for (const auto& x : h1.generators())
            if (!h2.contains(conjugate(x, g))) return true;
        found = true;
        return false;
    });
    return found;
}

std::vector<PermGroup> subgroups_up_to_conjugacy(const PermGroup& g, uint64_t order_bound) {
    if (g.order() > GroupOrder(order_bound))
        throw std::runtime_error("subgroup enumeration order bound exceeded: |G| = " +
                                 order_to_string(g.order()));
    GroupCtx ctx(g);
    auto classes = lattice_classes(ctx);
    std::vector<PermGroup> out;
    out.reserve(classes.size());
    for (const auto& c : classes) {
        std::vector<Permutation> gens;
        for (int32_t gi : c.gen_idx) gens.push_back(ctx.elems[gi]);
        out.emplace_back(g.degree(), std::move(gens));
    }
    return out;
}

std::vector<PermGroup> subgroups_of_index(const PermGroup& g, int m) {
    if (m <= 0) throw std::invalid_argument("subgroups_of_index: index must be positive");
    uint64_t n = order_to_u64(g.order());
    if (n % static_cast<uint64_t>(m) != 0) return {};
    if (m == 1) return {g};

    if (auto hall = normal_hall_subgroup(g)) {
        CosetAction qa = coset_action(g, *hall);
        int d = std::gcd(m, qa.degree);
        if (d > 1) {
            PermGroup quotient = qa.image();
            std::vector<PermGroup> found;
            for (const auto& hq : subgroups_of_index(quotient, d)) {
                // The quotient acts regularly on the cosets of the Hall
                // subgroup, so the coset an element sends point 0 to
                // identifies its preimage coset.
                std::vector<Permutation> jgens = hall->generators();
                for (const auto& q : hq.generators()) jgens.push_back(qa.coset_reps[q(0)]);
                PermGroup j(g.degree(), std::move(jgens));
                for (const auto& h : subgroups_of_index(j, m / d)) found.push_back(h);
            }
            std::vector<PermGroup> classes;
            for (const auto& h : found) {
                bool dup = false;
                for (const auto& c : classes)
                    if (are_conjugate_subgroups(g, h, c)) {
                        dup = true;
                        break;
                    }
                if (!dup) classes.push_back(h);
            }
            return classes;
        }
    }

    std::vector<PermGroup> out;
    for (const auto& h : subgroups_up_to_conjugacy(g))
        if (order_to_u64(h.order()) == n / static_cast<uint64_t>(m)) out.push_back(h);
    return out;
}

std::vector<PermGroup> corefree_subgroups_of_index(const PermGroup& g, int m) {
    std::vector<PermGroup> out;
    for (const auto& h : subgroups_of_index(g, m))
        if (core(g, h).is_trivial()) out.push_back(h);
    return out;
}

PermGroup normal_closure(const PermGroup& g, const PermGroup& h) {
    PermGroup k = h;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& x : k.generators()) {
            for (const auto& s : g.generators()) {
                Permutation y = conjugate(x, s);
                if (!k.contains(y)) {
                    auto gens = k.generators();
                    gens.push_back(y);
                    k = PermGroup(g.degree(), std::move(gens));
                    grew = true;
                    break;
                }
            }
            if (grew) break;
        }
    }
    return k;
}

PermGroup derived_subgroup(const PermGroup& g) {
    std::vector<Permutation> comms;
    for (const auto& a : g.generators())
        for (const auto& b : g.generators()) {
            Permutation c = compose(compose(a.inverse(), b.inverse()), compose(a, b));
            if (!c.is_identity()) comms.push_back(c);
        }
    return normal_closure(g, PermGroup(g.degree(), std::move(comms)));
}

PermGroup sylow_subgroup(const PermGroup& g, int p) {
    if (!is_prime_int(p)) throw std::invalid_argument("sylow_subgroup: p must be prime");
    uint64_t n = order_to_u64(g.order());
    uint64_t ppart = 1;
    while (n % p == 0) {
        ppart *= p;
        n /= p;
    }
    if (ppart == 1) return PermGroup::trivial(g.degree());

    auto p_element_from = [&](const Permutation& x) -> std::optional<Permutation> {
        int ord = x.element_order();
        int rest = ord;
        while (rest % p == 0) rest /= p;
        if (rest == ord) return std::nullopt;
        Permutation y = power(x, rest); // order = p-part of ord
        return y;
    };

    PermGroup sub = PermGroup::trivial(g.degree());
    while (order_to_u64(sub.order()) < ppart) {
        std::optional<Permutation> next;
        g.for_each_element([&](const Permutation& x) {
            auto y = p_element_from(x);
            if (!y || sub.contains(*y)) return true;
            for (const auto& s : sub.generators())
                if (!sub.contains(conjugate(s, *y))) return true;
            next = *y;
            return false;
        });
        if (!next) throw std::runtime_error("sylow search failed to grow");
        auto gens = sub.generators();
        gens.push_back(*next);
        sub = PermGroup(g.degree(), std::move(gens));
    }
    return sub;
}

std::optional<PermGroup> normal_hall_subgroup(const PermGroup& g) {
    uint64_t n = order_to_u64(g.order());
    std::vector<int> primes;
    uint64_t t = n;
    for (uint64_t p = 2; p * p <= t; ++p)
        if (t % p == 0) {
            primes.push_back(static_cast<int>(p));
            while (t % p == 0) t /= p;
        }
    if (t > 1) primes.push_back(static_cast<int>(t));
    if (primes.size() < 2) return std::nullopt;
    for (int p : primes) {
        PermGroup closure = normal_closure(g, sylow_subgroup(g, p));
        uint64_t c = order_to_u64(closure.order());
        if (c == n || c == 1) continue;
        if (std::gcd(c, n / c) == 1) return closure;
    }
    return std::nullopt;
}

} // namespace etg
