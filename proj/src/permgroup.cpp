#include "etg/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace etg {

std::string order_to_string(GroupOrder n) {
    if (n == 0) return "0";
    std::string s;
    while (n > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(n % 10)));
        n /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

uint64_t order_to_u64(GroupOrder n) {
    if (n > GroupOrder(~0ull)) throw std::overflow_error("group order exceeds 64 bits");
    return static_cast<uint64_t>(n);
}

// ---------------------------------------------------------------------------
// BSGS chain

struct PermGroup::Chain {
    int degree = 0;
    std::vector<int> base;
    // gens[l]: strong generators fixing base[0..l-1]
    std::vector<std::vector<Permutation>> gens;
    // trans[l][p]: permutation u with base[l]^u = p (degree 0 marks "absent")
    std::vector<std::vector<Permutation>> trans;
    std::vector<std::vector<int>> orbit; // BFS order

    void add_level(int point) {
        base.push_back(point);
        gens.emplace_back();
        trans.emplace_back(degree);
        orbit.emplace_back();
        rebuild_orbit(static_cast<int>(base.size()) - 1);
    }

    void rebuild_orbit(int l) {
        auto& tr = trans[l];
        std::fill(tr.begin(), tr.end(), Permutation());
        orbit[l].clear();
        int b = base[l];
        tr[b] = Permutation::identity(degree);
        orbit[l].push_back(b);
        for (size_t head = 0; head < orbit[l].size(); ++head) {
            int p = orbit[l][head];
            for (const auto& s : gens[l]) {
                int q = s(p);
                if (tr[q].degree() == 0) {
                    tr[q] = compose(tr[p], s);
                    orbit[l].push_back(q);
                }
            }
        }
    }

    // Returns residue and the level where sifting stopped.
    std::pair<Permutation, int> strip(Permutation g, int from) const {
        for (int l = from; l < static_cast<int>(base.size()); ++l) {
            int p = g(base[l]);
            if (trans[l][p].degree() == 0) return {std::move(g), l};
            g = compose(g, trans[l][p].inverse());
        }
        return {std::move(g), static_cast<int>(base.size())};
    }

    void schreier_sims(int l) {
        rebuild_orbit(l);
        for (size_t oi = 0; oi < orbit[l].size(); ++oi) {
            int p = orbit[l][oi];
            for (size_t si = 0; si < gens[l].size(); ++si) {
                Permutation s = gens[l][si];
                int q = s(p);
                Permutation schreier = compose(compose(trans[l][p], s), trans[l][q].inverse());
                if (schreier.is_identity()) continue;
                auto [h, j] = strip(std::move(schreier), l + 1);
                if (h.is_identity()) continue;
                if (j == static_cast<int>(base.size())) add_level(h.first_moved());
                for (int t = l + 1; t <= j; ++t) gens[t].push_back(h);
                for (int t = j; t >= l + 1; --t) schreier_sims(t);
                // gens[l] and orbit[l] are unchanged; keep scanning.
            }
        }
    }
};

void PermGroup::ensure_bsgs() const {
    std::lock_guard<std::mutex> guard(*lock_);
    if (chain_) return;
    auto ch = std::make_shared<Chain>();
    ch->degree = degree_;
    for (const auto& g : gens_) {
        if (g.is_identity()) continue;
        auto [h, j] = ch->strip(g, 0);
        if (h.is_identity()) continue;
        if (j == static_cast<int>(ch->base.size())) ch->add_level(h.first_moved());
        for (int t = 0; t <= j; ++t) ch->gens[t].push_back(h);
        for (int t = j; t >= 0; --t) ch->schreier_sims(t);
    }
    chain_ = std::move(ch);
}

const PermGroup::Chain& PermGroup::chain() const {
    ensure_bsgs();
    return *chain_;
}

// ---------------------------------------------------------------------------

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
    for (const auto& g : gens_)
        if (g.degree() != degree_)
            throw std::invalid_argument("generator degree mismatch");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    gens_.erase(std::remove_if(gens_.begin(), gens_.end(),
                               [](const Permutation& p) { return p.is_identity(); }),
                gens_.end());
}

PermGroup::PermGroup(const PermGroup& other)
    : degree_(other.degree_), gens_(other.gens_) {
    std::lock_guard<std::mutex> guard(*other.lock_);
    chain_ = other.chain_;
}

PermGroup& PermGroup::operator=(const PermGroup& other) {
    if (this == &other) return *this;
    std::lock_guard<std::mutex> guard(*other.lock_);
    degree_ = other.degree_;
    gens_ = other.gens_;
    chain_ = other.chain_;
    return *this;
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::symmetric(int degree) {
    std::vector<Permutation> gens;
    if (degree >= 2) {
        std::vector<int> t(degree);
        for (int i = 0; i < degree; ++i) t[i] = i;
        std::swap(t[0], t[1]);
        gens.emplace_back(t);
    }
    if (degree >= 3) {
        std::vector<int> c(degree);
        for (int i = 0; i < degree; ++i) c[i] = (i + 1) % degree;
        gens.emplace_back(c);
    }
    return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::alternating(int degree) {
    std::vector<Permutation> gens;
    if (degree >= 3) {
        std::vector<int> c(degree);
        for (int i = 0; i < degree; ++i) c[i] = i;
        c[0] = 1; c[1] = 2; c[2] = 0;
        gens.emplace_back(c);
    }
    if (degree >= 4) {
        std::vector<int> c(degree);
        if (degree % 2 == 1) {
            for (int i = 0; i < degree; ++i) c[i] = (i + 1) % degree;
        } else {
            c[0] = 0;
            for (int i = 1; i < degree; ++i) c[i] = i == degree - 1 ? 1 : i + 1;
        }
        gens.emplace_back(c);
    }
    return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::cyclic(int degree) {
    if (degree <= 1) return trivial(std::max(degree, 0));
    std::vector<int> c(degree);
    for (int i = 0; i < degree; ++i) c[i] = (i + 1) % degree;
    return PermGroup(degree, {Permutation(c)});
}

PermGroup PermGroup::dihedral(int points) {
    if (points < 3) return symmetric(points);
    std::vector<int> rot(points), refl(points);
    for (int i = 0; i < points; ++i) {
        rot[i] = (i + 1) % points;
        refl[i] = (points - i) % points;
    }
    return PermGroup(points, {Permutation(rot), Permutation(refl)});
}

GroupOrder PermGroup::order() const {
    const Chain& ch = chain();
    GroupOrder n = 1;
    for (const auto& orb : ch.orbit) n *= GroupOrder(orb.size());
    return n;
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    if (p.is_identity()) return true;
    auto [h, l] = chain().strip(p, 0);
    (void)l;
    return h.is_identity();
}

bool PermGroup::is_transitive() const {
    if (degree_ <= 1) return true;
    return static_cast<int>(orbit(0).size()) == degree_;
}

std::vector<int> PermGroup::orbit(int point) const {
    if (point < 0 || point >= degree_) throw std::invalid_argument("orbit: point out of range");
    std::vector<char> seen(degree_, 0);
    std::vector<int> orb{point};
    seen[point] = 1;
    for (size_t head = 0; head < orb.size(); ++head)
        for (const auto& g : gens_) {
            int q = g(orb[head]);
            if (!seen[q]) {
                seen[q] = 1;
                orb.push_back(q);
            }
        }
    std::sort(orb.begin(), orb.end());
    return orb;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<char> seen(degree_, 0);
    std::vector<std::vector<int>> result;
    for (int p = 0; p < degree_; ++p) {
        if (seen[p]) continue;
        auto orb = orbit(p);
        for (int q : orb) seen[q] = 1;
        result.push_back(std::move(orb));
    }
    return result;
}

PermGroup PermGroup::stabilizer(int point) const {
    return pointwise_stabilizer({point});
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<int>& points) const {
    for (int p : points)
        if (p < 0 || p >= degree_)
            throw std::invalid_argument("stabilizer: point out of range");
    Chain ch;
    ch.degree = degree_;
    for (int p : points) ch.add_level(p);
    for (const auto& g : gens_) {
        if (g.is_identity()) continue;
        auto [h, j] = ch.strip(g, 0);
        if (h.is_identity()) continue;
        if (j == static_cast<int>(ch.base.size())) ch.add_level(h.first_moved());
        for (int t = 0; t <= j; ++t) ch.gens[t].push_back(h);
        for (int t = j; t >= 0; --t) ch.schreier_sims(t);
    }
    int k = static_cast<int>(points.size());
    std::vector<Permutation> sub;
    if (k < static_cast<int>(ch.base.size()))
        for (const auto& g : ch.gens[k]) sub.push_back(g);
    return PermGroup(degree_, std::move(sub));
}

std::vector<Permutation> PermGroup::elements(uint64_t limit) const {
    GroupOrder n = order();
    if (n > GroupOrder(limit)) throw std::runtime_error("element enumeration over limit");
    const Chain& ch = chain();
    std::vector<Permutation> out{Permutation::identity(degree_)};
    out.reserve(static_cast<size_t>(order_to_u64(n)));
    // Multiply transversal representatives level by level, deepest first, so
    // every element appears exactly once as t_{k-1} * ... * t_0.
    for (int l = static_cast<int>(ch.base.size()) - 1; l >= 0; --l) {
        std::vector<Permutation> next;
        next.reserve(out.size() * ch.orbit[l].size());
        for (const auto& e : out)
            for (int p : ch.orbit[l]) next.push_back(compose(e, ch.trans[l][p]));
        out = std::move(next);
    }
    return out;
}

void PermGroup::for_each_element(const std::function<bool(const Permutation&)>& fn) const {
    const Chain& ch = chain();
    int levels = static_cast<int>(ch.base.size());
    Permutation acc = Permutation::identity(degree_);
    // Depth-first product over transversals, deepest level innermost.
    std::function<bool(int, const Permutation&)> walk = [&](int l, const Permutation& sofar) {
        if (l < 0) return fn(sofar);
        for (int p : ch.orbit[l])
            if (!walk(l - 1, compose(sofar, ch.trans[l][p]))) return false;
        return true;
    };
    walk(levels - 1, acc);
}

const std::vector<int>& PermGroup::base() const { return chain().base; }

// ---------------------------------------------------------------------------

std::vector<Permutation> closure_elements(int degree, const std::vector<Permutation>& gens,
                                          uint64_t cap) {
    std::vector<Permutation> elems{Permutation::identity(degree)};
    std::set<Permutation> seen{elems[0]};
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : gens) {
            Permutation prod = compose(elems[head], g);
            if (seen.insert(prod).second) {
                elems.push_back(std::move(prod));
                if (elems.size() > cap) throw std::runtime_error("closure exceeds cap");
            }
        }
    }
    return elems;
}

PermGroup generated_subgroup(int degree, const std::vector<Permutation>& perms) {
    return PermGroup(degree, perms);
}

bool is_whole_group(const PermGroup& g, const PermGroup& h) {
    return g.degree() == h.degree() && g.order() == h.order() && is_subgroup(g, h);
}

bool is_subgroup(const PermGroup& g, const PermGroup& h) {
    if (g.degree() != h.degree()) return false;
    for (const auto& x : h.generators())
        if (!g.contains(x)) return false;
    return true;
}

} // namespace etg
