#include "etg/coset.hpp"

#include <stdexcept>
#include <unordered_set>

namespace etg {

CosetAction coset_action(const PermGroup& g, const PermGroup& h) {
    if (!is_subgroup(g, h)) throw std::invalid_argument("coset_action: H is not a subgroup of G");
    CosetAction act;
    act.group = g;
    act.subgroup = h;

    std::vector<Permutation> reps{Permutation::identity(g.degree())};
    // Orbit of the trivial coset under right multiplication by generators.
    // Coset identity test: r * s and r_j lie in the same coset iff
    // r*s*r_j^-1 is in H.
    std::vector<std::vector<int>> images_by_gen(g.generators().size());
    for (size_t head = 0; head < reps.size(); ++head) {
        for (size_t gi = 0; gi < g.generators().size(); ++gi) {
            Permutation moved = compose(reps[head], g.generators()[gi]);
            int target = -1;
            for (size_t j = 0; j < reps.size(); ++j) {
                if (h.contains(compose(moved, reps[j].inverse()))) {
                    target = static_cast<int>(j);
                    break;
                }
            }
            if (target < 0) {
                target = static_cast<int>(reps.size());
                reps.push_back(std::move(moved));
            }
            if (images_by_gen[gi].size() <= head) images_by_gen[gi].resize(head + 1, -1);
            images_by_gen[gi][head] = target;
        }
    }
    act.degree = static_cast<int>(reps.size());
    act.coset_reps = std::move(reps);
    for (size_t gi = 0; gi < g.generators().size(); ++gi) {
        images_by_gen[gi].resize(act.degree, -1);
        act.images_of_generators.emplace_back(images_by_gen[gi]);
    }
    return act;
}

PermGroup core(const PermGroup& g, const PermGroup& h) {
    if (!is_subgroup(g, h)) throw std::invalid_argument("core: H is not a subgroup of G");
    // Largest subset of H closed under conjugation by G's generators; since H
    // is a group and conjugation is an automorphism, the fixed point of this
    // iteration is the normal core.
    std::vector<Permutation> members = h.elements();
    std::unordered_set<Permutation, PermHash> current(members.begin(), members.end());
    bool changed = true;
    while (changed) {
        changed = false;
        std::unordered_set<Permutation, PermHash> next;
        for (const auto& x : current) {
            bool keep = true;
            for (const auto& gen : g.generators()) {
                if (!current.count(conjugate(x, gen))) {
                    keep = false;
                    break;
                }
            }
            if (keep)
                next.insert(x);
            else
                changed = true;
        }
        current = std::move(next);
    }
    std::vector<Permutation> gens(current.begin(), current.end());
    return PermGroup(g.degree(), std::move(gens));
}

std::vector<Permutation> combined_action_generators(const PermGroup& g, const CosetAction& act) {
    int n = g.degree();
    std::vector<Permutation> combined;
    for (size_t gi = 0; gi < g.generators().size(); ++gi) {
        std::vector<int> img(n + act.degree);
        for (int i = 0; i < n; ++i) img[i] = g.generators()[gi](i);
        for (int c = 0; c < act.degree; ++c) img[n + c] = n + act.images_of_generators[gi](c);
        combined.emplace_back(img);
    }
    return combined;
}

} // namespace etg
