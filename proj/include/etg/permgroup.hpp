#pragma once

#include "etg/perm.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace etg {

// Group orders can exceed 64 bits for automorphism groups of blown-up graphs.
using GroupOrder = unsigned __int128;

std::string order_to_string(GroupOrder n);
uint64_t order_to_u64(GroupOrder n); // throws on overflow

// Permutation group given by generators, with a lazily built base and strong
// generating set (deterministic Schreier-Sims, first-moved-point base).
// Immutable after construction; the BSGS cache is built under a lock, so
// concurrent read-only use is safe.
class PermGroup {
public:
    PermGroup() = default;
    PermGroup(int degree, std::vector<Permutation> generators);
    PermGroup(const PermGroup& other);
    PermGroup& operator=(const PermGroup& other);
    PermGroup(PermGroup&&) = default;
    PermGroup& operator=(PermGroup&&) = default;

    static PermGroup trivial(int degree);
    static PermGroup symmetric(int degree);
    static PermGroup alternating(int degree);
    static PermGroup cyclic(int degree);       // regular n-cycle
    static PermGroup dihedral(int points);     // D_n acting on n points, order 2n

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    GroupOrder order() const;
    bool contains(const Permutation& p) const;
    bool is_trivial() const { return order() == 1; }
    bool is_transitive() const;

    std::vector<int> orbit(int point) const;
    std::vector<std::vector<int>> orbits() const;

    PermGroup stabilizer(int point) const;
    // Subgroup fixing each listed point (in order); used for action kernels.
    PermGroup pointwise_stabilizer(const std::vector<int>& points) const;

    // All elements, deterministic order. Throws if the order exceeds `limit`.
    std::vector<Permutation> elements(uint64_t limit = 2000000) const;

    // Streams every element in a deterministic order until fn returns false.
    void for_each_element(const std::function<bool(const Permutation&)>& fn) const;

    const std::vector<int>& base() const;

private:
    struct Chain;
    void ensure_bsgs() const;
    const Chain& chain() const;

    int degree_ = 0;
    std::vector<Permutation> gens_;
    mutable std::shared_ptr<const Chain> chain_;
    mutable std::shared_ptr<std::mutex> lock_ = std::make_shared<std::mutex>();
};

// BFS closure of a generating set; independent of the BSGS machinery and used
// as its oracle in tests. Throws if the closure exceeds `cap` elements.
std::vector<Permutation> closure_elements(int degree, const std::vector<Permutation>& gens,
                                          uint64_t cap = 2000000);

PermGroup generated_subgroup(int degree, const std::vector<Permutation>& perms);
bool is_whole_group(const PermGroup& g, const PermGroup& h);
bool is_subgroup(const PermGroup& g, const PermGroup& h); // h <= g

} // namespace etg
