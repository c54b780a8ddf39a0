#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace etg {

// A permutation of {0..n-1} stored as its image array.
// Products are read left to right: (p*q) means "apply p, then q".
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int degree);              // identity
    explicit Permutation(std::vector<int> images); // validates bijection

    static Permutation identity(int degree) { return Permutation(degree); }

    // Parses disjoint-cycle text, 1-indexed, e.g. "(1,2)(3,4)". "()" is the identity.
    static Permutation parse_cycles(int degree, const std::string& text);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int point) const { return img_[point]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    Permutation inverse() const;
    int element_order() const;
    bool is_even() const;
    int first_moved() const; // -1 for the identity

    // Sorted cycle type, longest first, fixed points omitted.
    std::vector<int> cycle_type() const;

    std::string to_cycles() const; // 1-indexed text form

    // Injective packing for degree <= 16 (4 bits per image).
    uint64_t packed_key() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.img_ <=> b.img_;
    }

private:
    std::vector<int> img_;
};

// Apply p, then q.
Permutation compose(const Permutation& p, const Permutation& q);
// g^-1 * p * g
Permutation conjugate(const Permutation& p, const Permutation& g);
Permutation power(const Permutation& p, int e);

struct PermHash {
    size_t operator()(const Permutation& p) const {
        uint64_t h = 1469598103934665603ull;
        for (int x : p.images()) {
            h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

} // namespace etg
