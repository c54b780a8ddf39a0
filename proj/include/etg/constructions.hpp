#pragma once

#include "etg/graph.hpp"
#include "etg/perm.hpp"

#include <array>
#include <utility>
#include <vector>

namespace etg {

// Base graph X on parts A = A_1 u A_2 (|A_i| = k) and B = A_1 x A_2, plus its
// (k,2)-blow-up Y of order 4k^2 and valency 2k(k-1). Y is semi-symmetric for
// every k >= 3.
struct FolkmanPair {
    int k = 0;
    Graph base;   // X, parts (A, B)
    Graph blowup; // Y
};

FolkmanPair folkman_blowup(int k); // k >= 3

// Explicit wreath-type symmetries of the base graph: part-wise point
// permutations and the part swap combined with the coordinate swap on B.
std::vector<Permutation> folkman_wreath_generators(int k);

// The generalized quadrangle of a symplectic form on a 4-dimensional space
// over the q-element field: points are projective 1-subspaces, lines the
// totally isotropic 2-subspaces.
struct SymplecticGQ {
    int q = 0;
    std::vector<std::array<int, 4>> points; // normalized representatives
    std::vector<std::vector<int>> lines;    // sorted point ids, q+1 per line
};

// q odd prime power in {3, 5, 7, 9}
SymplecticGQ symplectic_gq(int q);

// Levi (incidence) graph and its bipartite complement, both with designated
// parts (points, lines).
std::pair<Graph, Graph> levi_and_complement(const SymplecticGQ& gq);

// Arithmetic of the q-element field, q prime or 9 (residues modulo x^2+1
// over the 3-element field). Elements are 0..q-1; for q = 9 the element
// a + 3b represents a + b*x.
struct FieldTable {
    int q = 0;
    std::vector<int> add_table;
    std::vector<int> mul_table;
    int add(int a, int b) const { return add_table[a * q + b]; }
    int mul(int a, int b) const { return mul_table[a * q + b]; }
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
};

FieldTable field_table(int q);

} // namespace etg
