#include "etg/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace etg {

// ---------------------------------------------------------------------------
// Folkman-type family

FolkmanPair folkman_blowup(int k) {
    if (k < 3) throw std::invalid_argument("folkman_blowup requires k >= 3");
    FolkmanPair out;
    out.k = k;
    int a_count = 2 * k;
    int b_count = k * k;
    Graph x(a_count + b_count);
    auto bvert = [&](int a1, int a2) { return a_count + a1 * k + a2; };
    for (int a1 = 0; a1 < k; ++a1)
        for (int a2 = 0; a2 < k; ++a2) {
            int b = bvert(a1, a2);
            for (int a = 0; a < k; ++a) {
                if (a != a1) x.add_edge(b, a);         // A_1 minus {a1}
                if (a != a2) x.add_edge(b, k + a);     // A_2 minus {a2}
            }
        }
    std::vector<int> part_a(a_count), part_b(b_count);
    std::iota(part_a.begin(), part_a.end(), 0);
    std::iota(part_b.begin(), part_b.end(), a_count);
    x.set_bipartition(part_a, part_b);
    out.blowup = blow_up(x, k, 2);
    out.base = std::move(x);
    return out;
}

std::vector<Permutation> folkman_wreath_generators(int k) {
    int a_count = 2 * k;
    int n = a_count + k * k;
    auto bvert = [&](int a1, int a2) { return a_count + a1 * k + a2; };

    auto on_part = [&](int side, const std::vector<int>& sigma) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        for (int a = 0; a < k; ++a) img[side * k + a] = side * k + sigma[a];
        for (int a1 = 0; a1 < k; ++a1)
            for (int a2 = 0; a2 < k; ++a2)
                img[bvert(a1, a2)] = side == 0 ? bvert(sigma[a1], a2) : bvert(a1, sigma[a2]);
        return Permutation(img);
    };

    std::vector<int> transp(k), cycle(k);
    std::iota(transp.begin(), transp.end(), 0);
    if (k >= 2) std::swap(transp[0], transp[1]);
    for (int i = 0; i < k; ++i) cycle[i] = (i + 1) % k;

    std::vector<Permutation> gens;
    gens.push_back(on_part(0, transp));
    gens.push_back(on_part(0, cycle));
    gens.push_back(on_part(1, transp));
    gens.push_back(on_part(1, cycle));

    // swap A_1 and A_2, and the coordinates on B
    std::vector<int> img(n);
    for (int a = 0; a < k; ++a) {
        img[a] = k + a;
        img[k + a] = a;
    }
    for (int a1 = 0; a1 < k; ++a1)
        for (int a2 = 0; a2 < k; ++a2) img[bvert(a1, a2)] = bvert(a2, a1);
    gens.emplace_back(img);
    return gens;
}

// ---------------------------------------------------------------------------
// finite field tables

int FieldTable::neg(int a) const {
    for (int b = 0; b < q; ++b)
        if (add(a, b) == 0) return b;
    throw std::logic_error("field negation not found");
}

FieldTable field_table(int q) {
    bool prime = q == 3 || q == 5 || q == 7;
    if (!prime && q != 9)
        throw std::invalid_argument("supported field sizes are 3, 5, 7 and 9");
    FieldTable f;
    f.q = q;
    f.add_table.resize(q * q);
    f.mul_table.resize(q * q);
    if (prime) {
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                f.add_table[a * q + b] = (a + b) % q;
                f.mul_table[a * q + b] = (a * b) % q;
            }
    } else {
        // residues a0 + a1*x modulo x^2 + 1 over the 3-element field
        auto enc = [](int a0, int a1) { return a0 + 3 * a1; };
        for (int a = 0; a < 9; ++a)
            for (int b = 0; b < 9; ++b) {
                int a0 = a % 3, a1 = a / 3, b0 = b % 3, b1 = b / 3;
                f.add_table[a * 9 + b] = enc((a0 + b0) % 3, (a1 + b1) % 3);
                // (a0 + a1 x)(b0 + b1 x) with x^2 = -1 = 2
                int c0 = (a0 * b0 + 2 * a1 * b1) % 3;
                int c1 = (a0 * b1 + a1 * b0) % 3;
                f.mul_table[a * 9 + b] = enc(c0, c1);
            }
    }
    return f;
}

// ---------------------------------------------------------------------------
// symplectic generalized quadrangle

namespace {

int symplectic_pairing(const FieldTable& f, const std::array<int, 4>& x,
                       const std::array<int, 4>& y) {
    // x1*y3 + x2*y4 - x3*y1 - x4*y2, coordinates 0-indexed
    int s = f.mul(x[0], y[2]);
    s = f.add(s, f.mul(x[1], y[3]));
    s = f.sub(s, f.mul(x[2], y[0]));
    s = f.sub(s, f.mul(x[3], y[1]));
    return s;
}

std::array<int, 4> scale(const FieldTable& f, int c, const std::array<int, 4>& v) {
    return {f.mul(c, v[0]), f.mul(c, v[1]), f.mul(c, v[2]), f.mul(c, v[3])};
}

std::array<int, 4> addv(const FieldTable& f, const std::array<int, 4>& a,
                        const std::array<int, 4>& b) {
    return {f.add(a[0], b[0]), f.add(a[1], b[1]), f.add(a[2], b[2]), f.add(a[3], b[3])};
}

std::array<int, 4> normalize(const FieldTable& f, std::array<int, 4> v) {
    int lead = -1;
    for (int i = 0; i < 4 && lead < 0; ++i)
        if (v[i] != 0) lead = i;
    if (lead < 0) throw std::logic_error("zero vector cannot be normalized");
    int inv = -1;
    for (int c = 1; c < f.q; ++c)
        if (f.mul(c, v[lead]) == 1) inv = c;
    return scale(f, inv, v);
}

} // namespace

SymplecticGQ symplectic_gq(int q) {
    if (q % 2 == 0) throw std::invalid_argument("q must be odd");
    FieldTable f = field_table(q);
    SymplecticGQ gq;
    gq.q = q;

    // projective points: normalized leading-one representatives in
    // lexicographic order
    std::set<std::array<int, 4>> point_set;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c)
                for (int d = 0; d < q; ++d) {
                    std::array<int, 4> v{a, b, c, d};
                    if (v == std::array<int, 4>{0, 0, 0, 0}) continue;
                    point_set.insert(normalize(f, v));
                }
    gq.points.assign(point_set.begin(), point_set.end());
    std::map<std::array<int, 4>, int> id;
    for (size_t i = 0; i < gq.points.size(); ++i) id[gq.points[i]] = static_cast<int>(i);

    // totally isotropic lines: spans of orthogonal point pairs (the form is
    // alternating, so orthogonality of the basis covers the whole span)
    std::set<std::vector<int>> line_set;
    int npts = static_cast<int>(gq.points.size());
    for (int i = 0; i < npts; ++i)
        for (int j = i + 1; j < npts; ++j) {
            if (symplectic_pairing(f, gq.points[i], gq.points[j]) != 0) continue;
            std::vector<int> line{i, j};
            for (int t = 1; t < q; ++t)
                line.push_back(id.at(normalize(f, addv(f, gq.points[i],
                                                       scale(f, t, gq.points[j])))));
            std::sort(line.begin(), line.end());
            line.erase(std::unique(line.begin(), line.end()), line.end());
            line_set.insert(std::move(line));
        }
    gq.lines.assign(line_set.begin(), line_set.end());
    return gq;
}

std::pair<Graph, Graph> levi_and_complement(const SymplecticGQ& gq) {
    int np = static_cast<int>(gq.points.size());
    int nl = static_cast<int>(gq.lines.size());
    Graph levi(np + nl), comp(np + nl);
    std::vector<std::set<int>> on_line(nl);
    for (int l = 0; l < nl; ++l) on_line[l] = std::set<int>(gq.lines[l].begin(), gq.lines[l].end());
    for (int p = 0; p < np; ++p)
        for (int l = 0; l < nl; ++l) {
            if (on_line[l].count(p))
                levi.add_edge(p, np + l);
            else
                comp.add_edge(p, np + l);
        }
    std::vector<int> part_p(np), part_l(nl);
    std::iota(part_p.begin(), part_p.end(), 0);
    std::iota(part_l.begin(), part_l.end(), np);
    levi.set_bipartition(part_p, part_l);
    comp.set_bipartition(part_p, part_l);
    return {std::move(levi), std::move(comp)};
}

} // namespace etg
