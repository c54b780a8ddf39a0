#include "etg/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace etg {

Permutation::Permutation(int degree) : img_(degree) {
    if (degree < 0) throw std::invalid_argument("permutation degree must be >= 0");
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int x : img_) {
        if (x < 0 || x >= degree() || seen[x])
            throw std::invalid_argument("image array is not a bijection on {0..n-1}");
        seen[x] = 1;
    }
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
    Permutation p;
    p.img_ = std::move(inv);
    return p;
}

int Permutation::element_order() const {
    int ord = 1;
    std::vector<char> done(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (done[i]) continue;
        int len = 0, j = i;
        do {
            done[j] = 1;
            j = img_[j];
            ++len;
        } while (j != i);
        ord = std::lcm(ord, len);
    }
    return ord;
}

bool Permutation::is_even() const {
    int transpositions = 0;
    std::vector<char> done(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (done[i]) continue;
        int len = 0, j = i;
        do {
            done[j] = 1;
            j = img_[j];
            ++len;
        } while (j != i);
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

int Permutation::first_moved() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return i;
    return -1;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> type;
    std::vector<char> done(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (done[i]) continue;
        int len = 0, j = i;
        do {
            done[j] = 1;
            j = img_[j];
            ++len;
        } while (j != i);
        if (len > 1) type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

std::string Permutation::to_cycles() const {
    std::ostringstream out;
    std::vector<char> done(img_.size(), 0);
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
        if (done[i] || img_[i] == i) {
            done[i] = 1;
            continue;
        }
        any = true;
        out << '(';
        int j = i;
        bool first = true;
        do {
            if (!first) out << ',';
            out << (j + 1);
            first = false;
            done[j] = 1;
            j = img_[j];
        } while (j != i);
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

Permutation Permutation::parse_cycles(int degree, const std::string& text) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle text: " + text);
        ++pos;
        std::vector<int> cycle;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            size_t end;
            int v = std::stoi(text.substr(pos), &end);
            pos += end;
            if (v < 1 || v > degree)
                throw std::invalid_argument("cycle entry out of range 1.." + std::to_string(degree));
            cycle.push_back(v - 1);
            skip_ws();
            if (pos < text.size() && (text[pos] == ',' || text[pos] == ' ')) ++pos;
            skip_ws();
        }
        if (pos >= text.size()) throw std::invalid_argument("unterminated cycle in: " + text);
        ++pos; // ')'
        for (size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
            img[from] = to;
        }
        skip_ws();
    }
    return Permutation(std::move(img));
}

uint64_t Permutation::packed_key() const {
    if (degree() > 16) throw std::invalid_argument("packed_key requires degree <= 16");
    uint64_t k = 0;
    for (int i = 0; i < degree(); ++i) k |= static_cast<uint64_t>(img_[i]) << (4 * i);
    return k;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> img(p.degree());
    for (int i = 0; i < p.degree(); ++i) img[i] = q(p(i));
    return Permutation(std::move(img));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
    if (p.degree() != g.degree())
        throw std::invalid_argument("conjugate: degree mismatch");
    std::vector<int> img(p.degree());
    for (int i = 0; i < p.degree(); ++i) img[g(i)] = g(p(i));
    return Permutation(std::move(img));
}

Permutation power(const Permutation& p, int e) {
    Permutation r = Permutation::identity(p.degree());
    Permutation base = p;
    if (e < 0) {
        base = p.inverse();
        e = -e;
    }
    while (e > 0) {
        if (e & 1) r = compose(r, base);
        base = compose(base, base);
        e >>= 1;
    }
    return r;
}

} // namespace etg
