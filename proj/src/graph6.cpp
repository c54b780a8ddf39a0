#include "etg/graph6.hpp"

#include <sstream>
#include <stdexcept>

namespace etg {

std::string graph6_encode(const Graph& g) {
    int n = g.vertex_count();
    if (n > 258047) throw std::invalid_argument("graph6: order too large");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int bit = 0;
    int acc = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bit = 0;
                acc = 0;
            }
        }
    if (bit > 0) out.push_back(static_cast<char>((acc << (6 - bit)) + 63));
    return out;
}

Graph graph6_decode(const std::string& text) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (text.size() < pos + k) throw std::invalid_argument("graph6: truncated input");
    };
    need(1);
    int n;
    if (static_cast<unsigned char>(text[0]) == 126) {
        need(4);
        for (int i = 1; i <= 3; ++i)
            if (text[i] < 63 || text[i] > 126) throw std::invalid_argument("graph6: bad order byte");
        n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
        pos = 4;
    } else {
        if (text[0] < 63 || text[0] > 125) throw std::invalid_argument("graph6: bad order byte");
        n = text[0] - 63;
        pos = 1;
    }
    Graph g(n);
    long needed_bits = static_cast<long>(n) * (n - 1) / 2;
    long have_bits = static_cast<long>(text.size() - pos) * 6;
    if (have_bits < needed_bits) throw std::invalid_argument("graph6: truncated adjacency data");
    int bit = 0;
    int acc = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (bit == 0) {
                need(1);
                char c = text[pos++];
                if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad data byte");
                acc = c - 63;
                bit = 6;
            }
            --bit;
            if ((acc >> bit) & 1) g.add_edge(u, v);
        }
    if (pos != text.size()) {
        // trailing padding byte(s) are not part of the format
        throw std::invalid_argument("graph6: trailing bytes after adjacency data");
    }
    return g;
}

std::string edge_list_text(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph edge_list_parse(const std::string& text) {
    std::istringstream in(text);
    int n;
    if (!(in >> n)) throw std::invalid_argument("edge list: missing order line");
    Graph g(n);
    int u, v;
    while (in >> u >> v) g.add_edge(u, v);
    return g;
}

} // namespace etg
