#pragma once

#include "etg/graph.hpp"

#include <string>

namespace etg {

// graph6: 6-bit ASCII encoding of a labeled simple graph. Order is one byte
// n+63 for n <= 62, else 126 followed by three bytes (n <= 258047); then the
// upper triangle in column order, 6 bits per byte, each + 63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& text);

// secondary human-readable form: "u v" per line, 0-indexed
std::string edge_list_text(const Graph& g);
Graph edge_list_parse(const std::string& text);

} // namespace etg
