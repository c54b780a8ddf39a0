#pragma once

#include "etg/census.hpp"

#include <map>

namespace etg {

// Reference per-order counts of connected edge-transitive graphs for orders
// 1..47 (Tot, Reg, Bpte, VT, AT, Wthy), from the published census summary.
const std::map<int, TableRow>& reference_table();

inline constexpr int kReferenceTableMaxOrder = 47;

} // namespace etg
