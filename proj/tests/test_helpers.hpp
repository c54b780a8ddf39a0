#pragma once

#include "etg/perm.hpp"
#include "etg/permgroup.hpp"

#include <cstdlib>
#include <string>
#include <vector>

namespace etg::testhelp {

inline bool long_tests_enabled() {
    const char* v = std::getenv("ETG_LONG");
    return v != nullptr && std::string(v) != "0";
}

inline Permutation cyc(int degree, const std::string& text) {
    return Permutation::parse_cycles(degree, text);
}

inline PermGroup grp(int degree, std::initializer_list<const char*> cycles) {
    std::vector<Permutation> gens;
    for (const char* c : cycles) gens.push_back(cyc(degree, c));
    return PermGroup(degree, std::move(gens));
}

} // namespace etg::testhelp
