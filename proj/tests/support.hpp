#pragma once

// Shared helpers for the test binaries.

#include <string>
#include <vector>

#include "bxu/checks.hpp"
#include "bxu/functors.hpp"
#include "bxu/units.hpp"

namespace testsupport {

using bxu::commutation_holds;
using bxu::mackey_holds;
using bxu::span_elements;

inline std::vector<std::string> corpus_specs() {
    std::vector<std::string> out = {"cyclic:1", "cyclic:2", "pd:1,3,3",
                                    "pd:4,3",   "pd:1,9",   "dihedral:5 x cyclic:3"};
    for (int n = 3; n <= 15; ++n) out.push_back("dihedral:" + std::to_string(n));
    return out;
}

} // namespace testsupport
