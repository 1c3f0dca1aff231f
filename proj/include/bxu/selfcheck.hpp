#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bxu/errors.hpp"

namespace bxu {

// Groups every invariant is exercised on: dihedral:3..15 plus the trivial
// group, C2, pd:1,3,3, pd:4,3, pd:1,9, and dihedral:5 x cyclic:3.
std::vector<std::string> selfcheck_corpus();

// Runs the module invariants on the built-in corpus, reporting one line per
// check. Returns the number of failed checks.
int run_selfcheck(const std::function<void(const std::string&, bool)>& report,
                  int enum_cap = kDefaultEnumCap);

} // namespace bxu
