#pragma once

// Checkers for the elementary-map relations on unit groups. Used by the
// self-check verb and by the test suites.

#include <vector>

#include "bxu/units.hpp"

namespace bxu {

// Every element of the subspace (all F2 combinations of the basis).
std::vector<Unit> span_elements(const UnitSubspace& s);

// Res^G_H Ten^G_K u == product over [H\G/K] of Ten Iso(conj_x) Res along the
// double-coset subgroups.
bool mackey_holds(const LatticePtr& lat, const Bitset& h, const Bitset& k,
                  const EmbeddedSubgroup& emb_h, const EmbeddedSubgroup& emb_k,
                  const Unit& u);

// Ten^G_H Inf^H_{H/N} u == Inf^G_{G/N} Ten^{G/N}_{HN/N} u for N normal in G,
// N <= H; u lives on H/N.
bool commutation_holds(const LatticePtr& lat, const Bitset& h, const Bitset& n,
                       const Unit& u_on_h_mod_n);

} // namespace bxu
