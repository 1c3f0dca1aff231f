#pragma once

#include <vector>

#include "bxu/lattice.hpp"

namespace bxu {

struct SectionPair {
    Bitset top;
    Bitset bottom;
};

// Conjugacy-class transversal of sections (T,S) of G with T/S isomorphic
// to the pattern group.
std::vector<SectionPair> section_basis(const SubgroupLattice& lat,
                                       const GroupPtr& pattern);

// The linkedness relation between sections (B,A) and (T,S):
//   B n S = A n T,   (B n T)A = B,   (B n T)S = T,
// evaluated literally on element sets.
bool linked(const FiniteGroup& g, const SectionPair& ba, const SectionPair& ts);

struct GramMatrixF2 {
    std::vector<SectionPair> basis;
    std::vector<F2Vec> rows;

    int rank() const;
};

// Gram matrix of the symmetric bilinear form: entry (i,j) is the parity of
// the number of reps h in B_i\G/T_j with (B_i,A_i) linked to (hT_j h^-1, hS_j h^-1).
GramMatrixF2 gram_matrix(const SubgroupLattice& lat, const GroupPtr& pattern);

// F2 rank of the form; equals dim S_{pattern,F2}(G).
int gram_rank(const SubgroupLattice& lat, const GroupPtr& pattern);

} // namespace bxu
