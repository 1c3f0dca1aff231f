#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bxu/lattice.hpp"

namespace bxu {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Integer combination of transitive sets [G/K], indexed by subgroup classes.
struct BurnsideElement {
    std::vector<Int> coeffs;
};

// Fixed-point counts indexed by subgroup classes.
struct GhostVector {
    std::vector<Int> values;
};

// m[H][K] = |(G/K)^H| on class representatives. Rows index the acting
// class H, columns the transitive set [G/K]; upper triangular in the
// canonical class order with diagonal [N_G(K):K].
class MarkMatrix {
public:
    MarkMatrix() = default;
    MarkMatrix(int k, std::vector<Int> m) : k_(k), m_(std::move(m)) {}
    int size() const { return k_; }
    const Int& at(int row, int col) const { return m_[row * k_ + col]; }

private:
    int k_ = 0;
    std::vector<Int> m_;
};

MarkMatrix table_of_marks(const SubgroupLattice& lat);

GhostVector marks_of(const MarkMatrix& m, const BurnsideElement& b);

// Unique integer preimage under the mark matrix, or nullopt when the vector
// is not in the integer column span. Back-substitution from the largest
// class down with exact divisibility checks.
std::optional<BurnsideElement> ghost_solve(const MarkMatrix& m, const GhostVector& v);

// Rational back-substitution; always solvable since the diagonal is positive.
std::vector<Rat> ghost_solve_rational(const MarkMatrix& m, const std::vector<Rat>& v);

std::vector<Rat> marks_of_rational(const MarkMatrix& m, const std::vector<Rat>& coeffs);

// Product in B(G): transitive sets multiply by double-coset orbit
// decomposition, extended bilinearly.
BurnsideElement multiply(const SubgroupLattice& lat, const BurnsideElement& a,
                         const BurnsideElement& b);

enum class PosetKind { Subgroups, NormalSubgroups };

// Moebius values over the chosen poset. Nodes are subgroup indices of the
// lattice; for the normal poset only normal subgroups are nodes.
class MobiusTable {
public:
    MobiusTable(PosetKind kind, std::vector<int> nodes, int num_subgroups);
    PosetKind kind() const { return kind_; }
    const std::vector<int>& nodes() const { return nodes_; }
    // mu(lower, upper) for subgroup indices; zero when not comparable.
    const Int& value(int lower_subgroup, int upper_subgroup) const;
    Int& slot(int lower_subgroup, int upper_subgroup);

private:
    PosetKind kind_;
    std::vector<int> nodes_;
    std::vector<int> node_of_subgroup_;
    std::vector<Int> values_;
    static const Int zero_;
};

MobiusTable mobius(const SubgroupLattice& lat, PosetKind kind);

// Gluck's primitive idempotent e^G_H of QB(G) in transitive-set coordinates.
struct RationalIdempotent {
    std::vector<Rat> coeffs;
};

RationalIdempotent gluck_idempotent(const SubgroupLattice& lat,
                                    const MobiusTable& subgroup_mobius,
                                    int class_idx);

// f^G_N as a formal sum of Inf/Def composites through G/M, N <= M normal.
struct FNIdempotent {
    int n_subgroup; // subgroup index of N
    std::vector<std::pair<int, Int>> terms; // (subgroup index of M, coefficient)
};

FNIdempotent fn_idempotent(const SubgroupLattice& lat,
                           const MobiusTable& normal_mobius, int n_subgroup);

} // namespace bxu
