#pragma once

#include <string>
#include <vector>

#include "bxu/units.hpp"

namespace bxu {

// Iso-class representative of a residual group: the trivial group (empty
// factor list) or a pseudodihedral group keyed by the invariant factors of
// its inverted subgroup N.
struct ResidualMember {
    std::vector<int> pd; // prime-power invariants of N, descending; empty = trivial

    long order() const;
    std::string label() const;
    GroupPtr realize() const;

    bool operator==(const ResidualMember& o) const { return pd == o.pd; }
    bool operator<(const ResidualMember& o) const;
};

struct ResidualSet {
    std::vector<ResidualMember> members; // sorted, unique

    bool contains(const ResidualMember& m) const;
    void insert(const ResidualMember& m);
    ResidualSet without(const ResidualMember& m) const;
};

enum class ResidualReason {
    Trivial,
    D2pOneMod4,
    PdCompositeOk,
    ExcludedD8,
    N2IsTwo,
    HasQSquared,
    PThreeMod4,
    NotPdOrTrivial,
};

const char* reason_tag(ResidualReason r);

struct ClassifierVerdict {
    bool residual;
    ResidualReason reason;
};

// Closed-form residual test following the complete case list.
ClassifierVerdict classify_residual(const FiniteGroup& g);
// Canonical key of a residual group; throws when not residual.
ResidualMember residual_key(const FiniteGroup& g);

// Span of Ten(Inf(B^x(A/B))) over proper sections: everything reachable from
// strictly smaller groups.
UnitSubspace boundary_subspace(const LatticePtr& lat, int enum_cap = kDefaultEnumCap);

// Brute-force residual test: boundary_subspace proper in unit_group.
bool is_residual(const LatticePtr& lat, int enum_cap = kDefaultEnumCap);

// All residual subquotients of G up to isomorphism. Requires G in C'.
ResidualSet residual_subquotients(const LatticePtr& lat);

// Union of residual_subquotients over the given groups.
ResidualSet residual_closure(const std::vector<GroupPtr>& groups);

enum class SubfunctorMethod { Basis, Generate };

// Value F_I(H) of the subfunctor generated by the phi elements of I.
UnitSubspace subfunctor_value(const ResidualSet& i, const LatticePtr& h,
                              SubfunctorMethod method);

// dim S_{G,F2}(H) as the dimension jump between closure{G} and closure{G}-{G}.
int simple_dim(const GroupPtr& residual_group, const LatticePtr& h);

// Residual subquotients with multiplicity one, ascending by order.
std::vector<std::pair<ResidualMember, int>> composition_factors_over(const LatticePtr& lat);

// Divisor-arithmetic closed forms for dihedral groups.
long euler_phi(long n);
long s_formula(long k);                     // dim S_{1,F2}(D_{2k})
bool dihedral_residual(long n);             // is D_{2n} residual (n >= 3)
long dihedral_simple_dim(long n, long k);   // dim S_{D_{2n},F2}(D_{2k})

bool in_c_prime(const SubgroupLattice& lat);
bool expo_surjective(const LatticePtr& lat, int enum_cap = kDefaultEnumCap);
bool expo_surjective_dihedral(long n); // phi(n) = 2 mod 4

} // namespace bxu
