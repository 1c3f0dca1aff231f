#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bxu/burnside.hpp"
#include "bxu/lattice.hpp"

namespace bxu {

// Element of B^x(G) as an F2 vector over subgroup classes: bit 1 at class H
// means the ghost value there is -1. The group law is xor.
struct Unit {
    LatticePtr lat;
    F2Vec bits;

    bool operator==(const Unit& o) const { return bits == o.bits; }
};

Unit identity_unit(const LatticePtr& lat);
Unit minus_one_unit(const LatticePtr& lat);
Unit unit_mul(const Unit& a, const Unit& b);

// Sign vector (-1)^bits as a ghost vector.
GhostVector sign_vector(const F2Vec& bits);

// Membership of a sign vector in B(G).
bool is_unit_member(const MarkMatrix& marks, const F2Vec& bits);

struct UnitSubspace {
    LatticePtr lat;
    F2Span span;

    int dim() const { return span.dim(); }
    std::vector<Unit> basis() const;
    bool contains(const Unit& u) const { return span.contains(u.bits); }
};

// Brute-force enumeration of B^x(G): all sign vectors over S_G passing the
// ghost membership test. Throws cap_error when |S_G| exceeds enum_cap.
UnitSubspace unit_group(const LatticePtr& lat, int enum_cap = kDefaultEnumCap);

enum class PhiKind { Trivial, C2, Pseudodihedral };

struct PhiElement {
    Unit unit;
    PhiKind kind;
};

// The distinguished unit of a trivial, C2, or pseudodihedral group,
// built from its sign characterization and validated by ghost membership.
PhiElement phi(const LatticePtr& lat);

// Subgroup H of the parent group materialized with its own lattice and the
// class correspondence needed by restriction and tensor induction.
struct EmbeddedSubgroup {
    LatticePtr parent;
    Bitset elems;
    SubgroupView view;
    LatticePtr lattice;
    std::vector<int> parent_class_of_class; // local class -> parent class
};

EmbeddedSubgroup embed_subgroup(const LatticePtr& parent, const Bitset& elems);

// Quotient G/N with its lattice and both class correspondences.
struct QuotientContext {
    LatticePtr parent;
    Bitset normal;
    Quotient quotient;
    LatticePtr lattice;
    std::vector<int> quotient_class_of_parent_class; // class of X -> class of XN/N
    std::vector<int> parent_class_of_quotient_class; // class of Y -> class of preimage
};

QuotientContext make_quotient_context(const LatticePtr& parent, const Bitset& normal);

Unit restrict_unit(const Unit& u, const EmbeddedSubgroup& h);
// Tensor induction: bit at class L is the parity over [L\G/H] of the bits of
// u at the classes of x^-1 L x n H.
Unit tensor_induce(const Unit& u, const EmbeddedSubgroup& h);
Unit inflate_unit(const Unit& u, const QuotientContext& ctx);
Unit deflate_unit(const Unit& u, const QuotientContext& ctx);
Unit iso_transport(const Unit& u, const GroupMap& f, const LatticePtr& target);

// Units with ghost value +1 at every class whose representative contains a
// nontrivial normal subgroup of G.
UnitSubspace faithful_part(const LatticePtr& lat, int enum_cap = kDefaultEnumCap);

// Action of f^G_N on a unit: xor of Inf(Def(u)) through G/M over the terms
// with odd Moebius coefficient.
Unit fn_project(const Unit& u, const FNIdempotent& fn);

// Inflations of phi over all normal subgroups whose quotient is trivial, C2,
// or pseudodihedral; `filter`, when set, may reject quotients. The raw list
// (one unit per admissible normal subgroup) is what conjugation permutes;
// the basis form reduces it to RREF.
std::vector<Unit> inflated_phi_units(
    const LatticePtr& lat,
    const std::function<bool(const QuotientContext&)>& filter = {});
UnitSubspace inflated_phi_basis(
    const LatticePtr& lat,
    const std::function<bool(const QuotientContext&)>& filter = {});

// Orbit sums of `basis` under conjugation by the parent group, tensor-induced
// from the subgroup up to the parent.
UnitSubspace induced_orbit_sums(const EmbeddedSubgroup& n,
                                const std::vector<Unit>& basis);

// Normal subgroups of odd index that contain an abelian subgroup of index at
// most 2, ascending by order. Nonempty exactly when G lies in C'.
std::vector<int> odd_index_normal_candidates(const SubgroupLattice& lat);

// The designated smallest candidate (the intersection of all of them).
int smallest_odd_index_candidate(const SubgroupLattice& lat);

// Basis of B^x(G) per the inflation construction, via the smallest odd-index
// normal subgroup when G itself has no abelian subgroup of index <= 2.
// Throws domain_error when G is outside C'.
UnitSubspace standard_basis(const LatticePtr& lat);

// eps([G/K]) = Ten^G_K(-1): bit at L is the parity of |L\G/K_rep|.
Unit ten_minus_one(const LatticePtr& lat, int class_idx);
Unit exponential(const LatticePtr& lat, const BurnsideElement& b);
UnitSubspace exponential_image(const LatticePtr& lat);

} // namespace bxu
