#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bxu/bits.hpp"

namespace bxu {

// Finite group given by an explicit multiplication table on element
// indices 0..order-1, with 0 the identity. Immutable after construction.
struct FiniteGroup {
    int order = 0;
    std::vector<int> mul;        // row-major order x order
    std::vector<int> inv;        // two-sided inverses
    std::vector<int> elem_order; // order of each element
    std::string label;

    int op(int a, int b) const { return mul[a * order + b]; }
    int conj(int g, int x) const { return op(op(g, x), inv[g]); } // g x g^-1
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Builds a group from a multiplication table. Checks that 0 is a two-sided
// identity, that rows and columns are permutations, and that inverses exist.
// Associativity is only checked by verify_group_axioms (cubic cost).
GroupPtr group_from_table(std::vector<int> mul, std::string label);

// Exhaustive associativity / identity / inverse check. Throws on failure.
void verify_group_axioms(const FiniteGroup& g);

GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
// Dihedral group of order 2n (n >= 1): C2 acting on C_n by inversion.
GroupPtr dihedral_group(int n);
GroupPtr abelian_group(const std::vector<int>& factors);
// C2 semidirect (C_{n1} x ... x C_{nk}) with the inversion action.
// Rejects specs whose N has |N| <= 2 or a non-cyclic 2-part.
GroupPtr pseudodihedral_group(const std::vector<int>& factors);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

// Grammar: `cyclic:<n>` | `dihedral:<n>` | `abelian:<n1,...>` | `pd:<n1,...>`
// | `<spec> x <spec>` (left-assoc, whitespace around `x` required).
GroupPtr construct_group(const std::string& spec, int order_cap = 512);

bool is_abelian(const FiniteGroup& g);
Bitset center_of(const FiniteGroup& g);

// Invariant factors of an abelian group as prime powers, descending.
// Throws domain_error on nonabelian input.
std::vector<int> abelian_invariants(const FiniteGroup& g);

// Homomorphism described by its value on every source element.
struct GroupMap {
    GroupPtr source;
    GroupPtr target;
    std::vector<int> image;

    int operator()(int x) const { return image[x]; }
    bool is_homomorphism() const;
    bool is_bijective() const;
    Bitset image_of(const Bitset& s) const;
    Bitset preimage_of(const Bitset& s) const;
};

GroupMap identity_map(const GroupPtr& g);
GroupMap compose(const GroupMap& outer, const GroupMap& inner);

// Isomorphism search: invariant screening, then backtracking over images of
// a generating set. Returns a witness map or nullopt.
std::optional<GroupMap> is_isomorphic(const GroupPtr& g, const GroupPtr& h,
                                      int order_cap = 512);

// All automorphisms of g (backtracking; intended for small groups).
std::vector<GroupMap> all_automorphisms(const GroupPtr& g);

struct Quotient {
    GroupPtr group;
    GroupMap projection;
};

// Quotient by a normal subgroup; cosets are indexed by their least element,
// so the identity coset gets index 0. Throws domain_error if not normal.
Quotient quotient_group(const GroupPtr& g, const Bitset& normal_subgroup);

bool is_subgroup(const FiniteGroup& g, const Bitset& s);
bool is_normal_in(const FiniteGroup& g, const Bitset& sub, const Bitset& ambient);
Bitset closure_of(const FiniteGroup& g, Bitset seed);
Bitset conjugate_set(const FiniteGroup& g, int by, const Bitset& s); // by S by^-1

// Witness that g = <x> semidirect N with x of order 2 acting on the abelian
// subgroup N (index 2, |N| > 2, cyclic 2-part) by inversion.
struct PdWitness {
    int x;
    Bitset n;
};
std::optional<PdWitness> recognize_pseudodihedral(const FiniteGroup& g);

// Short structural name: "1", "C6", "C2xC2", "D10", "pd(3,3)", "G24".
std::string structure_name(const FiniteGroup& g);

} // namespace bxu
