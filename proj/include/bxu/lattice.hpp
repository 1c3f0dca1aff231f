#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bxu/errors.hpp"
#include "bxu/group.hpp"

namespace bxu {

struct Subgroup {
    Bitset elems;
    int order = 0;
};

// Complete subgroup lattice with conjugacy classes of subgroups.
// Subgroups are sorted by (order, canonical set order); classes by
// (order, element-order multiset, least member), which fixes the
// coordinate order of every mark matrix and unit vector downstream.
struct SubgroupLattice {
    GroupPtr group;
    std::vector<Subgroup> subgroups;
    std::vector<int> class_of_subgroup;          // subgroup -> class
    std::vector<std::vector<int>> class_members; // class -> subgroup indices
    std::vector<int> class_rep;                  // class -> least subgroup index
    std::vector<char> normal_flag;               // per subgroup
    std::vector<int> class_normalizer;           // class -> subgroup index of N_G(rep)
    std::vector<std::vector<char>> leq_conj;     // [i][j]: class i subconjugate to j

    int num_subgroups() const { return int(subgroups.size()); }
    int num_classes() const { return int(class_rep.size()); }
    const Subgroup& rep(int cls) const { return subgroups[class_rep[cls]]; }
    int full_class() const { return num_classes() - 1; }
    int trivial_class() const { return 0; }

    // Index of a subgroup given by its element set; -1 when absent.
    int find_subgroup(const Bitset& elems) const;
    int class_of_set(const Bitset& elems) const;
    std::vector<int> normal_subgroup_indices() const;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

LatticePtr subgroup_lattice(const GroupPtr& g, int order_cap = kDefaultOrderCap);

// Display names for subgroup classes, disambiguated with ' marks.
std::vector<std::string> class_labels(const SubgroupLattice& lat);

struct Section {
    int top;    // subgroup index
    int bottom; // subgroup index, normal in top
};

std::vector<Section> all_sections(const SubgroupLattice& lat, bool proper_only);
// One representative per conjugacy class of sections.
std::vector<Section> section_class_reps(const SubgroupLattice& lat);

// One representative per (L,H)-double coset, in order of least element.
std::vector<int> double_coset_reps(const FiniteGroup& g, const Bitset& l,
                                   const Bitset& h);

// A subgroup materialized as a group in its own right.
struct SubgroupView {
    GroupPtr group;
    std::vector<int> to_parent;
    std::vector<int> from_parent; // -1 outside the subgroup
    Bitset to_parent_set(const Bitset& local) const;
    Bitset from_parent_set(const Bitset& parent) const;
};

SubgroupView subgroup_as_group(const FiniteGroup& parent, const Bitset& elems);

} // namespace bxu
