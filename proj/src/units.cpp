#include "bxu/units.hpp"

#include <algorithm>
#include <map>

#include "bxu/errors.hpp"

namespace bxu {

Unit identity_unit(const LatticePtr& lat) {
    return Unit{lat, F2Vec(lat->num_classes())};
}

Unit minus_one_unit(const LatticePtr& lat) {
    Unit u{lat, F2Vec(lat->num_classes())};
    for (int c = 0; c < lat->num_classes(); ++c) u.bits.set(c);
    return u;
}

Unit unit_mul(const Unit& a, const Unit& b) {
    Unit out = a;
    out.bits ^= b.bits;
    return out;
}

GhostVector sign_vector(const F2Vec& bits) {
    GhostVector v;
    v.values.assign(bits.size(), 1);
    for (int i = 0; i < bits.size(); ++i)
        if (bits.test(i)) v.values[i] = -1;
    return v;
}

bool is_unit_member(const MarkMatrix& marks, const F2Vec& bits) {
    int k = marks.size();
    std::vector<Int> c(k);
    for (int row = k - 1; row >= 0; --row) {
        Int rem = bits.test(row) ? -1 : 1;
        for (int col = row + 1; col < k; ++col)
            if (c[col] != 0) rem -= marks.at(row, col) * c[col];
        const Int& d = marks.at(row, row);
        if (rem % d != 0) return false;
        c[row] = rem / d;
    }
    return true;
}

std::vector<Unit> UnitSubspace::basis() const {
    std::vector<Unit> out;
    out.reserve(span.dim());
    for (const auto& r : span.rows()) out.push_back(Unit{lat, r});
    return out;
}

UnitSubspace unit_group(const LatticePtr& lat, int enum_cap) {
    int k = lat->num_classes();
    if (k > enum_cap || k >= 63)
        throw cap_error("unit enumeration over " + std::to_string(k) +
                        " classes exceeds cap " + std::to_string(enum_cap) +
                        "; use the standard basis construction instead");
    MarkMatrix marks = table_of_marks(*lat);
    UnitSubspace out{lat, F2Span(k)};
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
        F2Vec bits(k);
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1) bits.set(i);
        if (is_unit_member(marks, bits)) out.span.add(bits);
    }
    return out;
}

PhiElement phi(const LatticePtr& lat) {
    const FiniteGroup& g = *lat->group;
    int k = lat->num_classes();
    F2Vec bits(k);
    PhiKind kind;
    if (g.order == 1) {
        bits.set(0);
        kind = PhiKind::Trivial;
    } else if (g.order == 2) {
        bits.set(1);
        kind = PhiKind::C2;
    } else {
        auto pd = recognize_pseudodihedral(g);
        if (!pd)
            throw domain_error("phi: group is not trivial, C2, or pseudodihedral");
        kind = PhiKind::Pseudodihedral;
        Bitset z = center_of(g);
        for (int c = 0; c < k; ++c) {
            const Subgroup& rep = lat->rep(c);
            if (rep.order == 2 && !rep.elems.subset_of(z)) bits.set(c);
        }
    }
    MarkMatrix marks = table_of_marks(*lat);
    if (!is_unit_member(marks, bits))
        throw check_error("phi: sign characterization failed ghost membership");
    return PhiElement{Unit{lat, bits}, kind};
}

EmbeddedSubgroup embed_subgroup(const LatticePtr& parent, const Bitset& elems) {
    EmbeddedSubgroup e;
    e.parent = parent;
    e.elems = elems;
    e.view = subgroup_as_group(*parent->group, elems);
    e.lattice = subgroup_lattice(e.view.group);
    e.parent_class_of_class.resize(e.lattice->num_classes());
    for (int c = 0; c < e.lattice->num_classes(); ++c) {
        Bitset up = e.view.to_parent_set(e.lattice->rep(c).elems);
        e.parent_class_of_class[c] = parent->class_of_set(up);
    }
    return e;
}

QuotientContext make_quotient_context(const LatticePtr& parent, const Bitset& normal) {
    QuotientContext ctx;
    ctx.parent = parent;
    ctx.normal = normal;
    ctx.quotient = quotient_group(parent->group, normal);
    ctx.lattice = subgroup_lattice(ctx.quotient.group);
    ctx.quotient_class_of_parent_class.resize(parent->num_classes());
    for (int c = 0; c < parent->num_classes(); ++c) {
        Bitset img = ctx.quotient.projection.image_of(parent->rep(c).elems);
        ctx.quotient_class_of_parent_class[c] = ctx.lattice->class_of_set(img);
    }
    ctx.parent_class_of_quotient_class.resize(ctx.lattice->num_classes());
    for (int c = 0; c < ctx.lattice->num_classes(); ++c) {
        Bitset pre = ctx.quotient.projection.preimage_of(ctx.lattice->rep(c).elems);
        ctx.parent_class_of_quotient_class[c] = parent->class_of_set(pre);
    }
    return ctx;
}

Unit restrict_unit(const Unit& u, const EmbeddedSubgroup& h) {
    F2Vec bits(h.lattice->num_classes());
    for (int c = 0; c < bits.size(); ++c)
        if (u.bits.test(h.parent_class_of_class[c])) bits.set(c);
    return Unit{h.lattice, bits};
}

Unit tensor_induce(const Unit& u, const EmbeddedSubgroup& h) {
    const FiniteGroup& g = *h.parent->group;
    F2Vec bits(h.parent->num_classes());
    for (int c = 0; c < bits.size(); ++c) {
        const Bitset& l = h.parent->rep(c).elems;
        int parity = 0;
        for (int x : double_coset_reps(g, l, h.elems)) {
            Bitset s = conjugate_set(g, g.inv[x], l) & h.elems;
            int local = h.lattice->class_of_set(h.view.from_parent_set(s));
            if (u.bits.test(local)) parity ^= 1;
        }
        if (parity) bits.set(c);
    }
    return Unit{h.parent, bits};
}

Unit inflate_unit(const Unit& u, const QuotientContext& ctx) {
    F2Vec bits(ctx.parent->num_classes());
    for (int c = 0; c < bits.size(); ++c)
        if (u.bits.test(ctx.quotient_class_of_parent_class[c])) bits.set(c);
    return Unit{ctx.parent, bits};
}

Unit deflate_unit(const Unit& u, const QuotientContext& ctx) {
    F2Vec bits(ctx.lattice->num_classes());
    for (int c = 0; c < bits.size(); ++c)
        if (u.bits.test(ctx.parent_class_of_quotient_class[c])) bits.set(c);
    return Unit{ctx.lattice, bits};
}

Unit iso_transport(const Unit& u, const GroupMap& f, const LatticePtr& target) {
    if (!f.is_bijective() || !f.is_homomorphism())
        throw domain_error("iso_transport: map is not an isomorphism");
    F2Vec bits(target->num_classes());
    for (int c = 0; c < u.lat->num_classes(); ++c) {
        if (!u.bits.test(c)) continue;
        Bitset img = f.image_of(u.lat->rep(c).elems);
        bits.set(target->class_of_set(img));
    }
    return Unit{target, bits};
}

namespace {

std::vector<char> forbidden_classes(const SubgroupLattice& lat) {
    std::vector<char> forb(lat.num_classes(), 0);
    std::vector<int> normals = lat.normal_subgroup_indices();
    for (int c = 0; c < lat.num_classes(); ++c) {
        const Bitset& rep = lat.rep(c).elems;
        for (int m : normals) {
            if (lat.subgroups[m].order == 1) continue;
            if (lat.subgroups[m].elems.subset_of(rep)) {
                forb[c] = 1;
                break;
            }
        }
    }
    return forb;
}

// Subspace of `span` with zero at every flagged coordinate.
F2Span zero_coordinate_subspace(const F2Span& span, const std::vector<char>& flags) {
    std::vector<F2Vec> rows = span.rows();
    for (int f = 0; f < span.width(); ++f) {
        if (!flags[f]) continue;
        int pivot = -1;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].test(f)) {
                pivot = int(i);
                break;
            }
        if (pivot < 0) continue;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (int(i) != pivot && rows[i].test(f)) rows[i] ^= rows[pivot];
        rows.erase(rows.begin() + pivot);
    }
    F2Span out(span.width());
    for (auto& r : rows) out.add(std::move(r));
    return out;
}

} // namespace

UnitSubspace faithful_part(const LatticePtr& lat, int enum_cap) {
    UnitSubspace all = unit_group(lat, enum_cap);
    return UnitSubspace{lat, zero_coordinate_subspace(all.span, forbidden_classes(*lat))};
}

Unit fn_project(const Unit& u, const FNIdempotent& fn) {
    Unit acc = identity_unit(u.lat);
    for (const auto& [m, coeff] : fn.terms) {
        if (coeff % 2 == 0) continue;
        QuotientContext ctx = make_quotient_context(u.lat, u.lat->subgroups[m].elems);
        acc = unit_mul(acc, inflate_unit(deflate_unit(u, ctx), ctx));
    }
    return acc;
}

namespace {

bool quotient_kind_admissible(const FiniteGroup& q) {
    return q.order <= 2 || recognize_pseudodihedral(q).has_value();
}

bool subgroup_is_abelian(const FiniteGroup& g, const Bitset& s) {
    std::vector<int> e = s.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (g.op(e[i], e[j]) != g.op(e[j], e[i])) return false;
    return true;
}

bool has_abelian_index2(const SubgroupLattice& lat, int n_idx) {
    const Subgroup& n = lat.subgroups[n_idx];
    for (int s = 0; s < lat.num_subgroups(); ++s) {
        const Subgroup& sub = lat.subgroups[s];
        if (sub.order * 2 < n.order) continue;
        if (!sub.elems.subset_of(n.elems)) continue;
        if (subgroup_is_abelian(*lat.group, sub.elems)) return true;
    }
    return false;
}

} // namespace

std::vector<int> odd_index_normal_candidates(const SubgroupLattice& lat) {
    std::vector<int> out;
    for (int n : lat.normal_subgroup_indices()) {
        int index = lat.group->order / lat.subgroups[n].order;
        if (index % 2 == 0) continue;
        if (has_abelian_index2(lat, n)) out.push_back(n);
    }
    return out;
}

int smallest_odd_index_candidate(const SubgroupLattice& lat) {
    std::vector<int> cands = odd_index_normal_candidates(lat);
    if (cands.empty())
        throw domain_error("group is outside C': no odd-index normal subgroup "
                           "with an abelian subgroup of index at most 2");
    Bitset meet = lat.subgroups[cands[0]].elems;
    for (std::size_t i = 1; i < cands.size(); ++i)
        meet = meet & lat.subgroups[cands[i]].elems;
    int idx = lat.find_subgroup(meet);
    for (int c : cands)
        if (c == idx) return idx;
    return cands.front(); // candidates are order-sorted
}

std::vector<Unit> inflated_phi_units(
    const LatticePtr& lat,
    const std::function<bool(const QuotientContext&)>& filter) {
    std::vector<Unit> out;
    for (int n : lat->normal_subgroup_indices()) {
        QuotientContext ctx = make_quotient_context(lat, lat->subgroups[n].elems);
        if (!quotient_kind_admissible(*ctx.quotient.group)) continue;
        if (filter && !filter(ctx)) continue;
        out.push_back(inflate_unit(phi(ctx.lattice).unit, ctx));
    }
    return out;
}

UnitSubspace inflated_phi_basis(
    const LatticePtr& lat,
    const std::function<bool(const QuotientContext&)>& filter) {
    UnitSubspace out{lat, F2Span(lat->num_classes())};
    for (const Unit& u : inflated_phi_units(lat, filter)) out.span.add(u.bits);
    return out;
}

UnitSubspace induced_orbit_sums(const EmbeddedSubgroup& n,
                                const std::vector<Unit>& basis) {
    const FiniteGroup& g = *n.parent->group;

    // Transversal of G / N.
    std::vector<int> transversal;
    std::vector<char> covered(g.order, 0);
    for (int x = 0; x < g.order; ++x) {
        if (covered[x]) continue;
        transversal.push_back(x);
        n.elems.for_each([&](int m) { covered[g.op(x, m)] = 1; });
    }

    // Conjugation by each coset representative as an automorphism of N.
    std::vector<GroupMap> action;
    for (int t : transversal) {
        GroupMap f{n.view.group, n.view.group,
                   std::vector<int>(n.view.group->order)};
        for (int a = 0; a < n.view.group->order; ++a)
            f.image[a] = n.view.from_parent[g.conj(t, n.view.to_parent[a])];
        action.push_back(std::move(f));
    }

    std::map<std::string, int> index_of;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index_of[basis[i].bits.to_string()] = int(i);

    UnitSubspace out{n.parent, F2Span(n.parent->num_classes())};
    std::vector<char> done(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (done[i]) continue;
        F2Vec sum(n.lattice->num_classes());
        for (const GroupMap& f : action) {
            Unit moved = iso_transport(basis[i], f, n.lattice);
            auto it = index_of.find(moved.bits.to_string());
            if (it == index_of.end())
                throw check_error("conjugation action does not permute the basis");
            if (!done[it->second]) {
                done[it->second] = 1;
                sum ^= moved.bits;
            }
        }
        out.span.add(tensor_induce(Unit{n.lattice, sum}, n).bits);
    }
    return out;
}

UnitSubspace standard_basis(const LatticePtr& lat) {
    Bitset whole(lat->group->order);
    for (int i = 0; i < lat->group->order; ++i) whole.set(i);
    int full_idx = lat->find_subgroup(whole);

    std::vector<int> cands = odd_index_normal_candidates(*lat);
    if (cands.empty())
        throw domain_error("group is outside C': no odd-index normal subgroup "
                           "with an abelian subgroup of index at most 2");
    for (int c : cands)
        if (c == full_idx) return inflated_phi_basis(lat);

    int n_idx = smallest_odd_index_candidate(*lat);
    EmbeddedSubgroup emb = embed_subgroup(lat, lat->subgroups[n_idx].elems);
    return induced_orbit_sums(emb, inflated_phi_units(emb.lattice));
}

Unit ten_minus_one(const LatticePtr& lat, int class_idx) {
    const FiniteGroup& g = *lat->group;
    const Bitset& h = lat->rep(class_idx).elems;
    F2Vec bits(lat->num_classes());
    for (int c = 0; c < bits.size(); ++c) {
        const Bitset& l = lat->rep(c).elems;
        if (double_coset_reps(g, l, h).size() % 2) bits.set(c);
    }
    return Unit{lat, bits};
}

Unit exponential(const LatticePtr& lat, const BurnsideElement& b) {
    Unit acc = identity_unit(lat);
    for (int c = 0; c < lat->num_classes(); ++c)
        if (b.coeffs[c] % 2 != 0) acc = unit_mul(acc, ten_minus_one(lat, c));
    return acc;
}

UnitSubspace exponential_image(const LatticePtr& lat) {
    UnitSubspace out{lat, F2Span(lat->num_classes())};
    for (int c = 0; c < lat->num_classes(); ++c)
        out.span.add(ten_minus_one(lat, c).bits);
    return out;
}

} // namespace bxu
