#include "bxu/checks.hpp"

namespace bxu {

std::vector<Unit> span_elements(const UnitSubspace& s) {
    std::vector<Unit> out{identity_unit(s.lat)};
    for (const Unit& b : s.basis()) {
        std::size_t sz = out.size();
        for (std::size_t i = 0; i < sz; ++i) out.push_back(unit_mul(out[i], b));
    }
    return out;
}

bool mackey_holds(const LatticePtr& lat, const Bitset& h, const Bitset& k,
                  const EmbeddedSubgroup& emb_h, const EmbeddedSubgroup& emb_k,
                  const Unit& u) {
    const FiniteGroup& g = *lat->group;
    Unit lhs = restrict_unit(tensor_induce(u, emb_k), emb_h);
    Unit rhs = identity_unit(emb_h.lattice);
    for (int x : double_coset_reps(g, h, k)) {
        Bitset sx = conjugate_set(g, g.inv[x], h) & k; // H^x n K
        Bitset tx = conjugate_set(g, x, k) & h;        // H n xK
        EmbeddedSubgroup emb_s = embed_subgroup(emb_k.lattice, emb_k.view.from_parent_set(sx));
        EmbeddedSubgroup emb_t = embed_subgroup(emb_h.lattice, emb_h.view.from_parent_set(tx));
        GroupMap conj_x{emb_s.view.group, emb_t.view.group,
                        std::vector<int>(emb_s.view.group->order)};
        for (int a = 0; a < emb_s.view.group->order; ++a) {
            int parent = emb_k.view.to_parent[emb_s.view.to_parent[a]];
            int moved = g.conj(x, parent);
            conj_x.image[a] = emb_t.view.from_parent[emb_h.view.from_parent[moved]];
        }
        Unit piece =
            tensor_induce(iso_transport(restrict_unit(u, emb_s), conj_x, emb_t.lattice), emb_t);
        rhs = unit_mul(rhs, piece);
    }
    return lhs == rhs;
}

bool commutation_holds(const LatticePtr& lat, const Bitset& h, const Bitset& n,
                       const Unit& u_on_h_mod_n) {
    EmbeddedSubgroup emb_h = embed_subgroup(lat, h);
    QuotientContext h_mod_n =
        make_quotient_context(emb_h.lattice, emb_h.view.from_parent_set(n));
    Unit lhs = tensor_induce(inflate_unit(u_on_h_mod_n, h_mod_n), emb_h);

    QuotientContext g_mod_n = make_quotient_context(lat, n);
    Bitset h_image = g_mod_n.quotient.projection.image_of(h);
    EmbeddedSubgroup emb_hq = embed_subgroup(g_mod_n.lattice, h_image);
    // canonical identification H/N -> image of H in G/N
    GroupMap ident{h_mod_n.lattice->group, emb_hq.view.group,
                   std::vector<int>(h_mod_n.lattice->group->order)};
    for (int a = 0; a < h_mod_n.lattice->group->order; ++a) {
        int local_rep = -1;
        for (int e = 0; e < emb_h.view.group->order && local_rep < 0; ++e)
            if (h_mod_n.quotient.projection(e) == a) local_rep = e;
        int parent = emb_h.view.to_parent[local_rep];
        ident.image[a] = emb_hq.view.from_parent[g_mod_n.quotient.projection(parent)];
    }
    Unit moved = iso_transport(u_on_h_mod_n, ident, emb_hq.lattice);
    Unit rhs = inflate_unit(tensor_induce(moved, emb_hq), g_mod_n);
    return lhs == rhs;
}

} // namespace bxu
