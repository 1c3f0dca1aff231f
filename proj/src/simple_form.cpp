#include "bxu/simple_form.hpp"

namespace bxu {

namespace {

// Product set XY; equals a subgroup in the equations below, so a plain
// element-wise product suffices.
Bitset product_set(const FiniteGroup& g, const Bitset& x, const Bitset& y) {
    Bitset out(g.order);
    x.for_each([&](int a) { y.for_each([&](int b) { out.set(g.op(a, b)); }); });
    return out;
}

} // namespace

std::vector<SectionPair> section_basis(const SubgroupLattice& lat,
                                       const GroupPtr& pattern) {
    std::vector<SectionPair> out;
    for (const Section& s : section_class_reps(lat)) {
        const Subgroup& top = lat.subgroups[s.top];
        const Subgroup& bot = lat.subgroups[s.bottom];
        if (top.order != bot.order * pattern->order) continue;
        SubgroupView v = subgroup_as_group(*lat.group, top.elems);
        Quotient q = quotient_group(v.group, v.from_parent_set(bot.elems));
        if (is_isomorphic(q.group, pattern))
            out.push_back(SectionPair{top.elems, bot.elems});
    }
    return out;
}

bool linked(const FiniteGroup& g, const SectionPair& ba, const SectionPair& ts) {
    const Bitset& b = ba.top;
    const Bitset& a = ba.bottom;
    const Bitset& t = ts.top;
    const Bitset& s = ts.bottom;
    if (!((b & s) == (a & t))) return false;
    Bitset bt = b & t;
    if (!(product_set(g, bt, a) == b)) return false;
    if (!(product_set(g, bt, s) == t)) return false;
    return true;
}

GramMatrixF2 gram_matrix(const SubgroupLattice& lat, const GroupPtr& pattern) {
    const FiniteGroup& g = *lat.group;
    GramMatrixF2 m;
    m.basis = section_basis(lat, pattern);
    int k = int(m.basis.size());
    m.rows.assign(k, F2Vec(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int parity = 0;
            for (int h : double_coset_reps(g, m.basis[i].top, m.basis[j].top)) {
                SectionPair conj{conjugate_set(g, h, m.basis[j].top),
                                 conjugate_set(g, h, m.basis[j].bottom)};
                if (linked(g, m.basis[i], conj)) parity ^= 1;
            }
            if (parity) m.rows[i].set(j);
        }
    return m;
}

int GramMatrixF2::rank() const {
    if (basis.empty()) return 0;
    F2Span span(int(basis.size()));
    for (const auto& r : rows) span.add(r);
    return span.dim();
}

int gram_rank(const SubgroupLattice& lat, const GroupPtr& pattern) {
    return gram_matrix(lat, pattern).rank();
}

} // namespace bxu
