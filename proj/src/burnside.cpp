#include "bxu/burnside.hpp"

#include <algorithm>

#include "bxu/errors.hpp"

namespace bxu {

MarkMatrix table_of_marks(const SubgroupLattice& lat) {
    const FiniteGroup& g = *lat.group;
    int k = lat.num_classes();
    std::vector<Int> m(std::size_t(k) * k, 0);
    for (int col = 0; col < k; ++col) {
        const Bitset& K = lat.rep(col).elems;
        // Fixed cosets of each acting class: gK is H-fixed iff H <= gKg^-1.
        std::vector<char> covered(g.order, 0);
        std::vector<Bitset> coset_conjugates;
        for (int x = 0; x < g.order; ++x) {
            if (covered[x]) continue;
            K.for_each([&](int s) { covered[g.op(x, s)] = 1; });
            coset_conjugates.push_back(conjugate_set(g, x, K));
        }
        for (int row = 0; row < k; ++row) {
            const Bitset& H = lat.rep(row).elems;
            long cnt = 0;
            for (const Bitset& c : coset_conjugates)
                if (H.subset_of(c)) ++cnt;
            m[row * k + col] = cnt;
        }
    }
    return MarkMatrix(k, std::move(m));
}

GhostVector marks_of(const MarkMatrix& m, const BurnsideElement& b) {
    int k = m.size();
    GhostVector out;
    out.values.assign(k, 0);
    for (int row = 0; row < k; ++row) {
        Int acc = 0;
        for (int col = 0; col < k; ++col)
            if (b.coeffs[col] != 0) acc += m.at(row, col) * b.coeffs[col];
        out.values[row] = acc;
    }
    return out;
}

std::optional<BurnsideElement> ghost_solve(const MarkMatrix& m, const GhostVector& v) {
    int k = m.size();
    BurnsideElement out;
    out.coeffs.assign(k, 0);
    for (int row = k - 1; row >= 0; --row) {
        Int rem = v.values[row];
        for (int col = row + 1; col < k; ++col)
            if (out.coeffs[col] != 0) rem -= m.at(row, col) * out.coeffs[col];
        const Int& d = m.at(row, row);
        if (rem % d != 0) return std::nullopt;
        out.coeffs[row] = rem / d;
    }
    return out;
}

std::vector<Rat> ghost_solve_rational(const MarkMatrix& m, const std::vector<Rat>& v) {
    int k = m.size();
    std::vector<Rat> out(k, 0);
    for (int row = k - 1; row >= 0; --row) {
        Rat rem = v[row];
        for (int col = row + 1; col < k; ++col)
            if (out[col] != 0) rem -= Rat(m.at(row, col)) * out[col];
        out[row] = rem / Rat(m.at(row, row));
    }
    return out;
}

std::vector<Rat> marks_of_rational(const MarkMatrix& m, const std::vector<Rat>& coeffs) {
    int k = m.size();
    std::vector<Rat> out(k, 0);
    for (int row = 0; row < k; ++row) {
        Rat acc = 0;
        for (int col = 0; col < k; ++col)
            if (coeffs[col] != 0) acc += Rat(m.at(row, col)) * coeffs[col];
        out[row] = acc;
    }
    return out;
}

BurnsideElement multiply(const SubgroupLattice& lat, const BurnsideElement& a,
                         const BurnsideElement& b) {
    const FiniteGroup& g = *lat.group;
    int k = lat.num_classes();
    BurnsideElement out;
    out.coeffs.assign(k, 0);
    for (int i = 0; i < k; ++i) {
        if (a.coeffs[i] == 0) continue;
        const Bitset& H = lat.rep(i).elems;
        for (int j = 0; j < k; ++j) {
            if (b.coeffs[j] == 0) continue;
            const Bitset& K = lat.rep(j).elems;
            Int c = a.coeffs[i] * b.coeffs[j];
            // [G/H][G/K] = sum over H\G/K of [G / (H cap gKg^-1)].
            for (int x : double_coset_reps(g, H, K)) {
                Bitset stab = H & conjugate_set(g, x, K);
                out.coeffs[lat.class_of_set(stab)] += c;
            }
        }
    }
    return out;
}

const Int MobiusTable::zero_ = 0;

MobiusTable::MobiusTable(PosetKind kind, std::vector<int> nodes, int num_subgroups)
    : kind_(kind), nodes_(std::move(nodes)), node_of_subgroup_(num_subgroups, -1),
      values_(nodes_.size() * nodes_.size(), 0) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) node_of_subgroup_[nodes_[i]] = int(i);
}

const Int& MobiusTable::value(int lower_subgroup, int upper_subgroup) const {
    int a = node_of_subgroup_[lower_subgroup];
    int b = node_of_subgroup_[upper_subgroup];
    if (a < 0 || b < 0) return zero_;
    return values_[a * nodes_.size() + b];
}

Int& MobiusTable::slot(int lower_subgroup, int upper_subgroup) {
    int a = node_of_subgroup_[lower_subgroup];
    int b = node_of_subgroup_[upper_subgroup];
    return values_[a * nodes_.size() + b];
}

MobiusTable mobius(const SubgroupLattice& lat, PosetKind kind) {
    std::vector<int> nodes;
    if (kind == PosetKind::Subgroups) {
        nodes.resize(lat.num_subgroups());
        for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = int(i);
    } else {
        nodes = lat.normal_subgroup_indices();
    }
    MobiusTable t(kind, nodes, lat.num_subgroups());

    // Fix the upper subgroup U and fill mu(.,U) downward:
    // mu(U,U) = 1 and sum over S <= Z <= U of mu(Z,U) = 0 for S < U.
    for (int u : nodes) {
        const Bitset& uset = lat.subgroups[u].elems;
        std::vector<int> below;
        for (int s : nodes)
            if (lat.subgroups[s].elems.subset_of(uset)) below.push_back(s);
        // Subgroup indices are sorted by order, so iterating in reverse
        // handles larger intermediate subgroups first.
        std::sort(below.begin(), below.end());
        for (auto it = below.rbegin(); it != below.rend(); ++it) {
            int s = *it;
            if (s == u) {
                t.slot(s, u) = 1;
                continue;
            }
            Int acc = 0;
            const Bitset& sset = lat.subgroups[s].elems;
            for (int z : below)
                if (z != s && sset.subset_of(lat.subgroups[z].elems))
                    acc += t.value(z, u);
            t.slot(s, u) = -acc;
        }
    }
    return t;
}

RationalIdempotent gluck_idempotent(const SubgroupLattice& lat,
                                    const MobiusTable& subgroup_mobius,
                                    int class_idx) {
    int k = lat.num_classes();
    RationalIdempotent e;
    e.coeffs.assign(k, 0);
    int h = lat.class_rep[class_idx];
    const Bitset& hset = lat.subgroups[h].elems;
    Int norm = lat.subgroups[lat.class_normalizer[class_idx]].order;
    // Sum over literal subgroups K <= H, folded into class coordinates.
    for (int s = 0; s < lat.num_subgroups(); ++s) {
        const Subgroup& sub = lat.subgroups[s];
        if (!sub.elems.subset_of(hset)) continue;
        Int num = Int(sub.order) * subgroup_mobius.value(s, h);
        if (num == 0) continue;
        e.coeffs[lat.class_of_subgroup[s]] += Rat(num, norm);
    }
    return e;
}

FNIdempotent fn_idempotent(const SubgroupLattice& lat,
                           const MobiusTable& normal_mobius, int n_subgroup) {
    if (!lat.normal_flag[n_subgroup])
        throw domain_error("fn_idempotent: subgroup is not normal");
    FNIdempotent f;
    f.n_subgroup = n_subgroup;
    const Bitset& nset = lat.subgroups[n_subgroup].elems;
    for (int m : lat.normal_subgroup_indices()) {
        if (!nset.subset_of(lat.subgroups[m].elems)) continue;
        f.terms.push_back({m, normal_mobius.value(n_subgroup, m)});
    }
    return f;
}

} // namespace bxu
