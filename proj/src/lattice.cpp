#include "bxu/lattice.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace bxu {

namespace {

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.elems.lex_less(b.elems);
}

} // namespace

int SubgroupLattice::find_subgroup(const Bitset& elems) const {
    Subgroup probe{elems, elems.count()};
    auto it = std::lower_bound(subgroups.begin(), subgroups.end(), probe, subgroup_less);
    if (it != subgroups.end() && it->elems == elems)
        return int(it - subgroups.begin());
    return -1;
}

int SubgroupLattice::class_of_set(const Bitset& elems) const {
    int idx = find_subgroup(elems);
    return idx < 0 ? -1 : class_of_subgroup[idx];
}

std::vector<int> SubgroupLattice::normal_subgroup_indices() const {
    std::vector<int> out;
    for (int i = 0; i < num_subgroups(); ++i)
        if (normal_flag[i]) out.push_back(i);
    return out;
}

LatticePtr subgroup_lattice(const GroupPtr& g, int order_cap) {
    if (g->order > order_cap)
        throw cap_error("subgroup lattice: order " + std::to_string(g->order) +
                        " exceeds cap " + std::to_string(order_cap));
    int n = g->order;

    // Cyclic subgroups seed the closure search. Joins are only computed for
    // one representative per conjugacy orbit; the orbit of each result is
    // added wholesale, which keeps the enumeration complete.
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Bitset> cyclics;
    {
        std::unordered_set<Bitset, BitsetHash> cyclic_seen;
        for (int a = 0; a < n; ++a) {
            Bitset c(n);
            int y = a;
            c.set(0);
            while (y != 0) {
                c.set(y);
                y = g->op(y, a);
            }
            if (cyclic_seen.insert(c).second) cyclics.push_back(c);
        }
    }

    std::vector<Bitset> work; // one representative per discovered orbit
    auto add_orbit = [&](const Bitset& s) {
        if (seen.count(s)) return;
        for (int by = 0; by < n; ++by) seen.insert(conjugate_set(*g, by, s));
        work.push_back(s);
    };
    add_orbit(closure_of(*g, Bitset(n)));
    for (const Bitset& c : cyclics) add_orbit(c);
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (const Bitset& c : cyclics) {
            if (c.subset_of(work[i])) continue;
            add_orbit(closure_of(*g, work[i] | c));
        }
    }
    std::vector<Bitset> all(seen.begin(), seen.end());

    auto lat = std::make_shared<SubgroupLattice>();
    lat->group = g;
    lat->subgroups.reserve(all.size());
    for (auto& s : all) {
        int c = s.count();
        lat->subgroups.push_back(Subgroup{std::move(s), c});
    }
    std::sort(lat->subgroups.begin(), lat->subgroups.end(), subgroup_less);

    int ns = lat->num_subgroups();
    lat->class_of_subgroup.assign(ns, -1);

    // Conjugation orbits. Scanning in sorted order makes the first member of
    // each orbit its least one.
    struct ClassInfo {
        std::vector<int> members;
        std::vector<int> order_multiset;
    };
    std::vector<ClassInfo> classes;
    for (int i = 0; i < ns; ++i) {
        if (lat->class_of_subgroup[i] >= 0) continue;
        int cls = int(classes.size());
        ClassInfo info;
        for (int by = 0; by < n; ++by) {
            Bitset conj = conjugate_set(*g, by, lat->subgroups[i].elems);
            int j = lat->find_subgroup(conj);
            if (lat->class_of_subgroup[j] < 0) {
                lat->class_of_subgroup[j] = cls;
                info.members.push_back(j);
            }
        }
        std::sort(info.members.begin(), info.members.end());
        lat->subgroups[info.members.front()].elems.for_each(
            [&](int e) { info.order_multiset.push_back(g->elem_order[e]); });
        std::sort(info.order_multiset.begin(), info.order_multiset.end());
        classes.push_back(std::move(info));
    }

    // Canonical class order: (order, element-order multiset, least member).
    std::vector<int> perm(classes.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = int(i);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        const auto& ca = classes[a];
        const auto& cb = classes[b];
        int oa = lat->subgroups[ca.members.front()].order;
        int ob = lat->subgroups[cb.members.front()].order;
        if (oa != ob) return oa < ob;
        if (ca.order_multiset != cb.order_multiset)
            return ca.order_multiset < cb.order_multiset;
        return lat->subgroups[ca.members.front()].elems.lex_less(
            lat->subgroups[cb.members.front()].elems);
    });
    std::vector<int> new_index(classes.size());
    for (std::size_t i = 0; i < perm.size(); ++i) new_index[perm[i]] = int(i);

    lat->class_members.resize(classes.size());
    lat->class_rep.resize(classes.size());
    for (std::size_t old = 0; old < classes.size(); ++old) {
        int ni = new_index[old];
        lat->class_members[ni] = classes[old].members;
        lat->class_rep[ni] = classes[old].members.front();
    }
    for (int i = 0; i < ns; ++i)
        lat->class_of_subgroup[i] = new_index[lat->class_of_subgroup[i]];

    lat->normal_flag.assign(ns, 0);
    for (int i = 0; i < ns; ++i)
        if (lat->class_members[lat->class_of_subgroup[i]].size() == 1)
            lat->normal_flag[i] = 1;

    int nc = lat->num_classes();
    lat->class_normalizer.assign(nc, -1);
    for (int c = 0; c < nc; ++c) {
        const Bitset& rep = lat->rep(c).elems;
        Bitset nrm(n);
        for (int a = 0; a < n; ++a)
            if (conjugate_set(*g, a, rep) == rep) nrm.set(a);
        lat->class_normalizer[c] = lat->find_subgroup(nrm);
    }

    lat->leq_conj.assign(nc, std::vector<char>(nc, 0));
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j) {
            if (lat->rep(i).order > lat->rep(j).order) continue;
            for (int m : lat->class_members[i])
                if (lat->subgroups[m].elems.subset_of(lat->rep(j).elems)) {
                    lat->leq_conj[i][j] = 1;
                    break;
                }
        }
    return lat;
}

std::vector<std::string> class_labels(const SubgroupLattice& lat) {
    std::vector<std::string> out;
    std::map<std::string, int> used;
    for (int c = 0; c < lat.num_classes(); ++c) {
        SubgroupView v = subgroup_as_group(*lat.group, lat.rep(c).elems);
        std::string base = structure_name(*v.group);
        int k = used[base]++;
        if (k <= 3)
            out.push_back(base + std::string(k, '\''));
        else
            out.push_back(base + "#" + std::to_string(k + 1));
    }
    return out;
}

std::vector<Section> all_sections(const SubgroupLattice& lat, bool proper_only) {
    std::vector<Section> out;
    int ns = lat.num_subgroups();
    int full = lat.group->order;
    for (int a = 0; a < ns; ++a) {
        const Subgroup& top = lat.subgroups[a];
        for (int b = 0; b < ns; ++b) {
            const Subgroup& bot = lat.subgroups[b];
            if (!bot.elems.subset_of(top.elems)) continue;
            if (proper_only && top.order / bot.order >= full) continue;
            if (!is_normal_in(*lat.group, bot.elems, top.elems)) continue;
            out.push_back(Section{a, b});
        }
    }
    return out;
}

std::vector<Section> section_class_reps(const SubgroupLattice& lat) {
    std::vector<Section> sections = all_sections(lat, false);
    std::map<std::pair<int, int>, int> index_of;
    for (std::size_t i = 0; i < sections.size(); ++i)
        index_of[{sections[i].top, sections[i].bottom}] = int(i);

    std::vector<char> assigned(sections.size(), 0);
    std::vector<Section> reps;
    for (std::size_t i = 0; i < sections.size(); ++i) {
        if (assigned[i]) continue;
        reps.push_back(sections[i]);
        const Bitset& t = lat.subgroups[sections[i].top].elems;
        const Bitset& b = lat.subgroups[sections[i].bottom].elems;
        for (int g = 0; g < lat.group->order; ++g) {
            int ti = lat.find_subgroup(conjugate_set(*lat.group, g, t));
            int bi = lat.find_subgroup(conjugate_set(*lat.group, g, b));
            auto it = index_of.find({ti, bi});
            assigned[it->second] = 1;
        }
    }
    return reps;
}

std::vector<int> double_coset_reps(const FiniteGroup& g, const Bitset& l,
                                   const Bitset& h) {
    std::vector<char> covered(g.order, 0);
    std::vector<int> reps;
    std::vector<int> ls = l.elements(), hs = h.elements();
    for (int x = 0; x < g.order; ++x) {
        if (covered[x]) continue;
        reps.push_back(x);
        for (int a : ls) {
            int ax = g.op(a, x);
            for (int b : hs) covered[g.op(ax, b)] = 1;
        }
    }
    return reps;
}

Bitset SubgroupView::to_parent_set(const Bitset& local) const {
    Bitset out(int(from_parent.size()));
    local.for_each([&](int i) { out.set(to_parent[i]); });
    return out;
}

Bitset SubgroupView::from_parent_set(const Bitset& parent) const {
    Bitset out(int(to_parent.size()));
    parent.for_each([&](int p) {
        if (from_parent[p] >= 0) out.set(from_parent[p]);
    });
    return out;
}

SubgroupView subgroup_as_group(const FiniteGroup& parent, const Bitset& elems) {
    SubgroupView v;
    v.to_parent = elems.elements();
    v.from_parent.assign(parent.order, -1);
    for (std::size_t i = 0; i < v.to_parent.size(); ++i)
        v.from_parent[v.to_parent[i]] = int(i);
    int n = int(v.to_parent.size());
    std::vector<int> mul(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mul[a * n + b] = v.from_parent[parent.op(v.to_parent[a], v.to_parent[b])];
    v.group = group_from_table(std::move(mul), "<sub>");
    return v;
}

} // namespace bxu
