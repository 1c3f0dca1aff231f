#include "bxu/selfcheck.hpp"

#include <map>
#include <random>

#include "bxu/checks.hpp"
#include "bxu/functors.hpp"
#include "bxu/json_export.hpp"
#include "bxu/simple_form.hpp"

namespace bxu {

std::vector<std::string> selfcheck_corpus() {
    std::vector<std::string> out = {"cyclic:1", "cyclic:2", "pd:1,3,3",
                                    "pd:4,3",   "pd:1,9",   "dihedral:5 x cyclic:3"};
    for (int n = 3; n <= 15; ++n) out.push_back("dihedral:" + std::to_string(n));
    return out;
}

namespace {

struct Context {
    int enum_cap;
    std::vector<std::string> specs;
    std::map<std::string, LatticePtr> lattices;

    LatticePtr lat(const std::string& spec) {
        auto it = lattices.find(spec);
        if (it != lattices.end()) return it->second;
        LatticePtr l = subgroup_lattice(construct_group(spec));
        lattices.emplace(spec, l);
        return l;
    }
};

bool check_group_axioms(Context& ctx) {
    for (const auto& spec : ctx.specs) {
        auto lat = ctx.lat(spec);
        if (lat->group->order > 64) continue;
        verify_group_axioms(*lat->group);
    }
    return true;
}

bool check_lattice_counts(Context& ctx) {
    for (const auto& spec : ctx.specs) {
        auto lat = ctx.lat(spec);
        int total = 0;
        for (int c = 0; c < lat->num_classes(); ++c) {
            int size = int(lat->class_members[c].size());
            total += size;
            int nrm = lat->subgroups[lat->class_normalizer[c]].order;
            if (size != lat->group->order / nrm) return false;
        }
        if (total != lat->num_subgroups()) return false;
        int k = lat->num_classes();
        for (int i = 0; i < k; ++i) {
            if (!lat->leq_conj[i][i]) return false;
            for (int j = 0; j < k; ++j) {
                if (i != j && lat->leq_conj[i][j] && lat->leq_conj[j][i]) return false;
                for (int l = 0; l < k; ++l)
                    if (lat->leq_conj[i][j] && lat->leq_conj[j][l] && !lat->leq_conj[i][l])
                        return false;
            }
        }
    }
    return true;
}

bool check_pd_recognition(Context& ctx) {
    for (const auto& spec : ctx.specs) {
        auto lat = ctx.lat(spec);
        const FiniteGroup& g = *lat->group;
        auto pd = recognize_pseudodihedral(g);
        if (is_abelian(g)) {
            if (pd) return false;
            continue;
        }
        bool expect = (spec.rfind("pd:", 0) == 0 || spec.rfind("dihedral:", 0) == 0) &&
                      spec.find(" x ") == std::string::npos;
        if (expect) {
            if (!pd) return false;
            if (2 * pd->n.count() != g.order) return false;
            if (g.elem_order[pd->x] != 2) return false;
            int involutions = 0;
            bool inverted = true;
            pd->n.for_each([&](int a) {
                if (g.elem_order[a] == 2) ++involutions;
                if (g.conj(pd->x, a) != g.inv[a]) inverted = false;
            });
            if (!inverted || involutions > 1 || pd->n.count() <= 2) return false;
        }
    }
    return true;
}

// Quotients of a pseudodihedral group are abelian or pseudodihedral and
// isomorphic to one of its subgroups.
bool check_pd_quotients(Context& ctx) {
    for (const char* spec : {"dihedral:6", "pd:4,3", "pd:1,3,3", "dihedral:8"}) {
        auto lat = ctx.lat(spec);
        for (int n : lat->normal_subgroup_indices()) {
            Quotient q = quotient_group(lat->group, lat->subgroups[n].elems);
            if (!is_abelian(*q.group) && !recognize_pseudodihedral(*q.group))
                return false;
            bool embedded = false;
            for (int s = 0; s < lat->num_subgroups() && !embedded; ++s) {
                if (lat->subgroups[s].order != q.group->order) continue;
                SubgroupView v = subgroup_as_group(*lat->group, lat->subgroups[s].elems);
                if (is_isomorphic(q.group, v.group)) embedded = true;
            }
            if (!embedded) return false;
        }
    }
    return true;
}

bool check_double_coset_partition(Context& ctx) {
    for (const auto& spec : ctx.specs) {
        auto lat = ctx.lat(spec);
        if (lat->group->order > 24) continue;
        const FiniteGroup& g = *lat->group;
        for (int i = 0; i < lat->num_subgroups(); ++i)
            for (int j = 0; j < lat->num_subgroups(); ++j) {
                const Bitset& l = lat->subgroups[i].elems;
                const Bitset& h = lat->subgroups[j].elems;
                long sum = 0;
                for (int x : double_coset_reps(g, l, h)) {
                    Bitset coset(g.order);
                    l.for_each([&](int a) {
                        int ax = g.op(a, x);
                        h.for_each([&](int b) { coset.set(g.op(ax, b)); });
                    });
                    sum += coset.count();
                }
                if (sum != g.order) return false;
            }
    }
    return true;
}

bool check_mark_triangularity(Context& ctx) {
    for (const auto& spec : ctx.specs) {
        auto lat = ctx.lat(spec);
        MarkMatrix m = table_of_marks(*lat);
        int k = m.size();
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) {
                if (m.at(r, c) != 0 && !lat->leq_conj[r][c]) return false;
                if (r == c) {
                    Int expected =
                        lat->subgroups[lat->class_normalizer[c]].order / lat->rep(c).order;
                    if (m.at(r, c) != expected) return false;
                }
            }
    }
    return true;
}

bool check_mark_ring_hom(Context& ctx) {
    std::mt19937 rng(2024);
    for (const auto& spec : ctx.specs) {
        auto lat = ctx.lat(spec);
        if (lat->group->order > 24) continue;
        MarkMatrix m = table_of_marks(*lat);
        int k = lat->num_classes();
        for (int trial = 0; trial < 6; ++trial) {
            BurnsideElement a, b;
            a.coeffs.assign(k, 0);
            b.coeffs.assign(k, 0);
            a.coeffs[rng() % k] = 1;
            b.coeffs[rng() % k] = 1;
            GhostVector ga = marks_of(m, a), gb = marks_of(m, b);
            GhostVector gp = marks_of(m, multiply(*lat, a, b));
            for (int c = 0; c < k; ++c)
                if (gp.values[c] != ga.values[c] * gb.values[c]) return false;
        }
    }
    return true;
}

bool check_ghost_roundtrip(Context& ctx) {
    std::mt19937 rng(77);
    for (const auto& spec : ctx.specs) {
        auto lat = ctx.lat(spec);
        MarkMatrix m = table_of_marks(*lat);
        int k = lat->num_classes();
        for (int trial = 0; trial < 8; ++trial) {
            BurnsideElement b;
            b.coeffs.resize(k);
            for (int i = 0; i < k; ++i) b.coeffs[i] = int(rng() % 7) - 3;
            auto back = ghost_solve(m, marks_of(m, b));
            if (!back || back->coeffs != b.coeffs) return false;
        }
    }
    return true;
}

bool check_mobius_sums(Context& ctx) {
    for (const char* spec : {"dihedral:4", "dihedral:6", "pd:1,3,3"}) {
        auto lat = ctx.lat(spec);
        for (PosetKind kind : {PosetKind::Subgroups, PosetKind::NormalSubgroups}) {
            MobiusTable t = mobius(*lat, kind);
            for (int lo : t.nodes())
                for (int hi : t.nodes()) {
                    if (!lat->subgroups[lo].elems.subset_of(lat->subgroups[hi].elems))
                        continue;
                    Int sum = 0;
                    for (int z : t.nodes())
                        if (lat->subgroups[lo].elems.subset_of(lat->subgroups[z].elems) &&
                            lat->subgroups[z].elems.subset_of(lat->subgroups[hi].elems))
                            sum += t.value(lo, z);
                    if (sum != (lo == hi ? 1 : 0)) return false;
                }
        }
    }
    return true;
}

bool check_gluck(Context& ctx) {
    for (const auto& spec : ctx.specs) {
        auto lat = ctx.lat(spec);
        if (lat->group->order > 24) continue;
        MarkMatrix m = table_of_marks(*lat);
        MobiusTable mu = mobius(*lat, PosetKind::Subgroups);
        int k = lat->num_classes();
        std::vector<std::vector<Rat>> ghosts;
        std::vector<RationalIdempotent> es;
        std::vector<Rat> total(k, 0);
        for (int h = 0; h < k; ++h) {
            es.push_back(gluck_idempotent(*lat, mu, h));
            ghosts.push_back(marks_of_rational(m, es[h].coeffs));
            for (int c = 0; c < k; ++c) {
                if (ghosts[h][c] != (c == h ? 1 : 0)) return false;
                total[c] += ghosts[h][c];
            }
        }
        for (int c = 0; c < k; ++c)
            if (total[c] != 1) return false;
        for (int h = 0; h < k; ++h)
            for (int h2 = 0; h2 < k; ++h2) {
                std::vector<Rat> prod(k);
                for (int c = 0; c < k; ++c) prod[c] = ghosts[h][c] * ghosts[h2][c];
                std::vector<Rat> sol = ghost_solve_rational(m, prod);
                for (int c = 0; c < k; ++c)
                    if (sol[c] != (h == h2 ? es[h].coeffs[c] : Rat(0))) return false;
            }
    }
    return true;
}

bool check_unit_membership(Context& ctx) {
    for (const auto& spec : ctx.specs) {
        auto lat = ctx.lat(spec);
        MarkMatrix m = table_of_marks(*lat);
        for (const Unit& u : unit_group(lat, ctx.enum_cap).basis())
            if (!ghost_solve(m, sign_vector(u.bits))) return false;
    }
    return true;
}

bool check_standard_basis(Context& ctx) {
    for (const auto& spec : ctx.specs) {
        auto lat = ctx.lat(spec);
        UnitSubspace brute = unit_group(lat, ctx.enum_cap);
        UnitSubspace basis = standard_basis(lat);
        if (brute.dim() != basis.dim()) return false;
        if (!brute.span.contains_span(basis.span)) return false;
    }
    return true;
}

bool check_faithful_decomposition(Context& ctx) {
    for (const auto& spec : ctx.specs) {
        auto lat = ctx.lat(spec);
        int total = 0;
        for (int n : lat->normal_subgroup_indices()) {
            QuotientContext q = make_quotient_context(lat, lat->subgroups[n].elems);
            total += faithful_part(q.lattice, ctx.enum_cap).dim();
        }
        if (total != unit_group(lat, ctx.enum_cap).dim()) return false;
    }
    return true;
}

bool check_mackey(Context& ctx) {
    for (const char* spec : {"dihedral:6", "dihedral:4", "dihedral:5"}) {
        auto lat = ctx.lat(spec);
        std::vector<EmbeddedSubgroup> embs;
        std::vector<std::vector<Unit>> units_of;
        for (int i = 0; i < lat->num_subgroups(); ++i) {
            embs.push_back(embed_subgroup(lat, lat->subgroups[i].elems));
            units_of.push_back(span_elements(unit_group(embs.back().lattice, ctx.enum_cap)));
        }
        for (int i = 0; i < lat->num_subgroups(); ++i)
            for (int j = 0; j < lat->num_subgroups(); ++j)
                for (const Unit& u : units_of[j])
                    if (!mackey_holds(lat, lat->subgroups[i].elems, lat->subgroups[j].elems,
                                      embs[i], embs[j], u))
                        return false;
    }
    return true;
}

bool check_commutation(Context& ctx) {
    for (const char* spec : {"dihedral:6", "dihedral:4", "pd:2,3"}) {
        auto lat = ctx.lat(spec);
        for (int n : lat->normal_subgroup_indices())
            for (int h = 0; h < lat->num_subgroups(); ++h) {
                if (!lat->subgroups[n].elems.subset_of(lat->subgroups[h].elems)) continue;
                EmbeddedSubgroup emb = embed_subgroup(lat, lat->subgroups[h].elems);
                QuotientContext q = make_quotient_context(
                    emb.lattice, emb.view.from_parent_set(lat->subgroups[n].elems));
                for (const Unit& u : span_elements(unit_group(q.lattice, ctx.enum_cap)))
                    if (!commutation_holds(lat, lat->subgroups[h].elems,
                                           lat->subgroups[n].elems, u))
                        return false;
            }
    }
    return true;
}

bool check_odd_index_pair(Context& ctx) {
    auto lat = ctx.lat("dihedral:5 x cyclic:3");
    int n_idx = -1;
    for (int i = 0; i < lat->num_subgroups(); ++i)
        if (lat->subgroups[i].order == 10) n_idx = i;
    if (n_idx < 0) return false;
    EmbeddedSubgroup emb = embed_subgroup(lat, lat->subgroups[n_idx].elems);
    UnitSubspace ug = unit_group(lat, ctx.enum_cap);
    UnitSubspace un = unit_group(emb.lattice, ctx.enum_cap);
    if (ug.dim() != 3 || un.dim() != 3) return false;
    for (const Unit& u : span_elements(un))
        if (!(restrict_unit(tensor_induce(u, emb), emb) == u)) return false;
    for (const Unit& v : span_elements(ug))
        if (!(tensor_induce(restrict_unit(v, emb), emb) == v)) return false;
    return true;
}

bool check_phi_uniqueness(Context& ctx) {
    for (const char* spec : {"dihedral:3", "dihedral:4", "dihedral:5", "pd:2,3",
                             "pd:1,3,3"}) {
        auto lat = ctx.lat(spec);
        Unit p = phi(lat).unit;
        UnitSubspace f = faithful_part(lat, ctx.enum_cap);
        if (f.dim() != 1 || !f.contains(p)) return false;
        for (const GroupMap& aut : all_automorphisms(lat->group))
            if (!(iso_transport(p, aut, lat) == p)) return false;
    }
    return true;
}

bool check_expo_image_is_trivial_subfunctor(Context& ctx) {
    ResidualSet trivial_only = residual_closure({construct_group("cyclic:1")});
    for (const auto& spec : ctx.specs) {
        auto lat = ctx.lat(spec);
        UnitSubspace img = exponential_image(lat);
        UnitSubspace val = subfunctor_value(trivial_only, lat, SubfunctorMethod::Basis);
        if (img.dim() != val.dim()) return false;
        if (!img.span.contains_span(val.span)) return false;
    }
    return true;
}

bool check_residual_agreement(Context& ctx) {
    for (const auto& spec : ctx.specs) {
        auto lat = ctx.lat(spec);
        ClassifierVerdict v = classify_residual(*lat->group);
        if (is_residual(lat, ctx.enum_cap) != v.residual) return false;
        // only trivial or pseudodihedral groups may be residual
        if (v.residual && lat->group->order > 1 &&
            !recognize_pseudodihedral(*lat->group))
            return false;
    }
    // D8 explicitly
    auto d8 = ctx.lat("dihedral:4");
    if (classify_residual(*d8->group).residual || is_residual(d8, ctx.enum_cap))
        return false;
    return true;
}

bool check_subfunctor_methods(Context& ctx) {
    std::vector<ResidualSet> sets = {
        residual_closure({construct_group("cyclic:1")}),
        residual_closure({construct_group("dihedral:5")}),
        residual_closure({construct_group("pd:1,3,3")}),
        residual_closure({construct_group("dihedral:8")}),
    };
    for (const char* spec : {"dihedral:5", "dihedral:6", "dihedral:8", "dihedral:10",
                             "pd:1,3,3", "dihedral:5 x cyclic:3"}) {
        auto lat = ctx.lat(spec);
        for (const ResidualSet& i : sets) {
            UnitSubspace a = subfunctor_value(i, lat, SubfunctorMethod::Basis);
            UnitSubspace b = subfunctor_value(i, lat, SubfunctorMethod::Generate);
            if (a.dim() != b.dim() || !a.span.contains_span(b.span)) return false;
        }
    }
    return true;
}

bool check_subfunctor_lattice(Context& ctx) {
    // Monotonicity and separation over the closed subsets of the residual
    // subquotients of D20.
    auto d20 = ctx.lat("dihedral:10");
    ResidualSet all = residual_subquotients(d20);
    std::vector<ResidualSet> closed;
    closed.push_back(ResidualSet{});
    for (const auto& m : all.members) {
        ResidualSet s = residual_closure({m.realize()});
        closed.push_back(s);
    }
    for (const ResidualSet& i : closed)
        for (const ResidualSet& j : closed) {
            bool subset = true;
            for (const auto& m : i.members)
                if (!j.contains(m)) subset = false;
            if (!subset) continue;
            UnitSubspace vi = subfunctor_value(i, d20, SubfunctorMethod::Basis);
            UnitSubspace vj = subfunctor_value(j, d20, SubfunctorMethod::Basis);
            if (!vj.span.contains_span(vi.span)) return false;
        }
    // F_I is full at X exactly when X lies in I
    for (const ResidualSet& i : closed)
        for (const auto& m : all.members) {
            auto latX = subgroup_lattice(m.realize());
            bool full = subfunctor_value(i, latX, SubfunctorMethod::Basis).dim() ==
                        unit_group(latX, ctx.enum_cap).dim();
            if (full != i.contains(m)) return false;
        }
    return true;
}

bool check_dimension_triple(Context& ctx) {
    GroupPtr trivial = construct_group("cyclic:1");
    for (int k = 1; k <= 10; ++k) {
        auto lat = ctx.lat("dihedral:" + std::to_string(k));
        long s = s_formula(k);
        if (gram_rank(*lat, trivial) != s) return false;
        if (exponential_image(lat).dim() != s) return false;
    }
    const std::pair<int, int> grid[] = {{5, 5}, {5, 10}, {5, 15}, {5, 12}, {8, 16}};
    for (const auto& [n, k] : grid) {
        GroupPtr g = construct_group("dihedral:" + std::to_string(n));
        auto lat = ctx.lat("dihedral:" + std::to_string(k));
        long closed = dihedral_simple_dim(n, k);
        if (simple_dim(g, lat) != closed) return false;
        if (gram_rank(*lat, g) != closed) return false;
    }
    return true;
}

bool check_composition_accounting(Context& ctx) {
    for (const char* spec : {"dihedral:6", "dihedral:10", "dihedral:8"}) {
        auto lat = ctx.lat(spec);
        auto factors = composition_factors_over(lat);
        std::vector<GroupPtr> reps;
        for (const Section& s : section_class_reps(*lat)) {
            SubgroupView v = subgroup_as_group(*lat->group, lat->subgroups[s.top].elems);
            Quotient q = quotient_group(v.group,
                                        v.from_parent_set(lat->subgroups[s.bottom].elems));
            bool fresh = true;
            for (const GroupPtr& r : reps)
                if (r->order == q.group->order && is_isomorphic(r, q.group)) fresh = false;
            if (fresh) reps.push_back(q.group);
        }
        for (const GroupPtr& h : reps) {
            auto lath = subgroup_lattice(h);
            int sum = 0;
            for (const auto& [member, mult] : factors)
                sum += mult * simple_dim(member.realize(), lath);
            if (sum != unit_group(lath, ctx.enum_cap).dim()) return false;
        }
    }
    return true;
}

bool check_expo_routes(Context& ctx) {
    for (int n = 3; n <= 15; ++n) {
        auto lat = ctx.lat("dihedral:" + std::to_string(n));
        if (expo_surjective(lat, ctx.enum_cap) != expo_surjective_dihedral(n))
            return false;
    }
    return true;
}

bool check_gram_symmetry(Context& ctx) {
    GroupPtr trivial = construct_group("cyclic:1");
    GroupPtr c2 = construct_group("cyclic:2");
    for (const char* spec : {"dihedral:4", "dihedral:5", "pd:2,3"}) {
        auto lat = ctx.lat(spec);
        for (const GroupPtr& pattern : {trivial, c2}) {
            GramMatrixF2 m = gram_matrix(*lat, pattern);
            for (std::size_t i = 0; i < m.basis.size(); ++i)
                for (std::size_t j = 0; j < m.basis.size(); ++j)
                    if (m.rows[i].test(int(j)) != m.rows[j].test(int(i))) return false;
        }
    }
    return true;
}

bool check_gram_values(Context& ctx) {
    GroupPtr trivial = construct_group("cyclic:1");
    for (const auto& spec : ctx.specs) {
        auto lat = ctx.lat(spec);
        if (lat->group->order > 30) continue;
        if (gram_rank(*lat, trivial) != exponential_image(lat).dim()) return false;
    }
    for (const char* spec : {"dihedral:5", "dihedral:8", "pd:1,3,3", "pd:4,3"}) {
        auto lat = ctx.lat(spec);
        if (gram_rank(*lat, lat->group) != 1) return false;
    }
    return true;
}

bool check_json_determinism(Context& ctx) {
    auto lat = ctx.lat("dihedral:5");
    Json a = subspace_json(unit_group(lat, ctx.enum_cap));
    Json b = subspace_json(unit_group(lat, ctx.enum_cap));
    if (a.dump(2) != b.dump(2)) return false;
    Json ma = mark_matrix_json(*lat, table_of_marks(*lat));
    Json mb = mark_matrix_json(*lat, table_of_marks(*lat));
    return ma.dump(2) == mb.dump(2);
}

} // namespace

int run_selfcheck(const std::function<void(const std::string&, bool)>& report,
                  int enum_cap) {
    Context ctx;
    ctx.enum_cap = enum_cap;
    ctx.specs = selfcheck_corpus();

    struct Check {
        const char* name;
        bool (*fn)(Context&);
    };
    const Check checks[] = {
        {"group axioms (exhaustive, order <= 64)", check_group_axioms},
        {"lattice class sizes, normalizers, subconjugacy order", check_lattice_counts},
        {"pseudodihedral recognition", check_pd_recognition},
        {"pseudodihedral quotients embed as subgroups", check_pd_quotients},
        {"double cosets partition the group", check_double_coset_partition},
        {"mark matrix triangular with normalizer diagonal", check_mark_triangularity},
        {"marks are multiplicative on products", check_mark_ring_hom},
        {"ghost solve round trips", check_ghost_roundtrip},
        {"Moebius interval sums vanish", check_mobius_sums},
        {"Gluck idempotents: indicators, orthogonality, sum", check_gluck},
        {"units pass ghost membership", check_unit_membership},
        {"standard basis spans the brute-force unit group", check_standard_basis},
        {"faithful parts decompose the unit group", check_faithful_decomposition},
        {"Mackey relation on units", check_mackey},
        {"Ten/Inf commutation on units", check_commutation},
        {"odd-index Res/Ten inverse pair", check_odd_index_pair},
        {"phi spans the faithful part and is automorphism-fixed", check_phi_uniqueness},
        {"exponential image equals the trivial-closure value", check_expo_image_is_trivial_subfunctor},
        {"residual brute force agrees with the classifier", check_residual_agreement},
        {"subfunctor basis and generate methods agree", check_subfunctor_methods},
        {"subfunctor lattice monotone and separating", check_subfunctor_lattice},
        {"dimension triple: gram, subfunctor, closed form", check_dimension_triple},
        {"composition factors account for every subquotient", check_composition_accounting},
        {"exponential surjectivity routes agree", check_expo_routes},
        {"gram matrices symmetric", check_gram_symmetry},
        {"gram ranks match image dims and are 1 at residuals", check_gram_values},
        {"json output is deterministic", check_json_determinism},
    };

    int failures = 0;
    for (const Check& c : checks) {
        bool ok = false;
        try {
            ok = c.fn(ctx);
        } catch (const std::exception&) {
            ok = false;
        }
        if (!ok) ++failures;
        report(c.name, ok);
    }
    return failures;
}

} // namespace bxu
