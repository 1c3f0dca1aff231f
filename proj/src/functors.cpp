#include "bxu/functors.hpp"

#include <algorithm>
#include <set>

#include "bxu/errors.hpp"

namespace bxu {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long two_part(long n) {
    long t = 1;
    while (n % 2 == 0) {
        n /= 2;
        t *= 2;
    }
    return t;
}

} // namespace

long ResidualMember::order() const {
    if (pd.empty()) return 1;
    long m = 1;
    for (int f : pd) m *= f;
    return 2 * m;
}

std::string ResidualMember::label() const {
    if (pd.empty()) return "1";
    std::set<long> primes;
    bool coprime = true;
    long m = 1;
    for (int f : pd) {
        m *= f;
        long p = f; // the prime of a prime power is its least divisor
        for (long d = 2; d * d <= f; ++d)
            if (f % d == 0) {
                p = d;
                break;
            }
        if (!primes.insert(p).second) coprime = false;
    }
    if (coprime) return "D" + std::to_string(2 * m);
    std::string s = "pd(";
    for (std::size_t i = 0; i < pd.size(); ++i)
        s += (i ? "," : "") + std::to_string(pd[i]);
    return s + ")";
}

GroupPtr ResidualMember::realize() const {
    if (pd.empty()) return trivial_group();
    return pseudodihedral_group(pd);
}

bool ResidualMember::operator<(const ResidualMember& o) const {
    if (order() != o.order()) return order() < o.order();
    return pd < o.pd;
}

bool ResidualSet::contains(const ResidualMember& m) const {
    return std::binary_search(members.begin(), members.end(), m);
}

void ResidualSet::insert(const ResidualMember& m) {
    auto it = std::lower_bound(members.begin(), members.end(), m);
    if (it == members.end() || !(*it == m)) members.insert(it, m);
}

ResidualSet ResidualSet::without(const ResidualMember& m) const {
    ResidualSet out;
    for (const auto& x : members)
        if (!(x == m)) out.members.push_back(x);
    return out;
}

const char* reason_tag(ResidualReason r) {
    switch (r) {
    case ResidualReason::Trivial: return "trivial";
    case ResidualReason::D2pOneMod4: return "d2p-1mod4";
    case ResidualReason::PdCompositeOk: return "pd-composite-ok";
    case ResidualReason::ExcludedD8: return "excluded-d8";
    case ResidualReason::N2IsTwo: return "n2-is-2";
    case ResidualReason::HasQSquared: return "has-q-squared";
    case ResidualReason::PThreeMod4: return "p-3mod4";
    case ResidualReason::NotPdOrTrivial: return "not-pd-or-trivial";
    }
    return "?";
}

ClassifierVerdict classify_residual(const FiniteGroup& g) {
    if (g.order == 1) return {true, ResidualReason::Trivial};
    auto pd = recognize_pseudodihedral(g);
    if (!pd) return {false, ResidualReason::NotPdOrTrivial};
    if (g.order == 8) return {false, ResidualReason::ExcludedD8};

    SubgroupView nview = subgroup_as_group(g, pd->n);
    long n_order = nview.group->order;
    if (is_prime(n_order)) {
        if (n_order % 4 == 1) return {true, ResidualReason::D2pOneMod4};
        return {false, ResidualReason::PThreeMod4};
    }
    if (two_part(n_order) == 2) return {false, ResidualReason::N2IsTwo};
    for (int f : abelian_invariants(*nview.group))
        if (f % 2 == 1 && !is_prime(f))
            return {false, ResidualReason::HasQSquared};
    return {true, ResidualReason::PdCompositeOk};
}

ResidualMember residual_key(const FiniteGroup& g) {
    ClassifierVerdict v = classify_residual(g);
    if (!v.residual) throw domain_error("residual_key: group is not residual");
    if (g.order == 1) return ResidualMember{};
    auto pd = recognize_pseudodihedral(g);
    SubgroupView nview = subgroup_as_group(g, pd->n);
    return ResidualMember{abelian_invariants(*nview.group)};
}

UnitSubspace boundary_subspace(const LatticePtr& lat, int enum_cap) {
    UnitSubspace out{lat, F2Span(lat->num_classes())};
    for (const Section& s : section_class_reps(*lat)) {
        const Subgroup& top = lat->subgroups[s.top];
        const Subgroup& bot = lat->subgroups[s.bottom];
        if (top.order / bot.order >= lat->group->order) continue;
        EmbeddedSubgroup emb = embed_subgroup(lat, top.elems);
        QuotientContext ctx =
            make_quotient_context(emb.lattice, emb.view.from_parent_set(bot.elems));
        for (const Unit& u : unit_group(ctx.lattice, enum_cap).basis())
            out.span.add(tensor_induce(inflate_unit(u, ctx), emb).bits);
    }
    return out;
}

bool is_residual(const LatticePtr& lat, int enum_cap) {
    return boundary_subspace(lat, enum_cap).dim() < unit_group(lat, enum_cap).dim();
}

ResidualSet residual_subquotients(const LatticePtr& lat) {
    if (!in_c_prime(*lat))
        throw domain_error("residual_subquotients: group is outside C'");
    ResidualSet out;
    for (const Section& s : section_class_reps(*lat)) {
        SubgroupView top = subgroup_as_group(*lat->group, lat->subgroups[s.top].elems);
        Bitset bot = top.from_parent_set(lat->subgroups[s.bottom].elems);
        Quotient q = quotient_group(top.group, bot);
        if (classify_residual(*q.group).residual)
            out.insert(residual_key(*q.group));
    }
    return out;
}

ResidualSet residual_closure(const std::vector<GroupPtr>& groups) {
    ResidualSet out;
    for (const GroupPtr& g : groups) {
        ResidualSet part = residual_subquotients(subgroup_lattice(g));
        for (const auto& m : part.members) out.insert(m);
    }
    return out;
}

namespace {

// Does every residual subquotient of the quotient lie in I?
bool quotient_admissible_for(const ResidualSet& i, const QuotientContext& ctx) {
    for (const auto& m : residual_subquotients(ctx.lattice).members)
        if (!i.contains(m)) return false;
    return true;
}

UnitSubspace subfunctor_generate(const ResidualSet& i, const LatticePtr& h) {
    UnitSubspace out{h, F2Span(h->num_classes())};
    for (const Section& s : section_class_reps(*h)) {
        EmbeddedSubgroup emb = embed_subgroup(h, h->subgroups[s.top].elems);
        Bitset bot = emb.view.from_parent_set(h->subgroups[s.bottom].elems);
        Quotient q = quotient_group(emb.view.group, bot);
        bool matches;
        if (q.group->order == 1) {
            matches = i.contains(ResidualMember{});
        } else {
            auto pd = recognize_pseudodihedral(*q.group);
            if (!pd) continue;
            SubgroupView nview = subgroup_as_group(*q.group, pd->n);
            matches = i.contains(ResidualMember{abelian_invariants(*nview.group)});
        }
        if (!matches) continue;
        QuotientContext ctx = make_quotient_context(emb.lattice, bot);
        out.span.add(tensor_induce(inflate_unit(phi(ctx.lattice).unit, ctx), emb).bits);
    }
    return out;
}

UnitSubspace subfunctor_basis(const ResidualSet& i, const LatticePtr& h) {
    auto filter = [&i](const QuotientContext& ctx) {
        return quotient_admissible_for(i, ctx);
    };

    Bitset whole(h->group->order);
    for (int e = 0; e < h->group->order; ++e) whole.set(e);
    int full_idx = h->find_subgroup(whole);
    std::vector<int> cands = odd_index_normal_candidates(*h);
    if (cands.empty())
        throw domain_error("subfunctor_value: group is outside C'");
    for (int c : cands)
        if (c == full_idx) return inflated_phi_basis(h, filter);

    int n_idx = smallest_odd_index_candidate(*h);
    EmbeddedSubgroup emb = embed_subgroup(h, h->subgroups[n_idx].elems);
    return induced_orbit_sums(emb, inflated_phi_units(emb.lattice, filter));
}

} // namespace

UnitSubspace subfunctor_value(const ResidualSet& i, const LatticePtr& h,
                              SubfunctorMethod method) {
    if (!in_c_prime(*h))
        throw domain_error("subfunctor_value: group is outside C'");
    return method == SubfunctorMethod::Basis ? subfunctor_basis(i, h)
                                             : subfunctor_generate(i, h);
}

int simple_dim(const GroupPtr& residual_group, const LatticePtr& h) {
    ResidualMember key = residual_key(*residual_group);
    ResidualSet i = residual_closure({residual_group});
    ResidualSet j = i.without(key);
    int r = subfunctor_value(i, h, SubfunctorMethod::Basis).dim();
    int l = subfunctor_value(j, h, SubfunctorMethod::Basis).dim();
    return r - l;
}

std::vector<std::pair<ResidualMember, int>>
composition_factors_over(const LatticePtr& lat) {
    std::vector<std::pair<ResidualMember, int>> out;
    for (const auto& m : residual_subquotients(lat).members) out.push_back({m, 1});
    return out;
}

long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

long s_formula(long k) {
    if (k < 1) throw domain_error("s_formula: k must be positive");
    long m = 0;
    for (long d = 1; d <= k; ++d)
        if (k % d == 0 && euler_phi(d) % 4 == 2) ++m;
    return m + (k % 2 ? 2 : 4);
}

bool dihedral_residual(long n) {
    if (n < 3 || n == 4) return false;
    if (is_prime(n)) return n % 4 == 1;
    long n0 = two_part(n);
    if (n0 == 2) return false;
    long odd = n / n0;
    for (long p = 3; p * p <= odd; p += 2)
        if (odd % (p * p) == 0) return false;
    return true;
}

long dihedral_simple_dim(long n, long k) {
    if (!dihedral_residual(n))
        throw domain_error("dihedral_simple_dim: D_{2n} is not residual for n = " +
                           std::to_string(n));
    if (k < 3) throw domain_error("dihedral_simple_dim: k must be at least 3");
    if (k % n) return 0;
    long n0 = two_part(n);
    long m;
    if (n == n0) {
        m = 1; // n a power of 2
    } else {
        m = 1;
        long odd = n / n0;
        for (long p = 3; p <= odd; p += 2) {
            if (!is_prime(p) || odd % p) continue;
            long v = 0, kk = k;
            while (kk % p == 0) {
                kk /= p;
                ++v;
            }
            m *= v;
        }
    }
    bool doubled = (n0 == 1) && (two_part(k) != 1);
    return doubled ? 2 * m : m;
}

bool in_c_prime(const SubgroupLattice& lat) {
    return !odd_index_normal_candidates(lat).empty();
}

bool expo_surjective(const LatticePtr& lat, int enum_cap) {
    if (!in_c_prime(*lat))
        throw domain_error("expo_surjective: group is outside C'");
    return exponential_image(lat).dim() == unit_group(lat, enum_cap).dim();
}

bool expo_surjective_dihedral(long n) {
    if (n < 3) throw domain_error("expo_surjective_dihedral: n must be at least 3");
    return euler_phi(n) % 4 == 2;
}

} // namespace bxu
