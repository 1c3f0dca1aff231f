#include "bxu/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bxu/errors.hpp"

namespace bxu {

namespace {

int order_of_element(const FiniteGroup& g, int x) {
    int k = 1, y = x;
    while (y != 0) {
        y = g.op(y, x);
        ++k;
    }
    return k;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& ctx) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("bad integer '" + tok + "' in " + ctx);
        long v = std::stol(tok);
        if (v < 1 || v > 1 << 20) throw parse_error("integer out of range in " + ctx);
        out.push_back(int(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw parse_error("empty list in " + ctx);
    return out;
}

} // namespace

GroupPtr group_from_table(std::vector<int> mul, std::string label) {
    int n = 0;
    while (n * n < int(mul.size())) ++n;
    if (n * n != int(mul.size()) || n == 0)
        throw domain_error("multiplication table is not square");

    auto g = std::make_shared<FiniteGroup>();
    g->order = n;
    g->mul = std::move(mul);
    g->label = std::move(label);

    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
        if (g->op(0, a) != a || g->op(a, 0) != a)
            throw domain_error("element 0 is not a two-sided identity");
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            int p = g->op(a, b);
            if (p < 0 || p >= n || seen[p])
                throw domain_error("row is not a permutation");
            seen[p] = 1;
        }
    }
    g->inv.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g->op(a, b) == 0 && g->op(b, a) == 0) g->inv[a] = b;
    for (int a = 0; a < n; ++a)
        if (g->inv[a] < 0) throw domain_error("missing inverse");

    g->elem_order.resize(n);
    for (int a = 0; a < n; ++a) g->elem_order[a] = order_of_element(*g, a);
    return g;
}

void verify_group_axioms(const FiniteGroup& g) {
    int n = g.order;
    for (int a = 0; a < n; ++a) {
        if (g.op(a, g.inv[a]) != 0 || g.op(g.inv[a], a) != 0)
            throw domain_error("inverse law fails");
        if (g.op(0, a) != a || g.op(a, 0) != a)
            throw domain_error("identity law fails");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
                    throw domain_error("associativity fails");
}

GroupPtr trivial_group() { return cyclic_group(1); }

GroupPtr cyclic_group(int n) {
    if (n < 1) throw parse_error("cyclic order must be positive");
    std::vector<int> mul(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
    return group_from_table(std::move(mul), "cyclic:" + std::to_string(n));
}

namespace {

// C2 semidirect N with the generator inverting N. Element t*|N| + v is x^t v.
GroupPtr inversion_extension(const GroupPtr& nGroup, std::string label) {
    int m = nGroup->order;
    int n = 2 * m;
    std::vector<int> mul(std::size_t(n) * n);
    for (int t1 = 0; t1 < 2; ++t1)
        for (int v1 = 0; v1 < m; ++v1)
            for (int t2 = 0; t2 < 2; ++t2)
                for (int v2 = 0; v2 < m; ++v2) {
                    // x^{t1} v1 x^{t2} v2 = x^{t1+t2} (v1^{(-1)^{t2}}) v2
                    int w1 = t2 ? nGroup->inv[v1] : v1;
                    int t = (t1 + t2) & 1;
                    int v = nGroup->op(w1, v2);
                    mul[(t1 * m + v1) * n + (t2 * m + v2)] = t * m + v;
                }
    return group_from_table(std::move(mul), std::move(label));
}

} // namespace

GroupPtr dihedral_group(int n) {
    if (n < 1) throw parse_error("dihedral parameter must be positive");
    return inversion_extension(cyclic_group(n), "dihedral:" + std::to_string(n));
}

GroupPtr abelian_group(const std::vector<int>& factors) {
    GroupPtr g = cyclic_group(factors.at(0));
    for (std::size_t i = 1; i < factors.size(); ++i)
        g = direct_product(g, cyclic_group(factors[i]));
    std::string label = "abelian:";
    for (std::size_t i = 0; i < factors.size(); ++i)
        label += (i ? "," : "") + std::to_string(factors[i]);
    auto out = std::make_shared<FiniteGroup>(*g);
    out->label = label;
    return out;
}

GroupPtr pseudodihedral_group(const std::vector<int>& factors) {
    long total = 1;
    int even = 0;
    for (int f : factors) {
        total *= f;
        if (f % 2 == 0) ++even;
    }
    if (total <= 2)
        throw parse_error("pd spec rejected: |N| = " + std::to_string(total) +
                          " but the inverted subgroup must have order > 2");
    if (even > 1)
        throw parse_error("pd spec rejected: more than one even factor makes "
                          "the 2-part of N non-cyclic");
    GroupPtr n = abelian_group(factors);
    std::string label = "pd:";
    for (std::size_t i = 0; i < factors.size(); ++i)
        label += (i ? "," : "") + std::to_string(factors[i]);
    return inversion_extension(n, label);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    int na = a->order, nb = b->order, n = na * nb;
    std::vector<int> mul(std::size_t(n) * n);
    for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < nb; ++j1)
            for (int i2 = 0; i2 < na; ++i2)
                for (int j2 = 0; j2 < nb; ++j2)
                    mul[(i1 * nb + j1) * n + (i2 * nb + j2)] =
                        a->op(i1, i2) * nb + b->op(j1, j2);
    return group_from_table(std::move(mul), a->label + " x " + b->label);
}

GroupPtr construct_group(const std::string& spec, int order_cap) {
    std::istringstream in(spec);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.empty()) throw parse_error("empty group spec");
    if (tokens.size() % 2 == 0) throw parse_error("malformed product in group spec");

    auto atom = [&](const std::string& s) -> GroupPtr {
        auto colon = s.find(':');
        if (colon == std::string::npos)
            throw parse_error("bad group atom '" + s + "'");
        std::string kind = s.substr(0, colon);
        std::string rest = s.substr(colon + 1);
        if (kind == "cyclic") {
            auto v = parse_int_list(rest, s);
            if (v.size() != 1) throw parse_error("cyclic takes one parameter");
            return cyclic_group(v[0]);
        }
        if (kind == "dihedral") {
            auto v = parse_int_list(rest, s);
            if (v.size() != 1) throw parse_error("dihedral takes one parameter");
            return dihedral_group(v[0]);
        }
        if (kind == "abelian") return abelian_group(parse_int_list(rest, s));
        if (kind == "pd") return pseudodihedral_group(parse_int_list(rest, s));
        throw parse_error("unknown group kind '" + kind + "'");
    };

    GroupPtr g = atom(tokens[0]);
    for (std::size_t i = 1; i < tokens.size(); i += 2) {
        if (tokens[i] != "x")
            throw parse_error("expected 'x' between group atoms");
        GroupPtr rhs = atom(tokens[i + 1]);
        if (long(g->order) * rhs->order > order_cap)
            throw cap_error("group order exceeds cap " + std::to_string(order_cap));
        g = direct_product(g, rhs);
    }
    if (g->order > order_cap)
        throw cap_error("group order exceeds cap " + std::to_string(order_cap));
    return g;
}

bool is_abelian(const FiniteGroup& g) {
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b)
            if (g.op(a, b) != g.op(b, a)) return false;
    return true;
}

Bitset center_of(const FiniteGroup& g) {
    Bitset z(g.order);
    for (int a = 0; a < g.order; ++a) {
        bool central = true;
        for (int b = 0; b < g.order && central; ++b)
            if (g.op(a, b) != g.op(b, a)) central = false;
        if (central) z.set(a);
    }
    return z;
}

std::vector<int> abelian_invariants(const FiniteGroup& g) {
    if (!is_abelian(g)) throw domain_error("abelian_invariants on nonabelian group");
    std::vector<int> out;
    int n = g.order;
    for (int p = 2; p <= n; ++p) {
        if (n % p) continue;
        bool prime = true;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        // #factors of the p-part with exponent >= k, from the p^k-torsion census.
        std::vector<int> geq; // geq[k-1]
        long prev = 1;
        for (int k = 1;; ++k) {
            long pk = 1;
            for (int i = 0; i < k; ++i) pk *= p;
            long cnt = 0;
            for (int a = 0; a < n; ++a)
                if (pk % g.elem_order[a] == 0) ++cnt;
            if (cnt == prev) break;
            int s = 0;
            long q = cnt;
            while (q > prev) {
                q /= p;
                ++s;
            }
            geq.push_back(s);
            prev = cnt;
        }
        // geq[k-1] now holds s_k - s_{k-1}; factors with exponent exactly k:
        for (std::size_t k = 1; k <= geq.size(); ++k) {
            int exactly = geq[k - 1] - (k < geq.size() ? geq[k] : 0);
            long pk = 1;
            for (std::size_t i = 0; i < k; ++i) pk *= p;
            for (int c = 0; c < exactly; ++c) out.push_back(int(pk));
        }
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

bool GroupMap::is_homomorphism() const {
    for (int a = 0; a < source->order; ++a)
        for (int b = 0; b < source->order; ++b)
            if (image[source->op(a, b)] != target->op(image[a], image[b]))
                return false;
    return true;
}

bool GroupMap::is_bijective() const {
    if (source->order != target->order) return false;
    std::vector<char> seen(target->order, 0);
    for (int v : image) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Bitset GroupMap::image_of(const Bitset& s) const {
    Bitset out(target->order);
    s.for_each([&](int x) { out.set(image[x]); });
    return out;
}

Bitset GroupMap::preimage_of(const Bitset& s) const {
    Bitset out(source->order);
    for (int x = 0; x < source->order; ++x)
        if (s.test(image[x])) out.set(x);
    return out;
}

GroupMap identity_map(const GroupPtr& g) {
    GroupMap m{g, g, std::vector<int>(g->order)};
    std::iota(m.image.begin(), m.image.end(), 0);
    return m;
}

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
    GroupMap m{inner.source, outer.target, std::vector<int>(inner.source->order)};
    for (int x = 0; x < inner.source->order; ++x) m.image[x] = outer.image[inner.image[x]];
    return m;
}

bool is_subgroup(const FiniteGroup& g, const Bitset& s) {
    if (!s.test(0)) return false;
    bool ok = true;
    s.for_each([&](int a) {
        if (!s.test(g.inv[a])) ok = false;
        s.for_each([&](int b) {
            if (!s.test(g.op(a, b))) ok = false;
        });
    });
    return ok;
}

bool is_normal_in(const FiniteGroup& g, const Bitset& sub, const Bitset& ambient) {
    bool ok = true;
    ambient.for_each([&](int a) {
        if (!ok) return;
        Bitset c = conjugate_set(g, a, sub);
        if (!(c == sub)) ok = false;
    });
    return ok;
}

Bitset closure_of(const FiniteGroup& g, Bitset seed) {
    seed.set(0);
    std::vector<int> work = seed.elements();
    std::vector<int> members = work;
    while (!work.empty()) {
        int a = work.back();
        work.pop_back();
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (int p : {g.op(a, members[i]), g.op(members[i], a)}) {
                if (!seed.test(p)) {
                    seed.set(p);
                    members.push_back(p);
                    work.push_back(p);
                }
            }
            int q = g.inv[a];
            if (!seed.test(q)) {
                seed.set(q);
                members.push_back(q);
                work.push_back(q);
            }
        }
    }
    return seed;
}

Bitset conjugate_set(const FiniteGroup& g, int by, const Bitset& s) {
    Bitset out(g.order);
    s.for_each([&](int x) { out.set(g.conj(by, x)); });
    return out;
}

Quotient quotient_group(const GroupPtr& g, const Bitset& normal_subgroup) {
    if (!is_subgroup(*g, normal_subgroup))
        throw domain_error("quotient by a non-subgroup");
    Bitset whole(g->order);
    for (int i = 0; i < g->order; ++i) whole.set(i);
    if (!is_normal_in(*g, normal_subgroup, whole))
        throw domain_error("quotient by a non-normal subgroup");

    int n = g->order;
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    for (int a = 0; a < n; ++a) {
        if (coset_of[a] >= 0) continue;
        int idx = int(reps.size());
        reps.push_back(a);
        normal_subgroup.for_each([&](int m) { coset_of[g->op(a, m)] = idx; });
    }
    int q = int(reps.size());
    std::vector<int> mul(std::size_t(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            mul[i * q + j] = coset_of[g->op(reps[i], reps[j])];
    GroupPtr qg = group_from_table(std::move(mul), g->label + "/N");
    GroupMap proj{g, qg, coset_of};
    return Quotient{qg, proj};
}

namespace {

struct IsoState {
    std::vector<int> img;     // source element -> target element or -1
    std::vector<int> pre;     // target element -> source element or -1
    std::vector<int> dom;     // assigned source elements (closed subgroup)
};

// Extends the partial isomorphism with gen -> h and closes under products.
bool extend_and_close(const FiniteGroup& G, const FiniteGroup& H, IsoState& st,
                      int gen, int h) {
    std::vector<std::pair<int, int>> queue;
    auto assign = [&](int a, int b) -> bool {
        if (st.img[a] >= 0) return st.img[a] == b;
        if (st.pre[b] >= 0) return false;
        st.img[a] = b;
        st.pre[b] = a;
        st.dom.push_back(a);
        queue.push_back({a, b});
        return true;
    };
    if (!assign(gen, h)) return st.img[gen] == h;
    while (!queue.empty()) {
        auto [a, fa] = queue.back();
        queue.pop_back();
        for (std::size_t i = 0; i < st.dom.size(); ++i) {
            int b = st.dom[i], fb = st.img[b];
            if (!assign(G.op(a, b), H.op(fa, fb))) return false;
            if (!assign(G.op(b, a), H.op(fb, fa))) return false;
        }
    }
    return true;
}

std::vector<int> generating_set(const FiniteGroup& g) {
    std::vector<int> gens;
    Bitset have = closure_of(g, Bitset(g.order));
    for (int a = 1; a < g.order; ++a) {
        if (have.test(a)) continue;
        gens.push_back(a);
        Bitset seed = have;
        seed.set(a);
        have = closure_of(g, seed);
        if (have.count() == g.order) break;
    }
    return gens;
}

template <class OnFound>
void iso_backtrack(const FiniteGroup& G, const FiniteGroup& H,
                   const std::vector<int>& gens, std::size_t level, IsoState& st,
                   OnFound&& found, bool& stop) {
    if (level == gens.size()) {
        if (int(st.dom.size()) == G.order) {
            std::vector<int> img = st.img;
            found(std::move(img));
        }
        return;
    }
    int gen = gens[level];
    for (int h = 0; h < H.order && !stop; ++h) {
        if (H.elem_order[h] != G.elem_order[gen]) continue;
        IsoState saved = st;
        if (extend_and_close(G, H, st, gen, h))
            iso_backtrack(G, H, gens, level + 1, st, found, stop);
        st = std::move(saved);
    }
}

bool same_signature(const FiniteGroup& g, const FiniteGroup& h) {
    if (g.order != h.order) return false;
    std::vector<int> og = g.elem_order, oh = h.elem_order;
    std::sort(og.begin(), og.end());
    std::sort(oh.begin(), oh.end());
    if (og != oh) return false;
    bool ag = is_abelian(g), ah = is_abelian(h);
    if (ag != ah) return false;
    if (ag) return abelian_invariants(g) == abelian_invariants(h);
    return center_of(g).count() == center_of(h).count();
}

} // namespace

std::optional<GroupMap> is_isomorphic(const GroupPtr& g, const GroupPtr& h,
                                      int order_cap) {
    if (g->order > order_cap || h->order > order_cap)
        throw cap_error("isomorphism test beyond order cap");
    if (!same_signature(*g, *h)) return std::nullopt;

    std::vector<int> gens = generating_set(*g);
    IsoState st;
    st.img.assign(g->order, -1);
    st.pre.assign(h->order, -1);
    st.img[0] = 0;
    st.pre[0] = 0;
    st.dom = {0};

    std::optional<GroupMap> result;
    bool stop = false;
    iso_backtrack(*g, *h, gens, 0, st,
                  [&](std::vector<int> img) {
                      result = GroupMap{g, h, std::move(img)};
                      stop = true;
                  },
                  stop);
    return result;
}

std::vector<GroupMap> all_automorphisms(const GroupPtr& g) {
    std::vector<int> gens = generating_set(*g);
    IsoState st;
    st.img.assign(g->order, -1);
    st.pre.assign(g->order, -1);
    st.img[0] = 0;
    st.pre[0] = 0;
    st.dom = {0};
    std::vector<GroupMap> out;
    bool stop = false;
    iso_backtrack(*g, *g, gens, 0, st,
                  [&](std::vector<int> img) { out.push_back(GroupMap{g, g, std::move(img)}); },
                  stop);
    return out;
}

std::optional<PdWitness> recognize_pseudodihedral(const FiniteGroup& g) {
    int n = g.order;
    if (n < 6 || n % 2) return std::nullopt;

    // Index-2 subgroups are pulled back from the maximal elementary abelian
    // 2-quotient G / <squares, commutators>.
    Bitset seed(n);
    for (int a = 0; a < n; ++a) {
        seed.set(g.op(a, a));
        for (int b = 0; b < n; ++b)
            seed.set(g.op(g.op(a, b), g.inv[g.op(b, a)]));
    }
    Bitset derived = closure_of(g, seed);
    if (derived.count() == n) return std::nullopt;

    // F2 coordinates on the quotient.
    GroupPtr self = std::make_shared<FiniteGroup>(g);
    Quotient q = quotient_group(self, derived);
    int m = q.group->order;
    std::vector<std::vector<char>> coords(m);
    coords[0] = {};
    std::vector<int> basis;
    Bitset spanned = Bitset::singleton(m, 0);
    for (int a = 1; a < m; ++a) {
        if (spanned.test(a)) continue;
        int bi = int(basis.size());
        basis.push_back(a);
        std::vector<int> old = spanned.elements();
        for (int s : old) {
            int t = q.group->op(s, a);
            spanned.set(t);
            coords[t] = coords[s];
            coords[t].resize(bi + 1, 0);
            coords[t][bi] = 1;
        }
    }
    int k = int(basis.size());
    for (auto& c : coords) c.resize(k, 0);

    std::vector<Bitset> candidates;
    for (unsigned lam = 1; lam < (1u << k); ++lam) {
        Bitset sub(n);
        for (int a = 0; a < n; ++a) {
            int dot = 0;
            const auto& c = coords[q.projection(a)];
            for (int i = 0; i < k; ++i)
                if ((lam >> i) & 1) dot ^= c[i];
            if (!dot) sub.set(a);
        }
        candidates.push_back(sub);
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });

    for (const Bitset& N : candidates) {
        if (2 * N.count() != n) continue;
        bool abelian = true;
        int involutions = 0;
        N.for_each([&](int a) {
            if (g.elem_order[a] == 2) ++involutions;
            if (!abelian) return;
            N.for_each([&](int b) {
                if (g.op(a, b) != g.op(b, a)) abelian = false;
            });
        });
        if (!abelian || involutions > 1) continue;
        for (int x = 1; x < n; ++x) {
            if (N.test(x) || g.elem_order[x] != 2) continue;
            bool inverts = true;
            N.for_each([&](int a) {
                if (g.conj(x, a) != g.inv[a]) inverts = false;
            });
            if (inverts) return PdWitness{x, N};
        }
    }
    return std::nullopt;
}

namespace {

GroupPtr group_on_subset(const FiniteGroup& parent, const Bitset& elems) {
    std::vector<int> to_parent = elems.elements();
    std::vector<int> from_parent(parent.order, -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i) from_parent[to_parent[i]] = int(i);
    int n = int(to_parent.size());
    std::vector<int> mul(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mul[a * n + b] = from_parent[parent.op(to_parent[a], to_parent[b])];
    return group_from_table(std::move(mul), "<subgroup>");
}

} // namespace

std::string structure_name(const FiniteGroup& g) {
    int n = g.order;
    if (n == 1) return "1";
    for (int a = 0; a < n; ++a)
        if (g.elem_order[a] == n) return "C" + std::to_string(n);
    if (is_abelian(g)) {
        auto inv = abelian_invariants(g);
        std::string s;
        for (std::size_t i = 0; i < inv.size(); ++i)
            s += (i ? "x" : "") + std::string("C") + std::to_string(inv[i]);
        return s;
    }
    if (auto pd = recognize_pseudodihedral(g)) {
        GroupPtr N = group_on_subset(g, pd->n);
        bool cyclic = false;
        for (int a = 0; a < N->order; ++a)
            if (N->elem_order[a] == N->order) cyclic = true;
        if (cyclic) return "D" + std::to_string(n);
        auto inv = abelian_invariants(*N);
        std::string s = "pd(";
        for (std::size_t i = 0; i < inv.size(); ++i)
            s += (i ? "," : "") + std::to_string(inv[i]);
        return s + ")";
    }
    return "G" + std::to_string(n);
}

} // namespace bxu
