#include <doctest.h>

#include <random>

#include "bxu/burnside.hpp"

using namespace bxu;

namespace {

BurnsideElement basis_elem(int k, int idx) {
    BurnsideElement b;
    b.coeffs.assign(k, 0);
    b.coeffs[idx] = 1;
    return b;
}

} // namespace

TEST_CASE("table of marks for C2 and D6") {
    auto c2 = subgroup_lattice(construct_group("cyclic:2"));
    MarkMatrix m = table_of_marks(*c2);
    CHECK(m.at(0, 0) == 2);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(1, 0) == 0);
    CHECK(m.at(1, 1) == 1);

    auto d6 = subgroup_lattice(construct_group("dihedral:3"));
    MarkMatrix md = table_of_marks(*d6);
    // row of the trivial class: sizes of G/K
    CHECK(md.at(0, 0) == 6);
    CHECK(md.at(0, 1) == 3);
    CHECK(md.at(0, 2) == 2);
    CHECK(md.at(0, 3) == 1);

    GhostVector free_orbit = marks_of(m, basis_elem(2, 0)); // [C2/1]
    CHECK(free_orbit.values == std::vector<Int>{2, 0});
    GhostVector point = marks_of(m, basis_elem(2, 1)); // [C2/C2]
    CHECK(point.values == std::vector<Int>{1, 1});
}

TEST_CASE("mark matrix triangularity and diagonal") {
    for (const char* spec : {"dihedral:6", "pd:1,3,3", "pd:4,3", "cyclic:6", "dihedral:4"}) {
        auto lat = subgroup_lattice(construct_group(spec));
        MarkMatrix m = table_of_marks(*lat);
        int k = m.size();
        CHECK(m.at(k - 1, k - 1) == 1); // m[G][G] = [N_G(G):G] = 1
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) {
                if (m.at(r, c) != 0) CHECK(lat->leq_conj[r][c]);
                if (r == c) {
                    int expected =
                        lat->subgroups[lat->class_normalizer[c]].order / lat->rep(c).order;
                    CHECK(m.at(r, c) == expected);
                }
                if (r > c) CHECK(m.at(r, c) == 0);
            }
    }
}

TEST_CASE("marks are a ring homomorphism on products of basis elements") {
    std::mt19937 rng(7);
    for (const char* spec : {"dihedral:3", "dihedral:6", "pd:4,3", "cyclic:12"}) {
        auto lat = subgroup_lattice(construct_group(spec));
        MarkMatrix m = table_of_marks(*lat);
        int k = lat->num_classes();
        for (int trial = 0; trial < 8; ++trial) {
            int i = int(rng() % k), j = int(rng() % k);
            BurnsideElement prod = multiply(*lat, basis_elem(k, i), basis_elem(k, j));
            GhostVector lhs = marks_of(m, prod);
            GhostVector a = marks_of(m, basis_elem(k, i));
            GhostVector b = marks_of(m, basis_elem(k, j));
            for (int c = 0; c < k; ++c) CHECK(lhs.values[c] == a.values[c] * b.values[c]);
        }
    }
}

TEST_CASE("ghost solve on D10 matches the displayed coefficients") {
    auto lat = subgroup_lattice(construct_group("dihedral:5"));
    REQUIRE(lat->num_classes() == 4); // 1, I, C5, G
    MarkMatrix m = table_of_marks(*lat);

    GhostVector ones;
    ones.values.assign(4, 1);
    auto sol = ghost_solve(m, ones);
    REQUIRE(sol.has_value());
    CHECK(sol->coeffs == std::vector<Int>{0, 0, 0, 1}); // [G/G]

    GhostVector phi;
    phi.values = {1, -1, 1, 1};
    auto sphi = ghost_solve(m, phi);
    REQUIRE(sphi.has_value());
    CHECK(sphi->coeffs == std::vector<Int>{1, -2, 0, 1}); // [G/G]+[G/1]-2[G/I]

    GhostVector bad;
    bad.values = {-1, 1, 1, 1};
    CHECK_FALSE(ghost_solve(m, bad).has_value());
}

TEST_CASE("ghost solve round trips") {
    std::mt19937 rng(11);
    for (const char* spec : {"dihedral:6", "pd:1,3,3", "cyclic:6"}) {
        auto lat = subgroup_lattice(construct_group(spec));
        MarkMatrix m = table_of_marks(*lat);
        int k = lat->num_classes();
        for (int trial = 0; trial < 16; ++trial) {
            BurnsideElement b;
            b.coeffs.resize(k);
            for (int i = 0; i < k; ++i) b.coeffs[i] = int(rng() % 9) - 4;
            auto back = ghost_solve(m, marks_of(m, b));
            REQUIRE(back.has_value());
            CHECK(back->coeffs == b.coeffs);
        }
    }
}

TEST_CASE("Moebius values") {
    for (int p : {3, 5}) {
        auto lat = subgroup_lattice(construct_group("cyclic:" + std::to_string(p)));
        MobiusTable t = mobius(*lat, PosetKind::Subgroups);
        CHECK(t.value(0, 1) == -1); // two-element chain
    }
    auto v4 = subgroup_lattice(construct_group("abelian:2,2"));
    MobiusTable tv = mobius(*v4, PosetKind::Subgroups);
    CHECK(tv.value(0, v4->num_subgroups() - 1) == 2);
}

TEST_CASE("Moebius interval sums vanish in both posets") {
    auto d8 = subgroup_lattice(construct_group("dihedral:4"));
    for (PosetKind kind : {PosetKind::Subgroups, PosetKind::NormalSubgroups}) {
        MobiusTable t = mobius(*d8, kind);
        const auto& nodes = t.nodes();
        for (int lo : nodes)
            for (int hi : nodes) {
                if (lo == hi) {
                    CHECK(t.value(lo, hi) == 1);
                    continue;
                }
                if (!d8->subgroups[lo].elems.subset_of(d8->subgroups[hi].elems)) continue;
                Int sum = 0;
                for (int z : nodes)
                    if (d8->subgroups[lo].elems.subset_of(d8->subgroups[z].elems) &&
                        d8->subgroups[z].elems.subset_of(d8->subgroups[hi].elems))
                        sum += t.value(lo, z);
                CHECK(sum == 0);
            }
    }
}

TEST_CASE("Gluck idempotents") {
    auto c2 = subgroup_lattice(construct_group("cyclic:2"));
    MobiusTable mu2 = mobius(*c2, PosetKind::Subgroups);
    RationalIdempotent e = gluck_idempotent(*c2, mu2, 1);
    CHECK(e.coeffs[0] == Rat(-1, 2));
    CHECK(e.coeffs[1] == 1);

    for (const char* spec : {"dihedral:3", "dihedral:4"}) {
        auto lat = subgroup_lattice(construct_group(spec));
        MarkMatrix m = table_of_marks(*lat);
        MobiusTable mu = mobius(*lat, PosetKind::Subgroups);
        int k = lat->num_classes();

        // e^G_1 = [G/1]/|G|
        RationalIdempotent e1 = gluck_idempotent(*lat, mu, 0);
        CHECK(e1.coeffs[0] == Rat(1, lat->group->order));
        for (int c = 1; c < k; ++c) CHECK(e1.coeffs[c] == 0);

        // marks_of(e^G_H) is the indicator vector of class H
        for (int h = 0; h < k; ++h) {
            RationalIdempotent eh = gluck_idempotent(*lat, mu, h);
            std::vector<Rat> ghost = marks_of_rational(m, eh.coeffs);
            for (int c = 0; c < k; ++c) CHECK(ghost[c] == (c == h ? 1 : 0));
        }
    }
}

TEST_CASE("f^G_N term lists") {
    auto c2 = subgroup_lattice(construct_group("cyclic:2"));
    MobiusTable mu = mobius(*c2, PosetKind::NormalSubgroups);
    FNIdempotent fG = fn_idempotent(*c2, mu, 1);
    REQUIRE(fG.terms.size() == 1);
    CHECK(fG.terms[0].second == 1);
    FNIdempotent f1 = fn_idempotent(*c2, mu, 0);
    REQUIRE(f1.terms.size() == 2);
    CHECK(f1.terms[0].second == 1);  // (1, +1)
    CHECK(f1.terms[1].second == -1); // (C2, -1)

    // D10: normal poset 1 < C5 < G gives (1, -1, 0)
    auto d10 = subgroup_lattice(construct_group("dihedral:5"));
    MobiusTable mud = mobius(*d10, PosetKind::NormalSubgroups);
    FNIdempotent f = fn_idempotent(*d10, mud, 0);
    REQUIRE(f.terms.size() == 3);
    CHECK(f.terms[0].second == 1);
    CHECK(f.terms[1].second == -1);
    CHECK(f.terms[2].second == 0);
}
