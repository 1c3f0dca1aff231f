#include <doctest.h>

#include "bxu/functors.hpp"
#include "bxu/simple_form.hpp"
#include "bxu/units.hpp"

using namespace bxu;

namespace {

LatticePtr lattice_of(const std::string& spec) {
    return subgroup_lattice(construct_group(spec));
}

} // namespace

TEST_CASE("section bases") {
    auto c2 = lattice_of("cyclic:2");
    CHECK(section_basis(*c2, construct_group("cyclic:1")).size() == 2);

    auto d10 = lattice_of("dihedral:5");
    CHECK(section_basis(*d10, construct_group("dihedral:5")).size() == 1);

    auto d6 = lattice_of("dihedral:3");
    CHECK(section_basis(*d6, construct_group("cyclic:3")).size() == 1);

    // no sections of the wrong shape
    CHECK(section_basis(*d6, construct_group("cyclic:4")).empty());
}

TEST_CASE("linkedness") {
    auto c2 = lattice_of("cyclic:2");
    const FiniteGroup& g = *c2->group;
    Bitset one(2), all(2);
    one.set(0);
    all.set(0);
    all.set(1);
    CHECK(linked(g, SectionPair{all, one}, SectionPair{all, one}));
    CHECK(linked(g, SectionPair{all, all}, SectionPair{one, one}));

    // some pair of Klein-four sections of D8 is not linked
    auto d8 = lattice_of("dihedral:4");
    auto v4s = section_basis(*d8, construct_group("abelian:2,2"));
    bool found_unlinked = false;
    for (const auto& a : v4s)
        for (const auto& b : v4s)
            if (!linked(*d8->group, a, b)) found_unlinked = true;
    CHECK(found_unlinked);
}

TEST_CASE("gram matrix for the trivial pattern on C2") {
    auto c2 = lattice_of("cyclic:2");
    GramMatrixF2 m = gram_matrix(*c2, construct_group("cyclic:1"));
    REQUIRE(m.basis.size() == 2);
    CHECK_FALSE(m.rows[0].test(0)); // |1\C2/1| = 2
    CHECK(m.rows[0].test(1));
    CHECK(m.rows[1].test(0));
    CHECK(m.rows[1].test(1));
    CHECK(m.rank() == 2);
}

TEST_CASE("gram matrices are symmetric") {
    GroupPtr trivial = construct_group("cyclic:1");
    GroupPtr c2 = construct_group("cyclic:2");
    for (const char* spec : {"dihedral:4", "dihedral:5", "pd:2,3", "cyclic:6"}) {
        auto lat = lattice_of(spec);
        for (const GroupPtr& pattern : {trivial, c2}) {
            GramMatrixF2 m = gram_matrix(*lat, pattern);
            for (std::size_t i = 0; i < m.basis.size(); ++i)
                for (std::size_t j = 0; j < m.basis.size(); ++j)
                    CHECK(m.rows[i].test(int(j)) == m.rows[j].test(int(i)));
        }
    }
}

TEST_CASE("gram rank values") {
    CHECK(gram_rank(*lattice_of("abelian:2,2"), construct_group("cyclic:1")) == 4);
    CHECK(gram_rank(*lattice_of("dihedral:15"), construct_group("dihedral:5")) == 1);
    CHECK(gram_rank(*lattice_of("dihedral:6"), construct_group("dihedral:5")) == 0);
}

TEST_CASE("gram rank of the trivial pattern matches the exponential image") {
    GroupPtr trivial = construct_group("cyclic:1");
    for (const char* spec :
         {"cyclic:2", "cyclic:6", "dihedral:3", "dihedral:4", "dihedral:5", "pd:2,3"}) {
        auto lat = lattice_of(spec);
        CHECK(gram_rank(*lat, trivial) == exponential_image(lat).dim());
    }
}

TEST_CASE("gram rank is one at a residual group itself") {
    for (const char* spec : {"dihedral:5", "dihedral:8", "pd:1,3,3", "pd:4,3"}) {
        auto lat = lattice_of(spec);
        CHECK(gram_rank(*lat, lat->group) == 1);
    }
}

TEST_CASE("gram rank agrees with the subfunctor route") {
    struct Pair {
        const char* g;
        const char* h;
    };
    const Pair pairs[] = {
        {"dihedral:5", "dihedral:5"},
        {"dihedral:5", "dihedral:10"},
        {"dihedral:5", "dihedral:15"},
        {"cyclic:1", "dihedral:6"},
        {"cyclic:1", "dihedral:7"},
    };
    for (const Pair& p : pairs) {
        GroupPtr g = construct_group(p.g);
        auto lat = lattice_of(p.h);
        CHECK(gram_rank(*lat, g) == simple_dim(g, lat));
    }
}
