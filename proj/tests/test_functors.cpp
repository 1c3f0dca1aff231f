#include <doctest.h>

#include "bxu/errors.hpp"
#include "bxu/functors.hpp"
#include "support.hpp"

using namespace bxu;

namespace {

LatticePtr lattice_of(const std::string& spec) {
    return subgroup_lattice(construct_group(spec));
}

ResidualSet closure_of_spec(const std::string& spec) {
    return residual_closure({construct_group(spec)});
}

std::vector<std::string> member_labels(const ResidualSet& s) {
    std::vector<std::string> out;
    for (const auto& m : s.members) out.push_back(m.label());
    return out;
}

} // namespace

TEST_CASE("boundary subspaces") {
    CHECK(boundary_subspace(lattice_of("cyclic:1")).dim() == 0);
    CHECK(boundary_subspace(lattice_of("dihedral:4")).dim() == 5); // all of B^x(D8)
    CHECK(boundary_subspace(lattice_of("dihedral:5")).dim() == 2); // proper subspace
}

TEST_CASE("residual classification agrees with brute force") {
    struct Row {
        const char* spec;
        bool residual;
        ResidualReason reason;
    };
    const Row rows[] = {
        {"cyclic:1", true, ResidualReason::Trivial},
        {"cyclic:2", false, ResidualReason::NotPdOrTrivial},
        {"dihedral:3", false, ResidualReason::PThreeMod4},
        {"dihedral:5", true, ResidualReason::D2pOneMod4},
        {"dihedral:7", false, ResidualReason::PThreeMod4},
        {"dihedral:11", false, ResidualReason::PThreeMod4},
        {"dihedral:13", true, ResidualReason::D2pOneMod4},
        {"dihedral:4", false, ResidualReason::ExcludedD8},
        {"pd:2,3", false, ResidualReason::N2IsTwo},
        {"pd:1,9", false, ResidualReason::HasQSquared},
        {"pd:1,3,3", true, ResidualReason::PdCompositeOk},
        {"pd:4,3", true, ResidualReason::PdCompositeOk},
        {"dihedral:8", true, ResidualReason::PdCompositeOk},
    };
    for (const Row& r : rows) {
        auto lat = lattice_of(r.spec);
        ClassifierVerdict v = classify_residual(*lat->group);
        CHECK(v.residual == r.residual);
        CHECK(v.reason == r.reason);
        CHECK(is_residual(lat) == r.residual);
    }
}

TEST_CASE("residual subquotients") {
    CHECK(member_labels(residual_subquotients(lattice_of("dihedral:10"))) ==
          std::vector<std::string>{"1", "D10"});
    CHECK(member_labels(residual_subquotients(lattice_of("dihedral:6"))) ==
          std::vector<std::string>{"1"});
    CHECK(member_labels(residual_subquotients(lattice_of("dihedral:8"))) ==
          std::vector<std::string>{"1", "D16"});
}

TEST_CASE("residual closure") {
    CHECK(member_labels(closure_of_spec("cyclic:1")) == std::vector<std::string>{"1"});
    CHECK(member_labels(closure_of_spec("dihedral:5")) ==
          std::vector<std::string>{"1", "D10"});
    CHECK(member_labels(closure_of_spec("pd:1,3,3")) ==
          std::vector<std::string>{"1", "pd(3,3)"});
}

TEST_CASE("residual sets are closed under residual subquotients") {
    for (const char* spec : {"dihedral:10", "dihedral:8", "pd:1,3,3", "pd:4,3"}) {
        ResidualSet s = residual_subquotients(lattice_of(spec));
        for (const auto& m : s.members) {
            ResidualSet inner = residual_subquotients(subgroup_lattice(m.realize()));
            for (const auto& x : inner.members) CHECK(s.contains(x));
        }
    }
}

TEST_CASE("subfunctor values") {
    ResidualSet trivial_only = closure_of_spec("cyclic:1");
    CHECK(subfunctor_value(trivial_only, lattice_of("dihedral:3"),
                           SubfunctorMethod::Basis)
              .dim() == 3);
    CHECK(subfunctor_value(trivial_only, lattice_of("dihedral:5"),
                           SubfunctorMethod::Basis)
              .dim() == 2);
    CHECK(subfunctor_value(closure_of_spec("dihedral:5"), lattice_of("dihedral:5"),
                           SubfunctorMethod::Basis)
              .dim() == 3);

    // empty set gives the zero subfunctor
    ResidualSet empty;
    CHECK(subfunctor_value(empty, lattice_of("dihedral:5"), SubfunctorMethod::Basis)
              .dim() == 0);
    CHECK(subfunctor_value(empty, lattice_of("dihedral:5"), SubfunctorMethod::Generate)
              .dim() == 0);
}

TEST_CASE("basis and generate methods agree") {
    std::vector<ResidualSet> sets = {closure_of_spec("cyclic:1"),
                                     closure_of_spec("dihedral:5"),
                                     closure_of_spec("dihedral:8"),
                                     closure_of_spec("pd:1,3,3")};
    for (const char* spec : {"dihedral:5", "dihedral:6", "dihedral:8", "dihedral:10",
                             "pd:1,3,3", "cyclic:6", "dihedral:5 x cyclic:3"}) {
        auto lat = lattice_of(spec);
        for (const ResidualSet& i : sets) {
            UnitSubspace a = subfunctor_value(i, lat, SubfunctorMethod::Basis);
            UnitSubspace b = subfunctor_value(i, lat, SubfunctorMethod::Generate);
            CHECK(a.dim() == b.dim());
            CHECK(a.span.contains_span(b.span));
        }
    }
}

TEST_CASE("subfunctor monotonicity and separation") {
    ResidualSet i0; // empty
    ResidualSet i1 = closure_of_spec("cyclic:1");
    ResidualSet i2 = closure_of_spec("dihedral:5");
    auto d20 = lattice_of("dihedral:10");
    UnitSubspace v0 = subfunctor_value(i0, d20, SubfunctorMethod::Basis);
    UnitSubspace v1 = subfunctor_value(i1, d20, SubfunctorMethod::Basis);
    UnitSubspace v2 = subfunctor_value(i2, d20, SubfunctorMethod::Basis);
    CHECK(v1.span.contains_span(v0.span));
    CHECK(v2.span.contains_span(v1.span));
    CHECK(v0.dim() < v1.dim());
    CHECK(v1.dim() < v2.dim());

    // F_I(X) is everything exactly when X is in I
    for (const ResidualSet& i : {i1, i2})
        for (const auto& m : i2.members) {
            auto latX = subgroup_lattice(m.realize());
            bool full = subfunctor_value(i, latX, SubfunctorMethod::Basis).dim() ==
                        unit_group(latX).dim();
            CHECK(full == i.contains(m));
        }
}

TEST_CASE("simple dimensions via subfunctors") {
    GroupPtr d10 = construct_group("dihedral:5");
    CHECK(simple_dim(d10, lattice_of("dihedral:5")) == 1);
    CHECK(simple_dim(d10, lattice_of("dihedral:15")) == 1);
    CHECK(simple_dim(d10, lattice_of("dihedral:6")) == 0);
    CHECK(simple_dim(construct_group("cyclic:1"), lattice_of("dihedral:5")) == 2);
    CHECK_THROWS_AS(simple_dim(construct_group("dihedral:3"), lattice_of("dihedral:6")),
                    domain_error);
}

TEST_CASE("closed-form dimensions") {
    CHECK(s_formula(1) == 2);
    CHECK(s_formula(2) == 4);
    CHECK(s_formula(3) == 3);
    CHECK(s_formula(5) == 2);
    CHECK(s_formula(6) == 6);

    CHECK(dihedral_residual(5));
    CHECK(dihedral_residual(8));
    CHECK(dihedral_residual(12));
    CHECK(dihedral_residual(15));
    CHECK_FALSE(dihedral_residual(3));
    CHECK_FALSE(dihedral_residual(4));
    CHECK_FALSE(dihedral_residual(6));
    CHECK_FALSE(dihedral_residual(9));
    CHECK_FALSE(dihedral_residual(10));

    CHECK(dihedral_simple_dim(5, 5) == 1);
    CHECK(dihedral_simple_dim(5, 10) == 2);
    CHECK(dihedral_simple_dim(5, 15) == 1);
    CHECK(dihedral_simple_dim(5, 12) == 0);
    CHECK(dihedral_simple_dim(8, 16) == 1);
    CHECK(dihedral_simple_dim(5, 25) == 2); // v_5(25) = 2, odd k
    CHECK_THROWS_AS(dihedral_simple_dim(6, 12), domain_error);
}

TEST_CASE("composition factors") {
    auto factors = composition_factors_over(lattice_of("dihedral:6"));
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].first.label() == "1");
    CHECK(factors[0].second == 1);

    auto f20 = composition_factors_over(lattice_of("dihedral:10"));
    REQUIRE(f20.size() == 2);
    CHECK(f20[0].first.label() == "1");
    CHECK(f20[1].first.label() == "D10");

    auto ft = composition_factors_over(lattice_of("cyclic:1"));
    REQUIRE(ft.size() == 1);
    CHECK(ft[0].first.label() == "1");
}

TEST_CASE("exponential surjectivity routes agree") {
    CHECK(expo_surjective_dihedral(3));
    CHECK_FALSE(expo_surjective_dihedral(5));
    CHECK_FALSE(expo_surjective_dihedral(12));
    for (int n = 3; n <= 15; ++n) {
        auto lat = lattice_of("dihedral:" + std::to_string(n));
        CHECK(expo_surjective(lat) == expo_surjective_dihedral(n));
    }
}

TEST_CASE("exponential image equals the trivial-closure subfunctor value") {
    ResidualSet trivial_only = closure_of_spec("cyclic:1");
    for (const char* spec : {"dihedral:3", "dihedral:5", "dihedral:6", "cyclic:6",
                             "pd:2,3", "dihedral:5 x cyclic:3"}) {
        auto lat = lattice_of(spec);
        UnitSubspace img = exponential_image(lat);
        UnitSubspace val = subfunctor_value(trivial_only, lat, SubfunctorMethod::Basis);
        CHECK(img.dim() == val.dim());
        CHECK(img.span.contains_span(val.span));
    }
}
