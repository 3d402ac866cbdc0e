#include <doctest.h>

#include "helpers.hpp"
#include "ope/complex.hpp"
#include "ope/fixtures.hpp"

using namespace ope;

TEST_CASE("fixture complexes validate at their kinds") {
    CHECK(validate_complex(fixtures::T1()).ok());
    CHECK(validate_complex(fixtures::T2()).ok());
    Complex t3 = fixtures::T3();
    CHECK(validate_complex(t3).ok());
    CHECK(t3.dim() == 3);

    Complex thk = fixtures::THK();
    CHECK(validate_complex(thk).ok());
    Complex as_tree = thk;
    as_tree.kind = ComplexKind::Tree;
    ValidationReport rep = validate_complex(as_tree);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("a two-point bottom level is rejected") {
    Complex bad = fixtures::T2();
    bad.levels[0] = Poset::from_covers({"t3", "tx"}, {});
    bad.sigmas[0] = {{0, 1}, {0, 1}};
    ValidationReport rep = validate_complex(bad);
    CHECK_FALSE(rep.ok());
    CHECK(rep.has("t0-not-singleton"));
}

TEST_CASE("size sequences count maximal elements") {
    CHECK(size_of(fixtures::T3()) == std::vector<int>{1, 1, 1, 1});
    CHECK(size_of(fixtures::THK()) == std::vector<int>{1, 1, 2});
    Complex point;
    point.kind = ComplexKind::Tree;
    point.levels = {Poset::from_covers({"pt"}, {})};
    CHECK(size_of(point) == std::vector<int>{1});
    CHECK(validate_complex(point).ok());
}

TEST_CASE("the printed morphism F32* validates; perturbing it does not") {
    ComplexMorphism f = fixtures::F32_dual();
    CHECK(validate_complex_morphism(f).ok());

    CHECK(validate_complex_morphism(identity_morphism(fixtures::T3())).ok());

    ComplexMorphism bad = f;
    bad.maps[2] = {bad.target.levels[2].index_of("b3")};
    CHECK_FALSE(validate_complex_morphism(bad).ok());
}

TEST_CASE("composition has identities on both sides") {
    ComplexMorphism f = fixtures::F32_dual();
    ComplexMorphism ids = identity_morphism(f.source);
    ComplexMorphism idt = identity_morphism(f.target);
    CHECK(compose_complex_morphisms(f, ids) == f);
    CHECK(compose_complex_morphisms(idt, f) == f);
    CHECK_THROWS_AS(compose_complex_morphisms(f, f), std::invalid_argument);
}

TEST_CASE("isomorphism finds witnesses across renamings only") {
    Complex t3 = fixtures::T3();
    Complex renamed = t3;
    for (Poset& lv : renamed.levels) {
        std::vector<std::string> names;
        for (const std::string& n : lv.names()) names.push_back("K" + n);
        std::vector<std::pair<std::string, std::string>> covers;
        for (auto [c, p] : lv.cover_pairs())
            covers.emplace_back("K" + lv.name(c), "K" + lv.name(p));
        lv = Poset::from_covers(names, covers);
    }
    auto witness = complexes_isomorphic(t3, renamed);
    REQUIRE(witness.has_value());
    // the witness is a morphism in both directions
    ComplexMorphism m{t3, renamed, *witness};
    CHECK(validate_complex_morphism(m).ok());

    CHECK_FALSE(complexes_isomorphic(fixtures::T2(), fixtures::T3()).has_value());
}

TEST_CASE("truncations keep every constellation clause") {
    Complex t3 = fixtures::T3();
    for (int k = 0; k < t3.dim(); ++k) {
        Complex trunc;
        trunc.kind = ComplexKind::Thicket;  // no top-singleton requirement
        trunc.levels.assign(t3.levels.begin(), t3.levels.begin() + k + 1);
        trunc.sigmas.assign(t3.sigmas.begin(), t3.sigmas.begin() + k);
        CHECK(validate_complex(trunc).ok());
    }
}

TEST_CASE("node names may not repeat across levels") {
    Complex c;
    c.kind = ComplexKind::Tree;
    c.levels = {Poset::from_covers({"x"}, {}), Poset::from_covers({"x"}, {})};
    c.sigmas = {{{0}}};
    ValidationReport rep = validate_complex(c);
    CHECK_FALSE(rep.ok());
    CHECK(rep.has("node-name-reused"));
}
