#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "vfg/catalog.hpp"
#include "vfg/errors.hpp"
#include "vfg/group.hpp"

using namespace vfg;

namespace {

Presentation d8_presentation() {
    Presentation p;
    p.num_generators = 2;
    Word g = gen(1), h = gen(2);
    p.relators = {pow(g, 4), pow(h, 2), pow(g * h, 2)};
    return p;
}

}  // namespace

TEST_CASE("coset enumeration reproduces D8 from its presentation") {
    Group d8 = from_presentation(d8_presentation(), kDefaultCosetCap, "D8");
    CHECK(d8.order() == 8);
    CHECK(is_isomorphic(d8, builtin("D8").group));
    // generator images are exposed and satisfy the relators
    REQUIRE(d8.generators().size() == 2);
    int g = d8.generators()[0], h = d8.generators()[1];
    CHECK(element_order(d8, g) == 4);
    CHECK(element_order(d8, h) == 2);
    CHECK(element_order(d8, d8.mul(g, h)) == 2);
}

TEST_CASE("element numbering is deterministic across runs") {
    Group a = from_presentation(d8_presentation(), kDefaultCosetCap, "a");
    Group b = from_presentation(d8_presentation(), kDefaultCosetCap, "b");
    CHECK(a.table() == b.table());
    CHECK(a.generators() == b.generators());
}

TEST_CASE("degenerate and out-of-cap presentations") {
    SUBCASE("single relator a kills the generator") {
        Presentation p;
        p.num_generators = 1;
        p.relators = {gen(1)};
        CHECK(from_presentation(p, kDefaultCosetCap, "triv").order() == 1);
    }
    SUBCASE("free group exceeds any cap") {
        Presentation p;
        p.num_generators = 2;  // no relators
        CHECK_THROWS_AS(from_presentation(p, 4096, "free"), EnumerationCapError);
    }
    SUBCASE("odd-order result is rejected as a non-2-group") {
        Presentation p;
        p.num_generators = 1;
        p.relators = {pow(gen(1), 3)};  // C3
        CHECK_THROWS_AS(from_presentation(p, kDefaultCosetCap, "C3"), ValidationError);
    }
}

TEST_CASE("the four named presentations enumerate to their subscript orders") {
    CHECK(builtin("G16_3").group.order() == 16);
    CHECK(builtin("G16_4").group.order() == 16);
    CHECK(builtin("G32_2").group.order() == 32);
    CHECK(builtin("G32_6").group.order() == 32);
    // structural spot checks against the expected_structure annotations
    CHECK(nilpotency_class(builtin("G32_6").group) == 3);
    CHECK(center(builtin("G32_6").group).size() == 2);
    CHECK(derived_subgroup(builtin("G32_2").group).size() == 2);
}

TEST_CASE("builtin product expressions and error paths") {
    CHECK(builtin("D8xC2").group.order() == 16);
    CHECK(builtin("D8xD8").group.order() == 64);
    CHECK(builtin("C2xC2xC2").group.order() == 8);
    CHECK_THROWS(builtin("nope"));
    CHECK_THROWS(builtin("D8x"));
}

TEST_CASE("E64 is the Lemma-4 test bed it claims to be") {
    const Group& e = builtin("E64").group;
    CHECK(e.order() == 64);
    Subgroup d = derived_subgroup(e);
    CHECK(d.size() == 8);
    CHECK(is_central(d));
    CHECK(is_elementary_abelian(d));
}

TEST_CASE("cyclic_group matches the builtin cyclic entries") {
    CHECK(cyclic_group(8, "C8").table() == builtin("C8").group.table());
    CHECK(cyclic_group(1, "triv").order() == 1);
}

TEST_CASE("Cayley table round-trips bit-exactly") {
    for (const char* name : {"D8", "G32_6"}) {
        CatalogEntry entry = builtin(name);
        std::string path = std::string("/tmp/vfg_roundtrip_") + name + ".tbl";
        save_cayley_table(entry, path);
        CatalogEntry back = load_cayley_table(path);
        CHECK(back.group.table() == entry.group.table());
        CHECK(back.group.order() == entry.group.order());
        std::remove(path.c_str());
    }
}

TEST_CASE("table parser reports the failing line") {
    SUBCASE("bad header") {
        std::istringstream in("orderx 4\n");
        try {
            read_cayley_table(in, "t");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 1);
        }
    }
    SUBCASE("short row") {
        std::istringstream in("order 2\n0 1\n1\n");
        try {
            read_cayley_table(in, "t");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
        }
    }
    SUBCASE("non-numeric cell") {
        std::istringstream in("order 2\n0 1\n1 q\n");
        CHECK_THROWS_AS(read_cayley_table(in, "t"), ParseError);
    }
}

TEST_CASE("presentation text format: powers, inverses, commutator sugar") {
    std::istringstream in(
        "gens 2\n"
        "g1^4\n"
        "g2^2\n"
        "[g1,g2] G1 G1\n");  // (g1,g2) g1^-2, i.e. commutator = g1^2
    Presentation p = read_presentation(in);
    Group g = from_presentation(p, kDefaultCosetCap, "D8-from-text");
    CHECK(g.order() == 8);
    CHECK(is_isomorphic(g, builtin("D8").group));
}

TEST_CASE("presentation parser rejects malformed words with line numbers") {
    SUBCASE("unknown generator index") {
        std::istringstream in("gens 1\ng2\n");
        try {
            read_presentation(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("dangling caret") {
        std::istringstream in("gens 1\ng1^\n");
        CHECK_THROWS_AS(read_presentation(in), ParseError);
    }
    SUBCASE("unclosed bracket") {
        std::istringstream in("gens 2\n[g1,g2\n");
        CHECK_THROWS_AS(read_presentation(in), ParseError);
    }
}

TEST_CASE("default catalog is sorted and order-verified") {
    auto catalog = default_catalog();
    REQUIRE(!catalog.empty());
    for (std::size_t i = 1; i < catalog.size(); ++i) {
        auto ka = std::pair(catalog[i - 1].group.order(), catalog[i - 1].name);
        auto kb = std::pair(catalog[i].group.order(), catalog[i].name);
        CHECK(ka < kb);
    }
    for (const CatalogEntry& e : catalog) {
        CAPTURE(e.name);
        if (e.expected_order) CHECK(e.group.order() == *e.expected_order);
    }
}
