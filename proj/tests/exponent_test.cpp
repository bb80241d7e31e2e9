#include <cstdint>

#include "doctest.h"
#include "vfg/catalog.hpp"
#include "vfg/errors.hpp"
#include "vfg/exponent.hpp"
#include "vfg/rng.hpp"

using namespace vfg;

namespace {

// Brute-force exponent of V(FG) with the slow (vector-based) algebra path:
// independent of the word-level engine under test. Only sane for order <= 16.
int brute_force_exponent(const Group& g) {
    int n = g.order();
    int best = 1;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
        AlgebraElement x(g);
        for (int e = 1; e < n; ++e)
            if ((bits >> (e - 1)) & 1) x.flip(e);
        if (!is_unit(x)) x.flip(0);
        best = std::max(best, unit_order(x));
    }
    return best;
}

}  // namespace

TEST_CASE("WordAlgebra mirrors the slow algebra on random inputs") {
    for (const char* name : {"D8", "G16_3", "G32_6"}) {
        const Group& g = builtin(name).group;
        CAPTURE(name);
        WordAlgebra wa(g);
        SplitMix64 rng(0x0a1c + g.order());
        for (int t = 0; t < 3000; ++t) {
            std::uint64_t x = rng.next() & wa.element_mask();
            std::uint64_t y = rng.next() & wa.element_mask();
            CHECK(wa.square(x) == wa.from_element(square(wa.to_element(x))));
            CHECK(wa.mul(x, y) == wa.from_element(mul(wa.to_element(x), wa.to_element(y))));
            int e = static_cast<int>(rng.below(g.order()));
            CHECK(wa.translate_right(x, e) ==
                  wa.from_element(mul(wa.to_element(x), AlgebraElement::basis(g, e))));
            CHECK(wa.translate_left(x, e) ==
                  wa.from_element(mul(AlgebraElement::basis(g, e), wa.to_element(x))));
        }
    }
}

TEST_CASE("flip_update keeps x^2 consistent along a random walk") {
    const Group& g = builtin("G32_2").group;
    WordAlgebra wa(g);
    SplitMix64 rng(0xf11b);
    std::uint64_t x = 0, x2 = 0;
    for (int t = 0; t < 5000; ++t) {
        int e = static_cast<int>(rng.below(g.order()));
        wa.flip_update(x, x2, e);
        CHECK(x2 == wa.square(x));
    }
}

TEST_CASE("exhaustive engine equals brute force at small orders") {
    for (const char* name : {"C2", "C4", "C8", "D8", "Q8", "C4xC2", "G16_3", "G16_4"}) {
        const Group& g = builtin(name).group;
        CAPTURE(name);
        ExponentResult r = exponent_exhaustive(g);
        CHECK(r.exact);
        CHECK(r.exponent == brute_force_exponent(g));
        REQUIRE(r.witness.has_value());
        CHECK(unit_order(*r.witness) == r.exponent);
        CHECK(r.samples == (std::uint64_t{1} << (g.order() - 1)));
    }
}

TEST_CASE("exhaustive values for the named groups") {
    CHECK(exponent_exhaustive(builtin("D8").group).exponent == 4);
    CHECK(exponent_exhaustive(builtin("Q8").group).exponent == 4);
    CHECK(exponent_exhaustive(builtin("G16_3").group).exponent == 4);
    CHECK(exponent_exhaustive(builtin("G16_4").group).exponent == 4);
    CHECK(exponent_exhaustive(builtin("C8").group).exponent == 8);
    CHECK(exponent_exhaustive(builtin("C4xC4").group).exponent == 4);
}

TEST_CASE("exhaustive engine is deterministic across thread counts") {
    const Group& g = builtin("G16_3").group;
    EngineOptions one, three;
    one.threads = 1;
    three.threads = 3;
    ExponentResult a = exponent_exhaustive(g, one);
    ExponentResult b = exponent_exhaustive(g, three);
    CHECK(a.exponent == b.exponent);
    CHECK(*a.witness == *b.witness);
}

TEST_CASE("order cap is enforced") {
    CHECK_THROWS_AS(exponent_exhaustive(builtin("D8xD8").group), SizeLimitError);
    CHECK_THROWS_AS(check_exponent_divides_4(builtin("E64").group), SizeLimitError);
}

TEST_CASE("divides-4 walk: verdicts and deterministic counterexamples") {
    SUBCASE("D8 passes") {
        Divides4Result r = check_exponent_divides_4(builtin("D8").group);
        CHECK(r.divides);
        CHECK(!r.counterexample.has_value());
        CHECK(r.checked == 128);  // all 2^7 augmentation-0 vectors
    }
    SUBCASE("C8 fails with a unit of order 8") {
        CatalogEntry c8 = builtin("C8");
        Divides4Result r = check_exponent_divides_4(c8.group);
        CHECK(!r.divides);
        REQUIRE(r.counterexample.has_value());
        CHECK(unit_order(*r.counterexample) == 8);
    }
    SUBCASE("counterexample does not depend on the thread count") {
        EngineOptions one, four;
        one.threads = 1;
        four.threads = 4;
        CatalogEntry g326 = builtin("G32_6");
        Divides4Result a = check_exponent_divides_4(g326.group, one);
        Divides4Result b = check_exponent_divides_4(g326.group, four);
        CHECK(!a.divides);
        CHECK(!b.divides);
        CHECK(*a.counterexample == *b.counterexample);
    }
}

TEST_CASE("sampling: reproducible, thread-independent, bounded by the truth") {
    const Group& g = builtin("G16_3").group;
    EngineOptions one, two;
    one.threads = 1;
    two.threads = 2;
    ExponentResult a = exponent_sampled(g, 4000, 0xcafe, one);
    ExponentResult b = exponent_sampled(g, 4000, 0xcafe, two);
    CHECK(a.exponent == b.exponent);
    CHECK(*a.witness == *b.witness);
    CHECK(!a.exact);
    CHECK(a.exponent <= exponent_exhaustive(g).exponent);
    // enough samples find the true exponent of this 2^15-unit space
    CHECK(a.exponent == 4);

    ExponentResult c = exponent_sampled(g, 4000, 0xbeef, one);
    CHECK(c.exponent == a.exponent);  // value is stable even across seeds here
}

TEST_CASE("sampled lower bound sees order 8 in G32_6") {
    CHECK(exponent_sampled(builtin("G32_6").group, 2000, 7).exponent == 8);
}

TEST_CASE("witness search") {
    SUBCASE("C8: the generator itself is a unit of order 8") {
        CatalogEntry c8 = builtin("C8");
        auto w = find_order_witness(c8.group, 8, WitnessStrategy::sparse_first);
        REQUIRE(w.has_value());
        CHECK(unit_order(*w) >= 8);
        CHECK(w->popcount() == 1);
    }
    SUBCASE("G32_6: sparse phase finds a small-support witness") {
        WitnessBudget tight;
        tight.random_samples = 0;
        CatalogEntry g326 = builtin("G32_6");
        auto w = find_order_witness(g326.group, 8, WitnessStrategy::sparse_first, tight);
        REQUIRE(w.has_value());
        CHECK(unit_order(*w) >= 8);
        CHECK(w->popcount() <= 4);
    }
    SUBCASE("absence is a result: D8 has no unit of order 8") {
        WitnessBudget small;
        small.random_samples = 2000;
        CHECK(!find_order_witness(builtin("D8").group, 8, WitnessStrategy::sparse_first, small)
                   .has_value());
        CHECK(!find_order_witness(builtin("D8").group, 8, WitnessStrategy::random, small)
                   .has_value());
    }
    SUBCASE("target must be a 2-power >= 8") {
        CHECK_THROWS_AS(
            find_order_witness(builtin("D8").group, 6, WitnessStrategy::sparse_first),
            std::invalid_argument);
    }
}
