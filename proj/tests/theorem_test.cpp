#include "doctest.h"
#include "vfg/catalog.hpp"
#include "vfg/errors.hpp"
#include "vfg/theorem.hpp"

using namespace vfg;

TEST_CASE("predicate verdicts for landmark groups") {
    SUBCASE("D8: class 2, central elementary abelian Frattini, |G'| = 2") {
        PredicateVerdict v = theorem_predicate(builtin("D8").group);
        CHECK(v.is_nonabelian);
        CHECK(v.class2);
        CHECK(v.frattini_central);
        CHECK(v.frattini_elem_abelian);
        CHECK(v.derived_order == 2);
        CHECK(v.predicted_exp4);
    }
    SUBCASE("G32_6: class 3 blocks the prediction") {
        PredicateVerdict v = theorem_predicate(builtin("G32_6").group);
        CHECK(v.nilpotency_class == 3);
        CHECK(!v.predicted_exp4);
    }
    SUBCASE("E64: derived subgroup too large") {
        PredicateVerdict v = theorem_predicate(builtin("E64").group);
        CHECK(v.derived_order == 8);
        CHECK(!v.predicted_exp4);
    }
    SUBCASE("C8: abelian input is simply not predicted") {
        PredicateVerdict v = theorem_predicate(builtin("C8").group);
        CHECK(!v.is_nonabelian);
        CHECK(!v.predicted_exp4);
    }
}

TEST_CASE("agreement semantics after attaching a computed exponent") {
    SUBCASE("nonabelian: prediction must match exponent = 4") {
        PredicateVerdict v = theorem_predicate(builtin("Q8").group);
        attach_computed_exponent(v, 4, true);
        CHECK(*v.agreement);
        PredicateVerdict w = theorem_predicate(builtin("G32_6").group);
        attach_computed_exponent(w, 8, true);
        CHECK(*w.agreement);
        attach_computed_exponent(w, 4, true);  // contradiction would be flagged
        CHECK(!*w.agreement);
    }
    SUBCASE("abelian side condition: exp V(FG) = exp(G)") {
        PredicateVerdict v = theorem_predicate(builtin("C4").group);
        attach_computed_exponent(v, 4, true);
        CHECK(*v.agreement);
        attach_computed_exponent(v, 2, true);
        CHECK(!*v.agreement);
    }
}

TEST_CASE("decomposition search matches the flattened predicate") {
    SUBCASE("D8 decomposes trivially as H = D8, W = 1") {
        auto hw = decomposition_search(builtin("D8").group);
        REQUIRE(hw.has_value());
        CHECK(hw->first.size() == 8);
        CHECK(hw->second.size() == 1);
    }
    SUBCASE("D8xC4: returned pair satisfies every side condition") {
        const Group& g = builtin("D8xC4").group;
        auto hw = decomposition_search(g);
        REQUIRE(hw.has_value());
        const auto& [h, w] = *hw;
        CHECK(static_cast<long>(h.size()) * w.size() == g.order());
        CHECK(intersect(h, w).size() == 1);
        CHECK(is_abelian(w));
        CHECK(subgroup_exponent(w) <= 4);
        for (int a : h.members())
            for (int b : w.members()) CHECK(g.mul(a, b) == g.mul(b, a));
        Group hg = subgroup_as_group(h, "H");
        CHECK(!is_abelian(hg));
        CHECK(nilpotency_class(hg) == 2);
        CHECK(derived_subgroup(hg).size() <= 4);
        Subgroup phi = frattini(hg);
        CHECK(is_central(phi));
        CHECK(is_elementary_abelian(phi));
    }
    SUBCASE("no decomposition for the excluded groups") {
        CHECK(!decomposition_search(builtin("G32_6").group).has_value());
        CHECK(!decomposition_search(builtin("E64").group).has_value());
        CHECK(!decomposition_search(builtin("C8").group).has_value());
    }
}

TEST_CASE("corollary 1 containments hold where exponent 4 is established") {
    CHECK(corollary1_check(builtin("G16_3").group));
    CHECK(corollary1_check(builtin("G32_2").group));
    CHECK(corollary1_check(builtin("D8xC2").group));
    // G32_6 has exponent 8; its class-3 structure indeed violates the corollary
    CHECK(!corollary1_check(builtin("G32_6").group));
}

TEST_CASE("two-generated subgroup classification (lemma 1 shape)") {
    CHECK(lemma1_subgroup_classification(builtin("D8").group));
    CHECK(lemma1_subgroup_classification(builtin("Q8xC2").group));
    CHECK(lemma1_subgroup_classification(builtin("G32_2").group));
    CHECK(lemma1_subgroup_classification(builtin("D8xC2").group));
}

TEST_CASE("lemma 2: exponent-4 conclusion plus proof-internal facts") {
    SUBCASE("exhaustive at order 16") {
        Lemma2Result r = lemma2_check(builtin("G16_4").group);
        CHECK(r.status == CheckStatus::holds);
        CHECK(r.exhaustive);
    }
    SUBCASE("G' = C2 x C2 branch, beyond the exhaustive cap") {
        Lemma2Result r = lemma2_check(builtin("D8xD8").group, {}, 32);
        CHECK(r.status == CheckStatus::holds);
        CHECK(!r.exhaustive);
    }
    SUBCASE("preconditions gate abelian and class-3 inputs") {
        CHECK(lemma2_check(builtin("C8").group).status == CheckStatus::not_applicable);
        CHECK(lemma2_check(builtin("G32_6").group).status == CheckStatus::not_applicable);
        CHECK(lemma2_check(builtin("E64").group).status == CheckStatus::not_applicable);
    }
}

TEST_CASE("lemma 3: products with C2 and C4 stay at exponent 4") {
    Lemma3Result a = lemma3_closure_check(builtin("D8").group, 2);
    CHECK(a.holds);
    CHECK(a.exhaustive);
    CHECK(a.product_order == 16);

    Lemma3Result b = lemma3_closure_check(builtin("Q8").group, 2);
    CHECK(b.holds);
    CHECK(b.exhaustive);

    // order-32 product under the default cap: sampled verdict, still positive
    Lemma3Result c = lemma3_closure_check(builtin("D8").group, 4, 16);
    CHECK(c.holds);
    CHECK(!c.exhaustive);
    CHECK(c.product_order == 32);

    CHECK_THROWS_AS(lemma3_closure_check(builtin("D8").group, 3), std::invalid_argument);
}

TEST_CASE("lemma 4: witness for |G'| >= 8, gate otherwise") {
    CatalogEntry e64 = builtin("E64");
    Lemma4Result r = lemma4_witness(e64.group);
    CHECK(r.status == CheckStatus::holds);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness_order >= 8);
    CHECK(unit_order(*r.witness) == r.witness_order);

    CHECK(lemma4_witness(builtin("D8").group).status == CheckStatus::not_applicable);
}

TEST_CASE("proof case witnesses all pass") {
    auto checks = proof_case_witnesses();
    REQUIRE(checks.size() == 6);
    for (const NamedCheck& c : checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.passed);
    }
}

TEST_CASE("the Case B presentation really is G16_3 under a different name") {
    Group caseb = from_presentation(case_presentation("CaseB"), kDefaultCosetCap, "CaseB");
    CHECK(caseb.order() == 16);
    CHECK(is_isomorphic(caseb, builtin("G16_3").group));
    // and the Case A conclusion presentation agrees as well
    Group casea = from_presentation(case_presentation("CaseA"), kDefaultCosetCap, "CaseA");
    CHECK(is_isomorphic(casea, builtin("G16_3").group));
}
