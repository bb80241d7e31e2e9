#include "vfg/theorem.hpp"

#include <algorithm>
#include <map>

#include "vfg/catalog.hpp"
#include "vfg/errors.hpp"

namespace vfg {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::holds: return "holds";
        case CheckStatus::fails: return "fails";
        case CheckStatus::not_applicable: return "not-applicable";
    }
    return "?";
}

PredicateVerdict theorem_predicate(const Group& g) {
    PredicateVerdict v;
    v.group_label = g.label();
    v.order = g.order();
    v.is_nonabelian = !is_abelian(g);
    v.nilpotency_class = nilpotency_class(g);
    v.class2 = v.nilpotency_class == 2;
    Subgroup phi = frattini(g);
    v.frattini_order = phi.size();
    v.frattini_central = is_central(phi);
    v.frattini_elem_abelian = is_elementary_abelian(phi);
    v.derived_order = derived_subgroup(g).size();
    v.group_exponent = exponent(g);
    v.predicted_exp4 = v.is_nonabelian && v.class2 && v.frattini_central &&
                       v.frattini_elem_abelian && v.derived_order <= 4;
    return v;
}

void attach_computed_exponent(PredicateVerdict& v, int exponent, bool exact) {
    v.computed_exponent = exponent;
    v.computed_exact = exact;
    if (v.is_nonabelian)
        v.agreement = v.predicted_exp4 == (exponent == 4);
    else
        v.agreement = exponent == v.group_exponent;  // abelian side: exp V = exp G
}

namespace {

bool subset(const std::vector<int>& inner, const std::vector<int>& outer) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

// The theorem's conditions on the H factor of G = H x W.
bool h_factor_conditions(const Group& h) {
    if (is_abelian(h)) return false;
    if (nilpotency_class(h) != 2) return false;
    Subgroup phi = frattini(h);
    if (!is_central(phi) || !is_elementary_abelian(phi)) return false;
    return derived_subgroup(h).size() <= 4;
}

}  // namespace

std::optional<std::pair<Subgroup, Subgroup>> decomposition_search(const Group& g) {
    if (g.order() > kSubgroupEnumCap)
        throw SizeLimitError("decomposition search capped at order " +
                             std::to_string(kSubgroupEnumCap));
    std::vector<Subgroup> subs = all_subgroups(g);

    std::vector<signed char> h_ok(subs.size(), -1);
    auto h_condition = [&](std::size_t i) {
        if (h_ok[i] < 0)
            h_ok[i] = h_factor_conditions(subgroup_as_group(subs[i], g.label() + ".H")) ? 1 : 0;
        return h_ok[i] == 1;
    };

    // H scanned from large to small so the trivial decomposition (H = G,
    // W = 1) is found first whenever G itself qualifies
    for (auto hi = subs.rbegin(); hi != subs.rend(); ++hi) {
        const Subgroup& h = *hi;
        for (const Subgroup& w : subs) {
            if (static_cast<long>(h.size()) * w.size() != g.order()) continue;
            if (intersect(h, w).size() != 1) continue;
            if (!is_abelian(w) || subgroup_exponent(w) > 4) continue;
            bool commuting = true;
            for (int a : h.members()) {
                for (int b : w.members())
                    if (g.mul(a, b) != g.mul(b, a)) {
                        commuting = false;
                        break;
                    }
                if (!commuting) break;
            }
            if (!commuting) continue;
            if (!h_condition(static_cast<std::size_t>(&h - subs.data()))) break;
            return std::make_pair(h, w);
        }
    }
    return std::nullopt;
}

bool corollary1_check(const Group& g) {
    Subgroup derived = derived_subgroup(g);
    Subgroup phi = frattini(g);
    Subgroup zeta = center(g);
    return subset(derived.members(), phi.members()) && subset(phi.members(), zeta.members()) &&
           is_elementary_abelian(phi) && nilpotency_class(g) == 2;
}

namespace {

const std::vector<Group>& lemma1_reference_groups() {
    static const std::vector<Group> refs = [] {
        std::vector<Group> v;
        for (const char* name : {"D8", "Q8", "G16_3", "G16_4", "G32_2"})
            v.push_back(builtin(name).group);
        return v;
    }();
    return refs;
}

}  // namespace

bool lemma1_subgroup_classification(const Group& g) {
    for (const Subgroup& sub : two_generated_nonabelian_subgroups(g)) {
        Group h = subgroup_as_group(sub, g.label() + ".H");
        bool matched = false;
        for (const Group& ref : lemma1_reference_groups())
            if (is_isomorphic(h, ref)) {
                matched = true;
                break;
            }
        if (!matched) return false;
        Subgroup derived = derived_subgroup(h);
        Subgroup phi = frattini(h);
        Subgroup zeta = center(h);
        if (!subset(derived.members(), phi.members()) || !subset(phi.members(), zeta.members()))
            return false;
    }
    return true;
}

Lemma2Result lemma2_check(const Group& g, const EngineOptions& opts, int max_exhaustive_order) {
    Lemma2Result result;
    Subgroup phi = frattini(g);
    Subgroup derived = derived_subgroup(g);
    if (is_abelian(g) || !is_central(phi) || !is_elementary_abelian(phi) ||
        !subset(derived.members(), phi.members()) || derived.size() > 4)
        return result;  // not applicable

    // proof fact: 1 + (g_j, g_i) is nilpotent of index <= 2
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b) {
            int c = commutator(g, a, b);
            AlgebraElement z = AlgebraElement::one(g) + AlgebraElement::basis(g, c);
            if (nilpotency_index(z) > 2) {
                result.status = CheckStatus::fails;
                return result;
            }
        }

    // proof fact: omega(FG')^3 = 0 when G' = C2 x C2, exhaustively over the
    // 8 augmentation-zero elements supported on G'
    if (derived.size() == 4 && is_elementary_abelian(derived)) {
        std::vector<AlgebraElement> ideal;
        const auto& m = derived.members();
        for (int bitsmask = 0; bitsmask < 16; ++bitsmask) {
            AlgebraElement x(g);
            for (int i = 0; i < 4; ++i)
                if ((bitsmask >> i) & 1) x.flip(m[i]);
            if (augmentation(x) == 0) ideal.push_back(x);
        }
        for (const auto& x : ideal)
            for (const auto& y : ideal)
                for (const auto& z : ideal)
                    if (!mul(mul(x, y), z).is_zero()) {
                        result.status = CheckStatus::fails;
                        return result;
                    }
    }

    if (g.order() <= std::min(max_exhaustive_order, kExhaustiveOrderCap)) {
        Divides4Result d4 = check_exponent_divides_4(g, opts);
        // a noncommuting pair gives a unit of order exactly 4 once x^4 = 1
        int a = -1, b = -1;
        for (int i = 1; i < g.order() && a < 0; ++i)
            for (int j = i + 1; j < g.order(); ++j)
                if (commutator(g, i, j) != 0) {
                    a = i;
                    b = j;
                    break;
                }
        AlgebraElement x = AlgebraElement::one(g) + AlgebraElement::basis(g, a) +
                           AlgebraElement::basis(g, b);
        result.exhaustive = true;
        result.status = (d4.divides && unit_order(x) == 4) ? CheckStatus::holds
                                                           : CheckStatus::fails;
        return result;
    }

    // beyond the exhaustive cap: no order-8 witness within budget and a
    // sampled lower bound of exactly 4
    WitnessBudget budget;
    budget.random_samples = 20000;
    bool witness8 = find_order_witness(g, 8, WitnessStrategy::sparse_first, budget).has_value();
    ExponentResult sampled = exponent_sampled(g, 20000, 0x1e44a2, opts);
    result.exhaustive = false;
    result.status = (!witness8 && sampled.exponent == 4) ? CheckStatus::holds : CheckStatus::fails;
    return result;
}

Lemma3Result lemma3_closure_check(const Group& h, int cyclic_order, int max_exhaustive_order,
                                  const EngineOptions& opts) {
    if (cyclic_order != 2 && cyclic_order != 4)
        throw std::invalid_argument("cyclic factor order must be 2 or 4");
    Group product = direct_product(h, cyclic_group(cyclic_order, "C" + std::to_string(cyclic_order)));
    Lemma3Result result;
    result.product_order = product.order();
    if (product.order() <= std::min(max_exhaustive_order, kExhaustiveOrderCap)) {
        result.exhaustive = true;
        result.holds = check_exponent_divides_4(product, opts).divides;
    } else {
        result.exhaustive = false;
        WitnessBudget budget;
        budget.random_samples = 20000;
        result.holds =
            !find_order_witness(product, 8, WitnessStrategy::sparse_first, budget).has_value() &&
            exponent_sampled(product, 20000, 0x1e44a3, opts).exponent <= 4;
    }
    return result;
}

Lemma4Result lemma4_witness(const Group& g, const WitnessBudget& budget) {
    Lemma4Result result;
    Subgroup derived = derived_subgroup(g);
    if (!is_central(derived) || !is_elementary_abelian(derived) || derived.size() < 8)
        return result;  // not applicable
    auto witness = find_order_witness(g, 8, WitnessStrategy::sparse_first, budget);
    if (!witness)
        throw AnomalyError("no unit of order >= 8 found in " + g.label() +
                           " although |G'| >= 8 guarantees one");
    result.status = CheckStatus::holds;
    result.witness = witness;
    result.witness_order = g.order() <= 64 ? WordAlgebra(g).unit_order(
                                                 WordAlgebra(g).from_element(*witness))
                                           : unit_order(*witness);
    return result;
}

std::vector<NamedCheck> proof_case_witnesses() {
    std::vector<NamedCheck> checks;
    auto record = [&](std::string name, bool ok, std::string detail = "") {
        checks.push_back({std::move(name), ok, std::move(detail)});
    };

    {
        Group g163 = builtin("G16_3").group;
        int g = g163.generators()[0], h = g163.generators()[1];
        auto word = [&](std::initializer_list<int> els) {
            int x = 0;
            for (int e : els) x = g163.mul(x, e);
            return x;
        };
        AlgebraElement x = AlgebraElement::from_support(g163, {0, g, h});
        AlgebraElement x4 = square(square(x));
        AlgebraElement lhs = x4 + AlgebraElement::one(g163);
        AlgebraElement rhs(g163);
        for (int term : {word({g, h, g, h}), word({h, g, h, g}), word({g, g, g, h}),
                         word({g, h, g, g}), word({g, g, h, g}), word({h, g, g, g}),
                         word({g, g}), word({h, g, g, h})})
            rhs.flip(term);
        record("case_a_expansion", lhs == rhs && x4 == AlgebraElement::one(g163),
               "(1+g+h)^4 - 1 in F G16_3");

        int g2 = g163.mul(g, g);
        record("case_a_relations",
               commutator(g163, h, g2) == 0 && word({g, h, g, h}) == word({h, g, h, g}),
               "(h,g^2) = 1 and (gh)^2 = (hg)^2");
    }

    {
        Group caseb = from_presentation(case_presentation("CaseB"), kDefaultCosetCap, "CaseB");
        int g = caseb.generators()[0], h = caseb.generators()[1];
        AlgebraElement y = AlgebraElement::from_support(caseb, {0, g, caseb.mul(g, h)});
        AlgebraElement y2 = square(y);
        AlgebraElement rhs(caseb);
        rhs.flip(caseb.mul(g, g));
        rhs.flip(caseb.mul(caseb.mul(g, g), h));
        rhs.flip(power(caseb, h, 3));
        record("case_b_square", y2 == rhs && square(y2) == AlgebraElement::one(caseb),
               "y^2 = g^2 + g^2 h + h^3 and y^4 = 1");
    }

    {
        Group g326 = builtin("G32_6").group;
        int g = g326.generators()[0], h = g326.generators()[1];
        int gh = g326.mul(g, h);
        AlgebraElement w = AlgebraElement::from_support(g326, {0, g, gh});
        AlgebraElement w2 = square(w);
        AlgebraElement rhs(g326);
        rhs.flip(0);
        rhs.flip(g326.mul(g, g));
        rhs.flip(g326.mul(gh, gh));
        rhs.flip(g326.mul(g326.mul(g, g), h));
        rhs.flip(g326.mul(gh, g));
        bool order8 = unit_order(w) == 8;
        record("case_7_4_witness", w2 == rhs && !(square(w2) == AlgebraElement::one(g326)) && order8,
               "w^2 = 1 + g^2 + (gh)^2 + g^2 h + ghg, w^4 != 1, |w| = 8");
    }

    {
        Group case2 = from_presentation(case_presentation("Case2"), kDefaultCosetCap, "Case2");
        record("case_2_identification", is_isomorphic(case2, builtin("G32_2").group),
               "Case 2 group = G32_2 (order " + std::to_string(case2.order()) + ")");
    }

    {
        Group case4 = from_presentation(case_presentation("Case4"), kDefaultCosetCap, "Case4");
        record("case_4_identification", is_isomorphic(case4, builtin("G16_4").group),
               "Case 4 group = G16_4 (order " + std::to_string(case4.order()) + ")");
    }

    return checks;
}

}  // namespace vfg
