#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vfg/algebra.hpp"
#include "vfg/exponent.hpp"
#include "vfg/group.hpp"

namespace vfg {

// Row of structural facts against the classification predicate: a nonabelian
// finite 2-group has exp V(FG) = 4 iff it has class 2, central elementary
// abelian Frattini subgroup and |G'| <= 4.
struct PredicateVerdict {
    std::string group_label;
    int order = 1;
    bool is_nonabelian = false;
    bool class2 = false;
    bool frattini_central = false;
    bool frattini_elem_abelian = false;
    int nilpotency_class = 0;
    int derived_order = 1;
    int frattini_order = 1;
    int group_exponent = 1;
    bool predicted_exp4 = false;

    std::optional<int> computed_exponent;
    bool computed_exact = false;
    std::optional<bool> agreement;
};

PredicateVerdict theorem_predicate(const Group& g);

// Fills computed_exponent and agreement. For nonabelian groups agreement is
// predicted_exp4 <=> exponent = 4; for abelian groups the theorem does not
// apply and the side condition exp V(FG) = exp(G) is checked instead.
void attach_computed_exponent(PredicateVerdict& v, int exponent, bool exact);

// Searches for G = H x W with H meeting the predicate's conditions and W
// abelian of exponent <= 4. Deterministic subgroup ordering; order <= 64.
std::optional<std::pair<Subgroup, Subgroup>> decomposition_search(const Group& g);

enum class CheckStatus { holds, fails, not_applicable };
const char* to_string(CheckStatus s);

// G' <= Phi(G) <= Z(G), Phi(G) elementary abelian, class 2. Caller is
// responsible for having established exp V(FG) = 4.
bool corollary1_check(const Group& g);

// Every 2-generated nonabelian subgroup is isomorphic to one of
// D8, Q8, G16_3, G16_4, G32_2, and satisfies H' <= Phi(H) <= Z(H).
bool lemma1_subgroup_classification(const Group& g);

struct Lemma2Result {
    CheckStatus status = CheckStatus::not_applicable;
    bool exhaustive = false;
};
// Preconditions: Phi(G) central elementary abelian, G' <= Phi(G), |G'| <= 4,
// G nonabelian. Verifies exp V(FG) = 4 (exhaustively when order permits) plus
// the proof's internal facts (nilpotency index of 1+(g_j,g_i), and
// omega(FG')^3 = 0 when G' = C2 x C2).
Lemma2Result lemma2_check(const Group& g, const EngineOptions& opts = {},
                          int max_exhaustive_order = kExhaustiveOrderCap);

struct Lemma3Result {
    bool holds = false;
    bool exhaustive = false;
    int product_order = 0;
};
// exp V(F(H x C_k)) = 4 given exp V(FH) = 4, for k in {2, 4}. Falls back to a
// sampled check (non-exhaustive verdict) above max_exhaustive_order.
Lemma3Result lemma3_closure_check(const Group& h, int cyclic_order,
                                  int max_exhaustive_order = kExhaustiveOrderCap,
                                  const EngineOptions& opts = {});

struct Lemma4Result {
    CheckStatus status = CheckStatus::not_applicable;
    std::optional<AlgebraElement> witness;
    int witness_order = 0;
};
// For G' central elementary abelian with |G'| >= 8: finds a unit of order
// >= 8. Exhausting the budget contradicts the lemma and throws AnomalyError.
Lemma4Result lemma4_witness(const Group& g, const WitnessBudget& budget = {});

struct NamedCheck {
    std::string name;
    bool passed;
    std::string detail;
};
// Direct replay of the named identities from the proof cases (A, B, 2, 4,
// 7.4) by exact algebra-element computation.
std::vector<NamedCheck> proof_case_witnesses();

}  // namespace vfg
