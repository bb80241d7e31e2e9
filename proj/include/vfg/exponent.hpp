#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "vfg/algebra.hpp"
#include "vfg/group.hpp"

namespace vfg {

// Single-word GF(2) algebra for groups of order <= 64: one bit per element,
// squaring via precomputed square masks and noncommuting pair masks.
class WordAlgebra {
public:
    explicit WordAlgebra(const Group& g);

    const Group& group() const { return *group_; }
    int order() const { return n_; }
    std::uint64_t element_mask() const { return mask_; }

    std::uint64_t square(std::uint64_t x) const;
    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const;
    // x * g and g * x for a basis element g.
    std::uint64_t translate_right(std::uint64_t x, int g) const;
    std::uint64_t translate_left(std::uint64_t x, int g) const;

    // Order of the unit x (augmentation must be 1).
    int unit_order(std::uint64_t x) const;

    // In-place update of (x, x2) across a single coefficient flip of element e:
    // (x + g)^2 = x^2 + g^2 + xg + gx with x taken without the flipped bit.
    void flip_update(std::uint64_t& x, std::uint64_t& x2, int e) const;

    AlgebraElement to_element(std::uint64_t x) const;
    std::uint64_t from_element(const AlgebraElement& x) const;

private:
    const Group* group_;
    int n_;
    std::uint64_t mask_;
    std::vector<std::uint64_t> sq_;        // sq_[i] = bit(g_i^2)
    std::vector<std::uint64_t> pair_;      // pair_[i*n+j] = bit(g_i g_j) ^ bit(g_j g_i)
    std::vector<std::uint64_t> nc_above_;  // bits j > i with pair_[i][j] != 0
};

enum class ExponentMethod { exhaustive, bounded_exhaustive, sampled, witness };
const char* to_string(ExponentMethod m);

struct ExponentResult {
    std::string group_label;
    ExponentMethod method = ExponentMethod::exhaustive;
    int exponent = 1;    // exact for exhaustive, certified lower bound for sampled
    bool exact = false;
    std::optional<AlgebraElement> witness;  // attains the reported order
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;
};

struct EngineOptions {
    int threads = 1;
    int shard_bits = 8;  // top bits fixed per shard; deterministic max-merge
};

inline constexpr int kExhaustiveOrderCap = 32;

// Exact exponent of V(FG) by walking all 2^(order-1) augmentation-1 vectors in
// reflected Gray-code order with incremental maintenance of x and x^2.
// Deterministic result independent of thread count.
ExponentResult exponent_exhaustive(const Group& g, const EngineOptions& opts = {});

struct Divides4Result {
    bool divides = true;
    std::optional<AlgebraElement> counterexample;  // a unit 1+z with (1+z)^4 != 1
    std::uint64_t checked = 0;
};

// True iff z^4 = 0 for every augmentation-0 z, short-circuiting on the first
// counterexample (deterministic: lowest shard wins).
Divides4Result check_exponent_divides_4(const Group& g, const EngineOptions& opts = {});

// Monte Carlo lower bound: n uniform augmentation-1 draws from a seeded
// deterministic stream. Reproducible given (n, seed).
ExponentResult exponent_sampled(const Group& g, std::uint64_t n, std::uint64_t seed,
                                const EngineOptions& opts = {});

enum class WitnessStrategy { sparse_first, random };

struct WitnessBudget {
    std::uint64_t sparse_candidates = 100000;
    std::uint64_t random_samples = 1000000;
    std::uint64_t seed = 0x5eed;
};

// Searches for a unit of order >= target (a 2-power >= 8). sparse_first
// enumerates supports of size <= 4 over {1} u generators u pairwise products
// before falling back to random sampling. Absence is a valid result.
std::optional<AlgebraElement> find_order_witness(const Group& g, int target,
                                                 WitnessStrategy strategy,
                                                 const WitnessBudget& budget = {});

}  // namespace vfg
