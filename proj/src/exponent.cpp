#include "vfg/exponent.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "vfg/errors.hpp"
#include "vfg/rng.hpp"

namespace vfg {

const char* to_string(ExponentMethod m) {
    switch (m) {
        case ExponentMethod::exhaustive: return "exhaustive";
        case ExponentMethod::bounded_exhaustive: return "bounded-exhaustive";
        case ExponentMethod::sampled: return "sampled";
        case ExponentMethod::witness: return "witness";
    }
    return "?";
}

WordAlgebra::WordAlgebra(const Group& g) : group_(&g), n_(g.order()) {
    if (n_ > 64) throw SizeLimitError("WordAlgebra requires order <= 64");
    mask_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    sq_.resize(n_);
    pair_.assign(static_cast<std::size_t>(n_) * n_, 0);
    nc_above_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) sq_[i] = std::uint64_t{1} << g.mul(i, i);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            std::uint64_t p =
                (std::uint64_t{1} << g.mul(i, j)) ^ (std::uint64_t{1} << g.mul(j, i));
            pair_[static_cast<std::size_t>(i) * n_ + j] = p;
            if (p) nc_above_[i] |= std::uint64_t{1} << j;
        }
}

std::uint64_t WordAlgebra::square(std::uint64_t x) const {
    std::uint64_t acc = 0;
    std::uint64_t t = x;
    while (t) {
        int i = std::countr_zero(t);
        t &= t - 1;
        acc ^= sq_[i];
        std::uint64_t rest = t & nc_above_[i];
        const std::uint64_t* row = pair_.data() + static_cast<std::size_t>(i) * n_;
        while (rest) {
            int j = std::countr_zero(rest);
            rest &= rest - 1;
            acc ^= row[j];
        }
    }
    return acc;
}

std::uint64_t WordAlgebra::mul(std::uint64_t x, std::uint64_t y) const {
    std::uint64_t acc = 0;
    std::uint64_t t = x;
    while (t) {
        int i = std::countr_zero(t);
        t &= t - 1;
        std::uint64_t s = y;
        while (s) {
            int j = std::countr_zero(s);
            s &= s - 1;
            acc ^= std::uint64_t{1} << group_->mul(i, j);
        }
    }
    return acc;
}

std::uint64_t WordAlgebra::translate_right(std::uint64_t x, int g) const {
    std::uint64_t acc = 0;
    while (x) {
        int i = std::countr_zero(x);
        x &= x - 1;
        acc ^= std::uint64_t{1} << group_->mul(i, g);
    }
    return acc;
}

std::uint64_t WordAlgebra::translate_left(std::uint64_t x, int g) const {
    std::uint64_t acc = 0;
    while (x) {
        int i = std::countr_zero(x);
        x &= x - 1;
        acc ^= std::uint64_t{1} << group_->mul(g, i);
    }
    return acc;
}

int WordAlgebra::unit_order(std::uint64_t x) const {
    if ((std::popcount(x) & 1) == 0)
        throw std::domain_error("unit_order requires augmentation 1");
    int order = 1;
    int steps = 0;
    while (x != 1) {
        x = square(x);
        order *= 2;
        if (++steps > 2 * n_) throw std::domain_error("unit order did not stabilize");
    }
    return order;
}

void WordAlgebra::flip_update(std::uint64_t& x, std::uint64_t& x2, int e) const {
    std::uint64_t nx = x ^ (std::uint64_t{1} << e);
    std::uint64_t u = x & nx;  // x and nx differ only at bit e
    x2 ^= sq_[e] ^ translate_right(u, e) ^ translate_left(u, e);
    x = nx;
}

AlgebraElement WordAlgebra::to_element(std::uint64_t x) const {
    AlgebraElement out(*group_);
    while (x) {
        int i = std::countr_zero(x);
        x &= x - 1;
        out.flip(i);
    }
    return out;
}

std::uint64_t WordAlgebra::from_element(const AlgebraElement& x) const {
    std::uint64_t out = 0;
    for (int i : x.support()) out |= std::uint64_t{1} << i;
    return out;
}

namespace {

// Walks one shard of the Gray-code enumeration. Free bits are elements
// 1..n-1; the identity coefficient tracks support parity so the augmentation
// stays fixed (1 for units, 0 for augmentation-ideal walks). The visitor
// receives (x, x2) per vector and returns false to stop early.
template <class Visitor>
void walk_shard(const WordAlgebra& wa, int target_augmentation, std::uint64_t shard,
                int shard_bit_count, Visitor&& visit) {
    int m = wa.order() - 1;
    int low = m - shard_bit_count;

    std::uint64_t x = 0;
    for (int b = 0; b < shard_bit_count; ++b)
        if ((shard >> b) & 1) x |= std::uint64_t{1} << (low + b + 1);
    int parity = std::popcount(x) & 1;
    if ((parity & 1) != target_augmentation) x |= 1;
    std::uint64_t x2 = wa.square(x);

    if (!visit(x, x2)) return;
    std::uint64_t steps = low >= 0 ? (std::uint64_t{1} << low) : 1;
    for (std::uint64_t t = 1; t < steps; ++t) {
        int e = std::countr_zero(t) + 1;  // flipped free bit -> element index
        wa.flip_update(x, x2, e);
        x ^= 1;   // identity bit keeps the augmentation fixed
        x2 ^= 1;  // (u+1)^2 = u^2 + 1
        if (!visit(x, x2)) return;
    }
}

int order_from_square(const WordAlgebra& wa, std::uint64_t x, std::uint64_t x2) {
    if (x == 1) return 1;
    int order = 2;
    std::uint64_t y = x2;
    int steps = 0;
    while (y != 1) {
        y = wa.square(y);
        order *= 2;
        if (++steps > 2 * wa.order()) throw std::domain_error("unit order did not stabilize");
    }
    return order;
}

struct ShardPlan {
    int shard_bit_count;
    std::uint64_t shard_count;
};

ShardPlan plan_shards(int order, int shard_bits) {
    int m = order - 1;
    int b = std::min(shard_bits, m);
    return {b, std::uint64_t{1} << b};
}

template <class PerShard>
void run_sharded(std::uint64_t shard_count, int threads, PerShard&& body) {
    threads = std::max(1, threads);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::uint64_t s = next.fetch_add(1);
            if (s >= shard_count) return;
            body(s);
        }
    };
    if (threads == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace

ExponentResult exponent_exhaustive(const Group& g, const EngineOptions& opts) {
    if (g.order() > kExhaustiveOrderCap)
        throw SizeLimitError("exhaustive enumeration capped at order " +
                             std::to_string(kExhaustiveOrderCap) +
                             "; use exponent_sampled or find_order_witness");
    auto t0 = std::chrono::steady_clock::now();
    WordAlgebra wa(g);
    ShardPlan plan = plan_shards(g.order(), opts.shard_bits);

    struct ShardBest {
        int order = 0;
        std::uint64_t witness = 0;
    };
    std::vector<ShardBest> best(plan.shard_count);

    run_sharded(plan.shard_count, opts.threads, [&](std::uint64_t s) {
        ShardBest local;
        walk_shard(wa, 1, s, plan.shard_bit_count, [&](std::uint64_t x, std::uint64_t x2) {
            int ord = order_from_square(wa, x, x2);
            if (ord > local.order) {
                local.order = ord;
                local.witness = x;
            }
            return true;
        });
        best[s] = local;
    });

    // max-merge in shard order: deterministic witness regardless of threads
    ShardBest overall;
    for (const ShardBest& b : best)
        if (b.order > overall.order) overall = b;

    ExponentResult result;
    result.group_label = g.label();
    result.method = ExponentMethod::exhaustive;
    result.exponent = overall.order;
    result.exact = true;
    result.witness = wa.to_element(overall.witness);
    result.samples = std::uint64_t{1} << (g.order() - 1);
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

Divides4Result check_exponent_divides_4(const Group& g, const EngineOptions& opts) {
    if (g.order() > kExhaustiveOrderCap)
        throw SizeLimitError("exhaustive enumeration capped at order " +
                             std::to_string(kExhaustiveOrderCap) +
                             "; use exponent_sampled or find_order_witness");
    WordAlgebra wa(g);
    ShardPlan plan = plan_shards(g.order(), opts.shard_bits);

    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> best_shard{kNone};
    std::vector<std::uint64_t> found(plan.shard_count, 0);
    std::vector<char> has_found(plan.shard_count, 0);
    std::atomic<std::uint64_t> total_checked{0};

    run_sharded(plan.shard_count, opts.threads, [&](std::uint64_t s) {
        // shards below an already-reporting shard must finish so the returned
        // counterexample is deterministic; higher shards may stop early
        if (best_shard.load(std::memory_order_relaxed) < s) return;
        std::uint64_t checked = 0;
        walk_shard(wa, 0, s, plan.shard_bit_count, [&](std::uint64_t z, std::uint64_t z2) {
            ++checked;
            if (wa.square(z2) != 0) {
                has_found[s] = 1;
                found[s] = z;
                std::uint64_t cur = best_shard.load();
                while (s < cur && !best_shard.compare_exchange_weak(cur, s)) {
                }
                return false;
            }
            if ((checked & 0xfff) == 0 && best_shard.load(std::memory_order_relaxed) < s)
                return false;
            return true;
        });
        total_checked.fetch_add(checked);
    });

    Divides4Result result;
    result.checked = total_checked.load();
    for (std::uint64_t s = 0; s < plan.shard_count; ++s) {
        if (has_found[s]) {
            result.divides = false;
            result.counterexample = wa.to_element(found[s] ^ 1);  // unit 1 + z
            break;
        }
    }
    return result;
}

namespace {

AlgebraElement random_augmentation_one(const Group& g, SplitMix64& rng) {
    AlgebraElement x(g);
    int n = g.order();
    for (int base = 0; base < n; base += 64) {
        std::uint64_t w = rng.next();
        int width = std::min(64, n - base);
        for (int b = (base == 0 ? 1 : 0); b < width; ++b)
            if ((w >> b) & 1) x.flip(base + b);
    }
    // identity coefficient fixes the augmentation at 1
    x.set(0, (x.popcount() & 1) == 0);
    return x;
}

}  // namespace

ExponentResult exponent_sampled(const Group& g, std::uint64_t n, std::uint64_t seed,
                                const EngineOptions& opts) {
    if (n < 1) throw std::invalid_argument("sample count must be >= 1");
    auto t0 = std::chrono::steady_clock::now();
    const bool word = g.order() <= 64;
    std::optional<WordAlgebra> wa;
    if (word) wa.emplace(g);

    struct Best {
        int order = 0;
        std::uint64_t index = 0;
        std::optional<AlgebraElement> witness;
    };
    int threads = std::max(1, opts.threads);
    std::vector<Best> best(threads);
    std::atomic<std::uint64_t> next{0};
    constexpr std::uint64_t kChunk = 1024;

    auto worker = [&](int tid) {
        Best local;
        for (;;) {
            std::uint64_t start = next.fetch_add(kChunk);
            if (start >= n) break;
            std::uint64_t end = std::min(n, start + kChunk);
            for (std::uint64_t k = start; k < end; ++k) {
                SplitMix64 rng = SplitMix64::split(seed, k);
                int ord;
                AlgebraElement x = random_augmentation_one(g, rng);
                if (word)
                    ord = wa->unit_order(wa->from_element(x));
                else
                    ord = unit_order(x);
                if (ord > local.order || (ord == local.order && local.witness && k < local.index)) {
                    local.order = ord;
                    local.index = k;
                    local.witness = x;
                }
            }
        }
        best[tid] = local;
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    Best overall;
    for (const Best& b : best)
        if (b.order > overall.order || (b.order == overall.order && b.witness &&
                                        (!overall.witness || b.index < overall.index)))
            overall = b;

    ExponentResult result;
    result.group_label = g.label();
    result.method = ExponentMethod::sampled;
    result.exponent = overall.order;
    result.exact = false;
    result.witness = overall.witness;
    result.samples = n;
    result.seed = seed;
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

std::optional<AlgebraElement> find_order_witness(const Group& g, int target,
                                                 WitnessStrategy strategy,
                                                 const WitnessBudget& budget) {
    if (target < 8 || (target & (target - 1)) != 0)
        throw std::invalid_argument("witness target must be a 2-power >= 8");
    const bool word = g.order() <= 64;
    std::optional<WordAlgebra> wa;
    if (word) wa.emplace(g);

    auto order_of = [&](const AlgebraElement& x) {
        return word ? wa->unit_order(wa->from_element(x)) : unit_order(x);
    };

    std::uint64_t spent = 0;

    if (strategy == WitnessStrategy::sparse_first) {
        // pool: identity, generators, pairwise generator products
        std::set<int> pool_set{0};
        for (int a : g.generators()) pool_set.insert(a);
        for (int a : g.generators())
            for (int b : g.generators()) pool_set.insert(g.mul(a, b));
        std::vector<int> pool(pool_set.begin(), pool_set.end());
        int p = static_cast<int>(pool.size());

        auto try_support = [&](std::initializer_list<int> indices) -> std::optional<AlgebraElement> {
            AlgebraElement x(g);
            for (int i : indices) x.flip(pool[i]);
            if (!is_unit(x)) return std::nullopt;
            if (spent++ >= budget.sparse_candidates) return std::nullopt;
            if (order_of(x) >= target) return x;
            return std::nullopt;
        };

        for (int a = 0; a < p; ++a)
            if (auto r = try_support({a})) return r;
        for (int a = 0; a < p && spent < budget.sparse_candidates; ++a)
            for (int b = a + 1; b < p; ++b)
                if (auto r = try_support({a, b})) return r;
        for (int a = 0; a < p && spent < budget.sparse_candidates; ++a)
            for (int b = a + 1; b < p; ++b)
                for (int c = b + 1; c < p; ++c)
                    if (auto r = try_support({a, b, c})) return r;
        for (int a = 0; a < p && spent < budget.sparse_candidates; ++a)
            for (int b = a + 1; b < p; ++b)
                for (int c = b + 1; c < p; ++c)
                    for (int d = c + 1; d < p; ++d)
                        if (auto r = try_support({a, b, c, d})) return r;
    }

    // random phase: dense draws at word scale, sparse odd supports above it
    for (std::uint64_t k = 0; k < budget.random_samples; ++k) {
        SplitMix64 rng = SplitMix64::split(budget.seed, k);
        AlgebraElement x(g);
        if (word) {
            x = random_augmentation_one(g, rng);
        } else {
            int size = 3 + 2 * static_cast<int>(rng.below(4));  // 3,5,7,9
            for (int i = 0; i < size; ++i) x.flip(static_cast<int>(rng.below(g.order())));
            if (!is_unit(x)) x.flip(0);
        }
        if (order_of(x) >= target) return x;
    }
    return std::nullopt;
}

}  // namespace vfg
