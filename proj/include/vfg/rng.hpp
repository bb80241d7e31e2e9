#pragma once

#include <cstdint>

namespace vfg {

// SplitMix64: tiny deterministic generator with platform-independent output.
// Used everywhere a seeded stream is required so reports are reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). Rejection-free modulo bias is acceptable for
    // test-case generation; bound is tiny compared to 2^64.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Independent substream derived from this seed and a stream index.
    static SplitMix64 split(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 mixer(seed ^ (0x517cc1b727220a95ULL * (stream + 1)));
        return SplitMix64(mixer.next());
    }

private:
    std::uint64_t state_;
};

}  // namespace vfg
