#pragma once

#include <cstdint>
#include <vector>

namespace pdrm {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen as the project-wide generator:
// 64-bit state, trivially seedable, and substreams derive from a (seed,
// counter) pair so serial and parallel runs of the same config agree.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased value in [0, bound) via rejection.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

// Substream i of a seed: one finalizer step separates neighbouring counters.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t counter) {
    SplitMix64 g(seed ^ (counter * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull));
    return SplitMix64(g.next());
}

// Uniform w-subset of {0, ..., universe-1} by sequential selection sampling;
// output is sorted. Deterministic for a given generator state.
inline std::vector<std::uint32_t> sample_subset(SplitMix64& g, std::uint32_t universe,
                                                std::uint32_t w) {
    std::vector<std::uint32_t> out;
    out.reserve(w);
    std::uint32_t need = w;
    for (std::uint32_t p = 0; p < universe && need > 0; ++p)
        if (g.uniform_below(universe - p) < need) {
            out.push_back(p);
            --need;
        }
    return out;
}

}  // namespace pdrm
