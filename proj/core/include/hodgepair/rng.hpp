#pragma once

#include <cstdint>

namespace hodgepair {

/// Counter-based splitmix64: hash(seed, counter) with no sequential state,
/// so independent consumers can draw from disjoint counters in any order
/// (including in parallel) and still reproduce the same values.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

    /// The value at a fixed counter; pure function of (seed, counter).
    std::uint64_t at(std::uint64_t counter) const {
        std::uint64_t z = seed_ + counter * 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Sequential draw (advances an internal counter).
    std::uint64_t next() { return at(counter_++); }

    /// Uniform value in [0, bound) for bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    /// Sub-stream with an independent counter space, for per-instance use.
    SplitMix64 fork(std::uint64_t stream) const {
        return SplitMix64(at(0xd1b54a32d192ed03ULL + stream));
    }

private:
    std::uint64_t seed_ = 0;
    std::uint64_t counter_ = 0;
};

}  // namespace hodgepair
