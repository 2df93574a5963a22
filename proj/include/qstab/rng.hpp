#pragma once

#include <cstdint>

namespace qstab {

// SplitMix64. Self-contained so that streams are reproducible across
// platforms and standard library versions.
class Rng {
   public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next_u64() % span);
    }

    // Derived independent stream.
    Rng split(uint64_t tag) {
        uint64_t s = next_u64();
        return Rng(s ^ (0x9e3779b97f4a7c15ULL * (tag + 1)));
    }

   private:
    uint64_t state_;
};

inline uint64_t mix_seed(uint64_t seed, uint64_t tag) {
    Rng r(seed ^ (0xd1b54a32d192ed03ULL * (tag + 1)));
    return r.next_u64();
}

}  // namespace qstab
