#pragma once

#include <cstdint>

namespace secdom {

// SplitMix64: the project's only random generator. Fixed algorithm so that
// seeded corpora are reproducible across platforms and toolchains.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    bool next_bit() { return next() >> 63; }

    // uniform in [0,1)
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace secdom
