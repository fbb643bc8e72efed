#pragma once

#include <cstdint>
#include <random>

namespace cupqec {

// Every randomized routine in the library draws from one of these, seeded
// explicitly, and the seed is echoed in whatever report the routine emits.
// Bits are taken straight from the engine rather than through the standard
// distributions, whose output is implementation defined; reports must be
// reproducible across toolchains, not just across runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t bits() { return engine_(); }

    // Uniform draw from [0, n). The modulo bias at 64 bits is far below
    // anything observable here.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    bool coin() { return (engine_() >> 32) & 1u; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace cupqec
