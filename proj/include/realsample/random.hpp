#ifndef REALSAMPLE_RANDOM_HPP
#define REALSAMPLE_RANDOM_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

namespace realsample {

/// Deterministic, splittable generator. Integer draws use rejection sampling on
/// the raw 64-bit stream so results do not depend on the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 42) : seed_(seed), engine_(mix(seed)) {}

    std::uint64_t seed() const noexcept { return seed_; }

    /// Independent child stream; the same (seed, tag) always yields the same child.
    Rng split(std::uint64_t tag) const { return Rng(mix(seed_ ^ mix(tag + 0x632be59bd9b4e019ull))); }

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
        std::uint64_t x;
        do {
            x = engine_();
        } while (limit != 0 && x >= limit);
        return lo + static_cast<long>(span == 0 ? x : x % span);
    }

    /// Uniform nonzero integer in [-bound, bound].
    long uniform_nonzero(long bound) {
        long v;
        do {
            v = uniform(-bound, bound);
        } while (v == 0);
        return v;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace realsample

#endif
