#pragma once
// Counter-based random number generation.
//
// Every draw is a pure function of (seed, stream, counter), so independent
// streams can be generated in any order, or in parallel, with identical
// results. Stream splitting convention:
//   - the simulator uses one stream per (factor, purpose): model effects,
//     prompt effects, interaction, noise, missingness;
//   - the bootstrap derives one stream per replicate index.
// The mixer is SplitMix64's finalizer applied over seed, stream and counter.

#include <cmath>
#include <cstdint>

namespace varcomp {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_counter(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return mix64(mix64(seed ^ 0x6A09E667F3BCC909ULL) ^ mix64(stream) ^ counter);
}

// Stateless stream: value i is independent of any other draw.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    std::uint64_t bits(std::uint64_t i) const { return hash_counter(seed_, stream_, i); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform(std::uint64_t i) const {
        return static_cast<double>(bits(i) >> 11) * 0x1.0p-53;
    }

    // Uniform in (0, 1]; safe as a log() argument.
    double uniform_pos(std::uint64_t i) const {
        return static_cast<double>((bits(i) >> 11) + 1) * 0x1.0p-53;
    }

    // Integer in [0, n). Multiply-high keeps the bias below 2^-53 for any
    // realistic table size.
    std::uint64_t below(std::uint64_t i, std::uint64_t n) const {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(bits(i)) * n) >> 64);
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
};

// Sequential convenience wrapper over a stream.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream) : stream_(seed, stream) {}

    double uniform() { return stream_.uniform(counter_++); }
    double uniform_pos() { return stream_.uniform_pos(counter_++); }
    std::uint64_t below(std::uint64_t n) { return stream_.below(counter_++, n); }

    // Box-Muller, two counters per draw.
    double normal() {
        double u1 = uniform_pos();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

private:
    RngStream stream_;
    std::uint64_t counter_ = 0;
};

}  // namespace varcomp
