#pragma once

#include <cstdint>
#include <limits>

#include "twinlcs/word.hpp"

namespace twinlcs {

/// SplitMix64 output finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based generator: output i of substream (seed, stream) is a pure
/// function of the triple, so trials can be drawn in any order or in
/// parallel and still agree. Satisfies UniformRandomBitGenerator.
class CounterRng {
public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix64(seed ^ mix64(stream ^ 0x5851f42d4c957f2dULL))) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return mix64(key_ + mix64(counter_++)); }

    /// Uniform in [0, n); n > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [0, 1) with 53 random bits.
    double uniform01();

    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Uniform word in [k]^n, the index-th draw for this seed.
Word sample_word(std::size_t k, std::size_t n, std::uint64_t seed, std::uint64_t index = 0);

} // namespace twinlcs
