#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace rhg {

// Deterministic generator with a fully specified uniform mapping, so results
// are reproducible independent of the standard library's distribution code.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // 53-bit mantissa uniform in [0, 1)
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Exact Poisson draw by inversion; large means are split into chunks of
    // mean <= 30 and summed, which keeps the inversion loop well conditioned.
    std::uint64_t poisson(double mean);

private:
    std::uint64_t poisson_small(double mean);

    std::mt19937_64 gen_;
};

// Derives an independent seed from a master seed, a purpose tag, and an index.
// Identical inputs always give the identical seed.
std::uint64_t substream_seed(std::uint64_t master, std::string_view purpose,
                             std::uint64_t index);

} // namespace rhg
