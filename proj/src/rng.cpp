#include "rhg/rng.hpp"

#include <cmath>

#include "rhg/errors.hpp"

namespace rhg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

std::uint64_t substream_seed(std::uint64_t master, std::string_view purpose,
                             std::uint64_t index) {
    return splitmix64(splitmix64(master ^ fnv1a(purpose)) + index);
}

std::uint64_t Rng::poisson_small(double mean) {
    // inversion: walk the CDF until it passes a uniform draw
    const double u = uniform01();
    double p = std::exp(-mean);
    double cum = p;
    std::uint64_t k = 0;
    const std::uint64_t cap = static_cast<std::uint64_t>(mean * 4.0 + 200.0);
    while (u > cum && k < cap) {
        ++k;
        p *= mean / static_cast<double>(k);
        cum += p;
    }
    return k;
}

std::uint64_t Rng::poisson(double mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean))
        throw domain_error("poisson mean must be finite and nonnegative");
    if (mean == 0.0) return 0;
    if (mean <= 30.0) return poisson_small(mean);
    const std::uint64_t chunks = static_cast<std::uint64_t>(std::ceil(mean / 30.0));
    const double chunk_mean = mean / static_cast<double>(chunks);
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i < chunks; ++i) total += poisson_small(chunk_mean);
    return total;
}

} // namespace rhg
