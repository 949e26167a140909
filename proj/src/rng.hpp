// Seeded randomness for the property harnesses.  mt19937_64 output is fully
// specified by the standard; the rejection sampler below keeps the draws
// portable too (std::uniform_int_distribution is implementation-defined).

#ifndef FQ_RNG_HPP
#define FQ_RNG_HPP

#include <cstdint>
#include <limits>
#include <random>

namespace fq {

inline std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
    std::uint64_t v;
    do {
        v = g();
    } while (v >= limit);
    return v % n;
}

} // namespace fq

#endif
