#ifndef DESIGNWORLD_RNG_HPP
#define DESIGNWORLD_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace designworld {

// splitmix64; used to derive independent seeds from a run seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
    std::uint64_t s = base ^ (0xD1B54A32D192ED03ULL * (salt + 1));
    return splitmix64(s);
}

// Bounded draw via Lemire multiply-shift. mt19937_64 output is fully
// specified by the standard, so sequences are stable across platforms;
// std::uniform_int_distribution is not, which is why it is avoided here.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

template <typename T>
void shuffle_deterministic(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(draw_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace designworld

#endif
