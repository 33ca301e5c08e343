#ifndef SPEM_RNG_HPP
#define SPEM_RNG_HPP

#include <cstdint>
#include <random>

namespace spem {

// splitmix64; used to derive independent substream seeds from a master
// seed so that per-sample / per-frame draws never depend on evaluation
// order elsewhere.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master ^ splitmix64(stream + 0x51a9b2c3d4e5f607ULL));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

}  // namespace spem

#endif
