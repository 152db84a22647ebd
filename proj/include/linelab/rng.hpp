#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace linelab {

using Rng = std::mt19937_64;

// Derives a per-component seed from one master seed and a component name.
// FNV-1a over the name, mixed with the master through splitmix64. Adding a
// new component name never perturbs the streams of existing ones.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t master, std::string_view component) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : component) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return splitmix64(master ^ h);
}

inline Rng make_rng(std::uint64_t master, std::string_view component) {
    return Rng(stream_seed(master, component));
}

} // namespace linelab
