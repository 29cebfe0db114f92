#include "ringaug/rng.hpp"

namespace ringaug {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

std::uint64_t derive_stream(std::uint64_t master, std::string_view key,
                            std::uint64_t index) {
    return mix64(master ^ mix64(fnv1a64(key) ^ mix64(index)));
}

}  // namespace ringaug
