#pragma once

#include <cstdint>
#include <string_view>

namespace ringaug {

// SplitMix64 stream (Steele, Lea, Flood 2014). Chosen because the whole
// pipeline must be reproducible bit-for-bit from explicit seeds, across runs
// and across worker counts; a tiny fixed algorithm makes that auditable.
//
// Stream derivation rule (v1):
//   stream(master, key, index) seeds a generator with
//   mix64(master ^ mix64(fnv1a64(key) ^ mix64(index)))
// so parallel callers get independent streams without shared state.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    bool next_bool(double p_true) { return next_double() < p_true; }

private:
    std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view s);
std::uint64_t derive_stream(std::uint64_t master, std::string_view key, std::uint64_t index);

}  // namespace ringaug
