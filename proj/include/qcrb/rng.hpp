#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace qcrb {

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Independent stream per (seed, index); a trial's draws depend only on these two values.
class StreamRng {
public:
    StreamRng(std::uint64_t seed, std::uint64_t index)
        : state_(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL))) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // [0, 1)
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }
    // (0, 1)
    double uniform_open() { return (double(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

    std::pair<double, double> normal_pair() {
        const double rad = std::sqrt(-2.0 * std::log(uniform_open()));
        const double ang = 2.0 * std::numbers::pi * uniform();
        return {rad * std::cos(ang), rad * std::sin(ang)};
    }

private:
    std::uint64_t state_;
};

}  // namespace qcrb
