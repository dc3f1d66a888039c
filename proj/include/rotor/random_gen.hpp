#pragma once

#include <cstdint>
#include <random>

#include "rotor/path.hpp"

namespace rotor {

// Deterministic random source for differential tests. Draws are defined
// explicitly (no std distributions) so that a seed reproduces the same
// instances on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t bound);              // uniform in [0, bound)
    std::int64_t range(std::int64_t lo, std::int64_t hi);  // uniform in [lo, hi]
    Int bits(unsigned nbits);                              // uniform in [0, 2^nbits)
    Int signed_bits(unsigned nbits);                       // random sign

private:
    std::mt19937_64 eng_;
};

struct RandomPathConfig {
    std::int64_t max_n = 5;
    std::int64_t max_y = 6;       // coprime 0 < x < y <= max_y
    std::int64_t sigma_bound = 20;
    bool allow_unit = false;      // include x = y = 1 instances
};

struct RandomPathInstance {
    PathInstance inst;
    RotorConfig rotor;
    ParticleConfig sigma;
};

RandomPathInstance random_path_instance(Rng& rng, const RandomPathConfig& cfg);

}  // namespace rotor
