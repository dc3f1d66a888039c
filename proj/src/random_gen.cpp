#include "rotor/random_gen.hpp"

#include <numeric>

namespace rotor {

std::uint64_t Rng::below(std::uint64_t bound) {
    // Modulo bias is irrelevant for test workloads; determinism is not.
    return eng_() % bound;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Int Rng::bits(unsigned nbits) {
    Int v = 0;
    unsigned filled = 0;
    while (filled < nbits) {
        unsigned take = std::min(64u, nbits - filled);
        std::uint64_t word = eng_();
        if (take < 64) word &= (std::uint64_t(1) << take) - 1;
        v <<= take;
        v |= word;
        filled += take;
    }
    return v;
}

Int Rng::signed_bits(unsigned nbits) {
    Int v = bits(nbits);
    return below(2) ? Int(-v) : v;
}

RandomPathInstance random_path_instance(Rng& rng, const RandomPathConfig& cfg) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    if (cfg.allow_unit) pairs.emplace_back(1, 1);
    for (std::int64_t y = 2; y <= cfg.max_y; ++y)
        for (std::int64_t x = 1; x < y; ++x)
            if (std::gcd(x, y) == 1) pairs.emplace_back(x, y);

    auto [x, y] = pairs[rng.below(pairs.size())];
    std::int64_t n = rng.range(1, cfg.max_n);
    PathInstance inst = (x == 1 && y == 1) ? PathInstance::unit_path(n)
                                           : PathInstance::coprime(n, x, y);

    RotorConfig rho = zero_rotor(inst.graph);
    for (std::int64_t k = 1; k <= n; ++k)
        rho.pos[static_cast<std::size_t>(k)] =
            static_cast<std::uint32_t>(rng.below(static_cast<std::uint64_t>(x + y)));

    ParticleConfig sigma = zero_particles(inst.graph);
    for (auto& c : sigma.chips) c = rng.range(-cfg.sigma_bound, cfg.sigma_bound);

    return {std::move(inst), std::move(rho), std::move(sigma)};
}

}  // namespace rotor
