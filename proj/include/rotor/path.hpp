#pragma once

#include <cstdint>
#include <vector>

#include "rotor/multigraph.hpp"

namespace rotor {

// Path multigraph on vertices u_0..u_{n+1} (u_0 and u_{n+1} are sinks): every
// interior vertex u_k has x arcs to u_{k+1} and y arcs to u_{k-1}. Arcs at
// u_k are labelled j in [0, x+y): j < x point right, j >= x point left, and
// the rotor order is j -> j+1 mod x+y. Carries the invariant tables
//   d_k = x^{n-k} y^k,   F = sum d_k,   h(u_0)=0, h(u_{k+1}) = h(u_k) + d_k.
struct PathInstance {
    std::int64_t n = 0;
    std::int64_t x = 1;
    std::int64_t y = 1;
    bool unit = false;  // x == y == 1 (closed-form solver variant)

    std::vector<Int> d;  // d_0..d_n
    Int F;
    std::vector<Int> h;  // h(u_0)..h(u_{n+1})
    Multigraph graph;

    // Coprime case 0 < x < y; anything else is rejected.
    static PathInstance coprime(std::int64_t n, std::int64_t x, std::int64_t y);
    // Simple path x = y = 1.
    static PathInstance unit_path(std::int64_t n);

    // Global arc id of a^k_j.
    ArcId arc_id(std::int64_t k, std::int64_t j) const;
};

// Rotor configuration from per-vertex arc labels j_1..j_n.
RotorConfig make_rotor(const PathInstance& inst, const std::vector<std::int64_t>& labels);
// All rotors on the first right arc (j = 0 everywhere); the acyclic
// configuration with g = 0.
RotorConfig all_right_rotor(const PathInstance& inst);
ParticleConfig make_particles(const PathInstance& inst, std::vector<Int> chips);

// Linear harmonic invariant: sum_k sigma(u_k) h(u_k). Invariant under firing.
Int harmonic_h(const PathInstance& inst, const ParticleConfig& sigma);

// Arcmonic value of the single arc a^k_j:
//   j d_k for j in [0, x],  (x+y-j) d_{k-1} for j in [x+1, x+y-1].
Int arcmonic_g_arc(const PathInstance& inst, std::int64_t k, std::int64_t j);

// Arcmonic value of a rotor configuration; invariant under cycle pushes and
// constant on rotor equivalence classes.
Int arcmonic_g(const PathInstance& inst, const RotorConfig& rho);

// g(rho) - h(sigma): invariant under every routing and firing operation.
Int class_value(const PathInstance& inst, const RotorConfig& rho, const ParticleConfig& sigma);

// rho ~ rho' iff they have equal arcmonic values.
bool rotor_equivalent(const PathInstance& inst, const RotorConfig& a, const RotorConfig& b);

// sigma ~ sigma' iff equal harmonic values and equal degrees.
bool particle_equivalent(const PathInstance& inst, const ParticleConfig& a,
                         const ParticleConfig& b);

// Image of sigma in the sandpile group Z/FZ, as h(sigma) mod F in [0, F).
Int sandpile_class(const PathInstance& inst, const ParticleConfig& sigma);

}  // namespace rotor
