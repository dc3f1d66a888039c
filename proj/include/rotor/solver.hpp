#pragma once

#include <cstdint>
#include <vector>

#include "rotor/engel.hpp"
#include "rotor/path.hpp"

namespace rotor {

struct ArrivalSolution {
    Int m_right;      // particles ending on u_{n+1}
    Int m_left;       // particles ending on u_0 (= deg(sigma) - m_right)
    Int final_g;      // arcmonic value of every final rotor configuration
    Int final_class;  // final_g mod F
};

enum class SearchMode { bisection, linear };

using SolveStats = DecomposeStats;

// Solves generalized arrival on a path instance without simulating: m_right
// is the unique m with g(rho) - h(sigma) + mF in g(R), found in the window
// of x candidates starting at ceil((h(sigma) - g(rho)) / F).
ArrivalSolution solve(const PathInstance& inst, const RotorConfig& rho,
                      const ParticleConfig& sigma, SearchMode mode = SearchMode::bisection,
                      SolveStats* stats = nullptr);

// Closed form for x = y = 1: m = ceil((h(sigma) - g(rho)) / (n+1)).
ArrivalSolution solve_unit(const PathInstance& inst, const RotorConfig& rho,
                           const ParticleConfig& sigma);

// Class of every final rotor configuration: (g(rho) - h(sigma)) mod F.
Int final_rotor_class(const PathInstance& inst, const RotorConfig& rho,
                      const ParticleConfig& sigma);

// (rho, sigma) ~ (rho', sigma') iff equal g - h and equal degree.
bool equivalent_pairs(const PathInstance& inst, const RotorConfig& rho,
                      const ParticleConfig& sigma, const RotorConfig& rho2,
                      const ParticleConfig& sigma2);

// Order of the sandpile group = number of rotor classes = number of acyclic
// configurations = F.
Int sandpile_order(const PathInstance& inst);

// All arcmonic values in increasing order (F of them, all within
// [0, x(F - d_0)]). Refuses instances with F > max_classes.
std::vector<Int> enumerate_arcmonic_values(const PathInstance& inst,
                                           std::uint64_t max_classes = 100'000);

}  // namespace rotor
