#include "rotor/solver.hpp"

#include <algorithm>

namespace rotor {

namespace {

ArrivalSolution degenerate_solution(const PathInstance&, const ParticleConfig& sigma) {
    // No interior vertices: nothing routes, the sinks keep their counts.
    if (sigma.chips.size() != 2) throw DimensionMismatchError("expected two vertices");
    return {sigma.chips[1], sigma.chips[0], Int(0), Int(0)};
}

}  // namespace

ArrivalSolution solve(const PathInstance& inst, const RotorConfig& rho,
                      const ParticleConfig& sigma, SearchMode mode, SolveStats* stats) {
    if (inst.unit) return solve_unit(inst, rho, sigma);
    if (inst.n == 0) return degenerate_solution(inst, sigma);

    const Int g = arcmonic_g(inst, rho);
    const Int h = harmonic_h(inst, sigma);
    const Int diff = g - h;
    // m lies in a window of x values starting at ceil((h - g) / F); shifting
    // by the window base leaves a value in [0, F).
    const Int m_base = ceil_div(h - g, inst.F);
    const Int v0 = diff + m_base * inst.F;

    EngelMachine machine(inst.n, inst.x, inst.y);
    UniqueK found = unique_k_mod_F(machine, v0, mode == SearchMode::linear, stats);

    ArrivalSolution sol;
    sol.m_right = m_base + found.k;
    sol.m_left = degree(sigma) - sol.m_right;
    sol.final_g = std::move(found.value);
    sol.final_class = v0;
    return sol;
}

ArrivalSolution solve_unit(const PathInstance& inst, const RotorConfig& rho,
                           const ParticleConfig& sigma) {
    if (!inst.unit) throw InvalidInstanceError("closed form requires x = y = 1");
    if (inst.n == 0) return degenerate_solution(inst, sigma);
    const Int g = arcmonic_g(inst, rho);
    const Int h = harmonic_h(inst, sigma);
    ArrivalSolution sol;
    sol.m_right = ceil_div(h - g, inst.F);  // F = n + 1
    sol.m_left = degree(sigma) - sol.m_right;
    sol.final_g = g - h + sol.m_right * inst.F;
    sol.final_class = sol.final_g;  // already in [0, n]
    return sol;
}

Int final_rotor_class(const PathInstance& inst, const RotorConfig& rho,
                      const ParticleConfig& sigma) {
    return mod_floor(class_value(inst, rho, sigma), inst.F);
}

bool equivalent_pairs(const PathInstance& inst, const RotorConfig& rho,
                      const ParticleConfig& sigma, const RotorConfig& rho2,
                      const ParticleConfig& sigma2) {
    return class_value(inst, rho, sigma) == class_value(inst, rho2, sigma2) &&
           degree(sigma) == degree(sigma2);
}

Int sandpile_order(const PathInstance& inst) { return inst.F; }

std::vector<Int> enumerate_arcmonic_values(const PathInstance& inst, std::uint64_t max_classes) {
    if (inst.F > max_classes)
        throw SizeLimitExceededError("instance has " + inst.F.str() + " rotor classes");
    std::vector<Int> values;
    if (inst.unit) {
        for (Int v = 0; v <= inst.n; ++v) values.push_back(v);
        return values;
    }
    EngelMachine machine(inst.n, inst.x, inst.y);
    const Int max_g = inst.x * (inst.F - inst.d[0]);
    for (Int v = 0; v <= max_g; ++v) {
        if (is_arcmonic_value(machine, v)) values.push_back(v);
    }
    return values;
}

}  // namespace rotor
