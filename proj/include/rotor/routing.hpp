#pragma once

#include <cstdint>
#include <optional>

#include "rotor/multigraph.hpp"

namespace rotor {

inline constexpr std::uint64_t kDefaultStepBudget = 50'000'000;

// Move-and-turn routing at u: move one particle along the current arc of u,
// then advance the rotor at u. routing_minus is the exact inverse (retract
// the rotor, then pull a particle back along the new current arc). Both
// mutate rho/sigma in place and apply regardless of the sign of sigma(u).
void routing_plus(const Multigraph& g, RotorConfig& rho, ParticleConfig& sigma, VertexId u);
void routing_minus(const Multigraph& g, RotorConfig& rho, ParticleConfig& sigma, VertexId u);

// Chip-firing at u: send one chip along every out-arc of u (and back).
void fire(const Multigraph& g, ParticleConfig& sigma, VertexId u);
void unfire(const Multigraph& g, ParticleConfig& sigma, VertexId u);

// Applies routing_plus^{r(u)} (or its inverse) at every vertex. The routing
// operators commute, so the result does not depend on any ordering. Full
// rotor turns are collapsed into firings, so entries of r may be huge; the
// cost is O(sum of outdegrees) big-integer operations.
void apply_routing_vector(const Multigraph& g, RotorConfig& rho, ParticleConfig& sigma,
                          const RoutingVector& r);

struct RouteResult {
    RotorConfig rotor;
    ParticleConfig particles;
    RoutingVector routing;
    std::uint64_t steps = 0;
};

// Maximal legal routing: requires sigma >= 0 on non-sinks, routes every
// particle to a sink. Always picks the lowest-indexed eligible vertex; by the
// abelian property the result is the same for every schedule.
RouteResult legal_route_to_sinks(const Multigraph& g, RotorConfig rho, ParticleConfig sigma);

// Routes an arbitrary configuration (negative counts allowed anywhere) to one
// with zero particles on every non-sink vertex. Phase 1 routes positive
// counts legally; phase 2 routes the remaining antiparticles with
// routing_minus, which never creates positive counts on non-sinks. Throws
// StepBudgetExceededError when more than step_budget single steps are needed.
RouteResult full_route(const Multigraph& g, RotorConfig rho, ParticleConfig sigma,
                       std::uint64_t step_budget = kDefaultStepBudget);

struct StabilizeResult {
    ParticleConfig particles;
    std::vector<Int> firings;
};

// Legal chip-firing until stable (sigma(u) < outdeg(u) on non-sinks).
// Consecutive firings at one vertex are batched, so exponential counts are
// fine. Unique result by the abelian property of firing.
StabilizeResult stabilize(const Multigraph& g, ParticleConfig sigma);

enum class PushSign { positive, negative };

// Advances (positive) or retracts (negative) the rotor simultaneously on the
// vertices of a directed circuit. For a positive push the circuit must be a
// circuit of G(rho); for a negative push, of G(theta^-1 rho). Particle
// configurations are unaffected.
void cycle_push(const Multigraph& g, RotorConfig& rho, std::span<const VertexId> circuit,
                PushSign sign);

// A directed circuit of G(rho) if one exists; nullopt certifies that rho is
// acyclic. Every vertex has outdegree <= 1 in G(rho), so this just follows
// unique successors.
std::optional<std::vector<VertexId>> find_circuit(const Multigraph& g, const RotorConfig& rho);

// Checks a routing-vector certificate: applying r to (rho, sigma) must leave
// zero particles on every non-sink vertex and match `claimed` on the sinks.
bool verify_certificate(const Multigraph& g, const RotorConfig& rho, const ParticleConfig& sigma,
                        const RoutingVector& r, const ParticleConfig& claimed);

}  // namespace rotor
