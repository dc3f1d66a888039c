#include "rotor/routing.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace rotor {

namespace {

void check_non_sink(const Multigraph& g, VertexId u) {
    if (u >= g.vertex_count() || g.is_sink(u))
        throw SinkVertexError("vertex " + std::to_string(u) + " is a sink");
}

// Step cores without the sink check, for the routing loops.
inline void step_plus(const Multigraph& g, RotorConfig& rho, ParticleConfig& sigma, VertexId u) {
    const Arc& a = g.arc(current_arc(g, rho, u));
    --sigma.chips[u];
    ++sigma.chips[a.head];
    std::uint32_t& p = rho.pos[u];
    p = (p + 1 == g.out_degree(u)) ? 0 : p + 1;
}

inline void step_minus(const Multigraph& g, RotorConfig& rho, ParticleConfig& sigma, VertexId u) {
    std::uint32_t& p = rho.pos[u];
    p = (p == 0) ? static_cast<std::uint32_t>(g.out_degree(u)) - 1 : p - 1;
    const Arc& a = g.arc(current_arc(g, rho, u));
    ++sigma.chips[u];
    --sigma.chips[a.head];
}

}  // namespace

void routing_plus(const Multigraph& g, RotorConfig& rho, ParticleConfig& sigma, VertexId u) {
    check_non_sink(g, u);
    step_plus(g, rho, sigma, u);
}

void routing_minus(const Multigraph& g, RotorConfig& rho, ParticleConfig& sigma, VertexId u) {
    check_non_sink(g, u);
    step_minus(g, rho, sigma, u);
}

void fire(const Multigraph& g, ParticleConfig& sigma, VertexId u) {
    check_non_sink(g, u);
    sigma.chips[u] -= g.out_degree(u);
    for (ArcId a : g.rotor_order(u)) ++sigma.chips[g.arc(a).head];
}

void unfire(const Multigraph& g, ParticleConfig& sigma, VertexId u) {
    check_non_sink(g, u);
    sigma.chips[u] += g.out_degree(u);
    for (ArcId a : g.rotor_order(u)) --sigma.chips[g.arc(a).head];
}

void apply_routing_vector(const Multigraph& g, RotorConfig& rho, ParticleConfig& sigma,
                          const RoutingVector& r) {
    if (r.count.size() != g.vertex_count())
        throw DimensionMismatchError("routing vector has wrong length");
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        const Int& t = r.count[u];
        if (t == 0) continue;
        if (g.is_sink(u)) throw Error("routing vector nonzero at a sink");
        const Int deg = g.out_degree(u);
        // Every full rotor turn is one firing and leaves the rotor alone.
        Int magnitude = t < 0 ? Int(-t) : t;
        Int turns = magnitude / deg;
        auto rest = Int(magnitude % deg).convert_to<std::uint32_t>();
        if (turns != 0) {
            if (t > 0) {
                sigma.chips[u] -= turns * deg;
                for (ArcId a : g.rotor_order(u)) sigma.chips[g.arc(a).head] += turns;
            } else {
                sigma.chips[u] += turns * deg;
                for (ArcId a : g.rotor_order(u)) sigma.chips[g.arc(a).head] -= turns;
            }
        }
        for (std::uint32_t i = 0; i < rest; ++i) {
            if (t > 0)
                step_plus(g, rho, sigma, u);
            else
                step_minus(g, rho, sigma, u);
        }
    }
}

RouteResult legal_route_to_sinks(const Multigraph& g, RotorConfig rho, ParticleConfig sigma) {
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (!g.is_sink(u) && sigma.chips[u] < 0)
            throw NegativeInputError("negative count on non-sink vertex " + std::to_string(u));
    }
    RoutingVector r = zero_routing(g);
    std::uint64_t steps = 0;
    std::set<VertexId> active;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        if (!g.is_sink(u) && sigma.chips[u] > 0) active.insert(u);
    while (!active.empty()) {
        VertexId u = *active.begin();
        const Arc& a = g.arc(current_arc(g, rho, u));
        step_plus(g, rho, sigma, u);
        ++r.count[u];
        ++steps;
        if (sigma.chips[u] <= 0) active.erase(active.begin());
        if (!g.is_sink(a.head) && sigma.chips[a.head] > 0) active.insert(a.head);
    }
    return {std::move(rho), std::move(sigma), std::move(r), steps};
}

RouteResult full_route(const Multigraph& g, RotorConfig rho, ParticleConfig sigma,
                       std::uint64_t step_budget) {
    RoutingVector r = zero_routing(g);
    std::uint64_t steps = 0;

    // Phase 1: legally route all positive counts (negative counts may sit
    // anywhere and absorb particles).
    std::set<VertexId> positive;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        if (!g.is_sink(u) && sigma.chips[u] > 0) positive.insert(u);
    while (!positive.empty()) {
        if (steps >= step_budget) throw StepBudgetExceededError("full_route exceeded step budget");
        VertexId u = *positive.begin();
        const Arc& a = g.arc(current_arc(g, rho, u));
        step_plus(g, rho, sigma, u);
        ++r.count[u];
        ++steps;
        if (sigma.chips[u] <= 0) positive.erase(positive.begin());
        if (!g.is_sink(a.head) && sigma.chips[a.head] > 0) positive.insert(a.head);
    }

    // Phase 2: the remaining counts are <= 0; antiparticles walk under the
    // inverse rotor order, which never creates positive counts on non-sinks.
    std::set<VertexId> negative;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        if (!g.is_sink(u) && sigma.chips[u] < 0) negative.insert(u);
    while (!negative.empty()) {
        if (steps >= step_budget) throw StepBudgetExceededError("full_route exceeded step budget");
        VertexId u = *negative.begin();
        step_minus(g, rho, sigma, u);
        const Arc& a = g.arc(current_arc(g, rho, u));  // arc the antiparticle took
        --r.count[u];
        ++steps;
        if (sigma.chips[u] == 0) negative.erase(negative.begin());
        if (!g.is_sink(a.head) && sigma.chips[a.head] < 0) negative.insert(a.head);
    }
    return {std::move(rho), std::move(sigma), std::move(r), steps};
}

StabilizeResult stabilize(const Multigraph& g, ParticleConfig sigma) {
    std::vector<Int> firings(g.vertex_count(), Int(0));
    std::set<VertexId> active;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        if (!g.is_sink(u) && sigma.chips[u] >= Int(g.out_degree(u))) active.insert(u);
    while (!active.empty()) {
        VertexId u = *active.begin();
        const Int deg = g.out_degree(u);
        const Int net = deg - g.self_loops(u);  // > 0 on a stopping graph
        // Largest q with sigma(u) - (q-1) net >= deg: all q firings are legal.
        Int q = (sigma.chips[u] - deg) / net + 1;
        sigma.chips[u] -= q * deg;
        for (ArcId a : g.rotor_order(u)) sigma.chips[g.arc(a).head] += q;
        firings[u] += q;
        if (sigma.chips[u] < deg) active.erase(active.begin());
        for (ArcId a : g.rotor_order(u)) {
            VertexId v = g.arc(a).head;
            if (!g.is_sink(v) && sigma.chips[v] >= Int(g.out_degree(v))) active.insert(v);
        }
    }
    return {std::move(sigma), std::move(firings)};
}

void cycle_push(const Multigraph& g, RotorConfig& rho, std::span<const VertexId> circuit,
                PushSign sign) {
    if (circuit.empty()) throw NotACircuitError("empty circuit");
    std::set<VertexId> distinct(circuit.begin(), circuit.end());
    if (distinct.size() != circuit.size()) throw NotACircuitError("circuit repeats a vertex");
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        VertexId u = circuit[i];
        if (u >= g.vertex_count() || g.is_sink(u)) throw NotACircuitError("circuit visits a sink");
        std::uint32_t p = rho.pos[u];
        if (sign == PushSign::negative)
            p = (p == 0) ? static_cast<std::uint32_t>(g.out_degree(u)) - 1 : p - 1;
        const Arc& a = g.arc(g.rotor_order(u)[p]);
        if (a.head != circuit[(i + 1) % circuit.size()])
            throw NotACircuitError("configuration does not follow the circuit");
    }
    for (VertexId u : circuit) {
        std::uint32_t& p = rho.pos[u];
        if (sign == PushSign::positive)
            p = (p + 1 == g.out_degree(u)) ? 0 : p + 1;
        else
            p = (p == 0) ? static_cast<std::uint32_t>(g.out_degree(u)) - 1 : p - 1;
    }
}

std::optional<std::vector<VertexId>> find_circuit(const Multigraph& g, const RotorConfig& rho) {
    enum : char { unvisited = 0, on_path = 1, done = 2 };
    std::vector<char> state(g.vertex_count(), unvisited);
    std::vector<VertexId> path;
    for (VertexId start = 0; start < g.vertex_count(); ++start) {
        if (state[start] != unvisited || g.is_sink(start)) continue;
        path.clear();
        VertexId v = start;
        while (true) {
            if (g.is_sink(v) || state[v] == done) break;
            if (state[v] == on_path) {
                auto it = std::find(path.begin(), path.end(), v);
                return std::vector<VertexId>(it, path.end());
            }
            state[v] = on_path;
            path.push_back(v);
            v = g.arc(current_arc(g, rho, v)).head;
        }
        for (VertexId u : path) state[u] = done;
    }
    return std::nullopt;
}

bool verify_certificate(const Multigraph& g, const RotorConfig& rho, const ParticleConfig& sigma,
                        const RoutingVector& r, const ParticleConfig& claimed) {
    if (claimed.chips.size() != g.vertex_count())
        throw DimensionMismatchError("claimed configuration has wrong length");
    RotorConfig rho2 = rho;
    ParticleConfig sigma2 = sigma;
    apply_routing_vector(g, rho2, sigma2, r);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (g.is_sink(u)) {
            if (sigma2.chips[u] != claimed.chips[u]) return false;
        } else {
            if (sigma2.chips[u] != 0) return false;
        }
    }
    return true;
}

}  // namespace rotor
