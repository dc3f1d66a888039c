// Shared helpers and independent oracles for the test suites. Everything in
// here stays deliberately naive (step-by-step simulation, exhaustive
// enumeration, bounded search) so it can cross-check the library's fast
// paths.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "rotor/engel.hpp"
#include "rotor/path.hpp"
#include "rotor/random_gen.hpp"
#include "rotor/routing.hpp"
#include "rotor/solver.hpp"

namespace testsupport {

using namespace rotor;

// The Engel machine as an explicit multigraph: u_0..u_{n+1} and the sink s,
// with x arcs u_i -> u_{i+1} and y-x arcs u_i -> s for i <= n.
inline Multigraph engel_multigraph(const EngelMachine& m) {
    const auto vertices = static_cast<std::size_t>(m.n + 3);
    const auto s = static_cast<VertexId>(m.n + 2);
    std::vector<VertexId> sinks{static_cast<VertexId>(m.n + 1), s};
    std::vector<Arc> arcs;
    std::vector<std::vector<ArcId>> order(vertices);
    for (std::int64_t i = 0; i <= m.n; ++i) {
        auto& ord = order[static_cast<std::size_t>(i)];
        for (std::int64_t j = 0; j < m.y; ++j) {
            VertexId head = j < m.x ? static_cast<VertexId>(i + 1) : s;
            ord.push_back(static_cast<ArcId>(arcs.size()));
            arcs.push_back(Arc{static_cast<VertexId>(i), head});
        }
    }
    return Multigraph(vertices, std::move(sinks), std::move(arcs), std::move(order));
}

// Reference for apply_routing_vector: plain composition of single steps, in
// the vertex order given by `order`.
inline void step_apply_routing(const Multigraph& g, RotorConfig& rho, ParticleConfig& sigma,
                               const RoutingVector& r, const std::vector<VertexId>& order) {
    for (VertexId u : order) {
        Int t = r.count[u];
        for (Int i = 0; i < t; ++i) routing_plus(g, rho, sigma, u);
        for (Int i = 0; i > t; --i) routing_minus(g, rho, sigma, u);
    }
}

// All directed circuits of G(rho) (they are vertex-disjoint since every
// vertex has outdegree at most one).
inline std::vector<std::vector<VertexId>> all_circuits(const Multigraph& g,
                                                       const RotorConfig& rho) {
    std::vector<std::vector<VertexId>> circuits;
    std::vector<char> state(g.vertex_count(), 0);
    std::vector<VertexId> path;
    for (VertexId start = 0; start < g.vertex_count(); ++start) {
        if (state[start] != 0 || g.is_sink(start)) continue;
        path.clear();
        VertexId v = start;
        while (true) {
            if (g.is_sink(v) || state[v] == 2) break;
            if (state[v] == 1) {
                auto it = std::find(path.begin(), path.end(), v);
                circuits.emplace_back(it, path.end());
                break;
            }
            state[v] = 1;
            path.push_back(v);
            v = g.arc(current_arc(g, rho, v)).head;
        }
        for (VertexId u : path) state[u] = 2;
    }
    return circuits;
}

// Calls fn for every rotor configuration of a path instance.
inline void for_each_rotor(const PathInstance& inst,
                           const std::function<void(const RotorConfig&)>& fn) {
    std::vector<std::int64_t> labels(static_cast<std::size_t>(inst.n), 0);
    const std::int64_t base = inst.x + inst.y;
    while (true) {
        fn(make_rotor(inst, labels));
        std::size_t i = 0;
        while (i < labels.size() && ++labels[i] == base) labels[i++] = 0;
        if (i == labels.size()) break;
    }
}

// Partition of all rotor configurations into cycle-push reachability classes
// (breadth-first over positive and negative pushes). Only for tiny instances.
inline std::vector<std::vector<RotorConfig>> cycle_push_classes(const PathInstance& inst) {
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::vector<RotorConfig>> classes;
    for_each_rotor(inst, [&](const RotorConfig& start) {
        if (seen.count(start.pos)) return;
        std::vector<RotorConfig> component;
        std::vector<RotorConfig> queue{start};
        seen.insert(start.pos);
        while (!queue.empty()) {
            RotorConfig cur = queue.back();
            queue.pop_back();
            component.push_back(cur);
            auto expand = [&](PushSign sign) {
                RotorConfig probe = cur;
                if (sign == PushSign::negative) {
                    // circuits of G(theta^-1 rho)
                    for (std::size_t u = 0; u < probe.pos.size(); ++u) {
                        if (inst.graph.is_sink(static_cast<VertexId>(u))) continue;
                        auto deg = static_cast<std::uint32_t>(
                            inst.graph.out_degree(static_cast<VertexId>(u)));
                        probe.pos[u] = (probe.pos[u] == 0) ? deg - 1 : probe.pos[u] - 1;
                    }
                }
                for (const auto& c : all_circuits(inst.graph, probe)) {
                    RotorConfig next = cur;
                    cycle_push(inst.graph, next, c, sign);
                    if (!seen.count(next.pos)) {
                        seen.insert(next.pos);
                        queue.push_back(next);
                    }
                }
            };
            expand(PushSign::positive);
            expand(PushSign::negative);
        }
        classes.push_back(std::move(component));
    });
    return classes;
}

// Bounded search for a firing vector turning a into b (tiny instances only).
inline bool firing_vector_exists(const PathInstance& inst, const ParticleConfig& a,
                                 const ParticleConfig& b, std::int64_t bound) {
    std::vector<std::int64_t> r(static_cast<std::size_t>(inst.n), -bound);
    while (true) {
        ParticleConfig probe = a;
        for (std::int64_t k = 1; k <= inst.n; ++k) {
            std::int64_t t = r[static_cast<std::size_t>(k - 1)];
            for (std::int64_t i = 0; i < t; ++i) fire(inst.graph, probe, static_cast<VertexId>(k));
            for (std::int64_t i = 0; i > t; --i)
                unfire(inst.graph, probe, static_cast<VertexId>(k));
        }
        if (probe == b) return true;
        std::size_t i = 0;
        while (i < r.size() && ++r[i] > bound) r[i++] = -bound;
        if (i == r.size()) return false;
    }
}

// Bounded search for a routing vector turning (rho,sigma) into (rho2,sigma2).
inline bool routing_vector_exists(const PathInstance& inst, const RotorConfig& rho,
                                  const ParticleConfig& sigma, const RotorConfig& rho2,
                                  const ParticleConfig& sigma2, std::int64_t bound) {
    std::vector<std::int64_t> r(static_cast<std::size_t>(inst.n), -bound);
    while (true) {
        RotorConfig pr = rho;
        ParticleConfig ps = sigma;
        RoutingVector rv = zero_routing(inst.graph);
        for (std::size_t k = 0; k < r.size(); ++k) rv.count[k + 1] = r[k];
        apply_routing_vector(inst.graph, pr, ps, rv);
        if (pr == rho2 && ps == sigma2) return true;
        std::size_t i = 0;
        while (i < r.size() && ++r[i] > bound) r[i++] = -bound;
        if (i == r.size()) return false;
    }
}

// Routes everything to sinks like full_route, but clears antiparticles
// before routing the positive counts. Produces another member of the same
// routing class: final particles must agree exactly, final rotors up to
// equivalence.
inline RouteResult reverse_full_route(const Multigraph& g, RotorConfig rho,
                                      ParticleConfig sigma) {
    RoutingVector r = zero_routing(g);
    std::uint64_t steps = 0;
    auto sweep = [&](bool negatives) {
        while (true) {
            bool moved = false;
            for (VertexId u = 0; u < g.vertex_count(); ++u) {
                if (g.is_sink(u)) continue;
                if (negatives && sigma.chips[u] < 0) {
                    routing_minus(g, rho, sigma, u);
                    --r.count[u];
                } else if (!negatives && sigma.chips[u] > 0) {
                    routing_plus(g, rho, sigma, u);
                    ++r.count[u];
                } else {
                    continue;
                }
                moved = true;
                ++steps;
            }
            if (!moved) return;
        }
    };
    sweep(true);
    sweep(false);
    return {std::move(rho), std::move(sigma), std::move(r), steps};
}

// Maximal legal routing with a seeded random schedule; same contract as
// legal_route_to_sinks.
inline RouteResult random_schedule_route(const Multigraph& g, RotorConfig rho,
                                         ParticleConfig sigma, Rng& rng) {
    RoutingVector r = zero_routing(g);
    std::uint64_t steps = 0;
    while (true) {
        std::vector<VertexId> eligible;
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            if (!g.is_sink(u) && sigma.chips[u] > 0) eligible.push_back(u);
        if (eligible.empty()) break;
        VertexId u = eligible[rng.below(eligible.size())];
        routing_plus(g, rho, sigma, u);
        ++r.count[u];
        ++steps;
    }
    return {std::move(rho), std::move(sigma), std::move(r), steps};
}

// Maximal legal firing, one legal firing at a time, with a seeded schedule.
inline StabilizeResult random_schedule_stabilize(const Multigraph& g, ParticleConfig sigma,
                                                 Rng& rng) {
    std::vector<Int> firings(g.vertex_count(), Int(0));
    while (true) {
        std::vector<VertexId> eligible;
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            if (!g.is_sink(u) && sigma.chips[u] >= Int(g.out_degree(u))) eligible.push_back(u);
        if (eligible.empty()) break;
        VertexId u = eligible[rng.below(eligible.size())];
        fire(g, sigma, u);
        ++firings[u];
    }
    return {std::move(sigma), std::move(firings)};
}

// Every coprime (x, y) with 0 < x < y and x + y <= max_sum.
inline std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(std::int64_t max_sum) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t y = 2; y < max_sum; ++y)
        for (std::int64_t x = 1; x < y; ++x)
            if (x + y <= max_sum && std::gcd(x, y) == 1) out.emplace_back(x, y);
    return out;
}

inline DigitWord word(std::initializer_list<std::int64_t> values) {
    DigitWord w;
    for (auto v : values) w.emplace_back(v);
    return w;
}

inline ParticleConfig chips(std::initializer_list<std::int64_t> values) {
    ParticleConfig c;
    for (auto v : values) c.chips.emplace_back(v);
    return c;
}

// The 65 arcmonic values of the n=3, x=2, y=3 instance.
inline const std::vector<std::int64_t> kArcmonicValues233 = {
    0,  8,  12, 16, 18, 20, 24, 26, 27, 28, 30, 32, 34, 35, 36, 38, 39,
    40, 42, 43, 44, 45, 46, 47, 48, 50, 51, 52, 53, 54, 55, 56, 57, 58,
    59, 60, 61, 62, 63, 64, 66, 67, 68, 69, 70, 71, 72, 74, 75, 76, 78,
    79, 80, 82, 84, 86, 87, 88, 90, 94, 96, 98, 102, 106, 114};

}  // namespace testsupport
