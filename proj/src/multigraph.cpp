#include "rotor/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace rotor {

Multigraph::Multigraph(std::size_t vertex_count, std::vector<VertexId> sinks,
                       std::vector<Arc> arcs, std::vector<std::vector<ArcId>> rotor_order)
    : vertex_count_(vertex_count),
      sinks_(std::move(sinks)),
      arcs_(std::move(arcs)),
      rotor_order_(std::move(rotor_order)) {
    is_sink_.assign(vertex_count_, 0);
    for (VertexId s : sinks_) {
        if (s >= vertex_count_) throw Error("sink id out of range");
        is_sink_[s] = 1;
    }
    if (rotor_order_.size() != vertex_count_)
        throw Error("rotor_order must have one entry per vertex");

    std::vector<std::uint32_t> out_deg(vertex_count_, 0);
    for (const Arc& a : arcs_) {
        if (a.tail >= vertex_count_ || a.head >= vertex_count_)
            throw Error("arc endpoint out of range");
        if (is_sink_[a.tail])
            throw SinkWithOutArcError("sink " + std::to_string(a.tail) + " has an outgoing arc");
        ++out_deg[a.tail];
    }

    std::vector<char> seen(arcs_.size(), 0);
    self_loops_.assign(vertex_count_, 0);
    for (VertexId u = 0; u < vertex_count_; ++u) {
        const auto& order = rotor_order_[u];
        if (is_sink_[u]) {
            if (!order.empty()) throw SinkWithOutArcError("rotor order given for sink");
            continue;
        }
        if (out_deg[u] == 0)
            throw EmptyRotorOrderError("non-sink vertex " + std::to_string(u) +
                                       " has no outgoing arcs");
        if (order.size() != out_deg[u])
            throw Error("rotor order at vertex " + std::to_string(u) +
                        " does not cover its out-arcs");
        for (ArcId a : order) {
            if (a >= arcs_.size()) throw Error("rotor order references unknown arc");
            if (arcs_[a].tail != u) throw Error("rotor order lists a foreign arc");
            if (seen[a]) throw Error("rotor order repeats an arc");
            seen[a] = 1;
            if (arcs_[a].head == u) ++self_loops_[u];
        }
    }

    // Stopping check: reverse reachability from the sinks.
    std::vector<std::vector<VertexId>> rev(vertex_count_);
    for (const Arc& a : arcs_) rev[a.head].push_back(a.tail);
    std::vector<char> reached(vertex_count_, 0);
    std::deque<VertexId> queue;
    for (VertexId s : sinks_) {
        if (!reached[s]) {
            reached[s] = 1;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId p : rev[v]) {
            if (!reached[p]) {
                reached[p] = 1;
                queue.push_back(p);
            }
        }
    }
    for (VertexId u = 0; u < vertex_count_; ++u) {
        if (!reached[u])
            throw NonStoppingError("vertex " + std::to_string(u) + " cannot reach a sink");
    }
}

ArcId current_arc(const Multigraph& g, const RotorConfig& rho, VertexId u) {
    return g.rotor_order(u)[rho.pos[u]];
}

Int degree(const ParticleConfig& sigma) {
    Int total = 0;
    for (const Int& c : sigma.chips) total += c;
    return total;
}

RotorConfig zero_rotor(const Multigraph& g) {
    return RotorConfig{std::vector<std::uint32_t>(g.vertex_count(), 0)};
}

ParticleConfig zero_particles(const Multigraph& g) {
    return ParticleConfig{std::vector<Int>(g.vertex_count(), Int(0))};
}

RoutingVector zero_routing(const Multigraph& g) {
    return RoutingVector{std::vector<Int>(g.vertex_count(), Int(0))};
}

}  // namespace rotor
