#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rotor/bigint.hpp"
#include "rotor/errors.hpp"

namespace rotor {

using VertexId = std::uint32_t;
using ArcId = std::uint32_t;

struct Arc {
    VertexId tail = 0;
    VertexId head = 0;
    bool operator==(const Arc&) const = default;
};

// Stopping directed multigraph with a cyclic rotor order at every non-sink
// vertex. Sinks have no outgoing arcs; every vertex has a directed path to a
// sink. Immutable after construction (construction validates all of this),
// so instances can be shared freely across threads.
class Multigraph {
public:
    // rotor_order has one entry per vertex; the entry of a non-sink vertex u
    // lists the arc ids of A+(u) in cyclic order (position i is followed by
    // position i+1 mod outdegree), the entry of a sink must be empty.
    Multigraph(std::size_t vertex_count, std::vector<VertexId> sinks,
               std::vector<Arc> arcs,
               std::vector<std::vector<ArcId>> rotor_order);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t arc_count() const { return arcs_.size(); }
    bool is_sink(VertexId u) const { return is_sink_[u] != 0; }
    const std::vector<VertexId>& sinks() const { return sinks_; }
    const Arc& arc(ArcId a) const { return arcs_[a]; }
    std::size_t out_degree(VertexId u) const { return rotor_order_[u].size(); }
    std::size_t self_loops(VertexId u) const { return self_loops_[u]; }
    std::span<const ArcId> rotor_order(VertexId u) const { return rotor_order_[u]; }

private:
    std::size_t vertex_count_;
    std::vector<VertexId> sinks_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<ArcId>> rotor_order_;
    std::vector<char> is_sink_;
    std::vector<std::uint32_t> self_loops_;
};

// Rotor configuration: for every non-sink vertex, the position of its current
// arc within the vertex's rotor order. Entries at sinks are ignored.
struct RotorConfig {
    std::vector<std::uint32_t> pos;
    bool operator==(const RotorConfig&) const = default;
};

// Particle configuration: chip count per vertex; negative counts are
// antiparticles.
struct ParticleConfig {
    std::vector<Int> chips;
    bool operator==(const ParticleConfig&) const = default;
};

// Net number of routing operations per vertex (entries at sinks must be 0).
struct RoutingVector {
    std::vector<Int> count;
    bool operator==(const RoutingVector&) const = default;
};

ArcId current_arc(const Multigraph& g, const RotorConfig& rho, VertexId u);

// Sum of all chip counts, sinks included.
Int degree(const ParticleConfig& sigma);

RotorConfig zero_rotor(const Multigraph& g);
ParticleConfig zero_particles(const Multigraph& g);
RoutingVector zero_routing(const Multigraph& g);

}  // namespace rotor
