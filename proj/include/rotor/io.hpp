#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rotor/multigraph.hpp"
#include "rotor/path.hpp"
#include "rotor/solver.hpp"

namespace rotor {

// Path-form instance file: {"n":3,"x":2,"y":3,"rotor":[...],"sigma":[...]}.
// sigma entries are arbitrary-precision integers, given as JSON integers or
// decimal strings.
struct PathFormInstance {
    std::int64_t n = 0;
    std::int64_t x = 1;
    std::int64_t y = 1;
    std::vector<std::int64_t> rotor;  // arc label j_k per interior vertex
    std::vector<Int> sigma;           // per vertex, length n+2
};

// General-form instance file:
// {"vertices":N,"sinks":[...],"arcs":[[tail,head],...],
//  "rotor_order":{"u":[arc ids...]},"rotor":{"u":pos},"sigma":[...]}.
struct GeneralFormInstance {
    std::uint64_t vertices = 0;
    std::vector<VertexId> sinks;
    std::vector<Arc> arcs;
    std::vector<std::pair<VertexId, std::vector<ArcId>>> rotor_order;
    std::vector<std::pair<VertexId, std::uint32_t>> rotor;
    std::vector<Int> sigma;
};

using InstanceFile = std::variant<PathFormInstance, GeneralFormInstance>;

// Throws SchemaError on malformed documents.
InstanceFile parse_instance(const std::string& text);
std::string serialize_instance(const InstanceFile& file);  // canonical form

// Construction from parsed files (ranges and lengths are schema-checked).
PathInstance build_instance(const PathFormInstance& f);
RotorConfig build_rotor(const PathFormInstance& f, const PathInstance& inst);
ParticleConfig build_particles(const PathFormInstance& f);
Multigraph build_graph(const GeneralFormInstance& f);
RotorConfig build_rotor(const GeneralFormInstance& f, const Multigraph& g);
ParticleConfig build_particles(const GeneralFormInstance& f);

// Routing-vector certificate: {"routing":{"u":"r(u)"},"claimed":[...]}.
struct CertificateFile {
    std::vector<std::pair<VertexId, Int>> routing;
    std::vector<Int> claimed;
};

CertificateFile parse_certificate(const std::string& text);
std::string serialize_certificate(const CertificateFile& cert);
RoutingVector build_routing(const CertificateFile& c, const Multigraph& g);

// Machine-readable solution report; every field a decimal string.
std::string solution_report(const ArrivalSolution& sol, const Int& F, const Int& h_sigma,
                            const Int& g_rho);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace rotor
