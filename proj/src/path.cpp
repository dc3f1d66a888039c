#include "rotor/path.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace rotor {

namespace {

Multigraph build_path_graph(std::int64_t n, std::int64_t x, std::int64_t y) {
    const auto vertices = static_cast<std::size_t>(n + 2);
    std::vector<VertexId> sinks{0, static_cast<VertexId>(n + 1)};
    std::vector<Arc> arcs;
    std::vector<std::vector<ArcId>> order(vertices);
    arcs.reserve(static_cast<std::size_t>(n * (x + y)));
    for (std::int64_t k = 1; k <= n; ++k) {
        auto& ord = order[static_cast<std::size_t>(k)];
        for (std::int64_t j = 0; j < x + y; ++j) {
            VertexId head = static_cast<VertexId>(j < x ? k + 1 : k - 1);
            ord.push_back(static_cast<ArcId>(arcs.size()));
            arcs.push_back(Arc{static_cast<VertexId>(k), head});
        }
    }
    return Multigraph(vertices, std::move(sinks), std::move(arcs), std::move(order));
}

PathInstance build_instance_tables(std::int64_t n, std::int64_t x, std::int64_t y, bool unit) {
    PathInstance inst{n, x, y, unit, {}, Int(0), {}, build_path_graph(n, x, y)};
    inst.d.reserve(static_cast<std::size_t>(n + 1));
    Int dk = boost::multiprecision::pow(Int(x), static_cast<unsigned>(n));
    inst.h.push_back(Int(0));
    for (std::int64_t k = 0; k <= n; ++k) {
        inst.d.push_back(dk);
        inst.F += dk;
        inst.h.push_back(inst.h.back() + dk);
        if (k < n) {
            dk /= x;
            dk *= y;
        }
    }
    return inst;
}

}  // namespace

namespace {

// Keeps n*(x+y) comfortably inside arc-id range and allocation sanity.
constexpr std::int64_t kMaxArcs = 200'000'000;

void check_size(std::int64_t n, std::int64_t x, std::int64_t y) {
    if (n < 0) throw InvalidInstanceError("interior vertex count must be nonnegative");
    if (y > kMaxArcs || n > kMaxArcs / (x + y))
        throw InvalidInstanceError("instance too large");
}

}  // namespace

PathInstance PathInstance::coprime(std::int64_t n, std::int64_t x, std::int64_t y) {
    if (!(0 < x && x < y))
        throw InvalidInstanceError("multiplicities must satisfy 0 < x < y");
    if (std::gcd(x, y) != 1) throw InvalidInstanceError("multiplicities must be coprime");
    check_size(n, x, y);
    return build_instance_tables(n, x, y, false);
}

PathInstance PathInstance::unit_path(std::int64_t n) {
    check_size(n, 1, 1);
    return build_instance_tables(n, 1, 1, true);
}

ArcId PathInstance::arc_id(std::int64_t k, std::int64_t j) const {
    if (k < 1 || k > n || j < 0 || j >= x + y) throw IndexOutOfRangeError("no such arc");
    return static_cast<ArcId>((k - 1) * (x + y) + j);
}

RotorConfig make_rotor(const PathInstance& inst, const std::vector<std::int64_t>& labels) {
    if (labels.size() != static_cast<std::size_t>(inst.n))
        throw DimensionMismatchError("need one arc label per interior vertex");
    RotorConfig rho = zero_rotor(inst.graph);
    for (std::int64_t k = 1; k <= inst.n; ++k) {
        std::int64_t j = labels[static_cast<std::size_t>(k - 1)];
        if (j < 0 || j >= inst.x + inst.y) throw IndexOutOfRangeError("arc label out of range");
        rho.pos[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(j);
    }
    return rho;
}

RotorConfig all_right_rotor(const PathInstance& inst) { return zero_rotor(inst.graph); }

ParticleConfig make_particles(const PathInstance& inst, std::vector<Int> chips) {
    if (chips.size() != static_cast<std::size_t>(inst.n + 2))
        throw DimensionMismatchError("need one chip count per vertex");
    return ParticleConfig{std::move(chips)};
}

Int harmonic_h(const PathInstance& inst, const ParticleConfig& sigma) {
    if (sigma.chips.size() != static_cast<std::size_t>(inst.n + 2))
        throw DimensionMismatchError("particle configuration has wrong length");
    Int total = 0;
    for (std::size_t k = 0; k < sigma.chips.size(); ++k) {
        if (sigma.chips[k] != 0) total += sigma.chips[k] * inst.h[k];
    }
    return total;
}

Int arcmonic_g_arc(const PathInstance& inst, std::int64_t k, std::int64_t j) {
    if (k < 1 || k > inst.n || j < 0 || j >= inst.x + inst.y)
        throw IndexOutOfRangeError("arc index out of range");
    if (j <= inst.x) return j * inst.d[static_cast<std::size_t>(k)];
    return (inst.x + inst.y - j) * inst.d[static_cast<std::size_t>(k - 1)];
}

Int arcmonic_g(const PathInstance& inst, const RotorConfig& rho) {
    if (rho.pos.size() != static_cast<std::size_t>(inst.n + 2))
        throw DimensionMismatchError("rotor configuration has wrong length");
    Int total = 0;
    for (std::int64_t k = 1; k <= inst.n; ++k)
        total += arcmonic_g_arc(inst, k, rho.pos[static_cast<std::size_t>(k)]);
    return total;
}

Int class_value(const PathInstance& inst, const RotorConfig& rho, const ParticleConfig& sigma) {
    return arcmonic_g(inst, rho) - harmonic_h(inst, sigma);
}

bool rotor_equivalent(const PathInstance& inst, const RotorConfig& a, const RotorConfig& b) {
    return arcmonic_g(inst, a) == arcmonic_g(inst, b);
}

bool particle_equivalent(const PathInstance& inst, const ParticleConfig& a,
                         const ParticleConfig& b) {
    return harmonic_h(inst, a) == harmonic_h(inst, b) && degree(a) == degree(b);
}

Int sandpile_class(const PathInstance& inst, const ParticleConfig& sigma) {
    return mod_floor(harmonic_h(inst, sigma), inst.F);
}

}  // namespace rotor
