#include "rotor/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rotor {

namespace {

using nlohmann::json;

Int parse_int_value(const json& v, const char* what) {
    if (v.is_number_integer()) return Int(v.get<std::int64_t>());
    if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw SchemaError(std::string(what) + ": empty integer");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw SchemaError(std::string(what) + ": not a decimal integer: " + s);
        return Int(s);
    }
    throw SchemaError(std::string(what) + ": expected integer or decimal string");
}

std::int64_t parse_small(const json& v, const char* what) {
    if (!v.is_number_integer() && !v.is_number_unsigned())
        throw SchemaError(std::string(what) + ": expected an integer");
    return v.get<std::int64_t>();
}

const json& field(const json& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end()) throw SchemaError(std::string("missing field: ") + name);
    return *it;
}

std::vector<Int> parse_sigma(const json& arr) {
    if (!arr.is_array()) throw SchemaError("sigma: expected an array");
    std::vector<Int> sigma;
    sigma.reserve(arr.size());
    for (const auto& v : arr) sigma.push_back(parse_int_value(v, "sigma"));
    return sigma;
}

VertexId parse_vertex_key(const std::string& key) {
    if (key.empty() || key.size() > 9 || key.find_first_not_of("0123456789") != std::string::npos)
        throw SchemaError("vertex key is not a vertex id: " + key);
    return static_cast<VertexId>(std::stoull(key));
}

json sigma_to_json(const std::vector<Int>& sigma) {
    json arr = json::array();
    for (const Int& v : sigma) arr.push_back(v.str());
    return arr;
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("instance must be a JSON object");

    if (doc.contains("n")) {
        PathFormInstance f;
        f.n = parse_small(field(doc, "n"), "n");
        f.x = parse_small(field(doc, "x"), "x");
        f.y = parse_small(field(doc, "y"), "y");
        const json& rotor = field(doc, "rotor");
        if (!rotor.is_array()) throw SchemaError("rotor: expected an array");
        for (const auto& v : rotor) f.rotor.push_back(parse_small(v, "rotor"));
        f.sigma = parse_sigma(field(doc, "sigma"));
        if (f.n < 0) throw SchemaError("n must be nonnegative");
        if (f.rotor.size() != static_cast<std::size_t>(f.n))
            throw SchemaError("rotor must list one arc label per interior vertex");
        for (std::int64_t j : f.rotor)
            if (j < 0 || j >= f.x + f.y) throw SchemaError("rotor label out of range");
        if (f.sigma.size() != static_cast<std::size_t>(f.n + 2))
            throw SchemaError("sigma must list one count per vertex");
        return f;
    }

    if (!doc.contains("vertices")) throw SchemaError("instance needs field n or vertices");
    GeneralFormInstance f;
    f.vertices = static_cast<std::uint64_t>(parse_small(field(doc, "vertices"), "vertices"));
    const json& sinks = field(doc, "sinks");
    if (!sinks.is_array()) throw SchemaError("sinks: expected an array");
    for (const auto& v : sinks) {
        std::int64_t s = parse_small(v, "sinks");
        if (s < 0 || static_cast<std::uint64_t>(s) >= f.vertices)
            throw SchemaError("sink id out of range");
        f.sinks.push_back(static_cast<VertexId>(s));
    }
    const json& arcs = field(doc, "arcs");
    if (!arcs.is_array()) throw SchemaError("arcs: expected an array");
    for (const auto& a : arcs) {
        if (!a.is_array() || a.size() != 2) throw SchemaError("arc must be [tail, head]");
        std::int64_t tail = parse_small(a[0], "arc tail");
        std::int64_t head = parse_small(a[1], "arc head");
        if (tail < 0 || head < 0 || static_cast<std::uint64_t>(tail) >= f.vertices ||
            static_cast<std::uint64_t>(head) >= f.vertices)
            throw SchemaError("arc endpoint out of range");
        f.arcs.push_back(Arc{static_cast<VertexId>(tail), static_cast<VertexId>(head)});
    }
    const json& order = field(doc, "rotor_order");
    if (!order.is_object()) throw SchemaError("rotor_order: expected an object");
    for (const auto& [key, val] : order.items()) {
        VertexId u = parse_vertex_key(key);
        if (!val.is_array()) throw SchemaError("rotor_order entry: expected an array");
        std::vector<ArcId> ids;
        for (const auto& v : val) {
            std::int64_t a = parse_small(v, "rotor_order");
            if (a < 0 || static_cast<std::size_t>(a) >= f.arcs.size())
                throw SchemaError("rotor_order arc id out of range");
            ids.push_back(static_cast<ArcId>(a));
        }
        f.rotor_order.emplace_back(u, std::move(ids));
    }
    const json& rotor = field(doc, "rotor");
    if (!rotor.is_object()) throw SchemaError("rotor: expected an object");
    for (const auto& [key, val] : rotor.items()) {
        VertexId u = parse_vertex_key(key);
        std::int64_t p = parse_small(val, "rotor");
        if (p < 0) throw SchemaError("rotor position must be nonnegative");
        f.rotor.emplace_back(u, static_cast<std::uint32_t>(p));
    }
    f.sigma = parse_sigma(field(doc, "sigma"));
    if (f.sigma.size() != f.vertices) throw SchemaError("sigma must list one count per vertex");
    return f;
}

std::string serialize_instance(const InstanceFile& file) {
    json doc;
    if (const auto* p = std::get_if<PathFormInstance>(&file)) {
        doc["n"] = p->n;
        doc["x"] = p->x;
        doc["y"] = p->y;
        doc["rotor"] = p->rotor;
        doc["sigma"] = sigma_to_json(p->sigma);
    } else {
        const auto& g = std::get<GeneralFormInstance>(file);
        doc["vertices"] = g.vertices;
        doc["sinks"] = g.sinks;
        json arcs = json::array();
        for (const Arc& a : g.arcs) arcs.push_back(json::array({a.tail, a.head}));
        doc["arcs"] = arcs;
        json order = json::object();
        for (const auto& [u, ids] : g.rotor_order) order[std::to_string(u)] = ids;
        doc["rotor_order"] = order;
        json rotor = json::object();
        for (const auto& [u, p] : g.rotor) rotor[std::to_string(u)] = p;
        doc["rotor"] = rotor;
        doc["sigma"] = sigma_to_json(g.sigma);
    }
    return doc.dump(2) + "\n";
}

PathInstance build_instance(const PathFormInstance& f) {
    if (f.x == 1 && f.y == 1) return PathInstance::unit_path(f.n);
    return PathInstance::coprime(f.n, f.x, f.y);
}

RotorConfig build_rotor(const PathFormInstance& f, const PathInstance& inst) {
    return make_rotor(inst, f.rotor);
}

ParticleConfig build_particles(const PathFormInstance& f) { return ParticleConfig{f.sigma}; }

Multigraph build_graph(const GeneralFormInstance& f) {
    std::vector<std::vector<ArcId>> order(f.vertices);
    std::vector<char> given(f.vertices, 0);
    for (const auto& [u, ids] : f.rotor_order) {
        if (u >= f.vertices) throw SchemaError("rotor_order vertex out of range");
        if (given[u]) throw SchemaError("duplicate rotor_order entry");
        given[u] = 1;
        order[u] = ids;
    }
    return Multigraph(f.vertices, f.sinks, f.arcs, std::move(order));
}

RotorConfig build_rotor(const GeneralFormInstance& f, const Multigraph& g) {
    RotorConfig rho = zero_rotor(g);
    std::vector<char> given(g.vertex_count(), 0);
    for (const auto& [u, p] : f.rotor) {
        if (u >= g.vertex_count() || g.is_sink(u)) throw SchemaError("rotor entry at sink");
        if (given[u]) throw SchemaError("duplicate rotor entry");
        given[u] = 1;
        if (p >= g.out_degree(u)) throw SchemaError("rotor position out of range");
        rho.pos[u] = p;
    }
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        if (!g.is_sink(u) && !given[u]) throw SchemaError("missing rotor entry");
    return rho;
}

ParticleConfig build_particles(const GeneralFormInstance& f) { return ParticleConfig{f.sigma}; }

CertificateFile parse_certificate(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("certificate must be a JSON object");
    CertificateFile cert;
    const json& routing = field(doc, "routing");
    if (!routing.is_object()) throw SchemaError("routing: expected an object");
    for (const auto& [key, val] : routing.items())
        cert.routing.emplace_back(parse_vertex_key(key), parse_int_value(val, "routing"));
    const json& claimed = field(doc, "claimed");
    if (!claimed.is_array()) throw SchemaError("claimed: expected an array");
    for (const auto& v : claimed) cert.claimed.push_back(parse_int_value(v, "claimed"));
    return cert;
}

std::string serialize_certificate(const CertificateFile& cert) {
    json doc;
    json routing = json::object();
    for (const auto& [u, r] : cert.routing) routing[std::to_string(u)] = r.str();
    doc["routing"] = routing;
    doc["claimed"] = sigma_to_json(cert.claimed);
    return doc.dump(2) + "\n";
}

RoutingVector build_routing(const CertificateFile& c, const Multigraph& g) {
    RoutingVector r = zero_routing(g);
    for (const auto& [u, count] : c.routing) {
        if (u >= g.vertex_count() || g.is_sink(u))
            throw SchemaError("routing entry at sink or unknown vertex");
        r.count[u] = count;
    }
    return r;
}

std::string solution_report(const ArrivalSolution& sol, const Int& F, const Int& h_sigma,
                            const Int& g_rho) {
    json doc;
    doc["F"] = F.str();
    doc["final_class"] = sol.final_class.str();
    doc["final_g"] = sol.final_g.str();
    doc["g_rho"] = g_rho.str();
    doc["h_sigma"] = h_sigma.str();
    doc["m_left"] = sol.m_left.str();
    doc["m_right"] = sol.m_right.str();
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << text;
}

}  // namespace rotor
