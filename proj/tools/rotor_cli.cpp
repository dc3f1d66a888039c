// Command-line front end: solves, simulates and inspects rotor-walk
// instances on path multigraphs. All integer inputs and outputs are decimal
// strings of arbitrary precision; reports are JSON with a fixed field order
// so golden-file comparisons are byte-stable.
#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotor/engel.hpp"
#include "rotor/io.hpp"
#include "rotor/random_gen.hpp"
#include "rotor/routing.hpp"
#include "rotor/solver.hpp"

namespace {

using namespace rotor;

constexpr int kExitSchema = 2;
constexpr int kExitInvalidInstance = 3;
constexpr int kExitStepBudget = 4;

Int parse_value(const std::string& text) {
    std::size_t i = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (i == text.size()) throw SchemaError("not a decimal integer: " + text);
    for (; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9') throw SchemaError("not a decimal integer: " + text);
    return Int(text);
}

std::string format_word(const DigitWord& word) {
    std::string out = "(";
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ",";
        out += word[i].str();
    }
    out += ")";
    return out;
}

struct PathProblem {
    PathInstance inst;
    RotorConfig rotor;
    ParticleConfig sigma;
};

PathProblem load_path_problem(const std::string& path) {
    InstanceFile file = parse_instance(read_file(path));
    const auto* form = std::get_if<PathFormInstance>(&file);
    if (!form) throw SchemaError("expected a path-form instance (fields n, x, y)");
    PathInstance inst = build_instance(*form);
    RotorConfig rotor = build_rotor(*form, inst);
    return {std::move(inst), std::move(rotor), build_particles(*form)};
}

int cmd_solve(const std::string& instance_path, bool closed_form, bool linear) {
    PathProblem p = load_path_problem(instance_path);
    ArrivalSolution sol =
        closed_form ? solve_unit(p.inst, p.rotor, p.sigma)
                    : solve(p.inst, p.rotor, p.sigma,
                            linear ? SearchMode::linear : SearchMode::bisection);
    std::cout << solution_report(sol, p.inst.F, harmonic_h(p.inst, p.sigma),
                                 arcmonic_g(p.inst, p.rotor));
    return 0;
}

CertificateFile make_certificate(const Multigraph& g, const RouteResult& res) {
    CertificateFile cert;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        if (!g.is_sink(u)) cert.routing.emplace_back(u, res.routing.count[u]);
    cert.claimed = res.particles.chips;
    return cert;
}

int cmd_oracle(const std::string& instance_path, std::uint64_t max_steps,
               const std::string& certificate_out) {
    InstanceFile file = parse_instance(read_file(instance_path));
    nlohmann::json doc;
    CertificateFile cert;
    if (const auto* form = std::get_if<PathFormInstance>(&file)) {
        PathInstance inst = build_instance(*form);
        RotorConfig rotor = build_rotor(*form, inst);
        ParticleConfig sigma = build_particles(*form);
        RouteResult res = full_route(inst.graph, rotor, sigma, max_steps);

        Int final_g = arcmonic_g(inst, res.rotor);
        doc["F"] = inst.F.str();
        doc["final_class"] = mod_floor(final_g, inst.F).str();
        doc["final_g"] = final_g.str();
        doc["g_rho"] = arcmonic_g(inst, rotor).str();
        doc["h_sigma"] = harmonic_h(inst, sigma).str();
        doc["m_left"] = res.particles.chips[0].str();
        doc["m_right"] = res.particles.chips[static_cast<std::size_t>(inst.n + 1)].str();
        doc["steps"] = res.steps;
        cert = make_certificate(inst.graph, res);
    } else {
        const auto& general = std::get<GeneralFormInstance>(file);
        Multigraph g = build_graph(general);
        RotorConfig rotor = build_rotor(general, g);
        ParticleConfig sigma = build_particles(general);
        RouteResult res = full_route(g, rotor, sigma, max_steps);

        nlohmann::json sinks = nlohmann::json::object();
        for (VertexId s : g.sinks()) sinks[std::to_string(s)] = res.particles.chips[s].str();
        doc["sinks"] = sinks;
        doc["steps"] = res.steps;
        cert = make_certificate(g, res);
    }
    nlohmann::json cert_doc;
    {
        nlohmann::json routing = nlohmann::json::object();
        for (const auto& [u, r] : cert.routing) routing[std::to_string(u)] = r.str();
        cert_doc["routing"] = routing;
        nlohmann::json claimed = nlohmann::json::array();
        for (const Int& v : cert.claimed) claimed.push_back(v.str());
        cert_doc["claimed"] = claimed;
    }
    doc["certificate"] = cert_doc;
    std::cout << doc.dump(2) << "\n";
    if (!certificate_out.empty()) write_file(certificate_out, serialize_certificate(cert));
    return 0;
}

int cmd_decompose(std::int64_t n, std::int64_t x, std::int64_t y, const std::string& value) {
    EngelMachine m(n, x, y);
    std::cout << format_word(stable_decompose(m, parse_value(value))) << "\n";
    return 0;
}

int cmd_member(std::int64_t n, std::int64_t x, std::int64_t y, const std::string& value) {
    EngelMachine m(n, x, y);
    std::cout << (is_arcmonic_value(m, parse_value(value)) ? "yes" : "no") << "\n";
    return 0;
}

int cmd_classes(std::int64_t n, std::int64_t x, std::int64_t y, std::uint64_t max_classes) {
    PathInstance inst =
        (x == 1 && y == 1) ? PathInstance::unit_path(n) : PathInstance::coprime(n, x, y);
    for (const Int& v : enumerate_arcmonic_values(inst, max_classes)) std::cout << v.str() << "\n";
    return 0;
}

int cmd_class_of(const std::string& instance_path) {
    PathProblem p = load_path_problem(instance_path);
    Int h = harmonic_h(p.inst, p.sigma);
    Int g = arcmonic_g(p.inst, p.rotor);
    nlohmann::json doc;
    doc["F"] = p.inst.F.str();
    doc["final_class"] = final_rotor_class(p.inst, p.rotor, p.sigma).str();
    doc["g_bar"] = mod_floor(g, p.inst.F).str();
    doc["g_rho"] = g.str();
    doc["h_bar"] = mod_floor(h, p.inst.F).str();
    doc["h_sigma"] = h.str();
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& certificate_path) {
    InstanceFile file = parse_instance(read_file(instance_path));
    CertificateFile cert = parse_certificate(read_file(certificate_path));
    auto check = [&](const Multigraph& g, const RotorConfig& rotor, const ParticleConfig& sigma) {
        if (cert.claimed.size() != g.vertex_count())
            throw SchemaError("claimed configuration has wrong length");
        return verify_certificate(g, rotor, sigma, build_routing(cert, g),
                                  ParticleConfig{cert.claimed});
    };
    bool ok;
    if (const auto* form = std::get_if<PathFormInstance>(&file)) {
        PathInstance inst = build_instance(*form);
        ok = check(inst.graph, build_rotor(*form, inst), build_particles(*form));
    } else {
        const auto& general = std::get<GeneralFormInstance>(file);
        Multigraph g = build_graph(general);
        ok = check(g, build_rotor(general, g), build_particles(general));
    }
    std::cout << (ok ? "yes" : "no") << "\n";
    return 0;
}

int cmd_difftest(std::uint64_t seed, std::uint64_t count, std::int64_t max_n, std::int64_t max_y,
                 std::int64_t sigma_bound, std::uint64_t max_steps) {
    Rng rng(seed);
    RandomPathConfig cfg{max_n, max_y, sigma_bound, true};
    for (std::uint64_t i = 0; i < count; ++i) {
        auto [inst, rotor, sigma] = random_path_instance(rng, cfg);
        ArrivalSolution sol = solve(inst, rotor, sigma);
        RouteResult oracle = full_route(inst.graph, rotor, sigma, max_steps);
        const Int& right = oracle.particles.chips[static_cast<std::size_t>(inst.n + 1)];
        const Int& left = oracle.particles.chips[0];
        Int oracle_g = arcmonic_g(inst, oracle.rotor);
        if (sol.m_right != right || sol.m_left != left || sol.final_g != oracle_g) {
            std::cout << "mismatch on instance " << i << " (n=" << inst.n << ", x=" << inst.x
                      << ", y=" << inst.y << "): solver " << sol.m_right.str() << "/"
                      << sol.m_left.str() << " g=" << sol.final_g.str() << ", oracle "
                      << right.str() << "/" << left.str() << " g=" << oracle_g.str() << "\n";
            return 1;
        }
    }
    std::cout << "ok " << count << " instances\n";
    return 0;
}

int cmd_batch(const std::string& dir, unsigned jobs) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    std::vector<std::string> results(files.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= files.size()) return;
            try {
                PathProblem p = load_path_problem(files[i]);
                ArrivalSolution sol = solve(p.inst, p.rotor, p.sigma);
                results[i] = files[i] + ": m_right=" + sol.m_right.str() +
                             " m_left=" + sol.m_left.str() + " final_g=" + sol.final_g.str();
            } catch (const std::exception& e) {
                results[i] = files[i] + ": error: " + e.what();
                failed = true;
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& line : results) std::cout << line << "\n";
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotor walk solver for path multigraphs"};
    app.require_subcommand(1);

    std::string instance_path, certificate_path, certificate_out, value, dir;
    bool closed_form = false, linear = false;
    std::int64_t n = 0, x = 0, y = 0, max_n = 5, max_y = 6, sigma_bound = 20;
    std::uint64_t max_steps = kDefaultStepBudget, max_classes = 100000, seed = 1, count = 100;
    unsigned jobs = 1;

    auto* solve_cmd = app.add_subcommand("solve", "solve a path-form instance");
    solve_cmd->add_option("--instance", instance_path, "instance file")->required();
    solve_cmd->add_flag("--closed-form-11", closed_form, "use the x=y=1 closed form");
    solve_cmd->add_flag("--linear-scan", linear, "replace bisection by a linear scan");

    auto* oracle_cmd = app.add_subcommand("oracle", "simulate an instance step by step");
    oracle_cmd->add_option("--instance", instance_path, "instance file")->required();
    oracle_cmd->add_option("--max-steps", max_steps, "step budget");
    oracle_cmd->add_option("--certificate-out", certificate_out, "write the certificate here");

    auto* decompose_cmd = app.add_subcommand("decompose", "stable digit decomposition of V");
    decompose_cmd->add_option("--n", n, "word length minus two")->required();
    decompose_cmd->add_option("--x", x, "right multiplicity")->required();
    decompose_cmd->add_option("--y", y, "left multiplicity")->required();
    decompose_cmd->add_option("value", value, "integer to decompose")->required();

    auto* member_cmd = app.add_subcommand("member", "is V an arcmonic value?");
    member_cmd->add_option("--n", n, "interior vertex count")->required();
    member_cmd->add_option("--x", x, "right multiplicity")->required();
    member_cmd->add_option("--y", y, "left multiplicity")->required();
    member_cmd->add_option("value", value, "integer to test")->required();

    auto* classes_cmd = app.add_subcommand("classes", "list all arcmonic values");
    classes_cmd->add_option("--n", n, "interior vertex count")->required();
    classes_cmd->add_option("--x", x, "right multiplicity")->required();
    classes_cmd->add_option("--y", y, "left multiplicity")->required();
    classes_cmd->add_option("--max-classes", max_classes, "refuse instances with F above this");

    auto* class_of_cmd = app.add_subcommand("class-of", "residues of an instance mod F");
    class_of_cmd->add_option("--instance", instance_path, "instance file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "check a routing-vector certificate");
    verify_cmd->add_option("--instance", instance_path, "instance file")->required();
    verify_cmd->add_option("--certificate", certificate_path, "certificate file")->required();

    auto* difftest_cmd = app.add_subcommand("difftest", "random solver-vs-oracle comparison");
    difftest_cmd->add_option("--seed", seed, "random seed");
    difftest_cmd->add_option("--count", count, "number of instances");
    difftest_cmd->add_option("--max-n", max_n, "largest interior vertex count");
    difftest_cmd->add_option("--max-y", max_y, "largest left multiplicity");
    difftest_cmd->add_option("--sigma-bound", sigma_bound, "particle magnitude bound");
    difftest_cmd->add_option("--max-steps", max_steps, "oracle step budget");

    auto* batch_cmd = app.add_subcommand("batch", "solve every .json instance in a directory");
    batch_cmd->add_option("--dir", dir, "directory of instance files")->required();
    batch_cmd->add_option("--jobs", jobs, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) return cmd_solve(instance_path, closed_form, linear);
        if (oracle_cmd->parsed()) return cmd_oracle(instance_path, max_steps, certificate_out);
        if (decompose_cmd->parsed()) return cmd_decompose(n, x, y, value);
        if (member_cmd->parsed()) return cmd_member(n, x, y, value);
        if (classes_cmd->parsed()) return cmd_classes(n, x, y, max_classes);
        if (class_of_cmd->parsed()) return cmd_class_of(instance_path);
        if (verify_cmd->parsed()) return cmd_verify(instance_path, certificate_path);
        if (difftest_cmd->parsed())
            return cmd_difftest(seed, count, max_n, max_y, sigma_bound, max_steps);
        if (batch_cmd->parsed()) return cmd_batch(dir, jobs);
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const InvalidInstanceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInstance;
    } catch (const StepBudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStepBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
