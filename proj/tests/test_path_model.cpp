#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace rotor;
using namespace testsupport;

TEST_CASE("constructor guards") {
    CHECK_THROWS_AS(PathInstance::coprime(3, 1, 1), InvalidInstanceError);
    CHECK_THROWS_AS(PathInstance::coprime(3, 3, 2), InvalidInstanceError);
    CHECK_THROWS_AS(PathInstance::coprime(3, 2, 4), InvalidInstanceError);
    CHECK_THROWS_AS(PathInstance::coprime(3, 0, 2), InvalidInstanceError);
    CHECK_NOTHROW(PathInstance::coprime(0, 2, 3));  // degenerate two-sink path
    CHECK_NOTHROW(PathInstance::unit_path(1));
}

TEST_CASE("harmonic table of the n=3, x=2, y=3 instance") {
    PathInstance inst = PathInstance::coprime(3, 2, 3);
    CHECK(inst.d == std::vector<Int>({8, 12, 18, 27}));
    CHECK(inst.h == std::vector<Int>({0, 8, 20, 38, 65}));
    CHECK(inst.F == 65);

    CHECK(harmonic_h(inst, chips({-8, 5, 13, -5, 12})) == 890);
    CHECK(harmonic_h(inst, chips({0, 0, 0, 0, 0})) == 0);
    CHECK_THROWS_AS(harmonic_h(inst, chips({1, 2, 3})), DimensionMismatchError);
}

TEST_CASE("arcmonic values match the full arc table") {
    PathInstance inst = PathInstance::coprime(3, 2, 3);
    // right arcs carry j*d_k, left arcs (x+y-j)*d_{k-1}
    const std::int64_t expected[3][5] = {
        {0, 12, 24, 16, 8},    // u_1
        {0, 18, 36, 24, 12},   // u_2
        {0, 27, 54, 36, 18},   // u_3
    };
    for (std::int64_t k = 1; k <= 3; ++k)
        for (std::int64_t j = 0; j < 5; ++j)
            CHECK(arcmonic_g_arc(inst, k, j) == expected[k - 1][j]);
    CHECK_THROWS_AS(arcmonic_g_arc(inst, 0, 0), IndexOutOfRangeError);
    CHECK_THROWS_AS(arcmonic_g_arc(inst, 4, 0), IndexOutOfRangeError);
    CHECK_THROWS_AS(arcmonic_g_arc(inst, 1, 5), IndexOutOfRangeError);
}

TEST_CASE("arcmonic arc values agree with their defining sums") {
    // g(a^k_j) = sum_{i<j} (h(head(a^k_i)) - h(u_k)), the closed form is a
    // separate route to the same numbers
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto [inst, rho, sigma] = random_path_instance(rng, {4, 7, 3, false});
        for (std::int64_t k = 1; k <= inst.n; ++k) {
            Int partial = 0;
            for (std::int64_t j = 0; j < inst.x + inst.y; ++j) {
                CHECK(arcmonic_g_arc(inst, k, j) == partial);
                const Arc& a = inst.graph.arc(inst.arc_id(k, j));
                partial += inst.h[a.head] - inst.h[a.tail];
            }
            CHECK(partial == 0);  // harmonicity closes the cycle
        }
    }
}

TEST_CASE("arcmonic value of rotor configurations") {
    PathInstance inst = PathInstance::coprime(3, 2, 3);
    CHECK(arcmonic_g(inst, all_right_rotor(inst)) == 0);
    CHECK(arcmonic_g(inst, make_rotor(inst, {1, 1, 1})) == 57);
}

TEST_CASE("arcmonic value is invariant under cycle pushes") {
    Rng rng(5);
    int pushes = 0;
    while (pushes < 200) {
        auto [inst, rho, sigma] = random_path_instance(rng, {4, 5, 3, false});
        auto circuits = all_circuits(inst.graph, rho);
        Int g = arcmonic_g(inst, rho);
        for (const auto& c : circuits) {
            RotorConfig pushed = rho;
            cycle_push(inst.graph, pushed, c, PushSign::positive);
            CHECK(arcmonic_g(inst, pushed) == g);
            cycle_push(inst.graph, pushed, c, PushSign::negative);
            CHECK(pushed == rho);
            ++pushes;
        }
    }
}

TEST_CASE("class value matches the worked example and is routing invariant") {
    PathInstance inst = PathInstance::coprime(3, 2, 3);
    RotorConfig rho = make_rotor(inst, {1, 1, 1});
    ParticleConfig sigma = chips({-8, 5, 13, -5, 12});
    CHECK(class_value(inst, rho, sigma) == -833);

    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto [rinst, rrho, rsigma] = random_path_instance(rng, {4, 5, 6, true});
        Int invariant = class_value(rinst, rrho, rsigma);
        Int total = degree(rsigma);
        for (int step = 0; step < 100; ++step) {
            auto u = static_cast<VertexId>(rng.range(1, rinst.n));
            switch (rng.below(4)) {
                case 0: routing_plus(rinst.graph, rrho, rsigma, u); break;
                case 1: routing_minus(rinst.graph, rrho, rsigma, u); break;
                case 2: fire(rinst.graph, rsigma, u); break;
                default: unfire(rinst.graph, rsigma, u); break;
            }
            CHECK(class_value(rinst, rrho, rsigma) == invariant);
            CHECK(degree(rsigma) == total);
        }
    }
}

TEST_CASE("firing leaves the harmonic value fixed for random parameters") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto [inst, rho, sigma] = random_path_instance(rng, {5, 7, 10, true});
        Int h = harmonic_h(inst, sigma);
        for (std::int64_t k = 1; k <= inst.n; ++k) {
            fire(inst.graph, sigma, static_cast<VertexId>(k));
            CHECK(harmonic_h(inst, sigma) == h);
            unfire(inst.graph, sigma, static_cast<VertexId>(k));
        }
    }
}

TEST_CASE("rotor equivalence via arcmonic values and push reachability") {
    PathInstance inst = PathInstance::coprime(2, 2, 3);
    // equivalent: any configuration and its cycle push
    RotorConfig rho = make_rotor(inst, {0, 3});  // u_1 right, u_2 left: a circuit
    auto circuits = all_circuits(inst.graph, rho);
    REQUIRE(!circuits.empty());
    RotorConfig pushed = rho;
    cycle_push(inst.graph, pushed, circuits[0], PushSign::positive);
    CHECK(rotor_equivalent(inst, rho, pushed));

    // two distinct acyclic configurations are never equivalent
    RotorConfig acyclic1 = all_right_rotor(inst);
    RotorConfig acyclic2 = make_rotor(inst, {4, 0});
    CHECK(!find_circuit(inst.graph, acyclic2));
    CHECK(!rotor_equivalent(inst, acyclic1, acyclic2));

    // cross-check against reachability classes on every tiny instance
    for (auto [x, y] : coprime_pairs(5)) {
        for (std::int64_t n = 1; n <= 2; ++n) {
            PathInstance small = PathInstance::coprime(n, x, y);
            for (const auto& cls : cycle_push_classes(small)) {
                Int g = arcmonic_g(small, cls.front());
                for (const auto& member : cls) CHECK(arcmonic_g(small, member) == g);
            }
        }
    }
}

TEST_CASE("particle equivalence") {
    PathInstance inst = PathInstance::coprime(2, 2, 3);
    ParticleConfig sigma = chips({1, 2, -1, 0});
    ParticleConfig fired = sigma;
    fire(inst.graph, fired, 1);
    CHECK(particle_equivalent(inst, sigma, fired));

    ParticleConfig bumped = sigma;
    bumped.chips[3] += 1;  // degree differs
    CHECK(!particle_equivalent(inst, sigma, bumped));

    // against bounded firing-vector search on tiny instances
    Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        PathInstance tiny = PathInstance::coprime(2, 1, 2);
        ParticleConfig a = chips({0, 0, 0, 0});
        ParticleConfig b = chips({0, 0, 0, 0});
        for (auto& c : a.chips) c = rng.range(-3, 3);
        for (auto& c : b.chips) c = rng.range(-3, 3);
        bool found = firing_vector_exists(tiny, a, b, 4);
        if (found) CHECK(particle_equivalent(tiny, a, b));
        if (!particle_equivalent(tiny, a, b)) CHECK(!found);
    }
}

TEST_CASE("sandpile classes") {
    PathInstance inst = PathInstance::coprime(3, 2, 3);
    ParticleConfig u1 = chips({0, 1, 0, 0, 0});
    CHECK(sandpile_class(inst, u1) == 8);

    // additivity mod F
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        ParticleConfig a = chips({0, 0, 0, 0, 0});
        ParticleConfig b = chips({0, 0, 0, 0, 0});
        for (auto& c : a.chips) c = rng.range(-50, 50);
        for (auto& c : b.chips) c = rng.range(-50, 50);
        ParticleConfig sum = a;
        for (std::size_t i = 0; i < sum.chips.size(); ++i) sum.chips[i] += b.chips[i];
        CHECK(sandpile_class(inst, sum) ==
              mod_floor(sandpile_class(inst, a) + sandpile_class(inst, b), inst.F));
    }

    // equal values on non-sinks after firing means equal classes
    ParticleConfig sigma = chips({4, 7, -2, 1, 0});
    ParticleConfig fired = sigma;
    fire(inst.graph, fired, 2);
    CHECK(sandpile_class(inst, sigma) == sandpile_class(inst, fired));
}

TEST_CASE("x^n is coprime with F") {
    Rng rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        auto [inst, rho, sigma] = random_path_instance(rng, {6, 8, 1, false});
        Int xn = boost::multiprecision::pow(Int(inst.x), static_cast<unsigned>(inst.n));
        CHECK(boost::multiprecision::gcd(xn, inst.F) == 1);
    }
}

TEST_CASE("arcmonic range bound") {
    for (auto [x, y] : coprime_pairs(5)) {
        for (std::int64_t n = 1; n <= 3; ++n) {
            PathInstance inst = PathInstance::coprime(n, x, y);
            Int max_seen = 0;
            for_each_rotor(inst, [&](const RotorConfig& rho) {
                Int g = arcmonic_g(inst, rho);
                CHECK(g >= 0);
                if (g > max_seen) max_seen = g;
            });
            CHECK(max_seen == inst.x * (inst.F - inst.d[0]));
            CHECK(max_seen < inst.x * inst.F);
        }
    }
}

TEST_CASE("h(u_k) counts acyclic configurations reaching the right sink") {
    for (auto [x, y] : coprime_pairs(5)) {
        PathInstance inst = PathInstance::coprime(3, x, y);
        std::vector<Int> counts(static_cast<std::size_t>(inst.n + 2), Int(0));
        for_each_rotor(inst, [&](const RotorConfig& rho) {
            if (find_circuit(inst.graph, rho)) return;
            // u_k reaches u_{n+1} iff every rotor from u_k on points right
            for (std::int64_t k = 1; k <= inst.n + 1; ++k) {
                bool reaches = true;
                for (std::int64_t i = k; i <= inst.n; ++i)
                    if (rho.pos[static_cast<std::size_t>(i)] >= inst.x) reaches = false;
                if (reaches) ++counts[static_cast<std::size_t>(k)];
            }
        });
        for (std::int64_t k = 1; k <= inst.n + 1; ++k)
            CHECK(counts[static_cast<std::size_t>(k)] == inst.h[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("unit path tables") {
    PathInstance inst = PathInstance::unit_path(3);
    CHECK(inst.F == 4);
    CHECK(inst.h == std::vector<Int>({0, 1, 2, 3, 4}));
    // g counts the left-pointing rotors
    CHECK(arcmonic_g(inst, make_rotor(inst, {0, 1, 1})) == 2);
    CHECK(arcmonic_g(inst, make_rotor(inst, {0, 0, 0})) == 0);
    CHECK(harmonic_h(inst, chips({-8, 5, 10, -5, 12})) == 58);
}
