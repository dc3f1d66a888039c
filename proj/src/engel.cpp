#include "rotor/engel.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "rotor/routing.hpp"

namespace rotor {

EngelMachine::EngelMachine(std::int64_t n_, std::int64_t x_, std::int64_t y_)
    : n(n_), x(x_), y(y_) {
    if (n < 0) throw InvalidInstanceError("machine length must be nonnegative");
    if (n > 100'000'000) throw InvalidInstanceError("machine too large");
    if (!(0 < x && x < y)) throw InvalidInstanceError("machine needs 0 < x < y");
    if (std::gcd(x, y) != 1) throw InvalidInstanceError("machine needs coprime x, y");

    const auto len = static_cast<std::size_t>(n + 1);
    d.reserve(len);
    x_pow.reserve(len);
    inv_x_pow_mod_y.reserve(len);
    Int xp = boost::multiprecision::pow(Int(x), static_cast<unsigned>(n));
    Int yp = 1;
    const Int inv_x = mod_inverse(Int(x), Int(y));
    Int inv_xp = mod_inverse(xp, Int(y));
    for (std::int64_t k = 0; k <= n; ++k) {
        x_pow.push_back(xp);
        inv_x_pow_mod_y.push_back(inv_xp);
        d.push_back(xp * yp);
        F += d.back();
        if (k < n) {
            xp /= x;
            inv_xp = mod_floor(inv_xp * x, Int(y));
            yp *= y;
        }
    }
    y_pow_np1 = yp * y;  // yp == y^n after the loop
}

namespace {

void check_length(const EngelMachine& m, const DigitWord& c) {
    if (c.size() != static_cast<std::size_t>(m.n + 2))
        throw DimensionMismatchError("digit word has wrong length");
}

}  // namespace

Int harmonic_value(const EngelMachine& m, const DigitWord& c) {
    check_length(m, c);
    const Int& last = c[static_cast<std::size_t>(m.n + 1)];
    if (last % m.x != 0)
        throw NonIntegralValueError("last digit must be a multiple of x");
    Int total = (last / m.x) * m.y_pow_np1;
    for (std::int64_t k = 0; k <= m.n; ++k)
        total += c[static_cast<std::size_t>(k)] * m.d[static_cast<std::size_t>(k)];
    return total;
}

DigitWord stable_decompose(const EngelMachine& m, const Int& v, DecomposeStats* stats) {
    DigitWord c(static_cast<std::size_t>(m.n + 2));
    Int w = v;
    for (std::int64_t k = 0; k <= m.n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        Int digit = mod_floor(w * m.inv_x_pow_mod_y[i], Int(m.y));
        w = (w - digit * m.x_pow[i]) / m.y;  // exact by choice of digit
        c[i] = std::move(digit);
    }
    c[static_cast<std::size_t>(m.n + 1)] = w * m.x;
    if (stats) {
        ++stats->decompositions;
        stats->digit_steps += static_cast<std::uint64_t>(m.n + 1);
    }
    return c;
}

DigitWord bezout_seed(const EngelMachine& m, const Int& v) {
    if (v < 0) throw Error("bezout_seed needs a nonnegative value");
    const Int x_np1 = m.x_pow[0] * m.x;  // x^{n+1}
    Egcd e = extended_gcd(x_np1, m.y_pow_np1);
    // alpha x^{n+1} + beta y^{n+1} = 1 with alpha >= 0.
    Int alpha = mod_floor(e.s, m.y_pow_np1);
    Int beta = (Int(1) - alpha * x_np1) / m.y_pow_np1;
    DigitWord c(static_cast<std::size_t>(m.n + 2), Int(0));
    c[0] = alpha * m.x * v;                            // times d_0 = x^n
    c[static_cast<std::size_t>(m.n + 1)] = beta * m.x * v;  // times d_{n+1} = y^{n+1}/x
    return c;
}

DigitWord stabilize_word(const EngelMachine& m, DigitWord c) {
    check_length(m, c);
    for (std::int64_t k = 0; k <= m.n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        if (c[i] < 0) throw NegativeInputError("stabilization needs nonnegative digits");
        if (c[i] >= m.y) {
            Int q = c[i] / m.y;
            c[i] -= q * m.y;
            c[i + 1] += q * m.x;
        }
    }
    return c;
}

DigitWord transducer_run(const EngelMachine& m, const DigitWord& c) {
    check_length(m, c);
    for (std::int64_t k = 0; k <= m.n; ++k) {
        const auto& s = c[static_cast<std::size_t>(k)];
        if (s < 0 || s > m.y) throw SymbolOutOfRangeError("symbol outside [0, y]");
    }
    if (c.back() != 0) throw SymbolOutOfRangeError("last symbol must be 0");

    DigitWord out(c.size());
    bool carrying = false;  // state b: x chips carried into the current position
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Int& s = c[i];
        if (!carrying) {
            if (s < m.y) {
                out[i] = s;
            } else {  // s == y
                out[i] = 0;
                carrying = true;
            }
        } else {
            if (s >= m.y - m.x) {
                out[i] = s - (m.y - m.x);
            } else {
                out[i] = s + m.x;
                carrying = false;
            }
        }
    }
    return out;
}

namespace {

// Three-state DFA for [1,y]* 0 [0,x-1]* 0 (the determinization collapses the
// trailing-zero ambiguity into an accepting loop state).
bool match_la_ranges(std::int64_t x, std::int64_t y, const DigitWord& c) {
    enum State { prefix, middle, accept, dead };
    State st = prefix;
    for (const Int& s : c) {
        switch (st) {
            case prefix:
                if (s == 0)
                    st = middle;
                else if (s >= 1 && s <= y)
                    st = prefix;
                else
                    st = dead;
                break;
            case middle:
            case accept:
                if (s == 0)
                    st = accept;
                else if (s >= 1 && s <= x - 1)
                    st = middle;
                else
                    st = dead;
                break;
            case dead:
                return false;
        }
        if (st == dead) return false;
    }
    return st == accept;
}

// Minimal DFA for [0,y-1]* 0 [1,x]* 0.
bool match_ld_ranges(std::int64_t x, std::int64_t y, const DigitWord& c) {
    enum State { alpha, beta, gamma, dead };
    State st = alpha;
    for (const Int& s : c) {
        State next = dead;
        switch (st) {
            case alpha:
                if (s == 0)
                    next = beta;
                else if (s >= 1 && s <= y - 1)
                    next = alpha;
                break;
            case beta:
            case gamma:
                if (s == 0)
                    next = gamma;
                else if (s >= 1 && s <= x)
                    next = beta;
                else if (s >= x + 1 && s <= y - 1)
                    next = alpha;
                break;
            case dead:
                break;
        }
        if (next == dead) return false;
        st = next;
    }
    return st == gamma;
}

}  // namespace

bool match_La(const EngelMachine& m, const DigitWord& c) {
    check_length(m, c);
    return match_la_ranges(m.x, m.y, c);
}

bool match_Ld(const EngelMachine& m, const DigitWord& c) {
    check_length(m, c);
    return match_ld_ranges(m.x, m.y, c);
}

bool is_arcmonic_value(const EngelMachine& m, const Int& v, DecomposeStats* stats) {
    return match_Ld(m, stable_decompose(m, v, stats));
}

DigitWord psi(const PathInstance& inst, const RotorConfig& rho) {
    if (rho.pos.size() != static_cast<std::size_t>(inst.n + 2))
        throw DimensionMismatchError("rotor configuration has wrong length");
    if (find_circuit(inst.graph, rho)) throw NotAcyclicError("configuration has a circuit");
    // Acyclic on a path = left arcs form a prefix; the first right-pointing
    // vertex is the split k. Left arc a^i_j contributes x+y-j at position
    // i-1, right arc a^i_j contributes j at position i.
    DigitWord c(static_cast<std::size_t>(inst.n + 2), Int(0));
    for (std::int64_t i = 1; i <= inst.n; ++i) {
        std::int64_t j = rho.pos[static_cast<std::size_t>(i)];
        if (j >= inst.x)
            c[static_cast<std::size_t>(i - 1)] = inst.x + inst.y - j;
        else
            c[static_cast<std::size_t>(i)] = j;
    }
    return c;
}

RotorConfig psi_inv(const PathInstance& inst, const DigitWord& c) {
    if (c.size() != static_cast<std::size_t>(inst.n + 2))
        throw DimensionMismatchError("digit word has wrong length");
    if (!match_la_ranges(inst.x, inst.y, c)) throw NotInLaError("word is not in L_a");
    std::size_t split = 0;
    while (c[split] != 0) ++split;
    RotorConfig rho = zero_rotor(inst.graph);
    for (std::int64_t i = 1; i <= inst.n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        if (u <= split)
            rho.pos[u] = static_cast<std::uint32_t>(
                (inst.x + inst.y - c[u - 1]).convert_to<std::int64_t>());
        else
            rho.pos[u] = static_cast<std::uint32_t>(c[u].convert_to<std::int64_t>());
    }
    return rho;
}

RotorConfig acyclic_representative(const PathInstance& inst, const Int& v) {
    if (inst.unit) {
        // g counts left arcs; the acyclic class representative has the first
        // v rotors pointing left.
        if (v < 0 || v > inst.n) throw NotAnArcmonicValueError("value outside [0, n]");
        RotorConfig rho = zero_rotor(inst.graph);
        for (std::int64_t i = 1; i <= v; ++i) rho.pos[static_cast<std::size_t>(i)] = 1;
        return rho;
    }
    EngelMachine m(inst.n, inst.x, inst.y);
    // Try each split position of the L_a shape: digits before it in [1, y],
    // after it in [0, x-1], and extract greedily mod y.
    for (std::int64_t split = 0; split <= inst.n; ++split) {
        DigitWord c(static_cast<std::size_t>(inst.n + 2), Int(0));
        Int w = v;
        bool ok = true;
        for (std::int64_t k = 0; k <= inst.n && ok; ++k) {
            const auto i = static_cast<std::size_t>(k);
            Int digit = mod_floor(w * m.inv_x_pow_mod_y[i], Int(m.y));
            if (k < split) {
                if (digit == 0) digit = m.y;  // residues of [1, y] cover Z/yZ
            } else if (k == split) {
                if (digit != 0) ok = false;
            } else {
                if (digit > m.x - 1) ok = false;
            }
            if (ok) {
                w = (w - digit * m.x_pow[i]) / m.y;
                c[i] = std::move(digit);
            }
        }
        if (ok && w == 0) return psi_inv(inst, c);
    }
    throw NotAnArcmonicValueError("no acyclic configuration has this value");
}

UniqueK unique_k_mod_F(const EngelMachine& m, const Int& v, bool linear_scan,
                       DecomposeStats* stats) {
    if (v < 0 || v >= m.F) throw IndexOutOfRangeError("value must lie in [0, F)");
    const auto last = static_cast<std::size_t>(m.n + 1);
    if (linear_scan) {
        for (Int k = 0; k < m.x; ++k) {
            Int value = v + k * m.F;
            if (is_arcmonic_value(m, value, stats)) return {k, std::move(value)};
        }
        throw Error("no arcmonic value in the window");  // cannot happen
    }
    // Smallest k in [0, x-1] whose decomposition has a nonnegative last
    // digit; the last digit is nondecreasing in k.
    Int lo = 0, hi = m.x - 1;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        DigitWord c = stable_decompose(m, v + mid * m.F, stats);
        if (c[last] >= 0)
            hi = mid;
        else
            lo = mid + 1;
    }
    return {lo, v + lo * m.F};
}

}  // namespace rotor
