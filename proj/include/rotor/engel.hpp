#pragma once

#include <cstdint>
#include <vector>

#include "rotor/path.hpp"

namespace rotor {

// Digit word c = (c_0, ..., c_{n+1}) of length n+2, read as a particle
// configuration of the Engel machine (the auxiliary sink s is never stored).
// A word is *stable* when c_k in [0, y-1] for k <= n and c_{n+1} in xZ.
using DigitWord = std::vector<Int>;

// Chip-firing machine for rational-base digit decompositions: vertices
// u_0..u_{n+1} plus a sink s; every u_i (i <= n) has x arcs to u_{i+1} and
// y-x arcs to s, so firing u_i moves x chips right and drops y-x. Its
// harmonic weights are h(u_k) = d_k with d_{n+1} = y^{n+1}/x kept as an exact
// pair. Requires 0 < x < y coprime.
struct EngelMachine {
    std::int64_t n = 0;
    std::int64_t x = 0;
    std::int64_t y = 0;

    std::vector<Int> d;      // d_0..d_n
    Int y_pow_np1;           // y^{n+1}; d_{n+1} = y_pow_np1 / x
    Int F;                   // sum of d_0..d_n
    std::vector<Int> x_pow;  // x^{n-k} for k = 0..n
    std::vector<Int> inv_x_pow_mod_y;

    EngelMachine(std::int64_t n, std::int64_t x, std::int64_t y);
};

// Counts the big-integer work done by digit decompositions; used to check
// the solver's O(n log x) operation bound.
struct DecomposeStats {
    std::uint64_t decompositions = 0;
    std::uint64_t digit_steps = 0;
};

// Harmonic value sum c_k d_k + (c_{n+1}/x) y^{n+1}, exact. Rejects words
// whose value is not an integer (c_{n+1} not divisible by x).
Int harmonic_value(const EngelMachine& m, const DigitWord& c);

// The unique stable word with harmonic value v (digits in [0,y-1], last
// digit in xZ), by iterative modular digit extraction. Works for negative v
// as well, where the last digit comes out negative.
DigitWord stable_decompose(const EngelMachine& m, const Int& v, DecomposeStats* stats = nullptr);

// Nonnegative-on-interior configuration with harmonic value v >= 0, from a
// Bezout relation between x^{n+1} and y^{n+1}. Stabilizing it yields the
// stable decomposition; kept as an independent cross-check for
// stable_decompose.
DigitWord bezout_seed(const EngelMachine& m, const Int& v);

// Chip-firing stabilization of a word with c_k >= 0 for k <= n: one
// left-to-right pass, firing u_k floor(c_k / y) times. Preserves the
// harmonic value.
DigitWord stabilize_word(const EngelMachine& m, DigitWord c);

// Two-state sequential transducer computing the stabilization of any word
// over [0, y] ending in 0 (state b carries x into the next position).
// Matches stabilize_word on the shared domain.
DigitWord transducer_run(const EngelMachine& m, const DigitWord& c);

// Membership in the digit languages
//   L_a = [1,y]* 0 [0,x-1]* 0   (images of acyclic rotor configurations)
//   L_d = [0,y-1]* 0 [1,x]* 0   (stable decompositions of arcmonic values)
// via their three-state DFAs. Any symbol outside the ranges is rejected.
bool match_La(const EngelMachine& m, const DigitWord& c);
bool match_Ld(const EngelMachine& m, const DigitWord& c);

// v lies in the arcmonic image g(R) iff L_d matches c[v].
bool is_arcmonic_value(const EngelMachine& m, const Int& v, DecomposeStats* stats = nullptr);

// Bijection between acyclic rotor configurations and length-(n+2) words of
// L_a, preserving the invariant: harmonic_value(psi(rho)) = g(rho).
DigitWord psi(const PathInstance& inst, const RotorConfig& rho);
RotorConfig psi_inv(const PathInstance& inst, const DigitWord& c);

// The unique acyclic configuration with g(rho) = v, found by trying the n+1
// split positions of the L_a shape and extracting digits for each.
RotorConfig acyclic_representative(const PathInstance& inst, const Int& v);

struct UniqueK {
    Int k;
    Int value;  // v + k F
};

// For v in [0, F): the unique k with v + kF in g(R). k lies in [0, x-1] and
// is the smallest k with a nonnegative last digit in c[v+kF], located by
// bisection on that sign (linear membership scan kept for differential
// testing).
UniqueK unique_k_mod_F(const EngelMachine& m, const Int& v, bool linear_scan = false,
                       DecomposeStats* stats = nullptr);

}  // namespace rotor
