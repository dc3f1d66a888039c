#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rotor {

// Exact integer type used for particle counts, invariants and digits.
// Inputs may be exponential in the instance size, so everything that touches
// chip counts or harmonic values goes through this type.
using Int = boost::multiprecision::cpp_int;

// Quotient rounded toward negative / positive infinity (b != 0).
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

// Representative of a mod m in [0, m), m > 0.
Int mod_floor(const Int& a, const Int& m);

struct Egcd {
    Int g;  // gcd(a, b) >= 0
    Int s;  // s*a + t*b == g
    Int t;
};
Egcd extended_gcd(const Int& a, const Int& b);

// Inverse of a modulo m, in [0, m). Throws Error if gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& m);

}  // namespace rotor
