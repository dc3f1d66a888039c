#include "rotor/bigint.hpp"

#include "rotor/errors.hpp"

namespace rotor {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) == (b < 0))) ++q;
    return q;
}

Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

Egcd extended_gcd(const Int& a, const Int& b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

Int mod_inverse(const Int& a, const Int& m) {
    Egcd e = extended_gcd(mod_floor(a, m), m);
    if (e.g != 1) throw Error("mod_inverse: arguments are not coprime");
    return mod_floor(e.s, m);
}

}  // namespace rotor
