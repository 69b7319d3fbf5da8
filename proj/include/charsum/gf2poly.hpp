#pragma once

#include <cstdint>
#include <stdexcept>

// Polynomials over GF(2), packed into machine words: bit i is the
// coefficient of x^i. Degrees stay small (<= 20 for fields, <= 41 for
// intermediate products), so single-word arithmetic is enough.

namespace charsum {

using poly64 = std::uint64_t;

inline int poly_degree(poly64 f) {
    if (f == 0) return -1;
    return 63 - __builtin_clzll(f);
}

// Carry-less product. Caller guarantees deg(a) + deg(b) < 64.
inline poly64 poly_mul(poly64 a, poly64 b) {
    poly64 r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

inline poly64 poly_mod(poly64 a, poly64 f) {
    const int df = poly_degree(f);
    if (df < 0) throw std::invalid_argument("poly_mod: zero modulus");
    for (int d = poly_degree(a); d >= df; d = poly_degree(a))
        a ^= f << (d - df);
    return a;
}

inline poly64 poly_gcd(poly64 a, poly64 b) {
    while (b) {
        poly64 t = poly_mod(a, b);
        a = b;
        b = t;
    }
    return a;
}

// Trial division by every polynomial of degree 1..deg/2. Fields here are
// tiny, so the quadratic scan is never a bottleneck.
inline bool poly_irreducible(poly64 f) {
    const int d = poly_degree(f);
    if (d < 1) return false;
    if (d == 1) return true;
    for (int dd = 1; 2 * dd <= d; ++dd)
        for (poly64 g = poly64{1} << dd; g < (poly64{2} << dd); ++g)
            if (poly_mod(f, g) == 0) return false;
    return true;
}

// index-th irreducible polynomial of degree k, ordered by integer encoding.
inline poly64 irreducible_poly(int k, int index = 0) {
    if (k < 1 || k > 62) throw std::invalid_argument("irreducible_poly: bad degree");
    int seen = 0;
    for (poly64 f = poly64{1} << k; f < (poly64{2} << k); ++f) {
        if (poly_irreducible(f)) {
            if (seen == index) return f;
            ++seen;
        }
    }
    throw std::invalid_argument("irreducible_poly: index out of range for degree");
}

} // namespace charsum
