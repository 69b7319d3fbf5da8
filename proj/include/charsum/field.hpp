#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "charsum/gf2poly.hpp"

namespace charsum {

// Element of GF(2^k) in the polynomial basis: bit i = coefficient of x^i.
using gfm = std::uint32_t;

// GF(2^k) with a fixed irreducible modulus. Immutable after construction;
// every operation is a pure function, safe to share across threads.
//
// For k <= kTableMax a discrete-log table over a fixed generator backs
// mul/inv/pow; the shift-and-add route stays available as mul_ref and is
// cross-checked against the tables in the test suite.
class Field {
public:
    static constexpr int kTableMax = 20;

    explicit Field(int k) : Field(k, irreducible_poly(k)) {}

    Field(int k, poly64 irr) : k_(k), irr_(irr) {
        if (k < 1) throw std::invalid_argument("Field: degree must be >= 1");
        if (k > 30) throw std::invalid_argument("Field: degree too large");
        if (poly_degree(irr) != k)
            throw std::invalid_argument("Field: modulus degree mismatch");
        if (!poly_irreducible(irr))
            throw std::invalid_argument("Field: modulus is reducible");
        mask_ = (gfm{1} << k) - 1;
        build_trace_mask();
        if (k <= kTableMax) build_log_tables();
    }

    int degree() const { return k_; }
    poly64 modulus() const { return irr_; }
    std::uint64_t order() const { return std::uint64_t{1} << k_; }
    std::uint64_t group_order() const { return order() - 1; }
    bool contains(gfm x) const { return (x & ~mask_) == 0; }

    gfm add(gfm x, gfm y) const { return x ^ y; }

    // Shift-and-add product reduced mod irr; table-independent reference.
    gfm mul_ref(gfm x, gfm y) const {
        return static_cast<gfm>(poly_mod(poly_mul(x, y), irr_));
    }

    gfm mul(gfm x, gfm y) const {
        if (!tabled()) return mul_ref(x, y);
        if (x == 0 || y == 0) return 0;
        std::uint64_t t = log_[x] + log_[y];
        const std::uint64_t g = group_order();
        if (t >= g) t -= g;
        return exp_[t];
    }

    gfm sqr(gfm x) const { return mul(x, x); }

    // Inverse via the log table when present, else extended Euclid.
    gfm inv(gfm x) const {
        if (x == 0) throw std::invalid_argument("Field::inv: zero has no inverse");
        if (!tabled()) return inv_euclid(x);
        const std::uint64_t g = group_order();
        std::uint64_t t = g - log_[x];
        if (t >= g) t -= g;
        return exp_[t];
    }

    // Extended Euclid on polynomials; works without tables.
    gfm inv_euclid(gfm x) const {
        if (x == 0) throw std::invalid_argument("Field::inv: zero has no inverse");
        poly64 r0 = irr_, r1 = x, s0 = 0, s1 = 1;
        while (r1 != 0) {
            // divide r0 by r1
            poly64 q = 0, rem = r0;
            const int d1 = poly_degree(r1);
            for (int d = poly_degree(rem); d >= d1; d = poly_degree(rem)) {
                q ^= poly64{1} << (d - d1);
                rem ^= r1 << (d - d1);
            }
            r0 = r1; r1 = rem;
            poly64 s2 = s0 ^ poly_mul(q, s1);
            s0 = s1; s1 = s2;
        }
        return static_cast<gfm>(poly_mod(s0, irr_));
    }

    // x^e with the convention 0^0 = 1.
    gfm pow(gfm x, std::uint64_t e) const {
        if (x == 0) return e == 0 ? 1 : 0;
        const std::uint64_t g = group_order();
        e %= g;
        if (tabled()) {
            // log fits in 20 bits and e < 2^20, so the product fits in 64 bits
            return exp_[(static_cast<std::uint64_t>(log_[x]) * e) % g];
        }
        gfm r = 1, b = x;
        while (e) {
            if (e & 1) r = mul_ref(r, b);
            b = mul_ref(b, b);
            e >>= 1;
        }
        return r;
    }

    // Absolute trace Tr(x) = sum of x^(2^i), i < k; linear over GF(2), so a
    // parity over the precomputed per-basis-element trace bits suffices.
    int trace(gfm x) const { return __builtin_popcount(x & trace_mask_) & 1; }

    gfm trace_mask() const { return trace_mask_; }

    // Additive character chi(x) = (-1)^Tr(x).
    int chi(gfm x) const { return 1 - 2 * trace(x); }

private:
    bool tabled() const { return !exp_.empty(); }

    void build_trace_mask() {
        trace_mask_ = 0;
        for (int i = 0; i < k_; ++i) {
            gfm t = 0, p = gfm{1} << i;
            for (int j = 0; j < k_; ++j) {
                t ^= p;
                p = mul_ref(p, p);
            }
            if (t != 0 && t != 1)
                throw std::logic_error("Field: trace of basis element not in GF(2)");
            trace_mask_ |= t << i;
        }
    }

    void build_log_tables() {
        const std::uint64_t g = group_order();
        exp_.assign(g, 0);
        log_.assign(order(), 0);
        const gfm gen = find_generator();
        gfm v = 1;
        for (std::uint64_t i = 0; i < g; ++i) {
            exp_[i] = v;
            log_[v] = static_cast<gfm>(i);
            v = mul_ref(v, gen);
        }
        if (v != 1) throw std::logic_error("Field: generator order mismatch");
    }

    gfm find_generator() const {
        const std::uint64_t g = group_order();
        if (g == 1) return 1;
        std::vector<std::uint64_t> primes;
        std::uint64_t n = g;
        for (std::uint64_t p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                primes.push_back(p);
                while (n % p == 0) n /= p;
            }
        if (n > 1) primes.push_back(n);
        for (gfm c = 2; c <= mask_; ++c) {
            bool primitive = true;
            for (std::uint64_t p : primes)
                if (pow_ref(c, g / p) == 1) { primitive = false; break; }
            if (primitive) return c;
        }
        throw std::logic_error("Field: no generator found");
    }

    gfm pow_ref(gfm x, std::uint64_t e) const {
        gfm r = 1, b = x;
        while (e) {
            if (e & 1) r = mul_ref(r, b);
            b = mul_ref(b, b);
            e >>= 1;
        }
        return r;
    }

    int k_;
    poly64 irr_;
    gfm mask_ = 0;
    gfm trace_mask_ = 0;
    std::vector<gfm> exp_, log_;
};

// Inverse of e modulo `modulus` (integer extended Euclid); used for the
// exponent 1/(2^s+1) mod 2^m-1.
inline std::uint64_t exp_inverse(std::uint64_t e, std::uint64_t modulus) {
    if (modulus < 1) throw std::invalid_argument("exp_inverse: bad modulus");
    std::int64_t r0 = static_cast<std::int64_t>(modulus), r1 = static_cast<std::int64_t>(e % modulus);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1; r0 = r1; r1 = r2;
        std::int64_t t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::invalid_argument("exp_inverse: exponent not invertible");
    std::int64_t m = static_cast<std::int64_t>(modulus);
    return static_cast<std::uint64_t>(((t0 % m) + m) % m);
}

} // namespace charsum
