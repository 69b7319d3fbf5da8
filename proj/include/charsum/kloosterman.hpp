#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "charsum/field.hpp"

namespace charsum {

// k_m(a,b) = sum over x != 0 of (-1)^Tr(ax + b/x); exact integer.
inline std::int64_t kloosterman_direct(const Field& f, gfm a, gfm b) {
    std::int64_t acc = 0;
    for (std::uint64_t x = 1; x < f.order(); ++x) {
        const gfm xx = static_cast<gfm>(x);
        acc += f.chi(f.mul(a, xx) ^ f.mul(b, f.inv(xx)));
    }
    return acc;
}

// GF(2^{ms}) together with a root of the base modulus in it; embedding a
// base-field element evaluates its coordinate polynomial at that root.
struct LiftedField {
    Field big;
    gfm root;
};

inline LiftedField make_lift(const Field& base, int s, int budget_degree = 20) {
    if (s < 1) throw std::invalid_argument("make_lift: s must be >= 1");
    const int k = base.degree() * s;
    if (k > budget_degree)
        throw std::runtime_error("make_lift: lifted field exceeds budget");
    Field big(k);
    const poly64 p = base.modulus();
    const int d = poly_degree(p);
    for (std::uint64_t g = 0; g < big.order(); ++g) {
        gfm acc = 0;
        for (int i = d; i >= 0; --i)
            acc = big.mul(acc, static_cast<gfm>(g)) ^ static_cast<gfm>((p >> i) & 1);
        if (acc == 0) return {std::move(big), static_cast<gfm>(g)};
    }
    throw std::logic_error("make_lift: base modulus has no root in the lift");
}

inline gfm lift_embed(const Field& base, const LiftedField& lift, gfm a) {
    gfm acc = 0;
    for (int i = base.degree() - 1; i >= 0; --i)
        acc = lift.big.mul(acc, lift.root) ^ ((a >> i) & 1);
    return acc;
}

// k_m^{(s)}(a) summed directly over GF(2^{ms})^*; the lifted character is
// the absolute-trace character of the big field (trace transitivity).
inline std::int64_t kloosterman_lift_direct(const Field& f, const LiftedField& lift, gfm a) {
    const gfm ahat = lift_embed(f, lift, a);
    std::int64_t acc = 0;
    for (std::uint64_t g = 1; g < lift.big.order(); ++g) {
        const gfm gg = static_cast<gfm>(g);
        acc += lift.big.chi(lift.big.mul(ahat, gg) ^ lift.big.inv(gg));
    }
    return acc;
}

inline std::int64_t kloosterman_lift_direct(const Field& f, gfm a, int s,
                                            int budget_degree = 20) {
    return kloosterman_lift_direct(f, make_lift(f, s, budget_degree), a);
}

// k^{(s)} = -k^{(s-1)} k^{(1)} - 2^m k^{(s-2)}, with k^{(0)} = -2 and
// k^{(1)} = k_m(a, 1).
inline std::int64_t kloosterman_lift_recursive(const Field& f, gfm a, int s) {
    if (s < 0) throw std::invalid_argument("kloosterman_lift_recursive: s must be >= 0");
    std::int64_t prev = -2;
    if (s == 0) return prev;
    const std::int64_t k1 = kloosterman_direct(f, a, 1);
    std::int64_t cur = k1;
    const std::int64_t q = static_cast<std::int64_t>(f.order());
    for (int i = 2; i <= s; ++i) {
        const std::int64_t next = -cur * k1 - q * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// {k_m(lambda) : lambda in GF(2^m)}, sorted and deduplicated.
inline std::vector<std::int64_t> lw_value_set(const Field& f) {
    std::set<std::int64_t> vals;
    for (std::uint64_t a = 0; a < f.order(); ++a)
        vals.insert(kloosterman_direct(f, static_cast<gfm>(a), 1));
    return {vals.begin(), vals.end()};
}

// All integers t = -1 (mod 4) with |t| <= 2^(m/2+1); the bound is applied
// exactly as t^2 <= 2^(m+2).
inline std::vector<std::int64_t> lw_expected(int m) {
    if (m < 1 || m > 60) throw std::invalid_argument("lw_expected: bad m");
    const std::int64_t bound_sq = std::int64_t{1} << (m + 2);
    std::vector<std::int64_t> out;
    std::int64_t t = -(std::int64_t{1} << (m / 2 + 2));
    while (t * t > bound_sq) ++t;
    while (((t % 4) + 4) % 4 != 3) ++t;
    for (; t * t <= bound_sq; t += 4) out.push_back(t);
    return out;
}

} // namespace charsum
