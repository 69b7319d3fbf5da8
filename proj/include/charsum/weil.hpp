#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "charsum/field.hpp"
#include "charsum/linsolve.hpp"

namespace charsum {

// C_m^{(s)}(a,b) = sum over x in GF(2^m) of (-1)^Tr(a x^{2^s+1} + b x).
inline std::int64_t weil_c_direct(const Field& f, gfm a, gfm b, int s) {
    if (s < 1 || s > 60) throw std::invalid_argument("weil_c_direct: bad s");
    const std::uint64_t e = (std::uint64_t{1} << s) + 1;
    std::int64_t acc = 0;
    for (std::uint64_t x = 0; x < f.order(); ++x) {
        const gfm xx = static_cast<gfm>(x);
        acc += f.chi(f.mul(a, f.pow(xx, e)) ^ f.mul(b, xx));
    }
    return acc;
}

// Jacobi symbol (2/m) for odd m: +1 when m = +-1 (mod 8), -1 when m = +-3.
inline int jacobi2(int m) {
    if (m % 2 == 0) throw std::invalid_argument("jacobi2: m must be odd");
    switch (m % 8) {
        case 1: case 7: return 1;
        default: return -1;
    }
}

inline void require_closed_weil(int m, int s) {
    if (m % 2 == 0) throw std::invalid_argument("weil closed form: m must be odd");
    if (s < 1 || std::gcd(s, m) != 1)
        throw std::invalid_argument("weil closed form: gcd(s,m) must be 1");
}

// C_m^{(s)}(1,1) = (2/m) 2^{(m+1)/2}.
inline std::int64_t weil_c11_closed(int m, int s) {
    require_closed_weil(m, s);
    return static_cast<std::int64_t>(jacobi2(m)) << ((m + 1) / 2);
}

// C(a,b) = C(1, b / a^{1/(2^s+1)}); returns the reduced second argument.
inline gfm weil_reduce(const Field& f, gfm a, gfm b, int s) {
    require_closed_weil(f.degree(), s);
    if (a == 0) throw std::invalid_argument("weil_reduce: a must be nonzero");
    const std::uint64_t e = exp_inverse((std::uint64_t{1} << s) + 1, f.group_order());
    return f.mul(b, f.inv(f.pow(a, e)));
}

// Solves h^{2^s} + h^{2^{m-s}} = t + 1 for Tr(t) = 1. The kernel of the
// linear map is {0, 1}, so the two solutions are h and h+1; the smaller
// encoding is returned.
inline gfm solve_h(const Field& f, gfm t, int s) {
    const int m = f.degree();
    require_closed_weil(m, s);
    if (f.trace(t) != 1)
        throw std::invalid_argument("solve_h: t must have trace 1");
    std::vector<gfm> col(m);
    for (int j = 0; j < m; ++j) {
        gfm v = gfm{1} << j;
        col[j] = f.pow(v, std::uint64_t{1} << s) ^ f.pow(v, std::uint64_t{1} << (m - s));
    }
    std::vector<std::uint64_t> rows(m, 0);
    const gfm rhs = t ^ 1;
    for (int i = 0; i < m; ++i) {
        std::uint64_t row = 0;
        for (int j = 0; j < m; ++j)
            if ((col[j] >> i) & 1) row |= std::uint64_t{1} << j;
        if ((rhs >> i) & 1) row |= std::uint64_t{1} << m;
        rows[i] = row;
    }
    const auto sol = solve_gf2(std::move(rows), m);
    if (!sol) throw std::logic_error("solve_h: no solution for trace-one t");
    const gfm h0 = *sol, h1 = h0 ^ 1;
    const gfm h = h0 < h1 ? h0 : h1;
    if ((f.pow(h, std::uint64_t{1} << s) ^ f.pow(h, std::uint64_t{1} << (m - s))) != rhs)
        throw std::logic_error("solve_h: solution check failed");
    return h;
}

// Closed evaluation of C_m^{(s)}(a,b). a = 0 degenerates to a plain
// additive character sum and is handled up front.
inline std::int64_t weil_c_closed(const Field& f, gfm a, gfm b, int s) {
    if (a == 0) return b == 0 ? static_cast<std::int64_t>(f.order()) : 0;
    require_closed_weil(f.degree(), s);
    const gfm br = weil_reduce(f, a, b, s);
    if (f.trace(br) == 0) return 0;
    const gfm h = solve_h(f, br, s);
    const gfm arg = f.pow(h, (std::uint64_t{1} << s) + 1) ^ h;
    return f.chi(arg) * weil_c11_closed(f.degree(), s);
}

struct CountReport {
    std::int64_t m_plus = 0, m_minus = 0;
    std::int64_t n00 = 0, n01 = 0, n10 = 0, n11 = 0;

    friend bool operator==(const CountReport&, const CountReport&) = default;
};

// M+/M- and N_{i,j} from the closed formulas, sign (-1)^{(m^2-1)/8} = (2/m).
inline CountReport counts_closed(int m, int s) {
    require_closed_weil(m, s);
    if (m < 3) throw std::invalid_argument("counts_closed: m must be >= 3");
    const std::int64_t base = std::int64_t{1} << (m - 2);
    const std::int64_t dev = static_cast<std::int64_t>(jacobi2(m)) << ((m - 3) / 2);
    CountReport r;
    r.m_plus = base + dev;
    r.m_minus = base - dev;
    r.n00 = r.n11 = base + dev;
    r.n01 = r.n10 = base - dev;
    return r;
}

// Same counts by enumeration. Any direct value outside {0, +-C(1,1)} would
// falsify the closed form and is reported as a hard error.
inline CountReport counts_direct(const Field& f, int s) {
    const int m = f.degree();
    require_closed_weil(m, s);
    if (m < 3) throw std::invalid_argument("counts_direct: m must be >= 3");
    const std::int64_t c11 = weil_c11_closed(m, s);
    CountReport r;
    for (std::uint64_t a = 0; a < f.order(); ++a) {
        const std::int64_t c = weil_c_direct(f, 1, static_cast<gfm>(a), s);
        if (c == c11) ++r.m_plus;
        else if (c == -c11) ++r.m_minus;
        else if (c != 0) throw std::logic_error("counts_direct: unexpected Weil sum value");
    }
    const std::uint64_t e = (std::uint64_t{1} << s) + 1;
    for (std::uint64_t h = 0; h < f.order(); ++h) {
        const gfm hh = static_cast<gfm>(h);
        const int i = f.trace(f.pow(hh, e));
        const int j = f.trace(hh);
        (i == 0 ? (j == 0 ? r.n00 : r.n01) : (j == 0 ? r.n10 : r.n11)) += 1;
    }
    return r;
}

} // namespace charsum
