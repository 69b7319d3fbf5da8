#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "charsum/tower.hpp"

namespace charsum {

// Elements print as lowercase hex of the coordinate bit vector, padded to
// whole bytes of the field width; no 0x prefix. Parsing is case-insensitive
// but otherwise strict.

inline std::string to_hex(std::uint64_t v, int bits) {
    const int digits = 2 * ((bits + 7) / 8);
    std::string s(static_cast<size_t>(digits), '0');
    for (int i = digits - 1; i >= 0; --i, v >>= 4)
        s[static_cast<size_t>(i)] = "0123456789abcdef"[v & 0xf];
    return s;
}

inline std::uint64_t parse_hex(const std::string& s, int bits) {
    if (s.empty() || s.size() > 16) throw std::invalid_argument("parse_hex: bad length");
    std::uint64_t v = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw std::invalid_argument("parse_hex: invalid hex digit");
        v = (v << 4) | static_cast<std::uint64_t>(d);
    }
    if (bits < 64 && v >= (std::uint64_t{1} << bits))
        throw std::invalid_argument("parse_hex: value out of range for field");
    return v;
}

inline std::string format_gfm(const Field& f, gfm x) { return to_hex(x, f.degree()); }

inline gfm parse_gfm(const Field& f, const std::string& s) {
    return static_cast<gfm>(parse_hex(s, f.degree()));
}

// GF(2^{2m}) elements as "<hex(c0)>+<hex(c1)>t".
inline std::string format_gfn(const FieldCtx& ctx, Gfn x) {
    return format_gfm(ctx.base(), x.c0) + "+" + format_gfm(ctx.base(), x.c1) + "t";
}

inline Gfn parse_gfn(const FieldCtx& ctx, const std::string& s) {
    const auto plus = s.find('+');
    if (plus == std::string::npos || s.empty() || s.back() != 't')
        throw std::invalid_argument("parse_gfn: expected \"<hex>+<hex>t\"");
    const gfm c0 = parse_gfm(ctx.base(), s.substr(0, plus));
    const gfm c1 = parse_gfm(ctx.base(), s.substr(plus + 1, s.size() - plus - 2));
    return {c0, c1};
}

} // namespace charsum
