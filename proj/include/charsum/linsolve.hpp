#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace charsum {

// Gaussian elimination over GF(2). rows[i] holds matrix bits 0..m-1 plus the
// right-hand side in bit m. Returns a solution with free variables set to 0,
// or nullopt if the system is inconsistent.
inline std::optional<std::uint32_t> solve_gf2(std::vector<std::uint64_t> rows, int m) {
    const std::uint64_t rhs_bit = std::uint64_t{1} << m;
    std::vector<int> pivot_col(rows.size(), -1);
    int rank = 0;
    for (int col = 0; col < m && rank < static_cast<int>(rows.size()); ++col) {
        int sel = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r] & (std::uint64_t{1} << col)) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(rows[rank], rows[sel]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            if (r != rank && (rows[r] & (std::uint64_t{1} << col))) rows[r] ^= rows[rank];
        pivot_col[rank] = col;
        ++rank;
    }
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
        if (rows[r] & rhs_bit) return std::nullopt;
    std::uint32_t x = 0;
    for (int r = 0; r < rank; ++r)
        if (rows[r] & rhs_bit) x |= std::uint32_t{1} << pivot_col[r];
    return x;
}

} // namespace charsum
