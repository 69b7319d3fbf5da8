#pragma once

#include <stdexcept>
#include <vector>

#include "charsum/tower.hpp"

namespace charsum {

// x = y * z with y in the nonzero subfield and z on the unit circle
// {z : z^{2^m+1} = 1}.
struct PolarPair {
    gfm y;
    Gfn z;
};

// x = u * lambda with u in the nonzero subfield and lambda in
// E = {lambda : lambda^{2^m} + lambda = 1}.
struct AffinePair {
    gfm u;
    Gfn lambda;
};

inline PolarPair polar(const FieldCtx& ctx, Gfn x) {
    if (x == Gfn{}) throw std::invalid_argument("polar: x must be nonzero");
    const std::uint64_t half = std::uint64_t{1} << (ctx.m() - 1);
    const std::uint64_t qm = ctx.order_m();
    const Gfn y = ctx.pow(x, (qm + 1) * half);
    const Gfn z = ctx.pow(x, (qm - 1) * half);
    if (!ctx.in_subfield(y)) throw std::logic_error("polar: y escaped the subfield");
    return {y.c0, z};
}

// Defined only off the subfield; subfield elements are just x = u and the
// callers that care branch on that case themselves.
inline AffinePair affine(const FieldCtx& ctx, Gfn x) {
    const gfm u = ctx.rel_trace(x);
    if (u == 0) throw std::invalid_argument("affine: x lies in the subfield");
    return {u, ctx.scale(x, ctx.base().inv(u))};
}

// sigma(lambda) = lambda * conjugate(lambda); two-to-one from E onto the
// trace-one elements of the subfield.
inline gfm sigma(const FieldCtx& ctx, Gfn lambda) {
    if (!ctx.in_affine_e(lambda)) throw std::invalid_argument("sigma: lambda not in E");
    return ctx.norm(lambda);
}

inline std::vector<gfm> trace_one_set(const FieldCtx& ctx) {
    std::vector<gfm> out;
    for (std::uint64_t v = 0; v < ctx.order_m(); ++v)
        if (ctx.base().trace(static_cast<gfm>(v)) == 1) out.push_back(static_cast<gfm>(v));
    return out;
}

} // namespace charsum
