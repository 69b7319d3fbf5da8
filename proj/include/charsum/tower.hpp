#pragma once

#include <cstdint>
#include <stdexcept>

#include "charsum/field.hpp"

namespace charsum {

// Element of GF(2^{2m}) = GF(2^m)(theta) with theta^2 + theta = nu:
// the value is c0 + c1*theta, both coordinates in GF(2^m).
struct Gfn {
    gfm c0 = 0;
    gfm c1 = 0;

    friend bool operator==(const Gfn&, const Gfn&) = default;
};

// GF(2^m) together with its quadratic extension GF(2^{2m}) in tower form.
// Requiring Tr(nu) = 1 makes x^2 + x + nu irreducible over the base field
// and gives theta^{2^m} = theta + 1, so conjugation, the relative trace,
// the subfield test and membership in E = {x : x^{2^m} + x = 1} are all
// coordinate reads.
class FieldCtx {
public:
    explicit FieldCtx(int m) : FieldCtx(Field(m)) {}
    FieldCtx(int m, poly64 irr) : FieldCtx(Field(m, irr)) {}

    explicit FieldCtx(Field base) : base_(std::move(base)) {
        nu_ = 0;
        while (nu_ < base_.order() && base_.trace(static_cast<gfm>(nu_)) != 1) ++nu_;
        if (nu_ >= base_.order()) throw std::logic_error("FieldCtx: no trace-one element");
    }

    FieldCtx(Field base, gfm nu) : base_(std::move(base)), nu_(nu) {
        if (!base_.contains(nu) || base_.trace(nu) != 1)
            throw std::invalid_argument("FieldCtx: nu must have absolute trace 1");
    }

    const Field& base() const { return base_; }
    int m() const { return base_.degree(); }
    int n() const { return 2 * base_.degree(); }
    gfm nu() const { return static_cast<gfm>(nu_); }

    std::uint64_t order_m() const { return base_.order(); }
    std::uint64_t order_n() const { return std::uint64_t{1} << n(); }

    Gfn embed(gfm u) const { return {u, 0}; }
    Gfn theta() const { return {0, 1}; }

    // Enumeration order of GF(2^{2m}): index = c0 + c1 * 2^m.
    Gfn element_at(std::uint64_t index) const {
        const gfm lo = static_cast<gfm>(index & (order_m() - 1));
        const gfm hi = static_cast<gfm>(index >> m());
        return {lo, hi};
    }
    std::uint64_t index_of(Gfn x) const {
        return (static_cast<std::uint64_t>(x.c1) << m()) | x.c0;
    }

    Gfn add(Gfn x, Gfn y) const { return {x.c0 ^ y.c0, x.c1 ^ y.c1}; }

    // (a0 + a1 t)(b0 + b1 t) with t^2 = t + nu.
    Gfn mul(Gfn x, Gfn y) const {
        const gfm a = base_.mul(x.c0, y.c0);
        const gfm b = base_.mul(x.c1, y.c1);
        const gfm cross = base_.mul(x.c0 ^ x.c1, y.c0 ^ y.c1) ^ a ^ b;
        return {a ^ base_.mul(b, nu()), cross ^ b};
    }

    Gfn sqr(Gfn x) const {
        const gfm b = base_.sqr(x.c1);
        return {base_.sqr(x.c0) ^ base_.mul(b, nu()), b};
    }

    Gfn scale(Gfn x, gfm c) const { return {base_.mul(x.c0, c), base_.mul(x.c1, c)}; }

    // x^{2^m} = (c0 + c1) + c1 t, since theta^{2^m} = theta + 1.
    Gfn conjugate(Gfn x) const { return {x.c0 ^ x.c1, x.c1}; }

    // Relative trace x + x^{2^m}, a base-field element.
    gfm rel_trace(Gfn x) const { return x.c1; }

    // Norm x * conjugate(x); lands in the base field.
    gfm norm(Gfn x) const {
        return base_.mul(x.c0, x.c0 ^ x.c1) ^ base_.mul(base_.sqr(x.c1), nu());
    }

    Gfn inv(Gfn x) const {
        if (x == Gfn{}) throw std::invalid_argument("FieldCtx::inv: zero has no inverse");
        return scale(conjugate(x), base_.inv(norm(x)));
    }

    Gfn pow(Gfn x, std::uint64_t e) const {
        Gfn r = embed(1), b = x;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = sqr(b);
            e >>= 1;
        }
        return r;
    }

    bool in_subfield(Gfn x) const { return x.c1 == 0; }
    bool in_affine_e(Gfn x) const { return x.c1 == 1; }
    bool in_unit_circle(Gfn x) const { return !(x == Gfn{}) && norm(x) == 1; }

    // Tr_1^{2m}(x) = Tr_1^m(x + x^{2^m}) by transitivity of the trace.
    int trace(Gfn x) const { return base_.trace(rel_trace(x)); }
    int chi(Gfn x) const { return 1 - 2 * trace(x); }

    // Enumerating GF(2^{2m}) is refused above this degree unless raised.
    int enum_limit() const { return enum_limit_m_; }
    void require_enumerable() const {
        if (m() > enum_limit_m_)
            throw std::runtime_error("FieldCtx: enumeration over GF(2^{2m}) exceeds budget; "
                                     "raise the budget to override");
    }
    static FieldCtx with_enum_limit(FieldCtx ctx, int limit_m) {
        ctx.enum_limit_m_ = limit_m;
        return ctx;
    }

private:
    Field base_;
    std::uint64_t nu_;
    int enum_limit_m_ = 20;
};

} // namespace charsum
