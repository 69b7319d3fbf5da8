#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "charsum/io.hpp"
#include "charsum/kloosterman.hpp"
#include "charsum/parallel.hpp"
#include "charsum/tower.hpp"
#include "charsum/weil.hpp"

namespace charsum {

// L(x) = sum of alpha_i x^{2^{a_i}} with base-field coefficients; exponent
// indices are distinct and restricted to [0, m). The empty term list is the
// zero map.
class LinearizedPoly {
public:
    struct Term {
        int a;
        gfm alpha;
    };

    LinearizedPoly() = default;

    LinearizedPoly(std::vector<Term> terms, int m) : terms_(std::move(terms)) {
        for (const auto& t : terms_) {
            if (t.a < 0 || t.a >= m)
                throw std::invalid_argument("LinearizedPoly: exponent index out of [0,m)");
            if (t.alpha == 0)
                throw std::invalid_argument("LinearizedPoly: zero coefficient");
        }
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& x, const Term& y) { return x.a < y.a; });
        for (size_t i = 1; i < terms_.size(); ++i)
            if (terms_[i - 1].a == terms_[i].a)
                throw std::invalid_argument("LinearizedPoly: duplicate exponent index");
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_index() const { return terms_.empty() ? 0 : terms_.back().a; }

    // Text form "alphaHex*X^(2^a)" joined by commas; "0" is the zero map.
    static LinearizedPoly parse(const Field& f, const std::string& text) {
        if (text == "0") return {};
        std::vector<Term> terms;
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t comma = text.find(',', pos);
            if (comma == std::string::npos) comma = text.size();
            const std::string part = text.substr(pos, comma - pos);
            const auto star = part.find("*X^(2^");
            if (star == std::string::npos || part.empty() || part.back() != ')')
                throw std::invalid_argument("LinearizedPoly: expected alphaHex*X^(2^a)");
            const gfm alpha = parse_gfm(f, part.substr(0, star));
            const std::string expo = part.substr(star + 6, part.size() - star - 7);
            if (expo.empty() || expo.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("LinearizedPoly: bad exponent index");
            terms.push_back({std::stoi(expo), alpha});
            pos = comma + 1;
        }
        return {std::move(terms), f.degree()};
    }

    std::string to_string(const Field& f) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (size_t i = 0; i < terms_.size(); ++i) {
            if (i) out += ',';
            out += format_gfm(f, terms_[i].alpha) + "*X^(2^" + std::to_string(terms_[i].a) + ")";
        }
        return out;
    }

private:
    std::vector<Term> terms_;
};

namespace detail {

// L(a) for a in the extension: Frobenius powers of a scaled by the
// subfield coefficients.
inline Gfn eval_linpoly(const FieldCtx& ctx, const LinearizedPoly& L, Gfn a) {
    Gfn acc{};
    Gfn frob = a;
    int at = 0;
    for (const auto& t : L.terms()) {
        while (at < t.a) {
            frob = ctx.sqr(frob);
            ++at;
        }
        acc = ctx.add(acc, ctx.scale(frob, t.alpha));
    }
    return acc;
}

} // namespace detail

// p(mu) = sum over a outside GF(2) of chi_n(mu (a^{2^m}+a)/(a^2+a)).
inline std::int64_t p_brute(const FieldCtx& ctx, gfm mu) {
    ctx.require_enumerable();
    const Field& f = ctx.base();
    return parallel_sum(ctx.order_n(), [&](std::uint64_t i) -> std::int64_t {
        if (i < 2) return 0; // a in GF(2) excluded
        const Gfn a = ctx.element_at(i);
        const Gfn den = ctx.add(ctx.sqr(a), a);
        if (den == Gfn{}) throw std::logic_error("p_brute: vanishing denominator");
        const gfm num = ctx.rel_trace(a);
        return ctx.chi(ctx.scale(ctx.inv(den), f.mul(mu, num)));
    });
}

// Closed form (1 + k_m(mu))^2 - 2, checked against p_brute by the tests.
inline std::int64_t p_closed(const FieldCtx& ctx, gfm mu) {
    if (mu == 0) throw std::invalid_argument("p_closed: mu must be nonzero");
    const std::int64_t k = kloosterman_direct(ctx.base(), mu, 1);
    return (1 + k) * (1 + k) - 2;
}

// Sign variant -2 - (1+k)^2 that appears in print; it contradicts
// enumeration whenever k != -1 and exists only for comparison output.
inline std::int64_t p_closed_paper_literal(const FieldCtx& ctx, gfm mu) {
    if (mu == 0) throw std::invalid_argument("p_closed: mu must be nonzero");
    const std::int64_t k = kloosterman_direct(ctx.base(), mu, 1);
    return -2 - (1 + k) * (1 + k);
}

// q(mu) = sum over a outside the subfield of chi_n(mu (a^2+a)/(a^{2^m}+a)).
inline std::int64_t q_brute(const FieldCtx& ctx, gfm mu) {
    ctx.require_enumerable();
    const Field& f = ctx.base();
    return parallel_sum(ctx.order_n(), [&](std::uint64_t i) -> std::int64_t {
        const Gfn a = ctx.element_at(i);
        const gfm den = ctx.rel_trace(a);
        if (den == 0) return 0; // subfield excluded
        const Gfn num = ctx.add(ctx.sqr(a), a);
        return ctx.chi(ctx.scale(num, f.mul(mu, f.inv(den))));
    });
}

inline std::int64_t q_closed(const FieldCtx& ctx, gfm mu) {
    if (mu == 0) throw std::invalid_argument("q_closed: mu must be nonzero");
    return -static_cast<std::int64_t>(ctx.order_m()) * ctx.base().chi(mu);
}

// q_s(mu) = sum over a outside the subfield of
// chi_n(mu (a^2+a)^{2^s}/(a^{2^m}+a)).
inline std::int64_t qs_brute(const FieldCtx& ctx, gfm mu, int s) {
    if (s < 0 || s > 60) throw std::invalid_argument("qs_brute: bad s");
    ctx.require_enumerable();
    const Field& f = ctx.base();
    return parallel_sum(ctx.order_n(), [&](std::uint64_t i) -> std::int64_t {
        const Gfn a = ctx.element_at(i);
        const gfm den = ctx.rel_trace(a);
        if (den == 0) return 0;
        Gfn num = ctx.add(ctx.sqr(a), a);
        for (int j = 0; j < s; ++j) num = ctx.sqr(num);
        return ctx.chi(ctx.scale(num, f.mul(mu, f.inv(den))));
    });
}

// Collapse of q_s over the affine decomposition: every a = u*lambda with
// lambda in E contributes chi_m(mu (u^{2^{s+1}-1} + u^{2^s-1})), independent
// of lambda, so the extension sum is 2^m times a subfield sum. Exact for
// every s and m; this is the identity the acceptance sweep pins.
inline std::int64_t qs_reduced(const FieldCtx& ctx, gfm mu, int s) {
    if (s < 0 || s > 60) throw std::invalid_argument("qs_reduced: bad s");
    const Field& f = ctx.base();
    const std::uint64_t e_hi = (std::uint64_t{1} << (s + 1)) - 1;
    const std::uint64_t e_lo = (std::uint64_t{1} << s) - 1;
    std::int64_t acc = 0;
    for (std::uint64_t u = 1; u < f.order(); ++u) {
        const gfm uu = static_cast<gfm>(u);
        acc += f.chi(f.mul(mu, f.pow(uu, e_hi) ^ f.pow(uu, e_lo)));
    }
    return static_cast<std::int64_t>(ctx.order_m()) * acc;
}

// Literal closed evaluation via t = mu^{1/(2^s+1)}: -2^m when Tr(t) = 0,
// else 2^m (chi(h^{2^s+1}+h) (2/m) 2^{(m+1)/2} - 1) with h from solve_h.
inline std::int64_t qs_closed(const FieldCtx& ctx, gfm mu, int s) {
    const Field& f = ctx.base();
    require_closed_weil(f.degree(), s);
    if (mu == 0) throw std::invalid_argument("qs_closed: mu must be nonzero");
    const std::int64_t qm = static_cast<std::int64_t>(ctx.order_m());
    const std::uint64_t e = exp_inverse((std::uint64_t{1} << s) + 1, f.group_order());
    const gfm t = f.pow(mu, e);
    if (f.trace(t) == 0) return -qm;
    const gfm h = solve_h(f, t, s);
    const gfm arg = f.pow(h, (std::uint64_t{1} << s) + 1) ^ h;
    return qm * (f.chi(arg) * weil_c11_closed(f.degree(), s) - 1);
}

// r(L) = sum over all a of chi_n((a^{2^m}+a) L(a)).
inline std::int64_t r_brute(const FieldCtx& ctx, const LinearizedPoly& L) {
    ctx.require_enumerable();
    return parallel_sum(ctx.order_n(), [&](std::uint64_t i) -> std::int64_t {
        const Gfn a = ctx.element_at(i);
        return ctx.chi(ctx.scale(detail::eval_linpoly(ctx, L, a), ctx.rel_trace(a)));
    });
}

// r(L) = 2^m sum over subfield u of chi_m(u L(u)), with
// u L(u) = sum of alpha_i u^{2^{a_i}+1}.
inline std::int64_t r_closed(const FieldCtx& ctx, const LinearizedPoly& L) {
    const Field& f = ctx.base();
    std::int64_t acc = 0;
    for (std::uint64_t u = 0; u < f.order(); ++u) {
        const gfm uu = static_cast<gfm>(u);
        gfm arg = 0;
        for (const auto& t : L.terms())
            arg ^= f.mul(t.alpha, f.pow(uu, (std::uint64_t{1} << t.a) + 1));
        acc += f.chi(arg);
    }
    return static_cast<std::int64_t>(ctx.order_m()) * acc;
}

} // namespace charsum
