// Fock realization of the Heisenberg algebra on polynomials in creation
// labels b_1, b_2, ...: Z_{-n} multiplies by b_n, Z_n acts as n d/db_n,
// Z_0 as multiplication by mu, the center as the identity. On top of it,
// the Virasoro operators L_n and the exact check of their commutation
// relation with central term (n^3-n)/12 (1+12 lambda^2).
#pragma once

#include "ladderlie/heisenberg.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ladderlie {

// multiset of positive creation indices, kept sorted ascending
using FockMonomial = std::vector<Index>;

class FockVector {
public:
    using TermMap = std::map<FockMonomial, Scalar>;

    FockVector() = default;

    static FockVector vacuum()
    {
        FockVector v;
        v.add_term({}, Scalar(1));
        return v;
    }

    static FockVector monomial(FockMonomial mon, Scalar c = Scalar(1))
    {
        std::sort(mon.begin(), mon.end());
        for (Index k : mon)
            if (k < 1)
                throw std::invalid_argument("creation labels must be positive");
        FockVector v;
        v.add_term(std::move(mon), std::move(c));
        return v;
    }

    void add_term(FockMonomial mon, const Scalar& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(mon), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // highest Fock degree (sum of labels) present; 0 for the zero vector
    Index max_degree() const
    {
        Index d = 0;
        for (const auto& [mon, c] : terms_) {
            Index s = 0;
            for (Index k : mon)
                s += k;
            d = std::max(d, s);
        }
        return d;
    }

    FockVector& operator+=(const FockVector& o)
    {
        for (const auto& [mon, c] : o.terms_)
            add_term(mon, c);
        return *this;
    }
    FockVector& operator-=(const FockVector& o)
    {
        for (const auto& [mon, c] : o.terms_)
            add_term(mon, -c);
        return *this;
    }
    FockVector& operator*=(const Scalar& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [mon, c] : terms_)
            c *= s;
        return *this;
    }

    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const Scalar& s, FockVector v) { return v *= s; }

    friend bool operator==(const FockVector&, const FockVector&) = default;

private:
    TermMap terms_;
};

struct FockConfig {
    Scalar mu;     // eigenvalue of Z_0
    Scalar lambda; // Virasoro deformation parameter
};

namespace detail {

inline FockVector fock_create(Index k, const FockVector& v)
{
    FockVector r;
    for (const auto& [mon, c] : v.terms()) {
        FockMonomial next = mon;
        next.insert(std::lower_bound(next.begin(), next.end(), k), k);
        r.add_term(std::move(next), c);
    }
    return r;
}

// k d/db_k
inline FockVector fock_annihilate(Index k, const FockVector& v)
{
    FockVector r;
    for (const auto& [mon, c] : v.terms()) {
        auto lo = std::lower_bound(mon.begin(), mon.end(), k);
        auto hi = std::upper_bound(mon.begin(), mon.end(), k);
        long count = static_cast<long>(hi - lo);
        if (count == 0)
            continue;
        FockMonomial next = mon;
        next.erase(std::lower_bound(next.begin(), next.end(), k));
        r.add_term(std::move(next), c * Scalar(Rational(count * static_cast<long>(k))));
    }
    return r;
}

} // namespace detail

// Action of one Heisenberg generator Z_n (pass the Z-label n) on v.
inline FockVector fock_apply(const FockConfig& cfg, Index label, const FockVector& v)
{
    if (label == 0) {
        FockVector r = v;
        return r *= cfg.mu;
    }
    if (label < 0)
        return detail::fock_create(-label, v);
    return detail::fock_annihilate(label, v);
}

inline FockVector fock_apply_central(const FockVector& v) { return v; }

inline FockVector fock_apply(const FockConfig& cfg, const HeisenbergElement& x,
                             const FockVector& v)
{
    FockVector r;
    for (const auto& [l, c] : x.terms())
        r += c * fock_apply(cfg, l.n, v);
    r += x.central_part() * v;
    return r;
}

// L_0 = (mu^2 + lambda^2)/2 + sum_{n>0} Z_{-n} Z_n (normal ordered);
// L_n = 1/2 sum_j Z_{-j} Z_{j+n} + i lambda n Z_n for n != 0. The j-sum
// truncates to |j| <= |n| + maxdeg(v); outside that window one factor
// annihilates v or over-creates past every term that could be annihilated
// back, so the result is window-independent (tested by window doubling).
inline FockVector virasoro_L(const FockConfig& cfg, Index n, const FockVector& v,
                             Index window_slack = 0)
{
    if (v.is_zero())
        return {};
    if (n == 0) {
        Scalar c0 = (cfg.mu * cfg.mu + cfg.lambda * cfg.lambda) * Scalar(Rational(1, 2));
        FockVector r = c0 * v;
        const Index top = v.max_degree();
        for (Index k = 1; k <= top; ++k)
            r += fock_apply(cfg, -k, fock_apply(cfg, k, v));
        return r;
    }
    const Index window = (n < 0 ? -n : n) + v.max_degree() + window_slack;
    FockVector r;
    for (Index j = -window; j <= window; ++j) {
        FockVector term = fock_apply(cfg, -j, fock_apply(cfg, j + n, v));
        r += Scalar(Rational(1, 2)) * term;
    }
    r += (Scalar::i() * cfg.lambda * Scalar(Rational(static_cast<long>(n)))) *
         fock_apply(cfg, n, v);
    return r;
}

// ([L_n, L_m] - (n-m) L_{n+m} - delta_{n,-m} (n^3-n)/12 (1+12 lambda^2)) v.
// Zero iff the Virasoro relation holds on v.
inline FockVector virasoro_residual(const FockConfig& cfg, Index n, Index m,
                                    const FockVector& v)
{
    FockVector r = virasoro_L(cfg, n, virasoro_L(cfg, m, v));
    r -= virasoro_L(cfg, m, virasoro_L(cfg, n, v));
    Scalar nm(Rational(static_cast<long>(n - m)));
    r -= nm * virasoro_L(cfg, n + m, v);
    if (n == -m) {
        Rational cubic(static_cast<long>(n) * n * n - n, 12);
        cubic.canonicalize();
        Scalar central = Scalar(cubic) *
                         (Scalar(1) + Scalar(Rational(12)) * cfg.lambda * cfg.lambda);
        r -= central * v;
    }
    return r;
}

} // namespace ladderlie
