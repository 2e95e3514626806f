// The ladder Hopf algebra: polynomial algebra on generators G_1, G_2, ...
// (G_0 is the unit) with the cocommutative ladder coproduct, counit,
// antipode, the grading derivation Y, characters with convolution, the
// derivations D1/D3, and the two evaluation routes for S*Y.
#pragma once

#include "ladderlie/lie.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ladderlie {

// multiset of positive loop numbers; empty = the unit monomial
using HopfMonomial = std::vector<Index>;

inline Index monomial_degree(const HopfMonomial& m)
{
    return std::accumulate(m.begin(), m.end(), Index{0});
}

// order by total degree, then lexicographically
struct HopfMonomialLess {
    bool operator()(const HopfMonomial& a, const HopfMonomial& b) const
    {
        Index da = monomial_degree(a), db = monomial_degree(b);
        if (da != db)
            return da < db;
        return a < b;
    }
};

class HopfElement {
public:
    using TermMap = std::map<HopfMonomial, Scalar, HopfMonomialLess>;

    HopfElement() = default;

    static HopfElement one() { return scalar(Scalar(1)); }

    static HopfElement scalar(const Scalar& c)
    {
        HopfElement x;
        x.add_term({}, c);
        return x;
    }

    // G_k for k >= 1; G_0 is the unit
    static HopfElement generator(Index k)
    {
        if (k < 0)
            throw std::invalid_argument("ladder generator index must be non-negative");
        if (k == 0)
            return one();
        HopfElement x;
        x.add_term({k}, Scalar(1));
        return x;
    }

    static HopfElement monomial(HopfMonomial mon, Scalar c = Scalar(1))
    {
        std::sort(mon.begin(), mon.end());
        for (Index k : mon)
            if (k < 1)
                throw std::invalid_argument("monomial factors must be positive");
        HopfElement x;
        x.add_term(std::move(mon), std::move(c));
        return x;
    }

    void add_term(HopfMonomial mon, const Scalar& c)
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

    Scalar coefficient(const HopfMonomial& mon) const
    {
        auto it = terms_.find(mon);
        return it == terms_.end() ? Scalar() : it->second;
    }

    HopfElement& operator+=(const HopfElement& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    HopfElement& operator-=(const HopfElement& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    HopfElement& operator*=(const Scalar& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }

    friend HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
    friend HopfElement operator-(HopfElement a, const HopfElement& b) { return a -= b; }
    friend HopfElement operator*(const Scalar& s, HopfElement x) { return x *= s; }

    friend HopfElement operator*(const HopfElement& a, const HopfElement& b)
    {
        HopfElement r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                HopfMonomial m;
                m.reserve(ma.size() + mb.size());
                std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(),
                           std::back_inserter(m));
                r.add_term(std::move(m), ca * cb);
            }
        return r;
    }

    friend bool operator==(const HopfElement&, const HopfElement&) = default;

private:
    TermMap terms_;
};

class TensorElement {
public:
    using Key = std::pair<HopfMonomial, HopfMonomial>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const
        {
            HopfMonomialLess less;
            if (less(a.first, b.first))
                return true;
            if (less(b.first, a.first))
                return false;
            return less(a.second, b.second);
        }
    };
    using TermMap = std::map<Key, Scalar, KeyLess>;

    TensorElement() = default;

    static TensorElement of(const HopfElement& left, const HopfElement& right)
    {
        TensorElement t;
        for (const auto& [ml, cl] : left.terms())
            for (const auto& [mr, cr] : right.terms())
                t.add_term({ml, mr}, cl * cr);
        return t;
    }

    void add_term(Key key, const Scalar& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    TensorElement& operator+=(const TensorElement& o)
    {
        for (const auto& [k, c] : o.terms_)
            add_term(k, c);
        return *this;
    }

    // componentwise product in H (x) H
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b)
    {
        TensorElement r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                HopfMonomial l, rr;
                std::merge(ka.first.begin(), ka.first.end(), kb.first.begin(),
                           kb.first.end(), std::back_inserter(l));
                std::merge(ka.second.begin(), ka.second.end(), kb.second.begin(),
                           kb.second.end(), std::back_inserter(rr));
                r.add_term({std::move(l), std::move(rr)}, ca * cb);
            }
        return r;
    }

    TensorElement swapped() const
    {
        TensorElement r;
        for (const auto& [k, c] : terms_)
            r.add_term({k.second, k.first}, c);
        return r;
    }

    friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
    TermMap terms_;
};

// Delta(G_n) = G_n (x) 1 + 1 (x) G_n + sum_{j=1}^{n-1} G_j (x) G_{n-j},
// extended to products as an algebra morphism.
inline TensorElement coproduct_generator(Index n)
{
    TensorElement t;
    for (Index j = 0; j <= n; ++j)
        t.add_term({j == 0 ? HopfMonomial{} : HopfMonomial{j},
                    j == n ? HopfMonomial{} : HopfMonomial{n - j}},
                   Scalar(1));
    return t;
}

inline TensorElement coproduct(const HopfElement& x)
{
    TensorElement r;
    for (const auto& [mon, c] : x.terms()) {
        TensorElement prod = TensorElement::of(HopfElement::scalar(c), HopfElement::one());
        for (Index k : mon)
            prod = prod * coproduct_generator(k);
        r += prod;
    }
    return r;
}

inline Scalar counit(const HopfElement& x) { return x.coefficient({}); }

namespace detail {

// S(G_m) = -G_m - sum_{n=1}^{m-1} S(G_n) G_{m-n}, memoized per call tree
inline HopfElement antipode_generator(Index m, std::vector<HopfElement>& memo)
{
    if (m == 0)
        return HopfElement::one();
    if (static_cast<std::size_t>(m) < memo.size() && !memo[m].is_zero())
        return memo[m];
    HopfElement s = Scalar(-1) * HopfElement::generator(m);
    for (Index n = 1; n < m; ++n)
        s -= antipode_generator(n, memo) * HopfElement::generator(m - n);
    if (static_cast<std::size_t>(m) >= memo.size())
        memo.resize(static_cast<std::size_t>(m) + 1);
    memo[m] = s;
    return s;
}

} // namespace detail

// Antipode, extended to products as an algebra morphism (the algebra is
// commutative, so S is multiplicative).
inline HopfElement antipode(const HopfElement& x)
{
    std::vector<HopfElement> memo;
    HopfElement r;
    for (const auto& [mon, c] : x.terms()) {
        HopfElement prod = HopfElement::scalar(c);
        for (Index k : mon)
            prod = prod * detail::antipode_generator(k, memo);
        r += prod;
    }
    return r;
}

// Y: scale each monomial by its total degree (the grading derivation).
inline HopfElement grading_Y(const HopfElement& x)
{
    HopfElement r;
    for (const auto& [mon, c] : x.terms())
        r.add_term(mon, c * Scalar(Rational(static_cast<long>(monomial_degree(mon)))));
    return r;
}

// Z[n,m] G_k = G_{k-m+n} if m <= k else 0, on the linear span of
// generators only (G_0 is the unit).
inline HopfElement lie_act(const GenIndex& g, Index k)
{
    if (k < 0)
        throw std::invalid_argument("ladder generator index must be non-negative");
    if (g.m > k)
        return HopfElement{};
    return HopfElement::generator(k - g.m + g.n);
}

// D1(G_m) = sum_n G_n Z[0,n](G_m) = sum_{n=0}^m G_n G_{m-n} = m . Delta(G_m)
inline HopfElement D1(Index m)
{
    HopfElement r;
    for (Index n = 0; n <= m; ++n)
        r += HopfElement::generator(n) * lie_act(GenIndex(0, n), m);
    return r;
}

// D3(G_m) = -Z[0,0](G_m) - sum_n D3(G_n) Z[1,n+1](G_m), with D3 of the
// unit set to zero (a derivation kills the unit); this reproduces the
// antipode on generators.
inline HopfElement D3(Index m)
{
    std::vector<HopfElement> memo(static_cast<std::size_t>(m) + 1);
    for (Index t = 1; t <= m; ++t) {
        HopfElement s = Scalar(-1) * lie_act(GenIndex(0, 0), t);
        // Z[1,n+1](G_t) = G_{t-n} for n+1 <= t; the n = 0 term drops as
        // D3(G_0) = 0
        for (Index n = 1; n + 1 <= t; ++n)
            s -= memo[n] * lie_act(GenIndex(1, n + 1), t);
        memo[t] = s;
    }
    return m == 0 ? HopfElement{} : memo[m];
}

// A character: unital algebra morphism into the scalars, determined by
// its values on generators (0 where unspecified).
struct Character {
    std::map<Index, Scalar> values;

    Scalar on_generator(Index k) const
    {
        if (k == 0)
            return Scalar(1);
        auto it = values.find(k);
        return it == values.end() ? Scalar() : it->second;
    }

    Scalar on_monomial(const HopfMonomial& mon) const
    {
        Scalar r(1);
        for (Index k : mon)
            r *= on_generator(k);
        return r;
    }

    Scalar operator()(const HopfElement& x) const
    {
        Scalar r;
        for (const auto& [mon, c] : x.terms())
            r += c * on_monomial(mon);
        return r;
    }
};

// Convolution f*g evaluated two ways: through the coproduct and, on
// generator terms, through the ladder formula sum_n f(G_n) g(Z[0,n] G_m).
// Both routes must agree; a mismatch is an implementation fault.
inline Scalar char_convolve(const Character& f, const Character& g, const HopfElement& x)
{
    Scalar via_coproduct;
    const TensorElement dx = coproduct(x);
    for (const auto& [key, c] : dx.terms())
        via_coproduct += c * f.on_monomial(key.first) * g.on_monomial(key.second);

    Scalar via_ladder;
    bool comparable = true;
    for (const auto& [mon, c] : x.terms()) {
        if (mon.size() > 1) {
            comparable = false; // the Z[0,n] route is generator-only
            break;
        }
        Index m = mon.empty() ? 0 : mon.front();
        Scalar s;
        for (Index n = 0; n <= m; ++n)
            s += f.on_generator(n) * g(lie_act(GenIndex(0, n), m));
        via_ladder += c * s;
    }
    if (comparable && !(via_coproduct == via_ladder))
        throw std::logic_error("character convolution routes disagree");
    return via_coproduct;
}

// S*Y(G_m) = sum_n D3(G_n) D2(Z[0,n] G_m), with the n = 0 term read as
// S(1) Y(G_m) = m G_m so that the sum matches the direct convolution.
inline HopfElement s_star_y(Index m)
{
    HopfElement r = grading_Y(HopfElement::generator(m));
    for (Index n = 1; n <= m; ++n)
        r += D3(n) * grading_Y(lie_act(GenIndex(0, n), m));
    return r;
}

// The oracle route: multiply the legs of (S (x) Y) Delta(G_m).
inline HopfElement s_star_y_direct(Index m)
{
    HopfElement r;
    const TensorElement dm = coproduct(HopfElement::generator(m));
    for (const auto& [key, c] : dm.terms()) {
        HopfElement left = antipode(HopfElement::monomial(key.first));
        HopfElement right = grading_Y(HopfElement::monomial(key.second));
        r += c * (left * right);
    }
    return r;
}

} // namespace ladderlie
