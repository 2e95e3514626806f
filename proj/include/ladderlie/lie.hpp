// The insertion-elimination Lie algebra of ladder graphs: generators
// Z[n,m] with the six-term bracket, the Z-grading by n-m, and the
// involution Z[n,m] -> -Z[m,n].
#pragma once

#include "ladderlie/scalar.hpp"

#include <cassert>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace ladderlie {

using Index = std::int64_t;

struct GenIndex {
    Index n = 0; // insertion loop count
    Index m = 0; // elimination loop count

    GenIndex() = default;
    GenIndex(Index n_, Index m_) : n(n_), m(m_)
    {
        if (n < 0 || m < 0)
            throw std::invalid_argument("generator indices must be non-negative");
    }

    Index degree() const { return n - m; }

    friend auto operator<=>(const GenIndex&, const GenIndex&) = default;
};

// Finitely supported exact-coefficient combination of generators Z[n,m].
// Terms are kept in lexicographic (n, m) order; zero coefficients are
// never stored, so equality is structural.
class LieElement {
public:
    using TermMap = std::map<GenIndex, Scalar>;

    LieElement() = default;

    static LieElement generator(Index n, Index m)
    {
        LieElement x;
        x.add_term(GenIndex(n, m), Scalar(1));
        return x;
    }

    static LieElement zero() { return LieElement{}; }

    void add_term(const GenIndex& g, const Scalar& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(g, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coefficient(const GenIndex& g) const
    {
        auto it = terms_.find(g);
        return it == terms_.end() ? Scalar() : it->second;
    }

    LieElement& operator+=(const LieElement& o)
    {
        for (const auto& [g, c] : o.terms_)
            add_term(g, c);
        return *this;
    }
    LieElement& operator-=(const LieElement& o)
    {
        for (const auto& [g, c] : o.terms_)
            add_term(g, -c);
        return *this;
    }
    LieElement& operator*=(const Scalar& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [g, c] : terms_)
            c *= s;
        return *this;
    }

    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Scalar& s, LieElement x) { return x *= s; }
    friend LieElement operator-(LieElement a)
    {
        for (auto& [g, c] : a.terms_)
            c = -c;
        return a;
    }

    friend bool operator==(const LieElement&, const LieElement&) = default;

private:
    TermMap terms_;
};

inline int theta(Index d) { return d >= 0 ? 1 : 0; }

// Six-term bracket [Z[n,m], Z[l,s]] of two basis generators.
inline LieElement bracket_basis(const GenIndex& a, const GenIndex& b)
{
    const Index n = a.n, m = a.m, l = b.n, s = b.m;
    LieElement r;
    if (theta(l - m))
        r.add_term(GenIndex(l - m + n, s), Scalar(1));
    if (theta(s - n))
        r.add_term(GenIndex(l, s - n + m), Scalar(-1));
    if (theta(n - s))
        r.add_term(GenIndex(n - s + l, m), Scalar(-1));
    if (theta(m - l))
        r.add_term(GenIndex(n, m - l + s), Scalar(1));
    if (m == l)
        r.add_term(GenIndex(n, s), Scalar(-1));
    if (n == s)
        r.add_term(GenIndex(l, m), Scalar(1));
    return r;
}

inline LieElement bracket(const LieElement& x, const LieElement& y)
{
    LieElement r;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            LieElement part = bracket_basis(a, b);
            part *= ca * cb;
            r += part;
        }
    return r;
}

// Split into homogeneous components of degree n-m. Components sum to
// the input; the zero element decomposes into the empty map.
inline std::map<Index, LieElement> degree_decompose(const LieElement& x)
{
    std::map<Index, LieElement> parts;
    for (const auto& [g, c] : x.terms())
        parts[g.degree()].add_term(g, c);
    return parts;
}

enum class GradedPart { plus, zero, minus };

inline LieElement project(const LieElement& x, GradedPart part)
{
    LieElement r;
    for (const auto& [g, c] : x.terms()) {
        Index d = g.degree();
        bool keep = (part == GradedPart::plus && d > 0) ||
                    (part == GradedPart::zero && d == 0) ||
                    (part == GradedPart::minus && d < 0);
        if (keep)
            r.add_term(g, c);
    }
    return r;
}

// C: Z[n,m] -> -Z[m,n], extended linearly. An involutive Lie algebra
// homomorphism (the restriction to sl+(inf) is the Chevalley involution;
// note C(f_i) = -e_i and C(coroot_i) = -coroot_i, with the minus signs).
inline LieElement involution_C(const LieElement& x)
{
    LieElement r;
    for (const auto& [g, c] : x.terms())
        r.add_term(GenIndex(g.m, g.n), -c);
    return r;
}

} // namespace ladderlie
