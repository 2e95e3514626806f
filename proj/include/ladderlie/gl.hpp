// gl+(inf) with matrix units E[i,j], the trace functional cutting out
// sl+(inf), the embedding E[i,j] -> Z[i,j] - Z[i+1,j+1], and the
// Chevalley generators / co-roots it transports.
#pragma once

#include "ladderlie/lie.hpp"

#include <stdexcept>

namespace ladderlie {

struct GlIndex {
    Index i = 0;
    Index j = 0;

    GlIndex() = default;
    GlIndex(Index i_, Index j_) : i(i_), j(j_)
    {
        if (i < 0 || j < 0)
            throw std::invalid_argument("matrix unit indices must be non-negative");
    }

    friend auto operator<=>(const GlIndex&, const GlIndex&) = default;
};

class GlElement {
public:
    using TermMap = std::map<GlIndex, Scalar>;

    GlElement() = default;

    static GlElement unit(Index i, Index j)
    {
        GlElement x;
        x.add_term(GlIndex(i, j), Scalar(1));
        return x;
    }

    void add_term(const GlIndex& g, const Scalar& c)
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

    GlElement& operator+=(const GlElement& o)
    {
        for (const auto& [g, c] : o.terms_)
            add_term(g, c);
        return *this;
    }
    GlElement& operator-=(const GlElement& o)
    {
        for (const auto& [g, c] : o.terms_)
            add_term(g, -c);
        return *this;
    }
    GlElement& operator*=(const Scalar& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [g, c] : terms_)
            c *= s;
        return *this;
    }

    friend GlElement operator+(GlElement a, const GlElement& b) { return a += b; }
    friend GlElement operator-(GlElement a, const GlElement& b) { return a -= b; }
    friend GlElement operator*(const Scalar& s, GlElement x) { return x *= s; }

    friend bool operator==(const GlElement&, const GlElement&) = default;

private:
    TermMap terms_;
};

// [E[i,j], E[n,m]] = delta_{j,n} E[i,m] - delta_{m,i} E[n,j]
inline GlElement gl_bracket_basis(const GlIndex& a, const GlIndex& b)
{
    GlElement r;
    if (a.j == b.i)
        r.add_term(GlIndex(a.i, b.j), Scalar(1));
    if (b.j == a.i)
        r.add_term(GlIndex(b.i, a.j), Scalar(-1));
    return r;
}

inline GlElement gl_bracket(const GlElement& x, const GlElement& y)
{
    GlElement r;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            GlElement part = gl_bracket_basis(a, b);
            part *= ca * cb;
            r += part;
        }
    return r;
}

inline LieElement embed_phi(const GlElement& x)
{
    LieElement r;
    for (const auto& [g, c] : x.terms()) {
        r.add_term(GenIndex(g.i, g.j), c);
        r.add_term(GenIndex(g.i + 1, g.j + 1), -c);
    }
    return r;
}

inline Scalar trace(const GlElement& x)
{
    Scalar t;
    for (const auto& [g, c] : x.terms())
        if (g.i == g.j)
            t += c;
    return t;
}

inline LieElement chevalley_e(Index i)
{
    LieElement r = LieElement::generator(i, i + 1);
    r -= LieElement::generator(i + 1, i + 2);
    return r;
}

inline LieElement chevalley_f(Index i)
{
    LieElement r = LieElement::generator(i + 1, i);
    r -= LieElement::generator(i + 2, i + 1);
    return r;
}

inline LieElement coroot(Index i)
{
    LieElement r = LieElement::generator(i, i);
    r -= Scalar(2) * LieElement::generator(i + 1, i + 1);
    r += LieElement::generator(i + 2, i + 2);
    return r;
}

// eps_i on the diagonal Cartan part: coefficient of E[i,i].
inline Scalar epsilon(Index i, const GlElement& h)
{
    for (const auto& [g, c] : h.terms())
        if (g.i != g.j)
            throw std::invalid_argument("epsilon is defined on diagonal elements only");
    Scalar r;
    for (const auto& [g, c] : h.terms())
        if (g.i == i)
            r += c;
    return r;
}

// <alpha_j, coroot_i>, read off from [coroot_i, e_j] = a e_j. A result
// that is not proportional to e_j signals a bracket fault.
inline Scalar cartan_pairing(Index i, Index j)
{
    LieElement ej = chevalley_e(j);
    LieElement br = bracket(coroot(i), ej);
    if (br.is_zero())
        return Scalar(0);
    Scalar a = br.coefficient(ej.terms().begin()->first);
    if (!(br == a * ej))
        throw std::logic_error("[coroot, e_j] is not proportional to e_j");
    return a;
}

} // namespace ladderlie
