// The module Lambda: parity-and-level labels alpha(e(k)) (k >= 0) and
// alpha(o(k)) (k >= 1) with the symbolic exponent product, the
// isomorphism phi with the standard module S, and the lambda+/lambda-
// actions of the relabeled shift algebras.
#pragma once

#include "ladderlie/heisenberg.hpp"
#include "ladderlie/smodule.hpp"

#include <optional>
#include <stdexcept>

namespace ladderlie {

enum class Parity { even, odd };

struct LambdaBasis {
    Parity parity = Parity::even;
    Index level = 0;

    LambdaBasis() = default;
    LambdaBasis(Parity p, Index l) : parity(p), level(l)
    {
        if (p == Parity::even && l < 0)
            throw std::invalid_argument("e(k) needs k >= 0");
        if (p == Parity::odd && l < 1)
            throw std::invalid_argument("o(k) needs k >= 1");
    }

    friend auto operator<=>(const LambdaBasis&, const LambdaBasis&) = default;
};

class LambdaElement {
public:
    using TermMap = std::map<LambdaBasis, Scalar>;

    LambdaElement() = default;

    static LambdaElement basis(const LambdaBasis& b)
    {
        LambdaElement x;
        x.add_term(b, Scalar(1));
        return x;
    }

    void add_term(const LambdaBasis& b, const Scalar& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LambdaElement& operator+=(const LambdaElement& o)
    {
        for (const auto& [b, c] : o.terms_)
            add_term(b, c);
        return *this;
    }
    LambdaElement& operator-=(const LambdaElement& o)
    {
        for (const auto& [b, c] : o.terms_)
            add_term(b, -c);
        return *this;
    }
    LambdaElement& operator*=(const Scalar& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_)
            c *= s;
        return *this;
    }

    friend LambdaElement operator+(LambdaElement a, const LambdaElement& b) { return a += b; }
    friend LambdaElement operator-(LambdaElement a, const LambdaElement& b) { return a -= b; }
    friend LambdaElement operator*(const Scalar& s, LambdaElement x) { return x *= s; }

    friend bool operator==(const LambdaElement&, const LambdaElement&) = default;

private:
    TermMap terms_;
};

// exponent bookkeeping: e(n)e(m) = e(n+m), e(n)o(m) = o(n+m),
// o(n)o(m) = (-exp(n-1/2))(-exp(m-1/2)) = e(n+m-1). Unit alpha(e(0)).
inline LambdaBasis bullet(const LambdaBasis& a, const LambdaBasis& b)
{
    if (a.parity == Parity::even && b.parity == Parity::even)
        return LambdaBasis(Parity::even, a.level + b.level);
    if (a.parity == Parity::odd && b.parity == Parity::odd)
        return LambdaBasis(Parity::even, a.level + b.level - 1);
    return LambdaBasis(Parity::odd, a.level + b.level);
}

inline LambdaElement bullet(const LambdaElement& x, const LambdaElement& y)
{
    LambdaElement r;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms())
            r.add_term(bullet(a, b), ca * cb);
    return r;
}

// phi(t_{2k}) = alpha(e(k)), phi(t_{2k-1}) = alpha(o(k))
inline LambdaBasis phi_iso(Index k)
{
    if (k % 2 == 0)
        return LambdaBasis(Parity::even, k / 2);
    return LambdaBasis(Parity::odd, (k + 1) / 2);
}

inline Index phi_inv(const LambdaBasis& b)
{
    return b.parity == Parity::even ? 2 * b.level : 2 * b.level - 1;
}

inline LambdaElement phi_iso(const SVector& v)
{
    LambdaElement r;
    for (const auto& [k, c] : v.terms())
        r.add_term(phi_iso(k), c);
    return r;
}

inline SVector phi_inv(const LambdaElement& w)
{
    SVector r;
    for (const auto& [b, c] : w.terms())
        r.add_term(phi_inv(b), c);
    return r;
}

namespace detail {

// Action of Z_n^{side} on one basis label, or nullopt when the shifted
// label leaves the admissible range (the zero cases of the theorem).
inline std::optional<LambdaBasis> lambda_act_basis(Side side, Index n, const LambdaBasis& b)
{
    if (side == Side::plus) {
        // multiplication by e(n) (n >= 0) or o(-n) (n < 0); always defined
        LambdaBasis mult = n >= 0 ? LambdaBasis(Parity::even, n)
                                  : LambdaBasis(Parity::odd, -n);
        return bullet(mult, b);
    }
    // side -: multiplication by the inverse exponents. Z_n^- shifts by
    // e(-n); Z_{-n}^- (n > 0) multiplies by -exp(-n+1/2), turning o into
    // e and e into o while lowering the level.
    Parity parity;
    Index level;
    if (n >= 0) {
        parity = b.parity;
        level = b.level - n;
    } else if (b.parity == Parity::odd) {
        parity = Parity::even;
        level = b.level + n; // o(k) -> e(k-|n|)
    } else {
        parity = Parity::odd;
        level = b.level + n + 1; // e(k) -> o(k-|n|+1)
    }
    if (parity == Parity::even ? level < 0 : level < 1)
        return std::nullopt;
    return LambdaBasis(parity, level);
}

} // namespace detail

inline LambdaElement lambda_act(Side side, Index n, const LambdaElement& w)
{
    LambdaElement r;
    for (const auto& [b, c] : w.terms())
        if (auto img = detail::lambda_act_basis(side, n, b))
            r.add_term(*img, c);
    return r;
}

// One square of the commuting-diagram theorem: push t_k through the
// generator on the S side and through its relabeling on the Lambda side.
inline bool diagram_check(const GenIndex& g, Index k)
{
    if (g.n != 0 && g.m != 0)
        throw std::invalid_argument("diagram_check needs a generator in l+ or l-");
    HeisLabel label = g.m == 0 ? a_plus(g) : a_minus(g);
    LambdaElement via_s = phi_iso(act_basis(g, k));
    LambdaElement via_lambda =
        lambda_act(label.side, label.n, LambdaElement::basis(phi_iso(k)));
    return via_s == via_lambda;
}

} // namespace ladderlie
