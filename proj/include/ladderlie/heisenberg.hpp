// The abelian subalgebras l+ = span{Z[n,0]} and l- = span{Z[0,n]}, their
// interleaved Z-relabelings a+/a-, the 2-cocycle n delta_{n,-m}, and the
// resulting Heisenberg central extension.
#pragma once

#include "ladderlie/lie.hpp"

#include <stdexcept>

namespace ladderlie {

enum class Side { plus, minus };

struct HeisLabel {
    Side side = Side::plus;
    Index n = 0; // Z-label of Z_n^{side}

    friend auto operator<=>(const HeisLabel&, const HeisLabel&) = default;
};

// Even non-negative indices land on non-negative labels, odd ones on
// negative labels: Z[2n,0] -> n, Z[2n-1,0] -> -n.
inline Index interleave_label(Index k)
{
    return k % 2 == 0 ? k / 2 : -(k + 1) / 2;
}

inline Index interleave_label_inverse(Index n)
{
    return n >= 0 ? 2 * n : -2 * n - 1;
}

inline HeisLabel a_plus(const GenIndex& g)
{
    if (g.m != 0)
        throw std::invalid_argument("a+ is defined on l+ (generators Z[n,0]) only");
    return HeisLabel{Side::plus, interleave_label(g.n)};
}

inline HeisLabel a_minus(const GenIndex& g)
{
    if (g.n != 0)
        throw std::invalid_argument("a- is defined on l- (generators Z[0,n]) only");
    return HeisLabel{Side::minus, interleave_label(g.m)};
}

inline GenIndex a_plus_inverse(const HeisLabel& l)
{
    if (l.side != Side::plus)
        throw std::invalid_argument("label is not on the + side");
    return GenIndex(interleave_label_inverse(l.n), 0);
}

inline GenIndex a_minus_inverse(const HeisLabel& l)
{
    if (l.side != Side::minus)
        throw std::invalid_argument("label is not on the - side");
    return GenIndex(0, interleave_label_inverse(l.n));
}

inline Scalar cocycle(const HeisLabel& a, const HeisLabel& b)
{
    if (a.side != b.side)
        throw std::invalid_argument("cocycle needs both labels on the same side");
    return a.n == -b.n ? Scalar(Rational(static_cast<long>(a.n))) : Scalar(0);
}

// Element of the Heisenberg algebra H = span{Z_n, C}: a finitely
// supported combination of labels plus a central coefficient.
class HeisenbergElement {
public:
    using TermMap = std::map<HeisLabel, Scalar>;

    HeisenbergElement() = default;

    static HeisenbergElement generator(const HeisLabel& l)
    {
        HeisenbergElement x;
        x.add_term(l, Scalar(1));
        return x;
    }

    static HeisenbergElement central(const Scalar& c)
    {
        HeisenbergElement x;
        x.central_ = c;
        return x;
    }

    void add_term(const HeisLabel& l, const Scalar& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(l, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    const TermMap& terms() const { return terms_; }
    const Scalar& central_part() const { return central_; }
    bool is_zero() const { return terms_.empty() && central_.is_zero(); }

    HeisenbergElement& operator+=(const HeisenbergElement& o)
    {
        for (const auto& [l, c] : o.terms_)
            add_term(l, c);
        central_ += o.central_;
        return *this;
    }
    HeisenbergElement& operator-=(const HeisenbergElement& o)
    {
        for (const auto& [l, c] : o.terms_)
            add_term(l, -c);
        central_ -= o.central_;
        return *this;
    }
    HeisenbergElement& operator*=(const Scalar& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            central_ = Scalar();
            return *this;
        }
        for (auto& [l, c] : terms_)
            c *= s;
        central_ *= s;
        return *this;
    }

    friend HeisenbergElement operator+(HeisenbergElement a, const HeisenbergElement& b)
    {
        return a += b;
    }
    friend HeisenbergElement operator-(HeisenbergElement a, const HeisenbergElement& b)
    {
        return a -= b;
    }
    friend HeisenbergElement operator*(const Scalar& s, HeisenbergElement x) { return x *= s; }

    friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;

private:
    TermMap terms_;
    Scalar central_;
};

// [Z_n, Z_m] = n delta_{n,-m} C, [Z_n, C] = 0; the result is central.
inline HeisenbergElement heis_bracket(const HeisenbergElement& x, const HeisenbergElement& y)
{
    Scalar c;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms())
            c += ca * cb * cocycle(a, b);
    return HeisenbergElement::central(c);
}

} // namespace ladderlie
