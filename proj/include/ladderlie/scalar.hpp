// Exact Gaussian-rational coefficient arithmetic.
//
// Every coefficient in this library is an element of Q(i): a pair of
// canonical GMP rationals (re, im). No floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ladderlie {

using Rational = mpq_class;

// Canonical (reduced, positive denominator) rational from a string like
// "-3/4". Throws on malformed input.
inline Rational rational_from_string(const std::string& s)
{
    mpq_class q;
    // GMP rejects an explicit leading '+'
    const std::string& t = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    if (q.set_str(t, 10) != 0)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

struct Scalar {
    Rational re;
    Rational im;

    Scalar() : re(0), im(0) {}
    Scalar(long v) : re(v), im(0) {}
    Scalar(Rational r) : re(std::move(r)), im(0) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar operator-() const { return Scalar(-re, -im); }

    Scalar& operator+=(const Scalar& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o)
    {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        return a.re == b.re && a.im == b.im;
    }

    Scalar inverse() const
    {
        if (is_zero())
            throw std::domain_error("inverse of zero scalar");
        Rational n = re * re + im * im;
        return Scalar(re / n, -im / n);
    }
};

// Canonical coefficient string: "a/b", "c/d*i" or "a/b+c/d*i" (the "/b"
// is omitted for integers, the sign of the imaginary part replaces '+').
inline std::string scalar_to_string(const Scalar& s)
{
    if (s.im == 0)
        return rational_to_string(s.re);
    std::string imag = rational_to_string(abs(s.im)) + "*i";
    if (s.re == 0)
        return (s.im < 0 ? "-" : "") + imag;
    return rational_to_string(s.re) + (s.im < 0 ? "-" : "+") + imag;
}

inline Scalar scalar_from_string(const std::string& s)
{
    auto star = s.rfind("*i");
    if (star == std::string::npos) {
        if (!s.empty() && s.back() == 'i') {
            // bare "i" / "-i"
            std::string head = s.substr(0, s.size() - 1);
            if (head.empty() || head == "-" || head == "+")
                return Scalar(Rational(0), Rational(head == "-" ? -1 : 1));
            return Scalar(Rational(0), rational_from_string(head));
        }
        return Scalar(rational_from_string(s));
    }
    // split at the sign separating real and imaginary parts, if any
    std::size_t split = std::string::npos;
    for (std::size_t p = star; p-- > 1;) {
        if ((s[p] == '+' || s[p] == '-') && s[p - 1] != '/') {
            split = p;
            break;
        }
    }
    if (split == std::string::npos)
        return Scalar(Rational(0), rational_from_string(s.substr(0, star)));
    Rational re = rational_from_string(s.substr(0, split));
    Rational im = rational_from_string(s.substr(split, star - split));
    return Scalar(std::move(re), std::move(im));
}

} // namespace ladderlie
