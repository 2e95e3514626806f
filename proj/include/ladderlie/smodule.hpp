// The standard module S = span{t_k} with Z[n,m] t_k = t_{k-m+n} for
// m <= k (zero otherwise), the star product t_n * t_m = t_{n+m}, and
// truncated matrix pictures of the action.
#pragma once

#include "ladderlie/lie.hpp"

#include <stdexcept>
#include <vector>

namespace ladderlie {

// Finitely supported combination of the basis symbols t_k (deg t_k = k).
class SVector {
public:
    using TermMap = std::map<Index, Scalar>;

    SVector() = default;

    static SVector basis(Index k)
    {
        if (k < 0)
            throw std::invalid_argument("t_k needs k >= 0");
        SVector v;
        v.add_term(k, Scalar(1));
        return v;
    }

    void add_term(Index k, const Scalar& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // degree of the highest basis symbol present; -1 for the zero vector
    Index max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    Scalar coefficient(Index k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar() : it->second;
    }

    SVector& operator+=(const SVector& o)
    {
        for (const auto& [k, c] : o.terms_)
            add_term(k, c);
        return *this;
    }
    SVector& operator-=(const SVector& o)
    {
        for (const auto& [k, c] : o.terms_)
            add_term(k, -c);
        return *this;
    }
    SVector& operator*=(const Scalar& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_)
            c *= s;
        return *this;
    }

    friend SVector operator+(SVector a, const SVector& b) { return a += b; }
    friend SVector operator-(SVector a, const SVector& b) { return a -= b; }
    friend SVector operator*(const Scalar& s, SVector v) { return v *= s; }

    friend bool operator==(const SVector&, const SVector&) = default;

private:
    TermMap terms_;
};

inline SVector act_basis(const GenIndex& g, Index k)
{
    if (g.m > k)
        return SVector{};
    return SVector::basis(k - g.m + g.n);
}

inline SVector act(const LieElement& x, const SVector& v)
{
    SVector r;
    for (const auto& [g, cg] : x.terms())
        for (const auto& [k, ck] : v.terms()) {
            if (g.m > k)
                continue;
            r.add_term(k - g.m + g.n, cg * ck);
        }
    return r;
}

// star product: t_n * t_m = t_{n+m}; associative, commutative, unit t_0
inline SVector star(const SVector& u, const SVector& v)
{
    SVector r;
    for (const auto& [n, cn] : u.terms())
        for (const auto& [m, cm] : v.terms())
            r.add_term(n + m, cn * cm);
    return r;
}

// (N+1)x(N+1) truncation of the action matrix: row r, column c holds the
// coefficient of t_r in x . t_c.
struct TruncatedMatrix {
    std::size_t size = 0; // N+1
    std::vector<std::vector<Scalar>> entries;

    explicit TruncatedMatrix(std::size_t sz = 0)
        : size(sz), entries(sz, std::vector<Scalar>(sz))
    {
    }

    friend bool operator==(const TruncatedMatrix&, const TruncatedMatrix&) = default;

    TruncatedMatrix& operator-=(const TruncatedMatrix& o)
    {
        for (std::size_t r = 0; r < size; ++r)
            for (std::size_t c = 0; c < size; ++c)
                entries[r][c] -= o.entries[r][c];
        return *this;
    }

    bool is_zero() const
    {
        for (const auto& row : entries)
            for (const auto& e : row)
                if (!e.is_zero())
                    return false;
        return true;
    }
};

inline TruncatedMatrix matrix(const LieElement& x, Index N)
{
    if (N < 1)
        throw std::invalid_argument("matrix truncation needs N >= 1");
    TruncatedMatrix mat(static_cast<std::size_t>(N) + 1);
    for (Index c = 0; c <= N; ++c) {
        SVector img = act(x, SVector::basis(c));
        for (const auto& [r, coeff] : img.terms())
            if (r <= N)
                mat.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = coeff;
    }
    return mat;
}

inline TruncatedMatrix matrix_multiply(const TruncatedMatrix& a, const TruncatedMatrix& b)
{
    TruncatedMatrix r(a.size);
    for (std::size_t i = 0; i < a.size; ++i)
        for (std::size_t k = 0; k < a.size; ++k) {
            if (a.entries[i][k].is_zero())
                continue;
            for (std::size_t j = 0; j < a.size; ++j)
                r.entries[i][j] += a.entries[i][k] * b.entries[k][j];
        }
    return r;
}

// Singularity test: v != 0 is singular iff every strictly-lowering
// generator kills it. Generators with m > max_degree(v) annihilate v
// automatically, so the check is finite.
inline bool is_singular(const SVector& v)
{
    if (v.is_zero())
        throw std::invalid_argument("singularity is undefined for the zero vector");
    const Index maxdeg = v.max_degree();
    for (Index m = 1; m <= maxdeg; ++m)
        for (Index n = 0; n < m; ++n)
            if (!act(LieElement::generator(n, m), v).is_zero())
                return false;
    return true;
}

// Z[k,0] t_0 = t_k: the enveloping algebra of L+ sweeps out S from t_0.
inline SVector hw_generate(Index k)
{
    return act(LieElement::generator(k, 0), SVector::basis(0));
}

} // namespace ladderlie
