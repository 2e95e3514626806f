// JSON and text renderings of the algebra values. All JSON term lists
// follow the canonical storage order, so equal elements serialize
// identically.
#pragma once

#include "ladderlie/fock.hpp"
#include "ladderlie/gl.hpp"
#include "ladderlie/hopf.hpp"
#include "ladderlie/lambda.hpp"
#include "ladderlie/lie.hpp"
#include "ladderlie/smodule.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace ladderlie {

using json = nlohmann::json;

inline json to_json(const LieElement& x)
{
    json terms = json::array();
    for (const auto& [g, c] : x.terms())
        terms.push_back({{"n", g.n}, {"m", g.m}, {"coeff", scalar_to_string(c)}});
    return json{{"terms", terms}};
}

inline json to_json(const GlElement& x)
{
    json terms = json::array();
    for (const auto& [g, c] : x.terms())
        terms.push_back({{"i", g.i}, {"j", g.j}, {"coeff", scalar_to_string(c)}});
    return json{{"terms", terms}};
}

inline json to_json(const SVector& v)
{
    json terms = json::array();
    for (const auto& [k, c] : v.terms())
        terms.push_back({{"k", k}, {"coeff", scalar_to_string(c)}});
    return json{{"terms", terms}};
}

inline json to_json(const TruncatedMatrix& m)
{
    json rows = json::array();
    for (const auto& row : m.entries) {
        json r = json::array();
        for (const auto& e : row)
            r.push_back(scalar_to_string(e));
        rows.push_back(std::move(r));
    }
    return json{{"size", m.size}, {"rows", rows}};
}

inline std::string to_csv(const TruncatedMatrix& m)
{
    std::ostringstream os;
    for (const auto& row : m.entries) {
        for (std::size_t c = 0; c < row.size(); ++c)
            os << (c ? "," : "") << scalar_to_string(row[c]);
        os << '\n';
    }
    return os.str();
}

inline json to_json(const FockVector& v)
{
    json terms = json::array();
    for (const auto& [mon, c] : v.terms())
        terms.push_back({{"monomial", mon}, {"coeff", scalar_to_string(c)}});
    return json{{"terms", terms}};
}

inline json to_json(const HopfElement& x)
{
    json terms = json::array();
    for (const auto& [mon, c] : x.terms())
        terms.push_back({{"monomial", mon}, {"coeff", scalar_to_string(c)}});
    return json{{"terms", terms}};
}

inline json to_json(const LambdaElement& x)
{
    json terms = json::array();
    for (const auto& [b, c] : x.terms())
        terms.push_back({{"parity", b.parity == Parity::even ? "even" : "odd"},
                         {"level", b.level},
                         {"coeff", scalar_to_string(c)}});
    return json{{"terms", terms}};
}

inline LieElement lie_from_json(const json& j)
{
    LieElement x;
    for (const auto& t : j.at("terms"))
        x.add_term(GenIndex(t.at("n").get<Index>(), t.at("m").get<Index>()),
                   scalar_from_string(t.at("coeff").get<std::string>()));
    return x;
}

namespace detail {

// "c*" prefix for one pure-real or pure-imaginary part, staying inside
// the CLI grammar (coeff := int['/'nat]['i']).
inline void append_part(std::ostream& os, bool& first, const Scalar& part,
                        const std::string& atom)
{
    Scalar a = part;
    bool neg = (a.is_real() ? a.re : a.im) < 0;
    if (neg)
        a = -a;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (a == Scalar(1)) {
        os << atom;
        return;
    }
    if (a.is_real())
        os << rational_to_string(a.re) << "*" << atom;
    else
        os << rational_to_string(a.im) << "i*" << atom;
}

// Mixed complex coefficients split into a real and an imaginary term so
// the printed form re-parses under the coefficient grammar.
inline void append_term(std::ostream& os, bool first, const Scalar& c,
                        const std::string& atom)
{
    bool f = first;
    if (c.re != 0 || c.im == 0)
        append_part(os, f, Scalar(c.re), atom);
    if (c.im != 0)
        append_part(os, f, Scalar(Rational(0), c.im), atom);
}

} // namespace detail

inline std::string format(const LieElement& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : x.terms()) {
        detail::append_term(os, first, c,
                            "Z[" + std::to_string(g.n) + "," + std::to_string(g.m) + "]");
        first = false;
    }
    return os.str();
}

inline std::string format(const GlElement& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : x.terms()) {
        detail::append_term(os, first, c,
                            "E[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]");
        first = false;
    }
    return os.str();
}

inline std::string format(const SVector& v)
{
    if (v.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : v.terms()) {
        detail::append_term(os, first, c, "t[" + std::to_string(k) + "]");
        first = false;
    }
    return os.str();
}

inline std::string format(const HopfElement& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mon, c] : x.terms()) {
        std::string atom;
        if (mon.empty())
            atom = "1";
        else
            for (std::size_t i = 0; i < mon.size(); ++i)
                atom += (i ? "*G[" : "G[") + std::to_string(mon[i]) + "]";
        detail::append_term(os, first, c, atom);
        first = false;
    }
    return os.str();
}

} // namespace ladderlie
