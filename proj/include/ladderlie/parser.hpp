// Expression parser for the CLI: sums of exact-coefficient terms over
// the atoms Z[n,m], E[i,j], e[i], f[i], h[i], t[k], bracket nodes
// [x,y] and parentheses.
#pragma once

#include "ladderlie/gl.hpp"
#include "ladderlie/lie.hpp"
#include "ladderlie/smodule.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ladderlie {

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"), offset(off)
    {
    }
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind {
        z_generator, // Z[n,m]
        e_unit,      // E[i,j]
        chevalley_e, // e[i]
        chevalley_f, // f[i]
        chevalley_h, // h[i]
        t_basis,     // t[k]
        sum,
        scaled,
        bracket
    };

    Kind kind;
    Index a = 0, b = 0;          // indices of leaf atoms
    Scalar coeff;                // for scaled
    std::vector<ExprPtr> args;   // sum / scaled / bracket operands
    std::vector<bool> negated;   // per-summand sign (sum only)
};

ExprPtr parse(const std::string& text);

// Evaluation result: Lie universe (Z/e/f/h atoms), gl universe (E atoms)
// or a standard-module vector (t atoms). Mixing universes is an error.
using EvalResult = std::variant<LieElement, GlElement, SVector>;

EvalResult eval(const ExprPtr& e);

// Convenience accessors that enforce a specific universe.
LieElement eval_lie(const ExprPtr& e);
SVector eval_vector(const ExprPtr& e);

} // namespace ladderlie
