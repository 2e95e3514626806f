#include "ladderlie/parser.hpp"

#include <cctype>

namespace ladderlie {
namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExprPtr run()
    {
        ExprPtr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("trailing input", pos_);
        return e;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c)
    {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    bool try_consume(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    Index parse_nat()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw ParseError("expected a non-negative integer", pos_);
        return static_cast<Index>(std::stoll(text_.substr(start, pos_ - start)));
    }

    // expr := term (('+'|'-') term)*
    ExprPtr parse_sum()
    {
        auto sum = std::make_shared<Expr>();
        sum->kind = Expr::Kind::sum;
        bool leading_minus = false;
        if (peek() == '-' || peek() == '+')
            leading_minus = text_[pos_++] == '-';
        sum->args.push_back(parse_term());
        sum->negated.push_back(leading_minus);
        while (true) {
            char c = peek();
            if (c != '+' && c != '-')
                break;
            ++pos_;
            sum->args.push_back(parse_term());
            sum->negated.push_back(c == '-');
        }
        if (sum->args.size() == 1 && !sum->negated[0])
            return sum->args[0];
        return sum;
    }

    // term := [coeff '*'] atom | '0'   (a bare '0' denotes the zero
    // element, matching the printer's output for empty term maps)
    ExprPtr parse_term()
    {
        skip_ws();
        if (pos_ < text_.size() &&
            (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
             text_[pos_] == 'i')) {
            Scalar c = parse_coeff();
            if (c.is_zero() && peek() != '*') {
                auto zero = std::make_shared<Expr>();
                zero->kind = Expr::Kind::sum;
                return zero;
            }
            expect('*');
            auto scaled = std::make_shared<Expr>();
            scaled->kind = Expr::Kind::scaled;
            scaled->coeff = c;
            scaled->args.push_back(parse_atom());
            return scaled;
        }
        return parse_atom();
    }

    // coeff := int ['/' nat] ['i'] | 'i'
    Scalar parse_coeff()
    {
        skip_ws();
        Rational q;
        if (text_[pos_] == 'i') {
            ++pos_;
            return Scalar::i();
        }
        Index num = parse_nat();
        q = Rational(static_cast<long>(num));
        if (try_consume('/')) {
            Index den = parse_nat();
            if (den == 0)
                throw ParseError("zero denominator", pos_);
            q /= Rational(static_cast<long>(den));
        }
        if (pos_ < text_.size() && text_[pos_] == 'i') {
            ++pos_;
            return Scalar(Rational(0), q);
        }
        return Scalar(q);
    }

    ExprPtr parse_atom()
    {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        switch (c) {
        case 'Z':
            return parse_indexed(Expr::Kind::z_generator, 2);
        case 'E':
            return parse_indexed(Expr::Kind::e_unit, 2);
        case 'e':
            return parse_indexed(Expr::Kind::chevalley_e, 1);
        case 'f':
            return parse_indexed(Expr::Kind::chevalley_f, 1);
        case 'h':
            return parse_indexed(Expr::Kind::chevalley_h, 1);
        case 't':
            return parse_indexed(Expr::Kind::t_basis, 1);
        case '[': {
            ++pos_;
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::bracket;
            node->args.push_back(parse_sum());
            expect(',');
            node->args.push_back(parse_sum());
            expect(']');
            return node;
        }
        case '(': {
            ++pos_;
            ExprPtr inner = parse_sum();
            expect(')');
            return inner;
        }
        default:
            throw ParseError("unexpected character", pos_);
        }
    }

    ExprPtr parse_indexed(Expr::Kind kind, int arity)
    {
        ++pos_; // atom letter
        expect('[');
        auto node = std::make_shared<Expr>();
        node->kind = kind;
        node->a = parse_nat();
        if (arity == 2) {
            expect(',');
            node->b = parse_nat();
        }
        expect(']');
        return node;
    }
};

enum class Universe { none, lie, gl, vec };

Universe combine(Universe a, Universe b, const char* context)
{
    if (a == Universe::none)
        return b;
    if (b == Universe::none || a == b)
        return a;
    throw std::invalid_argument(
        std::string("mixed Z- and E-universe expressions are not allowed in ") + context +
        "; wrap E-terms in an explicit phi() embedding before combining");
}

Universe infer(const ExprPtr& e)
{
    switch (e->kind) {
    case Expr::Kind::z_generator:
    case Expr::Kind::chevalley_e:
    case Expr::Kind::chevalley_f:
    case Expr::Kind::chevalley_h:
        return Universe::lie;
    case Expr::Kind::e_unit:
        return Universe::gl;
    case Expr::Kind::t_basis:
        return Universe::vec;
    default: {
        Universe u = Universe::none;
        for (const auto& arg : e->args)
            u = combine(u, infer(arg), e->kind == Expr::Kind::bracket ? "a bracket" : "a sum");
        return u;
    }
    }
}

template <typename Elem, typename Leaf, typename Bracket>
Elem eval_in(const ExprPtr& e, const Leaf& leaf, const Bracket& br)
{
    switch (e->kind) {
    case Expr::Kind::sum: {
        Elem r;
        for (std::size_t i = 0; i < e->args.size(); ++i) {
            Elem part = eval_in<Elem>(e->args[i], leaf, br);
            if (e->negated[i])
                r -= part;
            else
                r += part;
        }
        return r;
    }
    case Expr::Kind::scaled:
        return e->coeff * eval_in<Elem>(e->args[0], leaf, br);
    case Expr::Kind::bracket:
        return br(eval_in<Elem>(e->args[0], leaf, br), eval_in<Elem>(e->args[1], leaf, br));
    default:
        return leaf(*e);
    }
}

} // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

EvalResult eval(const ExprPtr& e)
{
    switch (infer(e)) {
    case Universe::gl:
        return eval_in<GlElement>(
            e,
            [](const Expr& leaf) { return GlElement::unit(leaf.a, leaf.b); },
            [](const GlElement& x, const GlElement& y) { return gl_bracket(x, y); });
    case Universe::vec:
        return eval_in<SVector>(
            e, [](const Expr& leaf) { return SVector::basis(leaf.a); },
            [](const SVector&, const SVector&) -> SVector {
                throw std::invalid_argument("brackets are not defined on module vectors");
            });
    default:
        return eval_in<LieElement>(
            e,
            [](const Expr& leaf) -> LieElement {
                switch (leaf.kind) {
                case Expr::Kind::z_generator:
                    return LieElement::generator(leaf.a, leaf.b);
                case Expr::Kind::chevalley_e:
                    return chevalley_e(leaf.a);
                case Expr::Kind::chevalley_f:
                    return chevalley_f(leaf.a);
                case Expr::Kind::chevalley_h:
                    return coroot(leaf.a);
                default:
                    throw std::logic_error("unexpected leaf in Lie context");
                }
            },
            [](const LieElement& x, const LieElement& y) { return bracket(x, y); });
    }
}

LieElement eval_lie(const ExprPtr& e)
{
    EvalResult r = eval(e);
    if (auto* lie = std::get_if<LieElement>(&r))
        return *lie;
    throw std::invalid_argument("expression does not evaluate to a Lie element");
}

SVector eval_vector(const ExprPtr& e)
{
    EvalResult r = eval(e);
    if (auto* v = std::get_if<SVector>(&r))
        return *v;
    throw std::invalid_argument("expression does not evaluate to a module vector");
}

} // namespace ladderlie
