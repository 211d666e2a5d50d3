#pragma once

// A small expression language for abelian groups and the functors applied
// to them, e.g. `L1SP^2(Z/2 + Z/4)` or `Tor(Z/4, Z/6)`.
//
//   sum    := term ('+' term)*
//   term   := '(' sum ')' | '0' | 'Z' ['^' k] | 'Z' '/' n | 'R'
//           | name ['^' n] '(' sum (',' sum)* ')'

#include "dfw/theorems.hpp"

#include <cctype>

namespace dfw {

class ExprError : public std::runtime_error {
public:
    ExprError(const std::string& what, std::size_t offset, bool syntax)
        : std::runtime_error(what), offset_(offset), syntax_(syntax)
    {
    }

    std::size_t offset() const noexcept { return offset_; }
    bool is_syntax_error() const noexcept { return syntax_; }

private:
    std::size_t offset_;
    bool syntax_;
};

enum class ExprKind { free, cyclic, relations, sum, apply };

struct Expr {
    ExprKind kind = ExprKind::free;
    std::size_t offset = 0;
    Integer value = 0;    // rank for free, order for cyclic
    std::string functor;  // for apply
    unsigned degree = 0;  // for apply, when the functor takes one
    std::vector<Expr> args;
};

namespace detail {

    struct FunctorSyntax {
        std::string_view name;
        bool has_degree;
        unsigned min_degree;
        unsigned max_degree;
        std::size_t arity;
    };

    inline const std::vector<FunctorSyntax>& functor_table()
    {
        static const std::vector<FunctorSyntax> table{
            {"SP", true, 2, 5, 1},     {"Lambda", true, 2, 3, 1}, {"Ls3", false, 0, 0, 1},
            {"Lie3embed-rank", false, 0, 0, 1}, {"L1SP", true, 2, 4, 1}, {"L2Ls3", false, 0, 0, 1},
            {"Tor", false, 0, 0, 2},   {"H2", false, 0, 0, 1},
        };
        return table;
    }

    class Parser {
    public:
        explicit Parser(std::string_view text) : text_(text) {}

        Expr parse()
        {
            Expr e = sum();
            skip_space();
            if (pos_ != text_.size())
                syntax("unexpected trailing input");
            return e;
        }

    private:
        [[noreturn]] void syntax(const std::string& msg) const { throw ExprError(msg, pos_, true); }
        [[noreturn]] static void semantic(const std::string& msg, std::size_t at) { throw ExprError(msg, at, false); }

        void skip_space()
        {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }

        bool accept(char c)
        {
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == c) {
                ++pos_;
                return true;
            }
            return false;
        }

        void expect(char c)
        {
            if (!accept(c))
                syntax(std::string("expected '") + c + "'");
        }

        Integer number()
        {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                syntax("expected a number");
            return Integer(std::string(text_.substr(start, pos_ - start)));
        }

        std::string identifier()
        {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-'))
                ++pos_;
            return std::string(text_.substr(start, pos_ - start));
        }

        Expr sum()
        {
            skip_space();
            std::size_t start = pos_;
            std::vector<Expr> terms;
            terms.push_back(term());
            while (accept('+'))
                terms.push_back(term());
            if (terms.size() == 1)
                return std::move(terms.front());
            Expr e;
            e.kind = ExprKind::sum;
            e.offset = start;
            e.args = std::move(terms);
            return e;
        }

        Expr term()
        {
            skip_space();
            const std::size_t start = pos_;
            if (pos_ >= text_.size())
                syntax("unexpected end of input");
            if (accept('(')) {
                Expr e = sum();
                expect(')');
                return e;
            }
            if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                Integer n = number();
                if (n != 0)
                    semantic("only the trivial group 0 may be written as a number", start);
                Expr e;
                e.kind = ExprKind::free;
                e.offset = start;
                e.value = 0;
                return e;
            }
            if (!std::isalpha(static_cast<unsigned char>(text_[pos_])))
                syntax("unexpected character");
            std::string name = identifier();
            if (name == "Z")
                return atom(start);
            if (name == "R") {
                Expr e;
                e.kind = ExprKind::relations;
                e.offset = start;
                return e;
            }
            const auto& table = functor_table();
            auto it = std::find_if(table.begin(), table.end(), [&](const FunctorSyntax& f) { return f.name == name; });
            if (it == table.end()) {
                pos_ = start;
                syntax("unknown name '" + name + "'");
            }
            Expr e;
            e.kind = ExprKind::apply;
            e.offset = start;
            e.functor = name;
            if (it->has_degree) {
                expect('^');
                std::size_t at = pos_;
                Integer n = number();
                if (n < it->min_degree || n > it->max_degree)
                    semantic(name + " degree must lie in " + std::to_string(it->min_degree) + ".." +
                                 std::to_string(it->max_degree),
                             at);
                e.degree = static_cast<unsigned>(n.get_ui());
            }
            expect('(');
            e.args.push_back(sum());
            while (accept(','))
                e.args.push_back(sum());
            expect(')');
            if (e.args.size() != it->arity)
                semantic(name + " takes " + std::to_string(it->arity) + " argument(s)", start);
            return e;
        }

        Expr atom(std::size_t start)
        {
            Expr e;
            e.offset = start;
            skip_space();
            if (accept('^')) {
                e.kind = ExprKind::free;
                e.value = number();
                return e;
            }
            if (accept('/')) {
                std::size_t at = pos_;
                e.kind = ExprKind::cyclic;
                e.value = number();
                if (e.value < 2)
                    semantic("Z/n requires n >= 2", at);
                return e;
            }
            e.kind = ExprKind::free;
            e.value = 1;
            return e;
        }

        std::string_view text_;
        std::size_t pos_ = 0;
    };

} // namespace detail

inline Expr parse_expression(std::string_view text) { return detail::Parser(text).parse(); }

struct EvalContext {
    std::optional<PresentedGroup> relations; // the group `R`
};

/// Value of an expression, up to isomorphism, on a minimal presentation.
inline PresentedGroup evaluate(const Expr& e, const EvalContext& ctx = {})
{
    auto minimal = [](const PresentedGroup& g) { return PresentedGroup::from_canonical(canonical_form(g)); };
    switch (e.kind) {
    case ExprKind::free:
        return PresentedGroup::free(e.value.get_ui());
    case ExprKind::cyclic:
        return PresentedGroup::cyclic(e.value);
    case ExprKind::relations:
        if (!ctx.relations)
            throw ExprError("R refers to a relation matrix but none was given (use --relations)", e.offset, false);
        return minimal(*ctx.relations);
    case ExprKind::sum: {
        PresentedGroup out = PresentedGroup::trivial();
        for (const auto& a : e.args)
            out = direct_sum(out, evaluate(a, ctx));
        return minimal(out);
    }
    case ExprKind::apply:
        break;
    }

    std::vector<PresentedGroup> args;
    for (const auto& a : e.args)
        args.push_back(minimal(evaluate(a, ctx)));
    const PresentedGroup& a = args.front();
    const std::string& f = e.functor;
    if (f == "SP")
        return minimal(functor_on_group(FunctorSpec::sym(e.degree), a));
    if (f == "Lambda")
        return minimal(functor_on_group(FunctorSpec::ext(e.degree), a));
    if (f == "H2")
        return minimal(functor_on_group(FunctorSpec::ext(2), a));
    if (f == "Ls3")
        return minimal(functor_on_group(FunctorSpec::super_lie3(), a));
    if (f == "Lie3embed-rank") {
        std::size_t n = a.rank();
        return PresentedGroup::free(FunctorBasis(FunctorSpec::lie3(), n).size());
    }
    if (f == "L1SP")
        return minimal(l1_sp(e.degree, Presentation::from_group(a)));
    if (f == "L2Ls3")
        return minimal(l2_superlie3(Presentation::from_group(a)));
    if (f == "Tor")
        return minimal(tor(Presentation::from_group(a), Presentation::from_group(args[1])));
    throw ExprError("unknown functor " + f, e.offset, false);
}

inline CanonicalForm evaluate_text(std::string_view text, const EvalContext& ctx = {})
{
    return canonical_form(evaluate(parse_expression(text), ctx));
}

/// Relation matrix file: one generator row per line, whitespace-separated
/// integers, `#` starts a comment. Blank lines are ignored.
inline PresentedGroup parse_relations_file(std::istream& in)
{
    std::vector<std::vector<Integer>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<Integer> row;
        std::string tok;
        while (ls >> tok) {
            Integer v;
            if (v.set_str(tok, 10) != 0)
                throw std::invalid_argument("relations file line " + std::to_string(lineno) + ": not an integer: " + tok);
            row.push_back(v);
        }
        if (row.empty())
            continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::invalid_argument("relations file line " + std::to_string(lineno) + ": row length differs");
        rows.push_back(std::move(row));
    }
    IntMatrix m = IntMatrix::from_rows(rows);
    return {m.rows(), m};
}

} // namespace dfw
