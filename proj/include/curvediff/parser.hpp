#ifndef CURVEDIFF_PARSER_HPP
#define CURVEDIFF_PARSER_HPP

#include <cstddef>
#include <map>
#include <string>

#include "curvediff/errors.hpp"
#include "curvediff/geometry.hpp"

namespace curvediff {

struct ParseError : Error {
    size_t offset;
    ParseError(const std::string& what, size_t offset_)
        : Error(what + " (at byte " + std::to_string(offset_) + ")"), offset(offset_) {}
};

// Exact rational-function value of an arithmetic expression in t.
//
//   expr     := term (("+"|"-") term)*
//   term     := unary (("*"|"/") unary)*
//   unary    := "-" unary | power
//   power    := atom ("^" integer)?
//   atom     := rational | "t" | ident | "(" expr ")"
//   rational := integer ("/" integer)?
//
// Identifiers must be bound in params. Exponents must be integers.
QRatFunc parse_expr(const std::string& text, const std::map<std::string, Rat>& params = {});

// Line-oriented curve description:
//   name = <string>
//   x = <expr>
//   y = <expr>
//   param <ident> = <rational>     (zero or more)
// '#' starts a comment.
struct CurveSpec {
    std::string name;
    std::string x_expr;
    std::string y_expr;
    std::map<std::string, Rat> params;

    friend bool operator==(const CurveSpec& a, const CurveSpec& b) {
        return a.name == b.name && a.x_expr == b.x_expr && a.y_expr == b.y_expr &&
               a.params == b.params;
    }
};

CurveSpec parse_curve_spec(const std::string& text);

PlaneCurve build_curve(const CurveSpec& spec);

// Expression text that parses back to the same value.
std::string to_expr_string(const QRatFunc& f);

} // namespace curvediff

#endif
