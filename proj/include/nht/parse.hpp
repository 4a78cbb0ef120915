#ifndef NHT_PARSE_HPP
#define NHT_PARSE_HPP

#include "nht/space_expr.hpp"

#include <memory>
#include <optional>
#include <string>

namespace nht {

/// Syntax error with 1-based source position.
struct parse_error : error {
    int line;
    int column;
    parse_error(int l, int c, const std::string& msg)
        : error("parse error at " + std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
          line(l),
          column(c) {}
};

/// Input language AST. Function arguments are restricted to k*t/tau with
/// integer k, recorded in `fn_mult`.
struct ExprSyntax {
    enum class Kind {
        number,     // value
        imag_unit,  // i
        time_var,   // t
        tau_var,    // tau
        coord,      // axis
        param_ref,  // param
        func,       // fn(fn_mult * t/tau)
        add, sub, mul,
        div,        // rhs restricted at parse time (number, tau power, i)
        pow,        // lhs ^ exponent
        neg,
    };
    enum class Fn { cosh_fn, sinh_fn, cos_fn, sin_fn };

    Kind kind;
    Rational number;
    int axis = 0;
    Param param = Param::alpha1;
    Fn fn = Fn::cosh_fn;
    int fn_mult = 1;
    int exponent = 0;
    std::shared_ptr<const ExprSyntax> lhs, rhs;
};

using ExprPtr = std::shared_ptr<const ExprSyntax>;

/// Parse the expression language; throws parse_error with line/column.
ExprPtr parse(const std::string& text);

/// Mode the syntax tree demands: hyperbolic if cosh/sinh occur,
/// trigonometric if cos/sin occur, nullopt if neither. Mixing is an error.
std::optional<Mode> required_mode(const ExprPtr& ast);

/// Evaluate the AST into a canonical SpaceExpr. `default_mode` applies when
/// the expression uses no C/S functions; a function-implied mode wins and
/// must not conflict with a non-flat default.
SpaceExpr elaborate(const ExprPtr& ast, Mode default_mode = Mode::flat);

/// parse + elaborate in one step.
SpaceExpr parse_expr(const std::string& text, Mode default_mode = Mode::flat);

}  // namespace nht

#endif
