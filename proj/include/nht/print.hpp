#ifndef NHT_PRINT_HPP
#define NHT_PRINT_HPP

#include "nht/space_expr.hpp"

#include <string>

namespace nht {

/// Deterministic ASCII math, parseable by nht::parse. Fixed term order:
/// lexicographic in the x-index, then (m, p, k); C/S functions are
/// reconstructed from conjugate beta-pairs (cosh/cos first).
std::string print_text(const SpaceExpr& e);
std::string print_text(const ScalarField& f);

/// Cosmetic LaTeX rendering (not round-trippable).
std::string print_latex(const SpaceExpr& e);
std::string print_latex(const ScalarField& f);

/// JSON rendering of the raw canonical form:
/// {"mode":...,"terms":[{"x":[e1,e2,e3],"coeff":[{"m":..,"k":..,"p":..,
///  "re":"a/b","im":"c/d","params":{...}}]}]}
std::string print_json(const SpaceExpr& e);

}  // namespace nht

#endif
