#ifndef NHT_CONTRACTION_HPP
#define NHT_CONTRACTION_HPP

#include "nht/twist.hpp"

namespace nht {

/// tau -> infinity limit outcome: either a finite flat-mode value or the
/// leading positive tau-power with its (nonzero, flat) coefficient.
struct LimitResult {
    std::optional<ScalarField> value;
    int divergence_power = 0;
    ScalarField divergence_coeff;

    bool converged() const { return value.has_value(); }
};

/// Exact tau -> infinity limit: expands each beta_k in powers of t/tau and
/// collects the tau^0 coefficient; any surviving positive power is reported
/// as a divergence. Flat input passes through unchanged.
LimitResult tau_limit(const ScalarField& f);

/// Termwise limit of a space expression.
struct ExprLimitResult {
    std::optional<SpaceExpr> value;
    int divergence_power = 0;
};
ExprLimitResult tau_limit(const SpaceExpr& e);

struct ContractedPair {
    ScalarField w;  // lim f_{kappa_a}
    ScalarField g;  // lim h_{kappa_a}
};

/// Contracts the star-commutator profile and the H-residual of preset `a`
/// computed at an NH kind; asserts g = dw/dt and that the same pair comes
/// out of the twist machinery run directly in Galilei mode.
ContractedPair contract_table(int a, const AlgebraKind& kind);

}  // namespace nht

#endif
