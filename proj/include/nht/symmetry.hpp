#ifndef NHT_SYMMETRY_HPP
#define NHT_SYMMETRY_HPP

#include "nht/twist.hpp"

namespace nht {

/// Classical (undeformed-coproduct) Leibniz action of a generator across a
/// star product: (h > f) * g + f * (h > g).
SpaceExpr act_classical(const GeneratorName& h, const TwistBivector& F, const SpaceExpr& f,
                        const SpaceExpr& g);

/// Residuals of one generator acting on the deformed commutation relations.
/// Slots keyed (i, j) with i < j; the (j, i) residual is the negative.
struct CovarianceRow {
    GeneratorName generator;
    std::map<std::pair<int, int>, SpaceExpr> residual;
    bool invariant = true;
};

/// Acts h on [x_i, x_j]_star - i f(t) (d_1i d_2j - d_1j d_2i) for every
/// slot; the reference scalar is acted on through the differential
/// realization of h.
CovarianceRow covariance_residual(const GeneratorName& h, const TwistBivector& F);

struct CovarianceReport {
    AlgebraKind kind;
    ScalarField profile;  // f(t) with [x1,x2]_star = i f(t)
    std::vector<CovarianceRow> rows;
    std::vector<GeneratorName> unbroken;
    ScalarField h_residual;  // the H row at slot (1,2), the paper's h(t) / g(t)
};

/// Runs covariance_residual over every generator of the algebra and
/// collects the surviving (all-residuals-zero) subalgebra.
CovarianceReport classify_unbroken(const TwistBivector& F);

/// True when the generator set is closed under the abstract bracket.
bool subalgebra_closed(const std::vector<GeneratorName>& gens, const AlgebraKind& kind);

struct HDerivativeCheck {
    ScalarField h_residual;
    ScalarField df_dt;
    bool ok = false;
};

/// Asserts the H-residual at slot (1,2) equals d/dt of the deformation
/// profile, exactly.
HDerivativeCheck check_h_is_dfdt(const TwistBivector& F);

}  // namespace nht

#endif
