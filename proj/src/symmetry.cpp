#include "nht/symmetry.hpp"

#include <algorithm>

namespace nht {

SpaceExpr act_classical(const GeneratorName& h, const TwistBivector& F, const SpaceExpr& f,
                        const SpaceExpr& g) {
    DiffOperator op = standard_rep(h, F.kind());
    return star_product(F, op.apply(f), g) + star_product(F, f, op.apply(g));
}

CovarianceRow covariance_residual(const GeneratorName& h, const TwistBivector& F) {
    const Mode mode = F.kind().mode();
    DiffOperator op = standard_rep(h, F.kind());
    SpaceExpr reference = SpaceExpr::scalar(
        deformation_profile(F) * ScalarField::unit_i(mode));  // i f(t), lives in slot (1,2)

    CovarianceRow row;
    row.generator = h;
    for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j) {
            SpaceExpr xi = SpaceExpr::coordinate(i, mode);
            SpaceExpr xj = SpaceExpr::coordinate(j, mode);
            SpaceExpr acted = act_classical(h, F, xi, xj) - act_classical(h, F, xj, xi);
            if (i == 1 && j == 2) acted -= op.apply(reference);
            row.invariant = row.invariant && acted.is_zero();
            row.residual[{i, j}] = std::move(acted);
        }
    }
    return row;
}

CovarianceReport classify_unbroken(const TwistBivector& F) {
    CovarianceReport report;
    report.kind = F.kind();
    report.profile = deformation_profile(F);
    for (auto& g : generator_list(F.kind())) {
        CovarianceRow row = covariance_residual(g, F);
        if (row.invariant) report.unbroken.push_back(g);
        if (g == GeneratorName::h()) {
            auto s = row.residual.at({1, 2}).as_scalar();
            if (!s) throw error("H residual is not a pure t-function");
            report.h_residual = *s;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

bool subalgebra_closed(const std::vector<GeneratorName>& gens, const AlgebraKind& kind) {
    auto contains = [&](const GeneratorName& g) {
        return std::find(gens.begin(), gens.end(), g) != gens.end();
    };
    for (auto& a : gens)
        for (auto& b : gens)
            for (auto& term : bracket(a, b, kind))
                if (!term.coeff.is_zero() && !contains(term.gen)) return false;
    return true;
}

HDerivativeCheck check_h_is_dfdt(const TwistBivector& F) {
    HDerivativeCheck chk;
    CovarianceRow row = covariance_residual(GeneratorName::h(), F);
    auto s = row.residual.at({1, 2}).as_scalar();
    if (!s) throw error("H residual is not a pure t-function");
    chk.h_residual = *s;
    chk.df_dt = deformation_profile(F).d_dt();
    chk.ok = chk.h_residual == chk.df_dt;
    return chk;
}

}  // namespace nht
