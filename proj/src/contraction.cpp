#include "nht/contraction.hpp"

#include "nht/symmetry.hpp"

namespace nht {

LimitResult tau_limit(const ScalarField& f) {
    if (f.mode() == Mode::flat) {
        LimitResult r;
        r.value = f;
        return r;
    }

    const bool hyper = f.mode() == Mode::hyperbolic;
    std::map<int, ScalarField> by_power;  // tau^q coefficient, flat
    auto slot = [&](int q) -> ScalarField& {
        auto it = by_power.find(q);
        if (it == by_power.end()) it = by_power.emplace(q, ScalarField(Mode::flat)).first;
        return it->second;
    };

    for (auto& [key, poly] : f.terms()) {
        if (key.tau_pow < 0) continue;  // suppressed in the limit
        if (key.freq == 0) {
            slot(key.tau_pow).add_term(FieldKey{key.t_pow, 0, 0}, poly);
            continue;
        }
        // beta_k = sum_n (s k)^n t^n / (n! tau^n), s = 1 or i
        GaussianRational base = hyper ? GaussianRational(Rational(key.freq))
                                      : GaussianRational(Rational(0), Rational(key.freq));
        GaussianRational power(Rational(1));
        Integer factorial = 1;
        for (int n = 0; n <= key.tau_pow; ++n) {
            if (n > 0) {
                power *= base;
                factorial *= n;
            }
            GaussianRational c = power / GaussianRational(Rational(factorial));
            slot(key.tau_pow - n).add_term(FieldKey{key.t_pow + n, 0, 0}, poly * ParamPoly(c));
        }
    }

    for (auto it = by_power.rbegin(); it != by_power.rend(); ++it) {
        if (it->first > 0 && !it->second.is_zero())
            return LimitResult{std::nullopt, it->first, it->second};
    }
    auto it = by_power.find(0);
    LimitResult r;
    r.value = it == by_power.end() ? ScalarField(Mode::flat) : it->second;
    return r;
}

ExprLimitResult tau_limit(const SpaceExpr& e) {
    if (e.mode() == Mode::flat) return ExprLimitResult{e};
    // The worst divergence over all coefficients wins; the finite part is
    // only meaningful when every coefficient converges.
    int worst = 0;
    SpaceExpr out(Mode::flat);
    for (auto& [x, c] : e.terms()) {
        LimitResult lim = tau_limit(c);
        if (!lim.converged()) {
            worst = std::max(worst, lim.divergence_power);
            continue;
        }
        out.add_term(x, *lim.value);
    }
    if (worst > 0) return ExprLimitResult{std::nullopt, worst};
    return ExprLimitResult{out};
}

ContractedPair contract_table(int a, const AlgebraKind& kind) {
    if (kind.family == AlgebraKind::Family::galilei)
        throw error("contract_table expects an NH kind");

    TwistBivector F = TwistBivector::preset(a, kind);
    // Report in the kappa normalization: alpha_a = kappa_a / ratio.
    Param alpha = *F.preset_param();
    Param kappa = static_cast<Param>(static_cast<int>(Param::kappa1) + a - 1);
    Rational ratio = kappa_alpha_ratio(a, kind);
    auto to_kappa = [&](const ScalarField& v) {
        return v.rename_param(alpha, kappa, Rational(1) / ratio);
    };
    ScalarField f = to_kappa(deformation_profile(F));
    ScalarField h = to_kappa(check_h_is_dfdt(F).h_residual);

    LimitResult w = tau_limit(f);
    if (!w.converged())
        throw error("deformation profile diverges at tau^" + std::to_string(w.divergence_power));
    LimitResult g = tau_limit(h);
    if (!g.converged())
        throw error("H residual diverges at tau^" + std::to_string(g.divergence_power));

    if (!(*g.value == w.value->d_dt()))
        throw error("contracted H residual is not d/dt of the contracted profile");

    // Path independence: deform-then-contract = contract-then-deform.
    AlgebraKind gal{AlgebraKind::Family::galilei, kind.with_acceleration};
    TwistBivector Fg = TwistBivector::preset(a, gal);
    if (!(to_kappa(deformation_profile(Fg)) == *w.value))
        throw error("Galilei-mode star commutator disagrees with the contraction");
    if (!(to_kappa(check_h_is_dfdt(Fg).h_residual) == *g.value))
        throw error("Galilei-mode H residual disagrees with the contraction");

    return ContractedPair{*w.value, *g.value};
}

}  // namespace nht
