#ifndef NHT_TWIST_HPP
#define NHT_TWIST_HPP

#include "nht/generators.hpp"

#include <map>
#include <utility>
#include <vector>

namespace nht {

/// Raised when the exponential series fails to terminate within the guard
/// order; cannot happen for a valid abelian carrier and polynomial legs.
struct series_guard_error : error {
    using error::error;
};

/// Formal sum  sum c (A (x) B)  over mutually commuting carrier generators
/// drawn from {P_k, K_k, F_k}; the twist is exp of this element and the
/// star product applies exp of its negation. The six paper deformations are
/// presets carrying the overall i/4 and the wedge expansion.
class TwistBivector {
public:
    struct Term {
        ParamPoly coeff;
        GeneratorName left, right;
    };

    /// Validates the carrier: only P/K/F generators, pairwise commuting in
    /// the differential representation.
    TwistBivector(AlgebraKind kind, std::vector<Term> terms);

    static TwistBivector identity(AlgebraKind kind) { return TwistBivector(std::move(kind), {}); }

    /// Preset a in 1..6: exp[(i/4) sum_{k,l=1..2} alpha_a^{kl} G_k ^ G'_l]
    /// with alpha^{12} = -alpha^{21} = alpha_a and carrier pairs
    /// P^P, K^P, K^K, F^F, F^P, K^F.
    static TwistBivector preset(int a, AlgebraKind kind);

    /// c * (A (x) B - B (x) A), taken literally (no implicit i/4).
    void add_wedge(const ParamPoly& c, const GeneratorName& a, const GeneratorName& b);

    const AlgebraKind& kind() const { return kind_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_identity() const { return terms_.empty(); }

    /// The alpha parameter of a preset, if this bivector is one.
    std::optional<Param> preset_param() const { return preset_param_; }

private:
    AlgebraKind kind_;
    std::vector<Term> terms_;
    std::optional<Param> preset_param_;
};

/// Exact star product f * g = mu(exp(-B)(f (x) g)); the series terminates
/// because carrier generators are x-independent first-order operators.
/// `max_order` overrides the default guard 1 + deg_x f + deg_x g.
SpaceExpr star_product(const TwistBivector& F, const SpaceExpr& f, const SpaceExpr& g,
                       int max_order = -1);

SpaceExpr star_commutator(const TwistBivector& F, const SpaceExpr& f, const SpaceExpr& g,
                          int max_order = -1);

/// Star commutators of all coordinate pairs; keys (i, j) with i < j, values
/// [x_i, x_j]_star. The t-row is zero by construction (t is a coefficient
/// symbol, not a module generator) and is not listed.
std::map<std::pair<int, int>, SpaceExpr> commutator_table(const TwistBivector& F);

/// The deformation profile f(t) with [x1, x2]_star = i f(t).
ScalarField deformation_profile(const TwistBivector& F);

/// Proportionality constant c with kappa_a = c * alpha_a for preset `a`:
/// computed by comparing the star commutator against the paper's f_kappa
/// form. The Open-Question resolution; pinned in tests as {1,1,1,1,2,2}.
Rational kappa_alpha_ratio(int a, const AlgebraKind& kind);

/// Reference deformation profile f_{kappa_a}(t) expressed in alpha_a via
/// kappa_a = ratio * alpha_a.
ScalarField reference_profile(int a, const AlgebraKind& kind);

/// The closed-form deformation profile written in the kappa parameters:
/// f_{kappa_a}(t) for the NH kinds, its contraction w_{kappa_a}(t) for Galilei.
ScalarField kappa_profile(int a, const AlgebraKind& kind);

struct CocycleReport {
    int degree = 0;
    int triples_checked = 0;
    bool holds = true;
};

/// Verifies the classical cocycle condition on all coordinate monomial
/// triples of total degree <= degree, exactly.
CocycleReport check_cocycle(const TwistBivector& F, int degree);

enum class NcType { commutative, canonical, lie_algebraic, quadratic, higher_order };

std::string nc_type_name(NcType t);

/// Classify a contracted (flat) commutator profile by its degree in t.
NcType classify_nc_type(const ScalarField& w);

}  // namespace nht

#endif
