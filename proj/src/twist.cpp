#include "nht/twist.hpp"

#include <algorithm>

namespace nht {

namespace {

bool carrier_ok(const GeneratorName& g) {
    using Tag = GeneratorName::Tag;
    return g.tag == Tag::P || g.tag == Tag::K || g.tag == Tag::F;
}

}  // namespace

TwistBivector::TwistBivector(AlgebraKind kind, std::vector<Term> terms)
    : kind_(std::move(kind)), terms_(std::move(terms)) {
    std::vector<GeneratorName> carrier;
    for (auto& t : terms_) {
        if (!carrier_ok(t.left) || !carrier_ok(t.right))
            throw error("twist carrier must be drawn from {P_k, K_k, F_k}, got " +
                        (carrier_ok(t.left) ? t.right.str() : t.left.str()));
        for (auto g : {t.left, t.right})
            if (std::find(carrier.begin(), carrier.end(), g) == carrier.end())
                carrier.push_back(g);
    }
    for (std::size_t i = 0; i < carrier.size(); ++i)
        for (std::size_t j = i + 1; j < carrier.size(); ++j)
            if (!commutator(standard_rep(carrier[i], kind_), standard_rep(carrier[j], kind_))
                     .is_zero())
                throw error("twist carrier generators do not commute: " + carrier[i].str() +
                            ", " + carrier[j].str());
}

void TwistBivector::add_wedge(const ParamPoly& c, const GeneratorName& a, const GeneratorName& b) {
    auto add_tensor = [&](const ParamPoly& coeff, const GeneratorName& l, const GeneratorName& r) {
        for (auto& t : terms_) {
            if (t.left == l && t.right == r) {
                t.coeff += coeff;
                return;
            }
        }
        terms_.push_back({coeff, l, r});
    };
    add_tensor(c, a, b);
    add_tensor(-c, b, a);
    std::erase_if(terms_, [](const Term& t) { return t.coeff.is_zero(); });
}

TwistBivector TwistBivector::preset(int a, AlgebraKind kind) {
    if (a < 1 || a > 6) throw error("preset index must be in 1..6");
    if (!kind.with_acceleration && a >= 4)
        throw error("preset " + std::to_string(a) + " needs acceleration generators");
    using GN = GeneratorName;
    static const std::pair<GN::Tag, GN::Tag> pairs[] = {
        {GN::Tag::P, GN::Tag::P}, {GN::Tag::K, GN::Tag::P}, {GN::Tag::K, GN::Tag::K},
        {GN::Tag::F, GN::Tag::F}, {GN::Tag::F, GN::Tag::P}, {GN::Tag::K, GN::Tag::F}};
    auto [tl, tr] = pairs[a - 1];
    Param alpha = static_cast<Param>(a - 1);

    // (i/4) * alpha * (G_1 ^ G'_2  -  G_2 ^ G'_1)
    ParamPoly c = ParamPoly::param(alpha) *
                  ParamPoly(GaussianRational(Rational(0), Rational(1, 4)));
    TwistBivector F(std::move(kind), {});
    F.add_wedge(c, GN{tl, 1}, GN{tr, 2});
    F.add_wedge(-c, GN{tl, 2}, GN{tr, 1});
    F.preset_param_ = alpha;
    return F;
}

namespace {

ScalarField poly_field(const ParamPoly& p, Mode mode) {
    return ScalarField::monomial(mode, 0, 0, 0, p);
}

struct LegPair {
    SpaceExpr u, v;
};

}  // namespace

SpaceExpr star_product(const TwistBivector& F, const SpaceExpr& f, const SpaceExpr& g,
                       int max_order) {
    Mode mode = join_modes(F.kind().mode(), join_modes(f.mode(), g.mode()));
    SpaceExpr acc = f * g;
    if (F.is_identity() || f.x_degree() <= 0 || g.x_degree() <= 0) return acc;

    std::map<GeneratorName, DiffOperator> reps;
    auto rep = [&](const GeneratorName& n) -> const DiffOperator& {
        auto it = reps.find(n);
        if (it == reps.end()) it = reps.emplace(n, standard_rep(n, F.kind())).first;
        return it->second;
    };

    int guard = max_order >= 0 ? max_order : 1 + f.x_degree() + g.x_degree();
    std::vector<LegPair> cur{{f.in_mode(mode), g.in_mode(mode)}};
    Rational factorial = 1;
    for (int n = 1; !cur.empty(); ++n) {
        if (n > guard)
            throw series_guard_error("star product series exceeded order " +
                                     std::to_string(guard));
        std::vector<LegPair> next;
        for (auto& pr : cur) {
            for (auto& term : F.terms()) {
                SpaceExpr u = rep(term.left).apply(pr.u).scaled(poly_field(term.coeff, mode));
                if (u.is_zero()) continue;
                SpaceExpr v = rep(term.right).apply(pr.v);
                if (v.is_zero()) continue;
                next.push_back({std::move(u), std::move(v)});
            }
        }
        cur = std::move(next);
        if (cur.empty()) break;
        factorial *= n;
        GaussianRational scale(Rational(n % 2 ? -1 : 1) / factorial);
        SpaceExpr contrib(mode);
        for (auto& pr : cur) contrib += pr.u * pr.v;
        acc += contrib.scaled(scale);
    }
    return acc;
}

SpaceExpr star_commutator(const TwistBivector& F, const SpaceExpr& f, const SpaceExpr& g,
                          int max_order) {
    return star_product(F, f, g, max_order) - star_product(F, g, f, max_order);
}

std::map<std::pair<int, int>, SpaceExpr> commutator_table(const TwistBivector& F) {
    Mode mode = F.kind().mode();
    std::map<std::pair<int, int>, SpaceExpr> table;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            table[{i, j}] = star_commutator(F, SpaceExpr::coordinate(i, mode),
                                            SpaceExpr::coordinate(j, mode));
    return table;
}

ScalarField deformation_profile(const TwistBivector& F) {
    Mode mode = F.kind().mode();
    SpaceExpr c = star_commutator(F, SpaceExpr::coordinate(1, mode),
                                  SpaceExpr::coordinate(2, mode));
    auto s = c.as_scalar();
    if (!s) throw error("[x1,x2]_star is not a pure t-function");
    // [x1, x2]_star = i f(t)
    return s->scaled(GaussianRational(Rational(0), Rational(-1)));
}

ScalarField kappa_profile(int a, const AlgebraKind& kind) {
    Mode mode = kind.mode();
    Param kappa = static_cast<Param>(6 + a - 1);
    ScalarField k = ScalarField::param(kappa, mode);
    if (kind.family == AlgebraKind::Family::galilei) {
        switch (a) {
            case 1: return k;
            case 2: return k * ScalarField::t_power(1, mode);
            case 3: return k * ScalarField::t_power(2, mode);
            case 4: return k * ScalarField::t_power(4, mode);
            case 5:
                return k.scaled(GaussianRational(Rational(1, 2))) * ScalarField::t_power(2, mode);
            case 6:
                return k.scaled(GaussianRational(Rational(1, 2))) * ScalarField::t_power(3, mode);
        }
        throw error("preset index must be in 1..6");
    }
    ScalarField C = ScalarField::cosh_like(mode);
    ScalarField S = ScalarField::sinh_like(mode);
    ScalarField Cm1 = C - ScalarField::one(mode);
    ScalarField tau = ScalarField::tau_power(1, mode);
    GaussianRational sign{Rational(kind.sign())};
    switch (a) {
        case 1: return k * C * C;
        case 2: return k * tau * C * S;
        case 3: return k * tau * tau * S * S;
        case 4:
            return k.scaled(GaussianRational(Rational(4))) * tau * tau * tau * tau * Cm1 * Cm1;
        case 5: return k.scaled(sign) * tau * tau * Cm1 * C;
        case 6: return k.scaled(sign) * tau * tau * tau * Cm1 * S;
    }
    throw error("preset index must be in 1..6");
}

Rational kappa_alpha_ratio(int a, const AlgebraKind& kind) {
    ScalarField engine = deformation_profile(TwistBivector::preset(a, kind));
    Param alpha = static_cast<Param>(a - 1);
    Param kappa = static_cast<Param>(6 + a - 1);
    ScalarField ref = kappa_profile(a, kind).rename_param(kappa, alpha, Rational(1));
    if (ref.is_zero() || engine.is_zero()) throw error("degenerate deformation profile");

    auto& [key, poly] = *ref.terms().begin();
    auto it = engine.terms().find(key);
    if (it == engine.terms().end())
        throw error("deformation profile does not match the expected shape");
    auto ce = it->second.terms().begin()->second;
    auto cr = poly.terms().begin()->second;
    GaussianRational q = ce / cr;
    if (q.im != 0) throw error("kappa/alpha ratio is not real");
    Rational ratio = q.re;
    if (!(engine == kappa_profile(a, kind).rename_param(kappa, alpha, ratio)))
        throw error("deformation profile is not proportional to the reference form");
    return ratio;
}

ScalarField reference_profile(int a, const AlgebraKind& kind) {
    Rational ratio = kappa_alpha_ratio(a, kind);
    Param alpha = static_cast<Param>(a - 1);
    Param kappa = static_cast<Param>(6 + a - 1);
    return kappa_profile(a, kind).rename_param(kappa, alpha, ratio);
}

namespace {

// One term of a three-leg tensor operator; absent legs act as identity.
struct Term3 {
    ParamPoly coeff;
    std::array<std::optional<GeneratorName>, 3> legs;
};

struct Triple {
    std::array<SpaceExpr, 3> leg;
};

std::vector<XIndex> monomials_up_to(int degree) {
    std::vector<XIndex> out;
    for (int d = 0; d <= degree; ++d)
        for (int e1 = 0; e1 <= d; ++e1)
            for (int e2 = 0; e2 + e1 <= d; ++e2) out.push_back({e1, e2, d - e1 - e2});
    return out;
}

SpaceExpr monomial_expr(const XIndex& x, Mode mode) {
    SpaceExpr e(mode);
    e.add_term(x, ScalarField::one(mode));
    return e;
}

// mu_3 of exp(sum of terms) applied to a function triple.
SpaceExpr exp_apply3(const std::vector<Term3>& terms, const Triple& start, Mode mode,
                     const AlgebraKind& kind, int guard) {
    std::map<GeneratorName, DiffOperator> reps;
    auto rep = [&](const GeneratorName& n) -> const DiffOperator& {
        auto it = reps.find(n);
        if (it == reps.end()) it = reps.emplace(n, standard_rep(n, kind)).first;
        return it->second;
    };
    SpaceExpr acc = start.leg[0] * start.leg[1] * start.leg[2];
    std::vector<Triple> cur{start};
    Rational factorial = 1;
    for (int n = 1; !cur.empty(); ++n) {
        if (n > guard) throw series_guard_error("cocycle series exceeded guard order");
        std::vector<Triple> next;
        for (auto& tr : cur) {
            for (auto& term : terms) {
                Triple out = tr;
                bool zero = false;
                for (int leg = 0; leg < 3 && !zero; ++leg) {
                    if (!term.legs[leg]) continue;
                    out.leg[leg] = rep(*term.legs[leg]).apply(out.leg[leg]);
                    zero = out.leg[leg].is_zero();
                }
                if (zero) continue;
                out.leg[0] = out.leg[0].scaled(ScalarField::monomial(mode, 0, 0, 0, term.coeff));
                next.push_back(std::move(out));
            }
        }
        cur = std::move(next);
        if (cur.empty()) break;
        factorial *= n;
        SpaceExpr contrib(mode);
        for (auto& tr : cur) contrib += tr.leg[0] * tr.leg[1] * tr.leg[2];
        acc += contrib.scaled(GaussianRational(Rational(1) / factorial));
    }
    return acc;
}

}  // namespace

CocycleReport check_cocycle(const TwistBivector& F, int degree) {
    if (degree < 1) throw error("cocycle degree must be >= 1");
    Mode mode = F.kind().mode();
    CocycleReport report;
    report.degree = degree;

    // F_12 (Delta (x) 1)F = exp(B_12 + (Delta (x) 1)B) for an abelian carrier,
    // and similarly on the right; the two sides are evaluated independently.
    std::vector<Term3> lhs, rhs;
    for (auto& t : F.terms()) {
        lhs.push_back({t.coeff, {t.left, t.right, std::nullopt}});
        lhs.push_back({t.coeff, {t.left, std::nullopt, t.right}});
        lhs.push_back({t.coeff, {std::nullopt, t.left, t.right}});
        rhs.push_back({t.coeff, {std::nullopt, t.left, t.right}});
        rhs.push_back({t.coeff, {t.left, t.right, std::nullopt}});
        rhs.push_back({t.coeff, {t.left, std::nullopt, t.right}});
    }

    auto monos = monomials_up_to(degree);
    for (auto& xa : monos)
        for (auto& xb : monos)
            for (auto& xc : monos) {
                int total = 0;
                for (auto& x : {xa, xb, xc}) total += x[0] + x[1] + x[2];
                if (total > degree) continue;
                Triple start{
                    {monomial_expr(xa, mode), monomial_expr(xb, mode), monomial_expr(xc, mode)}};
                int guard = 1 + total;
                SpaceExpr l = exp_apply3(lhs, start, mode, F.kind(), guard);
                SpaceExpr r = exp_apply3(rhs, start, mode, F.kind(), guard);
                ++report.triples_checked;
                if (!(l == r)) report.holds = false;
            }
    return report;
}

std::string nc_type_name(NcType t) {
    switch (t) {
        case NcType::commutative: return "commutative";
        case NcType::canonical: return "canonical";
        case NcType::lie_algebraic: return "Lie-algebraic";
        case NcType::quadratic: return "quadratic";
        case NcType::higher_order: return "higher-order";
    }
    return "?";
}

NcType classify_nc_type(const ScalarField& w) {
    if (w.is_zero()) return NcType::commutative;
    if (w.mode() != Mode::flat)
        throw error("noncommutativity type is defined for contracted (flat) profiles");
    switch (w.t_degree()) {
        case 0: return NcType::canonical;
        case 1: return NcType::lie_algebraic;
        case 2: return NcType::quadratic;
        default: return NcType::higher_order;
    }
}

}  // namespace nht
