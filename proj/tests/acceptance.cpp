// End-to-end acceptance run: one pass/fail line per criterion, nonzero exit
// on any failure. Everything is exact; no tolerances anywhere.

#include "nht/contraction.hpp"
#include "nht/parse.hpp"
#include "nht/print.hpp"
#include "nht/symmetry.hpp"

#include <algorithm>
#include <iostream>
#include <random>

using namespace nht;

namespace {

const AlgebraKind NH_PLUS{AlgebraKind::Family::nh_plus, true};
const AlgebraKind NH_MINUS{AlgebraKind::Family::nh_minus, true};
const AlgebraKind GAL{AlgebraKind::Family::galilei, true};

int failures = 0;

void report(const std::string& name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
    if (!ok) ++failures;
}

Param alpha_of(int a) { return static_cast<Param>(static_cast<int>(Param::alpha1) + a - 1); }
Param kappa_of(int a) { return static_cast<Param>(static_cast<int>(Param::kappa1) + a - 1); }

// 1. The differential realization reproduces the structure tables.
bool check_algebras() {
    for (const AlgebraKind& kind :
         {NH_PLUS, NH_MINUS, GAL, AlgebraKind{AlgebraKind::Family::nh_plus, false},
          AlgebraKind{AlgebraKind::Family::nh_minus, false},
          AlgebraKind{AlgebraKind::Family::galilei, false}}) {
        if (!verify_algebra(kind).all_ok) return false;
    }
    return true;
}

// 2. Deformed coordinate relations: every preset in both NH signs gives
// [x1,x2]_star = i f_kappa with kappa = ratio * alpha (ratio a fixed nonzero
// rational, identical for both signs) and all other pairs undeformed.
bool check_deformed_spaces() {
    for (int a = 1; a <= 6; ++a) {
        Rational r_plus = kappa_alpha_ratio(a, NH_PLUS);
        Rational r_minus = kappa_alpha_ratio(a, NH_MINUS);
        if (r_plus == 0 || r_plus != r_minus) return false;
        for (const AlgebraKind& kind : {NH_PLUS, NH_MINUS}) {
            TwistBivector F = TwistBivector::preset(a, kind);
            auto table = commutator_table(F);
            if (!table.at({1, 3}).is_zero() || !table.at({2, 3}).is_zero()) return false;
            // [x1,x2]_star rewritten in kappa must equal i f_kappa exactly
            ScalarField got = deformation_profile(F).rename_param(alpha_of(a), kappa_of(a),
                                                                  Rational(1) / r_plus);
            if (got != kappa_profile(a, kind)) return false;
        }
    }
    return true;
}

// 3. The H residual is exactly d/dt of the deformation profile for all
// preset x sign combinations (and in the Galilei runs too).
bool check_h_residuals() {
    for (int a = 1; a <= 6; ++a) {
        for (const AlgebraKind& kind : {NH_PLUS, NH_MINUS, GAL}) {
            TwistBivector F = TwistBivector::preset(a, kind);
            HDerivativeCheck c = check_h_is_dfdt(F);
            if (!c.ok) return false;
            ScalarField closed = kappa_profile(a, kind).d_dt().rename_param(
                kappa_of(a), alpha_of(a), kappa_alpha_ratio(a, kind));
            if (c.h_residual != closed) return false;
        }
    }
    return true;
}

// 4. Unbroken generator sets: {P,K,F,M12} always, plus H only for the
// flat canonical case; each surviving set closes under the bracket.
bool check_unbroken_sets() {
    for (int a = 1; a <= 6; ++a) {
        for (const AlgebraKind& kind : {NH_PLUS, NH_MINUS, GAL}) {
            TwistBivector F = TwistBivector::preset(a, kind);
            CovarianceReport rep = classify_unbroken(F);
            std::vector<GeneratorName> expected;
            if (a == 1 && kind.family == AlgebraKind::Family::galilei)
                expected.push_back(GeneratorName::h());
            for (int i = 1; i <= 3; ++i) {
                expected.push_back(GeneratorName::p(i));
                expected.push_back(GeneratorName::k(i));
                expected.push_back(GeneratorName::f(i));
            }
            expected.push_back(GeneratorName::m(1, 2));
            std::sort(expected.begin(), expected.end());
            std::vector<GeneratorName> got = rep.unbroken;
            std::sort(got.begin(), got.end());
            if (got != expected) return false;
            if (!subalgebra_closed(rep.unbroken, kind)) return false;
        }
    }
    return true;
}

// 5. Contraction: every preset yields the flat (w, g) pair with g = dw/dt,
// the same pair from both NH signs, and the same pair the Galilei twist
// machinery produces directly.
bool check_contraction() {
    for (int a = 1; a <= 6; ++a) {
        ContractedPair plus = contract_table(a, NH_PLUS);
        ContractedPair minus = contract_table(a, NH_MINUS);
        if (plus.w != minus.w || plus.g != minus.g) return false;
        if (plus.g != plus.w.d_dt()) return false;
        if (plus.w != kappa_profile(a, GAL)) return false;
        ScalarField direct = deformation_profile(TwistBivector::preset(a, GAL))
                                 .rename_param(alpha_of(a), kappa_of(a),
                                               Rational(1) / kappa_alpha_ratio(a, GAL));
        if (direct != plus.w) return false;
    }
    return true;
}

// 6. Structural properties: star associativity (>= 100 triples per preset),
// cocycle condition to degree 3, unitality, parser/printer round trips
// (>= 500), Jacobi identity (>= 100 triples).
bool check_properties() {
    std::mt19937 rng(60601);
    std::uniform_int_distribution<int> xe(0, 2), tp(0, 1), num(-2, 2);
    auto random_poly = [&](Mode m) {
        SpaceExpr e(m);
        for (int t = 0; t < 2; ++t) {
            int c = num(rng);
            if (c == 0) continue;
            e.add_term({xe(rng), xe(rng), xe(rng)},
                       ScalarField::t_power(tp(rng), m).scaled(GaussianRational(Rational(c))));
        }
        return e;
    };
    for (int a = 1; a <= 6; ++a) {
        for (const AlgebraKind& kind : {NH_PLUS, NH_MINUS, GAL}) {
            TwistBivector F = TwistBivector::preset(a, kind);
            if (!check_cocycle(F, 3).holds) return false;
            SpaceExpr probe = random_poly(kind.mode());
            if (star_product(F, probe, SpaceExpr::one(kind.mode())) != probe) return false;
            if (star_product(F, SpaceExpr::one(kind.mode()), probe) != probe) return false;
        }
        TwistBivector F = TwistBivector::preset(a, a % 2 ? NH_PLUS : GAL);
        Mode m = F.kind().mode();
        for (int iter = 0; iter < 100; ++iter) {
            SpaceExpr f = random_poly(m), g = random_poly(m), h = random_poly(m);
            if (star_product(F, star_product(F, f, g), h) !=
                star_product(F, f, star_product(F, g, h)))
                return false;
        }
    }
    // parser/printer round trips
    std::uniform_int_distribution<int> fr(-2, 2), taup(-1, 2), num3(-3, 3), wp(0, 11), pe(0, 1);
    for (Mode mode : {Mode::hyperbolic, Mode::trigonometric, Mode::flat}) {
        for (int iter = 0; iter < 200; ++iter) {
            SpaceExpr e(mode);
            int n = iter % 4;
            for (int t = 0; t < n; ++t) {
                ParamMonomial mono;
                if (pe(rng)) mono.exps[static_cast<Param>(wp(rng))] = 1 + pe(rng);
                ParamPoly poly;
                poly.add_term(mono, GaussianRational(Rational(num3(rng)), Rational(num3(rng))));
                if (poly.is_zero()) continue;
                ScalarField c(mode);
                c.add_term(FieldKey{tp(rng), mode == Mode::flat ? 0 : fr(rng),
                                    mode == Mode::flat ? 0 : taup(rng)},
                           poly);
                e.add_term({xe(rng), xe(rng), xe(rng)}, c);
            }
            if (parse_expr(print_text(e), mode) != e) return false;
        }
    }
    // Jacobi on random operator combinations
    for (const AlgebraKind& kind : {NH_PLUS, NH_MINUS, GAL}) {
        auto gens = generator_list(kind);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
        auto random_op = [&] {
            DiffOperator op(kind.mode());
            for (int t = 0; t < 2; ++t) {
                int c = num(rng);
                if (c == 0) continue;
                op += standard_rep(gens[pick(rng)], kind)
                          .scaled(ScalarField::constant(GaussianRational(Rational(c)), kind.mode()));
            }
            return op;
        };
        for (int iter = 0; iter < 40; ++iter) {
            DiffOperator a = random_op(), b = random_op(), c = random_op();
            DiffOperator j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                             commutator(c, commutator(a, b));
            if (!j.is_zero()) return false;
        }
    }
    return true;
}

// 7. Noncommutativity classification of the contracted spaces.
bool check_classification() {
    const NcType expected[7] = {NcType::commutative, NcType::canonical, NcType::lie_algebraic,
                                NcType::quadratic,   NcType::higher_order, NcType::quadratic,
                                NcType::higher_order};
    for (int a = 1; a <= 6; ++a)
        if (classify_nc_type(contract_table(a, NH_PLUS).w) != expected[a]) return false;
    return classify_nc_type(ScalarField::zero()) == NcType::commutative;
}

}  // namespace

int main() {
    try {
        report("algebra structure tables verified in the differential realization",
               check_algebras());
        report("deformed coordinate relations match the closed forms for all presets and signs",
               check_deformed_spaces());
        report("H residual equals d/dt of the deformation profile in every case",
               check_h_residuals());
        report("unbroken generator sets are as predicted and close under the bracket",
               check_unbroken_sets());
        report("contraction limits agree with direct flat computation, both signs",
               check_contraction());
        report("property suite: associativity, cocycle, unitality, round trips, Jacobi",
               check_properties());
        report("noncommutativity types classified for all contracted spaces",
               check_classification());
    } catch (const std::exception& e) {
        std::cout << "FAIL  unexpected exception: " << e.what() << "\n";
        return 1;
    }
    return failures == 0 ? 0 : 1;
}
