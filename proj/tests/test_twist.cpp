#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nht/parse.hpp"
#include "nht/print.hpp"
#include "nht/twist.hpp"

#include <random>

using namespace nht;

namespace {

const AlgebraKind NH_PLUS{AlgebraKind::Family::nh_plus, true};
const AlgebraKind NH_MINUS{AlgebraKind::Family::nh_minus, true};
const AlgebraKind GAL{AlgebraKind::Family::galilei, true};

SpaceExpr x(int i, const AlgebraKind& kind) {
    return SpaceExpr::coordinate(i, kind.mode());
}

}  // namespace

TEST_CASE("preset structure") {
    TwistBivector F = TwistBivector::preset(2, NH_PLUS);
    // (i/4) alpha2 (K1 (x) P2 - P2 (x) K1 - K2 (x) P1 + P1 (x) K2)
    CHECK(F.terms().size() == 4);
    CHECK(F.preset_param() == Param::alpha2);
    CHECK_THROWS_AS(TwistBivector::preset(7, NH_PLUS), error);
    CHECK_THROWS_AS(TwistBivector::preset(0, NH_PLUS), error);
}

TEST_CASE("carrier must commute and stay inside P/K/F") {
    TwistBivector ok(NH_PLUS, {});
    CHECK(ok.is_identity());
    // M12 is not allowed as a carrier leg.
    ParamPoly c(GaussianRational(1));
    CHECK_THROWS_AS(TwistBivector(NH_PLUS, {{c, GeneratorName::m(1, 2), GeneratorName::p(1)}}),
                    error);
    CHECK_THROWS_AS(TwistBivector(NH_PLUS, {{c, GeneratorName::h(), GeneratorName::p(1)}}),
                    error);
    // P/K/F legs always commute, any mix is accepted.
    CHECK_NOTHROW(TwistBivector(NH_MINUS, {{c, GeneratorName::f(3), GeneratorName::k(1)}}));
}

TEST_CASE("identity twist gives the pointwise product") {
    TwistBivector id = TwistBivector::identity(NH_PLUS);
    SpaceExpr f = parse_expr("x1*x2", Mode::hyperbolic);
    SpaceExpr g = parse_expr("t*x3", Mode::hyperbolic);
    CHECK(star_product(id, f, g) == f * g);
    CHECK(star_commutator(id, f, g).is_zero());
}

TEST_CASE("alpha1 star product of x1 and x2") {
    // x1 * x2 = x1 x2 + (i/2) alpha1 C^2, so the commutator is i alpha1 C^2.
    TwistBivector F = TwistBivector::preset(1, NH_PLUS);
    SpaceExpr expected = x(1, NH_PLUS) * x(2, NH_PLUS) +
                         SpaceExpr::scalar(ScalarField::param(Param::alpha1, Mode::hyperbolic) *
                                           ScalarField::cosh_like(Mode::hyperbolic) *
                                           ScalarField::cosh_like(Mode::hyperbolic))
                             .scaled(GaussianRational(Rational(1, 2)) * GaussianRational::unit_i());
    CHECK(star_product(F, x(1, NH_PLUS), x(2, NH_PLUS)) == expected);
    // the opposite order flips the correction sign
    SpaceExpr rev = star_product(F, x(2, NH_PLUS), x(1, NH_PLUS));
    CHECK(star_commutator(F, x(1, NH_PLUS), x(2, NH_PLUS)) ==
          star_product(F, x(1, NH_PLUS), x(2, NH_PLUS)) - rev);
}

TEST_CASE("kappa/alpha ratios are pinned") {
    const Rational expected[7] = {0, 1, 1, 1, 1, 2, 2};
    for (int a = 1; a <= 6; ++a) {
        for (const AlgebraKind& kind : {NH_PLUS, NH_MINUS, GAL}) {
            CAPTURE(a);
            CAPTURE(kind.name());
            CHECK(kappa_alpha_ratio(a, kind) == expected[a]);
        }
    }
}

TEST_CASE("deformation profiles match the closed forms, both signs") {
    for (int a = 1; a <= 6; ++a) {
        for (const AlgebraKind& kind : {NH_PLUS, NH_MINUS, GAL}) {
            TwistBivector F = TwistBivector::preset(a, kind);
            CAPTURE(a);
            CAPTURE(kind.name());
            CHECK(deformation_profile(F) == reference_profile(a, kind));
        }
    }
}

TEST_CASE("only the (1,2) plane deforms") {
    for (int a = 1; a <= 6; ++a) {
        TwistBivector F = TwistBivector::preset(a, NH_MINUS);
        auto table = commutator_table(F);
        CHECK(!table.at({1, 2}).is_zero());
        CHECK(table.at({1, 3}).is_zero());
        CHECK(table.at({2, 3}).is_zero());
    }
}

TEST_CASE("star product is associative on random triples") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> xe(0, 2), tp(0, 1), num(-2, 2);
    auto random_poly = [&](Mode m) {
        SpaceExpr e(m);
        for (int t = 0; t < 2; ++t) {
            int c = num(rng);
            if (c == 0) continue;
            ScalarField coeff =
                ScalarField::t_power(tp(rng), m).scaled(GaussianRational(Rational(c)));
            e.add_term(XIndex{xe(rng), xe(rng), xe(rng)}, coeff);
        }
        return e;
    };
    int checked = 0;
    for (int a = 1; a <= 6; ++a) {
        for (const AlgebraKind& kind : {NH_PLUS, GAL}) {
            TwistBivector F = TwistBivector::preset(a, kind);
            for (int iter = 0; iter < 10; ++iter) {
                SpaceExpr f = random_poly(kind.mode());
                SpaceExpr g = random_poly(kind.mode());
                SpaceExpr h = random_poly(kind.mode());
                CHECK(star_product(F, star_product(F, f, g), h) ==
                      star_product(F, f, star_product(F, g, h)));
                ++checked;
            }
        }
    }
    CHECK(checked >= 100);
}

TEST_CASE("star product is unital") {
    for (int a = 1; a <= 6; ++a) {
        TwistBivector F = TwistBivector::preset(a, NH_PLUS);
        SpaceExpr f = parse_expr("x1^2*x2+t*x3", Mode::hyperbolic);
        CHECK(star_product(F, f, SpaceExpr::one(Mode::hyperbolic)) == f);
        CHECK(star_product(F, SpaceExpr::one(Mode::hyperbolic), f) == f);
    }
}

TEST_CASE("undeformed limit: alpha -> 0 recovers the pointwise product") {
    TwistBivector F = TwistBivector::preset(4, NH_MINUS);
    SpaceExpr f = parse_expr("x1*x3", Mode::trigonometric);
    SpaceExpr g = parse_expr("x2", Mode::trigonometric);
    SpaceExpr fg = star_product(F, f, g);
    std::map<Param, GaussianRational> zero{{Param::alpha4, GaussianRational(0)}};
    CHECK(fg.substitute(zero) == f * g);
}

TEST_CASE("series terminates within the degree guard") {
    TwistBivector F = TwistBivector::preset(3, NH_PLUS);
    SpaceExpr f = parse_expr("x1^3", Mode::hyperbolic);
    SpaceExpr g = parse_expr("x2^3", Mode::hyperbolic);
    // raising the guard beyond the terminating order changes nothing
    CHECK(star_product(F, f, g, 7) == star_product(F, f, g, 12));
    // a guard below the terminating order is an error, not a silent truncation
    CHECK_THROWS_AS(star_product(F, f, g, 1), series_guard_error);
}

TEST_CASE("x-independent legs short-circuit") {
    TwistBivector F = TwistBivector::preset(2, NH_PLUS);
    SpaceExpr tf = parse_expr("t^2*cosh(t/tau)", Mode::hyperbolic);
    SpaceExpr g = parse_expr("x1*x2", Mode::hyperbolic);
    CHECK(star_product(F, tf, g) == tf * g);
    CHECK(star_product(F, g, tf) == g * tf);
    CHECK(star_commutator(F, tf, g).is_zero());
}

TEST_CASE("cocycle condition holds through degree 3") {
    for (int a = 1; a <= 6; ++a) {
        for (const AlgebraKind& kind : {NH_PLUS, NH_MINUS, GAL}) {
            TwistBivector F = TwistBivector::preset(a, kind);
            CocycleReport rep = check_cocycle(F, 3);
            CAPTURE(a);
            CAPTURE(kind.name());
            CHECK(rep.holds);
            CHECK(rep.triples_checked > 0);
        }
    }
}

TEST_CASE("noncommutativity classification of the flat profiles") {
    CHECK(classify_nc_type(ScalarField::zero()) == NcType::commutative);
    CHECK(classify_nc_type(kappa_profile(1, GAL)) == NcType::canonical);
    CHECK(classify_nc_type(kappa_profile(2, GAL)) == NcType::lie_algebraic);
    CHECK(classify_nc_type(kappa_profile(3, GAL)) == NcType::quadratic);
    CHECK(classify_nc_type(kappa_profile(5, GAL)) == NcType::quadratic);
    CHECK(classify_nc_type(kappa_profile(4, GAL)) == NcType::higher_order);
    CHECK(classify_nc_type(kappa_profile(6, GAL)) == NcType::higher_order);
    CHECK_THROWS_AS(classify_nc_type(ScalarField::cosh_like(Mode::hyperbolic)), error);
    CHECK(nc_type_name(NcType::lie_algebraic) == "Lie-algebraic");
}
