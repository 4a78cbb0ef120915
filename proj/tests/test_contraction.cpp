#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nht/contraction.hpp"
#include "nht/parse.hpp"
#include "nht/print.hpp"

#include <random>

using namespace nht;

namespace {

const AlgebraKind NH_PLUS{AlgebraKind::Family::nh_plus, true};
const AlgebraKind NH_MINUS{AlgebraKind::Family::nh_minus, true};
const AlgebraKind GAL{AlgebraKind::Family::galilei, true};

ScalarField parse_scalar(const std::string& s, Mode m = Mode::flat) {
    auto v = parse_expr(s, m).as_scalar();
    REQUIRE(v.has_value());
    return *v;
}

}  // namespace

TEST_CASE("limits of the basic coefficient functions") {
    for (Mode m : {Mode::hyperbolic, Mode::trigonometric}) {
        LimitResult c = tau_limit(ScalarField::cosh_like(m));
        REQUIRE(c.converged());
        CHECK(*c.value == ScalarField::one());

        LimitResult s = tau_limit(ScalarField::sinh_like(m));
        REQUIRE(s.converged());
        CHECK(s.value->is_zero());

        // tau sinh(t/tau) -> t
        LimitResult ts = tau_limit(ScalarField::tau_power(1, m) * ScalarField::sinh_like(m));
        REQUIRE(ts.converged());
        CHECK(*ts.value == ScalarField::t_power(1));

        // tau^2 (cosh - 1) -> t^2/2 (hyperbolic), -t^2/2 flips by the mode sign
        LimitResult q = tau_limit(ScalarField::tau_power(2, m) *
                                  (ScalarField::cosh_like(m) - ScalarField::one(m)));
        REQUIRE(q.converged());
        Rational half = m == Mode::hyperbolic ? Rational(1, 2) : Rational(-1, 2);
        CHECK(*q.value == ScalarField::t_power(2).scaled(GaussianRational(half)));
    }
}

TEST_CASE("divergent limits are reported with their leading power") {
    // tau^2 cosh(t/tau) has a tau^2 divergence with coefficient 1.
    LimitResult d =
        tau_limit(ScalarField::tau_power(2, Mode::hyperbolic) * ScalarField::cosh_like(Mode::hyperbolic));
    CHECK(!d.converged());
    CHECK(d.divergence_power == 2);
    CHECK(d.divergence_coeff == ScalarField::one());

    // a bare tau diverges too
    LimitResult b = tau_limit(ScalarField::tau_power(1, Mode::trigonometric));
    CHECK(!b.converged());
    CHECK(b.divergence_power == 1);
}

TEST_CASE("negative tau powers vanish in the limit") {
    LimitResult r = tau_limit(ScalarField::tau_power(-1, Mode::hyperbolic) *
                              ScalarField::sinh_like(Mode::hyperbolic, 2));
    REQUIRE(r.converged());
    CHECK(r.value->is_zero());
}

TEST_CASE("flat input passes through unchanged") {
    ScalarField w = parse_scalar("kappa4*t^4");
    LimitResult r = tau_limit(w);
    REQUIRE(r.converged());
    CHECK(*r.value == w);
}

TEST_CASE("termwise limit of space expressions") {
    SpaceExpr e = parse_expr("tau*sinh(t/tau)*x1+cosh(t/tau)*x2", Mode::hyperbolic);
    ExprLimitResult r = tau_limit(e);
    REQUIRE(r.value.has_value());
    CHECK(*r.value == parse_expr("t*x1+x2"));
}

TEST_CASE("contraction table matches the flat closed forms") {
    const char* expected_w[7] = {nullptr, "kappa1",       "kappa2*t",     "kappa3*t^2",
                                 "kappa4*t^4", "1/2*kappa5*t^2", "1/2*kappa6*t^3"};
    const char* expected_g[7] = {nullptr, "0",        "kappa2",   "2*kappa3*t",
                                 "4*kappa4*t^3", "kappa5*t", "3/2*kappa6*t^2"};
    for (int a = 1; a <= 6; ++a) {
        for (const AlgebraKind& kind : {NH_PLUS, NH_MINUS}) {
            ContractedPair pair = contract_table(a, kind);
            CAPTURE(a);
            CAPTURE(kind.name());
            CHECK(pair.w == parse_scalar(expected_w[a]));
            CHECK(pair.g == parse_scalar(expected_g[a]));
            CHECK(pair.g == pair.w.d_dt());
        }
    }
}

TEST_CASE("contraction commutes with the star machinery run directly in Galilei") {
    for (int a = 1; a <= 6; ++a) {
        TwistBivector gal = TwistBivector::preset(a, GAL);
        ScalarField direct =
            deformation_profile(gal).rename_param(
                static_cast<Param>(static_cast<int>(Param::alpha1) + a - 1),
                static_cast<Param>(static_cast<int>(Param::kappa1) + a - 1),
                Rational(1) / kappa_alpha_ratio(a, GAL));
        ContractedPair via_limit = contract_table(a, NH_PLUS);
        CAPTURE(a);
        CHECK(direct == via_limit.w);
    }
}

TEST_CASE("the limit is a ring homomorphism where it converges") {
    std::mt19937 rng(909);
    std::uniform_int_distribution<int> tp(0, 2), fr(-2, 2), num(-3, 3);
    auto random_convergent = [&](Mode m) {
        // only non-positive tau powers guarantee convergence
        ScalarField f(m);
        for (int t = 0; t < 3; ++t) {
            int c = num(rng);
            if (c == 0) continue;
            f.add_term(FieldKey{tp(rng), fr(rng), -tp(rng)},
                       ParamPoly(GaussianRational(Rational(c))));
        }
        return f;
    };
    for (int iter = 0; iter < 100; ++iter) {
        Mode m = iter % 2 ? Mode::hyperbolic : Mode::trigonometric;
        ScalarField f = random_convergent(m), g = random_convergent(m);
        LimitResult lf = tau_limit(f), lg = tau_limit(g), lsum = tau_limit(f + g),
                    lprod = tau_limit(f * g), ld = tau_limit(f.d_dt());
        REQUIRE(lf.converged());
        REQUIRE(lg.converged());
        REQUIRE(lsum.converged());
        REQUIRE(lprod.converged());
        CHECK(*lsum.value == *lf.value + *lg.value);
        CHECK(*lprod.value == *lf.value * *lg.value);
        // the limit also commutes with d/dt
        REQUIRE(ld.converged());
        CHECK(*ld.value == lf.value->d_dt());
    }
}

TEST_CASE("both signs contract to the same pair") {
    for (int a = 1; a <= 6; ++a) {
        ContractedPair plus = contract_table(a, NH_PLUS);
        ContractedPair minus = contract_table(a, NH_MINUS);
        CHECK(plus.w == minus.w);
        CHECK(plus.g == minus.g);
    }
}
