#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nht/scalar_field.hpp"

#include <random>

using namespace nht;

namespace {

ScalarField C(Mode m) { return ScalarField::cosh_like(m); }
ScalarField S(Mode m) { return ScalarField::sinh_like(m); }

// Random field generator for property tests.
ScalarField random_field(std::mt19937& rng, Mode mode) {
    std::uniform_int_distribution<int> nterms(0, 3), tp(0, 2), fr(-2, 2), taup(-1, 2),
        num(-3, 3), which_param(0, 11), pexp(0, 2);
    ScalarField f(mode);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        ParamMonomial mono;
        int pe = pexp(rng);
        if (pe > 0) mono.exps[static_cast<Param>(which_param(rng))] = pe;
        ParamPoly poly;
        poly.add_term(mono, GaussianRational(Rational(num(rng)), Rational(num(rng))));
        int k = mode == Mode::flat ? 0 : fr(rng);
        int p = mode == Mode::flat ? 0 : taup(rng);
        f.add_term(FieldKey{tp(rng), k, p}, poly);
    }
    return f;
}

}  // namespace

TEST_CASE("cosh_like at t = 0 is 1") {
    for (Mode m : {Mode::hyperbolic, Mode::trigonometric})
        CHECK(C(m).at_t_zero() == ScalarField::one(m));
}

TEST_CASE("sinh_like at t = 0 is 0") {
    for (Mode m : {Mode::hyperbolic, Mode::trigonometric})
        CHECK(S(m).at_t_zero().is_zero());
}

TEST_CASE("flat mode has no C/S functions") {
    CHECK_THROWS_AS(ScalarField::cosh_like(Mode::flat), error);
    CHECK_THROWS_AS(ScalarField::sinh_like(Mode::flat), error);
}

TEST_CASE("Pythagorean identities") {
    Mode h = Mode::hyperbolic, t = Mode::trigonometric;
    CHECK(C(h) * C(h) - S(h) * S(h) == ScalarField::one(h));
    CHECK(C(t) * C(t) + S(t) * S(t) == ScalarField::one(t));
}

TEST_CASE("double-angle identities") {
    for (Mode m : {Mode::hyperbolic, Mode::trigonometric}) {
        ScalarField two = ScalarField::constant(GaussianRational(2), m);
        CHECK(two * S(m) * C(m) == ScalarField::sinh_like(m, 2));
        ScalarField cc = C(m) * C(m), ss = S(m) * S(m);
        ScalarField lhs = m == Mode::hyperbolic ? cc + ss : cc - ss;
        CHECK(lhs == ScalarField::cosh_like(m, 2));
    }
}

TEST_CASE("C*C equals (C(2t/tau)+1)/2 in the beta basis") {
    for (Mode m : {Mode::hyperbolic, Mode::trigonometric}) {
        ScalarField expected =
            (ScalarField::cosh_like(m, 2) + ScalarField::one(m)).scaled(GaussianRational(Rational(1, 2)));
        CHECK(C(m) * C(m) == expected);
    }
}

TEST_CASE("S*C is S(2t/tau)/2") {
    for (Mode m : {Mode::hyperbolic, Mode::trigonometric})
        CHECK(S(m) * C(m) == ScalarField::sinh_like(m, 2).scaled(GaussianRational(Rational(1, 2))));
}

TEST_CASE("d_dt matches the paper's h(t) forms") {
    // d/dt kappa1 C+^2 = (kappa1/tau) S+(2t/tau)
    Mode m = Mode::hyperbolic;
    ScalarField f = ScalarField::param(Param::kappa1, m) * C(m) * C(m);
    ScalarField expected = ScalarField::param(Param::kappa1, m) *
                           ScalarField::tau_power(-1, m) * ScalarField::sinh_like(m, 2);
    CHECK(f.d_dt() == expected);

    // d/dt kappa2 tau C- S- = kappa2 C-(2t/tau)
    Mode tm = Mode::trigonometric;
    ScalarField g = ScalarField::param(Param::kappa2, tm) * ScalarField::tau_power(1, tm) *
                    C(tm) * S(tm);
    CHECK(g.d_dt() == ScalarField::param(Param::kappa2, tm) * ScalarField::cosh_like(tm, 2));
}

TEST_CASE("d_dt of a constant is zero") {
    CHECK(ScalarField::param(Param::kappa3, Mode::hyperbolic).d_dt().is_zero());
    CHECK(ScalarField::one(Mode::flat).d_dt().is_zero());
}

TEST_CASE("multiplication by zero") {
    Mode m = Mode::trigonometric;
    ScalarField f = ScalarField::param(Param::kappa4, m) * S(m);
    CHECK((f * ScalarField::zero(m)).is_zero());
    CHECK((ScalarField::zero(m) * f).is_zero());
}

TEST_CASE("mode mixing is rejected") {
    CHECK_THROWS_AS(C(Mode::hyperbolic) * C(Mode::trigonometric), mode_error);
    CHECK_THROWS_AS(C(Mode::hyperbolic) + S(Mode::trigonometric), mode_error);
    // flat constants combine with either mode
    CHECK(!(C(Mode::hyperbolic) * ScalarField::one(Mode::flat)).is_zero());
}

TEST_CASE("ring properties on random fields") {
    std::mt19937 rng(12345);
    for (Mode mode : {Mode::hyperbolic, Mode::trigonometric, Mode::flat}) {
        for (int iter = 0; iter < 200; ++iter) {
            ScalarField f = random_field(rng, mode);
            ScalarField g = random_field(rng, mode);
            ScalarField h = random_field(rng, mode);
            CHECK((f + g) * h == f * h + g * h);
            CHECK((f * g) * h == f * (g * h));
            // Leibniz rule
            CHECK((f * g).d_dt() == f.d_dt() * g + f * g.d_dt());
            // structural equality iff difference is empty
            CHECK((f - g).is_zero() == (f == g));
        }
    }
}
