#include "nht/scalar_field.hpp"

namespace nht {

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::hyperbolic: return "hyperbolic";
        case Mode::trigonometric: return "trigonometric";
        case Mode::flat: return "flat";
    }
    return "?";
}

Mode join_modes(Mode a, Mode b) {
    if (a == b) return a;
    if (a == Mode::flat) return b;
    if (b == Mode::flat) return a;
    throw mode_error("cannot combine hyperbolic and trigonometric values");
}

void ScalarField::add_term(FieldKey key, const ParamPoly& coeff) {
    if (coeff.is_zero()) return;
    if (key.t_pow < 0) throw error("ScalarField: negative t power");
    if (mode_ == Mode::flat && (key.freq != 0 || key.tau_pow != 0))
        throw error("ScalarField: flat mode requires k = 0 and p = 0");
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ScalarField ScalarField::constant(GaussianRational c, Mode mode) {
    ScalarField f(mode);
    f.add_term(FieldKey{}, ParamPoly(std::move(c)));
    return f;
}

ScalarField ScalarField::param(Param p, Mode mode) {
    ScalarField f(mode);
    f.add_term(FieldKey{}, ParamPoly::param(p));
    return f;
}

ScalarField ScalarField::monomial(Mode mode, int t_pow, int freq, int tau_pow, ParamPoly coeff) {
    ScalarField f(mode);
    f.add_term(FieldKey{t_pow, freq, tau_pow}, coeff);
    return f;
}

ScalarField ScalarField::t_power(int m, Mode mode) {
    return monomial(mode, m, 0, 0, ParamPoly(1));
}

ScalarField ScalarField::tau_power(int p, Mode mode) {
    return monomial(mode, 0, 0, p, ParamPoly(1));
}

ScalarField ScalarField::cosh_like(Mode mode, int k) {
    if (mode == Mode::flat) throw error("cosh_like: undefined in flat mode");
    ScalarField f(mode);
    GaussianRational half(Rational(1, 2));
    f.add_term(FieldKey{0, k, 0}, ParamPoly(half));
    f.add_term(FieldKey{0, -k, 0}, ParamPoly(half));
    return f;
}

ScalarField ScalarField::sinh_like(Mode mode, int k) {
    if (mode == Mode::flat) throw error("sinh_like: undefined in flat mode");
    ScalarField f(mode);
    // (b_k - b_{-k})/2 hyperbolic, (b_k - b_{-k})/(2i) trigonometric
    GaussianRational c = mode == Mode::hyperbolic
                             ? GaussianRational(Rational(1, 2))
                             : GaussianRational(Rational(0), Rational(-1, 2));
    f.add_term(FieldKey{0, k, 0}, ParamPoly(c));
    f.add_term(FieldKey{0, -k, 0}, ParamPoly(-c));
    return f;
}

std::optional<ParamPoly> ScalarField::as_constant() const {
    if (terms_.empty()) return ParamPoly();
    if (terms_.size() == 1 && terms_.begin()->first == FieldKey{})
        return terms_.begin()->second;
    return std::nullopt;
}

int ScalarField::t_degree() const {
    int d = -1;
    for (auto& [k, c] : terms_) d = std::max(d, k.t_pow);
    return d;
}

ScalarField ScalarField::operator-() const {
    ScalarField r(mode_);
    for (auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    ScalarField r(join_modes(a.mode_, b.mode_));
    for (auto& [k, c] : a.terms_) r.add_term(k, c);
    for (auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) { return a + (-b); }

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
    ScalarField r(join_modes(a.mode_, b.mode_));
    for (auto& [ka, ca] : a.terms_)
        for (auto& [kb, cb] : b.terms_)
            r.add_term(FieldKey{ka.t_pow + kb.t_pow, ka.freq + kb.freq, ka.tau_pow + kb.tau_pow},
                       ca * cb);
    return r;
}

ScalarField ScalarField::scaled(const ParamPoly& c) const {
    ScalarField r(mode_);
    for (auto& [k, v] : terms_) r.add_term(k, v * c);
    return r;
}

ScalarField ScalarField::d_dt() const {
    ScalarField r(mode_);
    for (auto& [k, c] : terms_) {
        if (k.t_pow > 0)
            r.add_term(FieldKey{k.t_pow - 1, k.freq, k.tau_pow}, c * ParamPoly(k.t_pow));
        if (k.freq != 0) {
            // d/dt beta_k = (k/tau) beta_k hyperbolic, (ik/tau) beta_k trigonometric
            GaussianRational fac = mode_ == Mode::hyperbolic
                                       ? GaussianRational(Rational(k.freq))
                                       : GaussianRational(Rational(0), Rational(k.freq));
            r.add_term(FieldKey{k.t_pow, k.freq, k.tau_pow - 1}, c * ParamPoly(fac));
        }
    }
    return r;
}

ScalarField ScalarField::at_t_zero() const {
    ScalarField r(mode_);
    for (auto& [k, c] : terms_) {
        if (k.t_pow != 0) continue;
        r.add_term(FieldKey{0, 0, k.tau_pow}, c);
    }
    return r;
}

ScalarField ScalarField::substitute(const std::map<Param, GaussianRational>& values) const {
    ScalarField r(mode_);
    for (auto& [k, c] : terms_) r.add_term(k, c.substitute(values));
    return r;
}

ScalarField ScalarField::rename_param(Param from, Param to, const Rational& scale) const {
    ScalarField r(mode_);
    for (auto& [k, c] : terms_) r.add_term(k, c.rename(from, to, scale));
    return r;
}

ScalarField ScalarField::in_mode(Mode m) const {
    ScalarField r(m);
    for (auto& [k, c] : terms_) r.add_term(k, c);
    return r;
}

bool operator==(const ScalarField& a, const ScalarField& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    if (a.mode_ != b.mode_ && a.mode_ != Mode::flat && b.mode_ != Mode::flat) return false;
    return a.terms_ == b.terms_;
}

}  // namespace nht
