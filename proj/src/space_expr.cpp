#include "nht/space_expr.hpp"

namespace nht {

void SpaceExpr::add_term(const XIndex& x, const ScalarField& coeff) {
    if (coeff.is_zero()) return;
    for (int e : x)
        if (e < 0) throw error("SpaceExpr: negative coordinate exponent");
    mode_ = join_modes(mode_, coeff.mode());
    auto it = terms_.find(x);
    if (it == terms_.end()) {
        terms_.emplace(x, coeff.in_mode(mode_));
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SpaceExpr SpaceExpr::scalar(ScalarField f) {
    SpaceExpr e(f.mode());
    e.add_term(XIndex{0, 0, 0}, f);
    return e;
}

SpaceExpr SpaceExpr::coordinate(int axis, Mode mode) {
    if (axis < 1 || axis > 3) throw error("SpaceExpr: axis out of range");
    SpaceExpr e(mode);
    XIndex x{0, 0, 0};
    x[axis - 1] = 1;
    e.add_term(x, ScalarField::one(mode));
    return e;
}

int SpaceExpr::x_degree() const {
    int d = -1;
    for (auto& [x, c] : terms_) d = std::max(d, x[0] + x[1] + x[2]);
    return d;
}

std::optional<ScalarField> SpaceExpr::as_scalar() const {
    if (terms_.empty()) return ScalarField::zero(mode_);
    if (terms_.size() == 1 && terms_.begin()->first == XIndex{0, 0, 0})
        return terms_.begin()->second;
    return std::nullopt;
}

SpaceExpr SpaceExpr::operator-() const {
    SpaceExpr r(mode_);
    for (auto& [x, c] : terms_) r.terms_[x] = -c;
    return r;
}

SpaceExpr operator+(const SpaceExpr& a, const SpaceExpr& b) {
    SpaceExpr r(join_modes(a.mode_, b.mode_));
    for (auto& [x, c] : a.terms_) r.add_term(x, c);
    for (auto& [x, c] : b.terms_) r.add_term(x, c);
    return r;
}

SpaceExpr operator-(const SpaceExpr& a, const SpaceExpr& b) { return a + (-b); }

SpaceExpr operator*(const SpaceExpr& a, const SpaceExpr& b) {
    SpaceExpr r(join_modes(a.mode_, b.mode_));
    for (auto& [xa, ca] : a.terms_)
        for (auto& [xb, cb] : b.terms_)
            r.add_term(XIndex{xa[0] + xb[0], xa[1] + xb[1], xa[2] + xb[2]}, ca * cb);
    return r;
}

SpaceExpr SpaceExpr::scaled(const ScalarField& c) const {
    SpaceExpr r(join_modes(mode_, c.mode()));
    for (auto& [x, v] : terms_) r.add_term(x, v * c);
    return r;
}

SpaceExpr SpaceExpr::scaled(const GaussianRational& c) const {
    return scaled(ScalarField::constant(c, mode_));
}

SpaceExpr SpaceExpr::d_dxi(int axis) const {
    if (axis < 1 || axis > 3) throw error("SpaceExpr: axis out of range");
    SpaceExpr r(mode_);
    for (auto& [x, c] : terms_) {
        int e = x[axis - 1];
        if (e == 0) continue;
        XIndex y = x;
        y[axis - 1] = e - 1;
        r.add_term(y, c.scaled(ParamPoly(e)));
    }
    return r;
}

SpaceExpr SpaceExpr::d_dt() const {
    SpaceExpr r(mode_);
    for (auto& [x, c] : terms_) r.add_term(x, c.d_dt());
    return r;
}

SpaceExpr SpaceExpr::substitute(const std::map<Param, GaussianRational>& values) const {
    SpaceExpr r(mode_);
    for (auto& [x, c] : terms_) r.add_term(x, c.substitute(values));
    return r;
}

SpaceExpr SpaceExpr::in_mode(Mode m) const {
    SpaceExpr r(m);
    for (auto& [x, c] : terms_) r.add_term(x, c.in_mode(m));
    return r;
}

bool operator==(const SpaceExpr& a, const SpaceExpr& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (!(ia->second == ib->second)) return false;
    }
    return true;
}

}  // namespace nht
