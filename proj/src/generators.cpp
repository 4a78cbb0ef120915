#include "nht/generators.hpp"

#include "nht/print.hpp"

namespace nht {

std::string AlgebraKind::name() const {
    std::string base;
    switch (family) {
        case Family::nh_plus: base = "nh-plus"; break;
        case Family::nh_minus: base = "nh-minus"; break;
        case Family::galilei: base = "galilei"; break;
    }
    if (!with_acceleration) base += " (no acceleration)";
    return base;
}

GeneratorName GeneratorName::m(int i, int j) {
    if (i == j || i < 1 || j < 1 || i > 3 || j > 3) throw error("invalid rotation indices");
    if (i > j) std::swap(i, j);
    return {Tag::M, i, j};
}

std::string GeneratorName::str() const {
    switch (tag) {
        case Tag::H: return "H";
        case Tag::P: return "P" + std::to_string(i);
        case Tag::K: return "K" + std::to_string(i);
        case Tag::F: return "F" + std::to_string(i);
        case Tag::M: return "M" + std::to_string(i) + std::to_string(j);
    }
    return "?";
}

std::optional<GeneratorName> generator_from_name(std::string_view name) {
    if (name == "H") return GeneratorName::h();
    if (name.size() == 2 && name[1] >= '1' && name[1] <= '3') {
        int i = name[1] - '0';
        if (name[0] == 'P') return GeneratorName::p(i);
        if (name[0] == 'K') return GeneratorName::k(i);
        if (name[0] == 'F') return GeneratorName::f(i);
    }
    if (name.size() == 3 && name[0] == 'M') {
        int i = name[1] - '0', j = name[2] - '0';
        if (i >= 1 && j >= 1 && i < j && j <= 3) return GeneratorName::m(i, j);
    }
    return std::nullopt;
}

std::vector<GeneratorName> generator_list(const AlgebraKind& kind) {
    std::vector<GeneratorName> gens{GeneratorName::h()};
    for (int i = 1; i <= 3; ++i) gens.push_back(GeneratorName::p(i));
    for (int i = 1; i <= 3; ++i) gens.push_back(GeneratorName::k(i));
    if (kind.with_acceleration)
        for (int i = 1; i <= 3; ++i) gens.push_back(GeneratorName::f(i));
    gens.push_back(GeneratorName::m(1, 2));
    gens.push_back(GeneratorName::m(1, 3));
    gens.push_back(GeneratorName::m(2, 3));
    return gens;
}

DiffOperator DiffOperator::term(SpaceExpr coeff, DerivIndex d) {
    DiffOperator op(coeff.mode());
    op.add_term(d, coeff);
    return op;
}

void DiffOperator::add_term(const DerivIndex& d, const SpaceExpr& coeff) {
    if (coeff.is_zero()) return;
    mode_ = join_modes(mode_, coeff.mode());
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, coeff.in_mode(mode_));
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOperator DiffOperator::operator-() const {
    DiffOperator r(mode_);
    for (auto& [d, c] : terms_) r.terms_[d] = -c;
    return r;
}

DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
    DiffOperator r(join_modes(a.mode_, b.mode_));
    for (auto& [d, c] : a.terms_) r.add_term(d, c);
    for (auto& [d, c] : b.terms_) r.add_term(d, c);
    return r;
}

DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) { return a + (-b); }

DiffOperator DiffOperator::scaled(const ScalarField& c) const {
    DiffOperator r(join_modes(mode_, c.mode()));
    for (auto& [d, v] : terms_) r.add_term(d, v.scaled(c));
    return r;
}

namespace {

SpaceExpr derivative(const SpaceExpr& e, const DerivIndex& d) {
    SpaceExpr r = e;
    for (int n = 0; n < d.dt; ++n) r = r.d_dt();
    for (int axis = 1; axis <= 3; ++axis)
        for (int n = 0; n < d.dx[axis - 1]; ++n) r = r.d_dxi(axis);
    return r;
}

Integer binom(int n, int k) {
    Integer r = 1;
    for (int j = 0; j < k; ++j) r = r * (n - j) / (j + 1);
    return r;
}

}  // namespace

SpaceExpr DiffOperator::apply(const SpaceExpr& e) const {
    SpaceExpr out(join_modes(mode_, e.mode()));
    for (auto& [d, c] : terms_) out += c * derivative(e, d);
    return out;
}

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
    DiffOperator r(join_modes(a.mode(), b.mode()));
    for (auto& [da, ca] : a.terms()) {
        for (auto& [db, cb] : b.terms()) {
            // Leibniz: move the derivatives of `a` across the coefficient of `b`.
            for (int jt = 0; jt <= da.dt; ++jt)
                for (int j1 = 0; j1 <= da.dx[0]; ++j1)
                    for (int j2 = 0; j2 <= da.dx[1]; ++j2)
                        for (int j3 = 0; j3 <= da.dx[2]; ++j3) {
                            DerivIndex hit{da.dt - jt,
                                           {da.dx[0] - j1, da.dx[1] - j2, da.dx[2] - j3}};
                            Integer mult = binom(da.dt, jt) * binom(da.dx[0], j1) *
                                           binom(da.dx[1], j2) * binom(da.dx[2], j3);
                            SpaceExpr coeff =
                                ca * derivative(cb, hit).scaled(GaussianRational(Rational(mult)));
                            DerivIndex out{jt + db.dt,
                                           {j1 + db.dx[0], j2 + db.dx[1], j3 + db.dx[2]}};
                            r.add_term(out, coeff);
                        }
        }
    }
    return r;
}

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) {
    return compose(a, b) - compose(b, a);
}

bool operator==(const DiffOperator& a, const DiffOperator& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
    }
    return true;
}

DiffOperator standard_rep(const GeneratorName& g, const AlgebraKind& kind) {
    const Mode mode = kind.mode();
    const bool galilei = kind.family == AlgebraKind::Family::galilei;
    const ScalarField one = ScalarField::one(mode);
    const ScalarField im = ScalarField::unit_i(mode);

    auto dx = [](int axis) {
        DerivIndex d;
        d.dx[axis - 1] = 1;
        return d;
    };

    switch (g.tag) {
        case GeneratorName::Tag::H:
            return DiffOperator::term(SpaceExpr::scalar(im), DerivIndex{1, {0, 0, 0}});
        case GeneratorName::Tag::P: {
            ScalarField c = galilei ? im : im * ScalarField::cosh_like(mode);
            return DiffOperator::term(SpaceExpr::scalar(c), dx(g.i));
        }
        case GeneratorName::Tag::K: {
            ScalarField c = galilei ? im * ScalarField::t_power(1, mode)
                                    : im * ScalarField::tau_power(1, mode) *
                                          ScalarField::sinh_like(mode);
            return DiffOperator::term(SpaceExpr::scalar(c), dx(g.i));
        }
        case GeneratorName::Tag::F: {
            if (!kind.with_acceleration) throw error("acceleration generators disabled");
            ScalarField c;
            if (galilei) {
                c = im * ScalarField::t_power(2, mode);
            } else {
                ScalarField paren = ScalarField::cosh_like(mode) - ScalarField::one(mode);
                GaussianRational two_i(Rational(0), Rational(2 * kind.sign()));
                c = (ScalarField::constant(two_i, mode) * ScalarField::tau_power(2, mode)) * paren;
            }
            return DiffOperator::term(SpaceExpr::scalar(c), dx(g.i));
        }
        case GeneratorName::Tag::M: {
            DiffOperator op(mode);
            SpaceExpr xi = SpaceExpr::coordinate(g.i, mode);
            SpaceExpr xj = SpaceExpr::coordinate(g.j, mode);
            op.add_term(dx(g.j), xi.scaled(GaussianRational::unit_i()));
            op.add_term(dx(g.i), -xj.scaled(GaussianRational::unit_i()));
            return op;
        }
    }
    throw error("unknown generator");
}

namespace {

// Accumulate c * M(i,j), folding antisymmetry into the coefficient.
void add_m(std::vector<BracketTerm>& out, GaussianRational c, int i, int j, Mode mode) {
    if (i == j) return;
    if (i > j) {
        std::swap(i, j);
        c = -c;
    }
    out.push_back({ScalarField::constant(c, mode), GeneratorName::m(i, j)});
}

int delta(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

std::vector<BracketTerm> bracket(const GeneratorName& a, const GeneratorName& b,
                                 const AlgebraKind& kind) {
    using Tag = GeneratorName::Tag;
    const Mode mode = kind.mode();
    const GaussianRational im = GaussianRational::unit_i();

    // Flip to a canonical order and negate.
    auto negated = [&](const GeneratorName& x, const GeneratorName& y) {
        auto combo = bracket(x, y, kind);
        for (auto& t : combo) t.coeff = -t.coeff;
        return combo;
    };

    std::vector<BracketTerm> out;
    if (a.tag == Tag::M && b.tag == Tag::M) {
        // [M_ij, M_kl] = i(d_il M_jk - d_jl M_ik + d_jk M_il - d_ik M_jl)
        int i = a.i, j = a.j, k = b.i, l = b.j;
        if (delta(i, l)) add_m(out, im, j, k, mode);
        if (delta(j, l)) add_m(out, -im, i, k, mode);
        if (delta(j, k)) add_m(out, im, i, l, mode);
        if (delta(i, k)) add_m(out, -im, j, l, mode);
        return out;
    }
    if (a.tag == Tag::M && (b.tag == Tag::P || b.tag == Tag::K || b.tag == Tag::F)) {
        // [M_ij, X_k] = i(d_jk X_i - d_ik X_j)
        auto mk = [&](int idx) {
            return b.tag == Tag::P   ? GeneratorName::p(idx)
                   : b.tag == Tag::K ? GeneratorName::k(idx)
                                     : GeneratorName::f(idx);
        };
        if (delta(a.j, b.i)) out.push_back({ScalarField::constant(im, mode), mk(a.i)});
        if (delta(a.i, b.i)) out.push_back({ScalarField::constant(-im, mode), mk(a.j)});
        return out;
    }
    if ((a.tag == Tag::P || a.tag == Tag::K || a.tag == Tag::F) && b.tag == Tag::M)
        return negated(b, a);

    if (a.tag == Tag::H && b.tag == Tag::P) {
        // [H, P_i] = +/- (i/tau^2) K_i for NH, 0 for Galilei
        if (kind.sign() != 0) {
            GaussianRational c(Rational(0), Rational(kind.sign()));
            out.push_back({ScalarField::monomial(mode, 0, 0, -2, ParamPoly(c)),
                           GeneratorName::k(b.i)});
        }
        return out;
    }
    if (a.tag == Tag::H && b.tag == Tag::K) {
        // [K_i, H] = -i P_i
        out.push_back({ScalarField::constant(im, mode), GeneratorName::p(b.i)});
        return out;
    }
    if (a.tag == Tag::H && b.tag == Tag::F) {
        // [H, F_i] = 2i K_i
        out.push_back({ScalarField::constant(im + im, mode), GeneratorName::k(b.i)});
        return out;
    }
    if (b.tag == Tag::H && a.tag != Tag::H && a.tag != Tag::M) return negated(b, a);

    // Everything else vanishes: [P,P], [K,K], [K,P], [F,F], [F,P], [F,K], [M,H], [H,H].
    return out;
}

DiffOperator rep_of(const std::vector<BracketTerm>& combo, const AlgebraKind& kind) {
    DiffOperator r(kind.mode());
    for (auto& t : combo) r += standard_rep(t.gen, kind).scaled(t.coeff);
    return r;
}

AlgebraReport verify_algebra(const AlgebraKind& kind) {
    AlgebraReport report;
    report.kind = kind;
    auto gens = generator_list(kind);
    for (std::size_t ia = 0; ia < gens.size(); ++ia) {
        for (std::size_t ib = ia + 1; ib < gens.size(); ++ib) {
            auto combo = bracket(gens[ia], gens[ib], kind);
            DiffOperator lhs = commutator(standard_rep(gens[ia], kind), standard_rep(gens[ib], kind));
            DiffOperator rhs = rep_of(combo, kind);
            BracketCheck chk;
            chk.a = gens[ia];
            chk.b = gens[ib];
            chk.ok = lhs == rhs;
            if (combo.empty()) {
                chk.expected = "0";
            } else {
                for (std::size_t n = 0; n < combo.size(); ++n) {
                    if (n) chk.expected += "+";
                    chk.expected +=
                        "(" + print_text(combo[n].coeff) + ")*" + combo[n].gen.str();
                }
            }
            report.all_ok = report.all_ok && chk.ok;
            report.checks.push_back(chk);
        }
    }
    return report;
}

}  // namespace nht
