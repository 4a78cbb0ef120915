#include "nht/print.hpp"

#include <nlohmann/json.hpp>

#include <set>
#include <vector>

namespace nht {

namespace {

enum class Style { text, latex };

// One printable product: poly * t^m * tau^p * [C/S](k t/tau).
struct Piece {
    ParamPoly poly;
    int t_pow = 0;
    int tau_pow = 0;
    int trig_k = 0;     // 0 = no trig factor
    bool trig_is_c = true;
};

std::vector<Piece> decompose(const ScalarField& f) {
    // Group terms by (m, p), then fold conjugate beta-pairs into C/S.
    std::map<std::pair<int, int>, std::map<int, ParamPoly>> groups;
    for (auto& [key, poly] : f.terms())
        groups[{key.t_pow, key.tau_pow}][key.freq] = poly;

    const ParamPoly imag(GaussianRational::unit_i());
    std::vector<Piece> pieces;
    for (auto& [mp, freqs] : groups) {
        auto piece = [&](ParamPoly poly, int k, bool is_c) {
            if (poly.is_zero()) return;
            pieces.push_back(Piece{std::move(poly), mp.first, mp.second, k, is_c});
        };
        if (auto it = freqs.find(0); it != freqs.end()) piece(it->second, 0, true);
        std::set<int> abs_freqs;
        for (auto& [k, ck] : freqs)
            if (k != 0) abs_freqs.insert(k < 0 ? -k : k);
        for (int k : abs_freqs) {
            ParamPoly ck, cmk;
            if (auto it = freqs.find(k); it != freqs.end()) ck = it->second;
            if (auto it = freqs.find(-k); it != freqs.end()) cmk = it->second;
            // c_k b_k + c_-k b_-k = a C(k t/tau) + b S(k t/tau)
            ParamPoly a = ck + cmk;
            ParamPoly b = f.mode() == Mode::hyperbolic ? ck - cmk : imag * (ck - cmk);
            piece(a, k, true);
            piece(b, k, false);
        }
    }
    return pieces;
}

std::string rational_str(const Rational& r, Style s) {
    if (s == Style::latex && denominator(r) != 1) {
        Rational a = abs(r);
        std::string body =
            "\\tfrac{" + Integer(numerator(a)).str() + "}{" + Integer(denominator(a)).str() + "}";
        return (r < 0 ? "-" : "") + body;
    }
    return to_string(r);
}

std::string param_str(Param p, Style s) {
    std::string n = param_name(p);
    if (s == Style::text) return n;
    std::string base = n.substr(0, 5) == "alpha" ? "\\alpha" : "\\kappa";
    return base + "_" + n.substr(5);
}

std::string trig_str(Mode mode, bool is_c, int k, Style s) {
    std::string fn = mode == Mode::hyperbolic ? (is_c ? "cosh" : "sinh") : (is_c ? "cos" : "sin");
    if (s == Style::text) {
        std::string arg = k == 1 ? "t/tau" : std::to_string(k) + "*t/tau";
        return fn + "(" + arg + ")";
    }
    std::string num = k == 1 ? "t" : std::to_string(k) + "t";
    return "\\" + fn + "\\left(\\frac{" + num + "}{\\tau}\\right)";
}

std::string pow_str(const std::string& base, int e, Style s) {
    if (e == 1) return base;
    if (s == Style::text) return base + "^" + std::to_string(e);
    return base + "^{" + std::to_string(e) + "}";
}

struct Printed {
    bool negative = false;
    std::string body;
};

std::string join_factors(std::vector<std::string> mul, const std::vector<std::string>& div, Style s) {
    std::string sep = s == Style::text ? "*" : " ";
    std::string out;
    if (mul.empty()) out = "1";
    for (std::size_t i = 0; i < mul.size(); ++i) {
        if (i) out += sep;
        out += mul[i];
    }
    for (auto& d : div) out += (s == Style::text ? "/" + d : sep + d);
    return out;
}

// Suffix factors shared by the whole piece: t, tau, trig, coordinates.
struct Suffix {
    std::vector<std::string> mul;
    std::vector<std::string> div;
};

Suffix piece_suffix(const Piece& p, Mode mode, Style s) {
    Suffix sx;
    if (p.t_pow > 0) sx.mul.push_back(pow_str("t", p.t_pow, s));
    std::string tau = s == Style::text ? "tau" : "\\tau";
    if (p.tau_pow > 0) sx.mul.push_back(pow_str(tau, p.tau_pow, s));
    if (p.trig_k != 0) sx.mul.push_back(trig_str(mode, p.trig_is_c, p.trig_k, s));
    if (p.tau_pow < 0) {
        if (s == Style::text)
            sx.div.push_back(pow_str(tau, -p.tau_pow, s));
        else
            sx.mul.push_back(tau + "^{" + std::to_string(p.tau_pow) + "}");
    }
    return sx;
}

std::string monomial_factors(const ParamMonomial& m, Style s, std::vector<std::string>& out) {
    for (auto& [p, e] : m.exps) out.push_back(pow_str(param_str(p, s), e, s));
    return {};
}

// Single param-monomial times suffix.
Printed print_monomial_product(const GaussianRational& c, const ParamMonomial& m, const Suffix& sx,
                               Style s) {
    Printed r;
    std::vector<std::string> mul;
    GaussianRational mag = c;
    if (c.im == 0) {
        r.negative = c.re < 0;
        if (r.negative) mag.re = -mag.re;
        if (mag.re != 1) mul.push_back(rational_str(mag.re, s));
    } else if (c.re == 0) {
        r.negative = c.im < 0;
        if (r.negative) mag.im = -mag.im;
        if (!(mag.im == 1)) mul.push_back(rational_str(mag.im, s));
        mul.push_back("i");
    } else {
        mul.push_back("(" + to_string(c) + ")");
    }
    monomial_factors(m, s, mul);
    for (auto& f : sx.mul) mul.push_back(f);
    r.body = join_factors(std::move(mul), sx.div, s);
    return r;
}

std::string join_terms(const std::vector<Printed>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0)
            out += terms[i].negative ? "-" : "";
        else
            out += terms[i].negative ? "-" : "+";
        out += terms[i].body;
    }
    return out;
}

// Emit a piece as one or more top-level terms (one per param monomial
// when the trailing factors are empty, a parenthesized sum otherwise).
void emit_piece(const Piece& p, Mode mode, const std::vector<std::string>& xfactors, Style s,
                std::vector<Printed>& out) {
    Suffix sx = piece_suffix(p, mode, s);
    for (auto& xf : xfactors) sx.mul.push_back(xf);
    const auto& terms = p.poly.terms();
    if (terms.size() == 1) {
        out.push_back(print_monomial_product(terms.begin()->second, terms.begin()->first, sx, s));
        return;
    }
    if (sx.mul.empty() && sx.div.empty()) {
        for (auto& [m, c] : terms) out.push_back(print_monomial_product(c, m, Suffix{}, s));
        return;
    }
    std::vector<Printed> inner;
    for (auto& [m, c] : terms) inner.push_back(print_monomial_product(c, m, Suffix{}, s));
    Printed r;
    std::vector<std::string> mul{"(" + join_terms(inner) + ")"};
    for (auto& f : sx.mul) mul.push_back(f);
    r.body = join_factors(std::move(mul), sx.div, s);
    out.push_back(r);
}

std::vector<std::string> x_factors(const XIndex& x, Style s) {
    std::vector<std::string> out;
    for (int a = 0; a < 3; ++a) {
        if (x[a] == 0) continue;
        std::string base = s == Style::text ? "x" + std::to_string(a + 1)
                                            : "x_" + std::to_string(a + 1);
        out.push_back(pow_str(base, x[a], s));
    }
    return out;
}

std::string print_expr(const SpaceExpr& e, Style s) {
    std::vector<Printed> terms;
    for (auto& [x, field] : e.terms()) {
        auto xf = x_factors(x, s);
        auto pieces = decompose(field);
        if (pieces.size() <= 1 || xf.empty()) {
            for (auto& p : pieces) emit_piece(p, e.mode(), xf, s, terms);
        } else {
            std::vector<Printed> inner;
            for (auto& p : pieces) emit_piece(p, e.mode(), {}, s, inner);
            Printed r;
            std::vector<std::string> mul{"(" + join_terms(inner) + ")"};
            for (auto& f : xf) mul.push_back(f);
            r.body = join_factors(std::move(mul), {}, s);
            terms.push_back(r);
        }
    }
    return join_terms(terms);
}

}  // namespace

std::string print_text(const SpaceExpr& e) { return print_expr(e, Style::text); }
std::string print_text(const ScalarField& f) { return print_expr(SpaceExpr::scalar(f), Style::text); }
std::string print_latex(const SpaceExpr& e) { return print_expr(e, Style::latex); }
std::string print_latex(const ScalarField& f) { return print_expr(SpaceExpr::scalar(f), Style::latex); }

std::string print_json(const SpaceExpr& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [x, field] : e.terms()) {
        nlohmann::json coeff = nlohmann::json::array();
        for (auto& [key, poly] : field.terms()) {
            for (auto& [mono, c] : poly.terms()) {
                nlohmann::json params = nlohmann::json::object();
                for (auto& [p, exp] : mono.exps) params[param_name(p)] = exp;
                coeff.push_back({{"m", key.t_pow},
                                 {"k", key.freq},
                                 {"p", key.tau_pow},
                                 {"re", to_string(c.re)},
                                 {"im", to_string(c.im)},
                                 {"params", params}});
            }
        }
        terms.push_back({{"x", {x[0], x[1], x[2]}}, {"coeff", coeff}});
    }
    nlohmann::json j{{"mode", mode_name(e.mode())}, {"terms", terms}};
    return j.dump();
}

}  // namespace nht
