#ifndef NHT_PARAMS_HPP
#define NHT_PARAMS_HPP

#include "nht/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace nht {

/// Opaque commuting deformation parameters.
enum class Param {
    alpha1, alpha2, alpha3, alpha4, alpha5, alpha6,
    kappa1, kappa2, kappa3, kappa4, kappa5, kappa6,
};

std::string param_name(Param p);
std::optional<Param> param_from_name(std::string_view name);

/// Monomial in the parameters; zero exponents are never stored.
struct ParamMonomial {
    std::map<Param, int> exps;

    bool is_one() const { return exps.empty(); }
    friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;
    friend bool operator<(const ParamMonomial& a, const ParamMonomial& b) { return a.exps < b.exps; }

    friend ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b) {
        ParamMonomial r = a;
        for (auto& [p, e] : b.exps) {
            int n = (r.exps[p] += e);
            if (n == 0) r.exps.erase(p);
        }
        return r;
    }
};

/// Polynomial in the parameters over GaussianRational, canonical (no zero coefficients).
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(GaussianRational c) {
        if (!c.is_zero()) terms_[ParamMonomial{}] = std::move(c);
    }
    ParamPoly(long n) : ParamPoly(GaussianRational(n)) {}

    static ParamPoly param(Param p, int exp = 1) {
        ParamPoly r;
        ParamMonomial m;
        if (exp != 0) m.exps[p] = exp;
        r.terms_[m] = GaussianRational(1);
        return r;
    }

    const std::map<ParamMonomial, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// The constant coefficient if the polynomial is a pure constant, nullopt otherwise.
    std::optional<GaussianRational> as_constant() const {
        if (terms_.empty()) return GaussianRational(0);
        if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
        return std::nullopt;
    }

    ParamPoly operator-() const {
        ParamPoly r;
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    ParamPoly& operator+=(const ParamPoly& b) { return *this = *this + b; }
    ParamPoly& operator*=(const ParamPoly& b) { return *this = *this * b; }

    friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

    void add_term(const ParamMonomial& m, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Substitute exact values for parameters (partial maps allowed).
    ParamPoly substitute(const std::map<Param, GaussianRational>& values) const;

    /// Replace `from` by `scale * to` (used to express kappa tables in alpha).
    ParamPoly rename(Param from, Param to, const Rational& scale) const;

private:
    std::map<ParamMonomial, GaussianRational> terms_;
};

}  // namespace nht

#endif
