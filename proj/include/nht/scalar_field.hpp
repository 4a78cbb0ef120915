#ifndef NHT_SCALAR_FIELD_HPP
#define NHT_SCALAR_FIELD_HPP

#include "nht/params.hpp"

#include <map>
#include <string>
#include <tuple>

namespace nht {

/// Coefficient basis: hyperbolic beta_k = exp(k t/tau), trigonometric
/// beta_k = exp(i k t/tau). Flat is the contracted (tau-free) case and
/// requires k = p = 0.
enum class Mode { hyperbolic, trigonometric, flat };

std::string mode_name(Mode m);

/// Result mode for combining two values; flat is compatible with either
/// oscillatory mode, hyperbolic and trigonometric never mix.
Mode join_modes(Mode a, Mode b);

/// One basis element t^m * tau^p * beta_k.
struct FieldKey {
    int t_pow = 0;    // m >= 0
    int freq = 0;     // k
    int tau_pow = 0;  // p

    friend bool operator==(const FieldKey&, const FieldKey&) = default;
    friend bool operator<(const FieldKey& a, const FieldKey& b) {
        return std::tie(a.t_pow, a.freq, a.tau_pow) < std::tie(b.t_pow, b.freq, b.tau_pow);
    }
};

/// Exact scalar coefficient function of t and tau: a finite sum
/// sum c_{m,k,p} t^m tau^p beta_k with ParamPoly coefficients.
/// Canonical form, so structural equality decides mathematical equality.
class ScalarField {
public:
    explicit ScalarField(Mode mode = Mode::flat) : mode_(mode) {}

    static ScalarField zero(Mode mode = Mode::flat) { return ScalarField(mode); }
    static ScalarField constant(GaussianRational c, Mode mode = Mode::flat);
    static ScalarField one(Mode mode = Mode::flat) { return constant(GaussianRational(1), mode); }
    static ScalarField unit_i(Mode mode = Mode::flat) { return constant(GaussianRational::unit_i(), mode); }
    static ScalarField param(Param p, Mode mode = Mode::flat);
    static ScalarField monomial(Mode mode, int t_pow, int freq, int tau_pow, ParamPoly coeff);
    static ScalarField t_power(int m, Mode mode = Mode::flat);
    static ScalarField tau_power(int p, Mode mode);

    /// C_+/- for k = 1 by default, or any integer multiple of t/tau.
    static ScalarField cosh_like(Mode mode, int k = 1);
    /// S_+/-.
    static ScalarField sinh_like(Mode mode, int k = 1);

    Mode mode() const { return mode_; }
    const std::map<FieldKey, ParamPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Constant value if the field has no t/tau/beta dependence at all.
    std::optional<ParamPoly> as_constant() const;

    /// Degree in t, counting beta_k as t-independent; -1 for zero.
    int t_degree() const;

    ScalarField operator-() const;
    friend ScalarField operator+(const ScalarField& a, const ScalarField& b);
    friend ScalarField operator-(const ScalarField& a, const ScalarField& b);
    friend ScalarField operator*(const ScalarField& a, const ScalarField& b);
    ScalarField& operator+=(const ScalarField& b) { return *this = *this + b; }
    ScalarField& operator-=(const ScalarField& b) { return *this = *this - b; }
    ScalarField& operator*=(const ScalarField& b) { return *this = *this * b; }

    ScalarField scaled(const ParamPoly& c) const;
    ScalarField scaled(const GaussianRational& c) const { return scaled(ParamPoly(c)); }

    /// Exact d/dt.
    ScalarField d_dt() const;

    /// Exact value at t = 0 (kills t-powers, collapses beta_k to 1).
    ScalarField at_t_zero() const;

    ScalarField substitute(const std::map<Param, GaussianRational>& values) const;
    ScalarField rename_param(Param from, Param to, const Rational& scale) const;

    /// Reinterpret in another mode; only legal when the terms are valid there
    /// (flat -> anything always works, oscillatory -> flat requires k = p = 0).
    ScalarField in_mode(Mode m) const;

    friend bool operator==(const ScalarField& a, const ScalarField& b);
    friend bool operator!=(const ScalarField& a, const ScalarField& b) { return !(a == b); }

    void add_term(FieldKey key, const ParamPoly& coeff);

private:
    Mode mode_;
    std::map<FieldKey, ParamPoly> terms_;
};

}  // namespace nht

#endif
