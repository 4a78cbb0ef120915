#ifndef NHT_SPACE_EXPR_HPP
#define NHT_SPACE_EXPR_HPP

#include "nht/scalar_field.hpp"

#include <array>
#include <map>

namespace nht {

using XIndex = std::array<int, 3>;  // exponents of x1, x2, x3

/// Polynomial in x1, x2, x3 with ScalarField coefficients; the function
/// module the symmetry algebra acts on. Canonical: no zero coefficients,
/// all coefficients share the expression's mode.
class SpaceExpr {
public:
    explicit SpaceExpr(Mode mode = Mode::flat) : mode_(mode) {}

    static SpaceExpr zero(Mode mode = Mode::flat) { return SpaceExpr(mode); }
    static SpaceExpr scalar(ScalarField f);
    static SpaceExpr one(Mode mode = Mode::flat) { return scalar(ScalarField::one(mode)); }
    static SpaceExpr coordinate(int axis, Mode mode = Mode::flat);  // axis in 1..3

    Mode mode() const { return mode_; }
    const std::map<XIndex, ScalarField>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Total degree in the x coordinates; -1 for zero.
    int x_degree() const;

    /// The coefficient field if the expression is x-independent, nullopt otherwise.
    std::optional<ScalarField> as_scalar() const;

    SpaceExpr operator-() const;
    friend SpaceExpr operator+(const SpaceExpr& a, const SpaceExpr& b);
    friend SpaceExpr operator-(const SpaceExpr& a, const SpaceExpr& b);
    friend SpaceExpr operator*(const SpaceExpr& a, const SpaceExpr& b);
    SpaceExpr& operator+=(const SpaceExpr& b) { return *this = *this + b; }
    SpaceExpr& operator-=(const SpaceExpr& b) { return *this = *this - b; }
    SpaceExpr& operator*=(const SpaceExpr& b) { return *this = *this * b; }

    SpaceExpr scaled(const ScalarField& c) const;
    SpaceExpr scaled(const GaussianRational& c) const;

    SpaceExpr d_dxi(int axis) const;  // axis in 1..3
    SpaceExpr d_dt() const;

    SpaceExpr substitute(const std::map<Param, GaussianRational>& values) const;
    SpaceExpr in_mode(Mode m) const;

    friend bool operator==(const SpaceExpr& a, const SpaceExpr& b);
    friend bool operator!=(const SpaceExpr& a, const SpaceExpr& b) { return !(a == b); }

    void add_term(const XIndex& x, const ScalarField& coeff);

private:
    Mode mode_;
    std::map<XIndex, ScalarField> terms_;
};

}  // namespace nht

#endif
