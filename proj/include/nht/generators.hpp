#ifndef NHT_GENERATORS_HPP
#define NHT_GENERATORS_HPP

#include "nht/space_expr.hpp"

#include <string>
#include <vector>

namespace nht {

/// Which kinematical algebra a computation lives in. The NH signs fix the
/// coefficient mode (hyperbolic / trigonometric); Galilei is flat.
struct AlgebraKind {
    enum class Family { nh_plus, nh_minus, galilei };
    Family family = Family::nh_plus;
    bool with_acceleration = true;

    Mode mode() const {
        switch (family) {
            case Family::nh_plus: return Mode::hyperbolic;
            case Family::nh_minus: return Mode::trigonometric;
            case Family::galilei: return Mode::flat;
        }
        return Mode::flat;
    }
    /// +1 for NH+, -1 for NH-, 0 for Galilei.
    int sign() const {
        if (family == Family::nh_plus) return 1;
        if (family == Family::nh_minus) return -1;
        return 0;
    }
    std::string name() const;

    friend bool operator==(const AlgebraKind&, const AlgebraKind&) = default;
};

/// H, P_i, K_i, F_i or M_ij (stored with i < j).
struct GeneratorName {
    enum class Tag { H, P, K, F, M };
    Tag tag = Tag::H;
    int i = 0, j = 0;

    static GeneratorName h() { return {Tag::H}; }
    static GeneratorName p(int i) { return {Tag::P, i}; }
    static GeneratorName k(int i) { return {Tag::K, i}; }
    static GeneratorName f(int i) { return {Tag::F, i}; }
    static GeneratorName m(int i, int j);  // returns canonical M(min,max); callers track the sign

    std::string str() const;

    friend bool operator==(const GeneratorName&, const GeneratorName&) = default;
    friend bool operator<(const GeneratorName& a, const GeneratorName& b) {
        return std::tie(a.tag, a.i, a.j) < std::tie(b.tag, b.i, b.j);
    }
};

/// Parse "H", "P1".."P3", "K1".."K3", "F1".."F3", "M12"/"M13"/"M23".
std::optional<GeneratorName> generator_from_name(std::string_view name);

/// All generators of the algebra: H, P, K, (F), M12, M13, M23.
std::vector<GeneratorName> generator_list(const AlgebraKind& kind);

/// Derivative multi-index of one normal-ordered operator term.
struct DerivIndex {
    int dt = 0;
    std::array<int, 3> dx{0, 0, 0};

    int order() const { return dt + dx[0] + dx[1] + dx[2]; }
    friend bool operator==(const DerivIndex&, const DerivIndex&) = default;
    friend bool operator<(const DerivIndex& a, const DerivIndex& b) {
        return std::tie(a.dt, a.dx) < std::tie(b.dt, b.dx);
    }
};

/// Normal-ordered finite sum of SpaceExpr-coefficient derivative monomials.
class DiffOperator {
public:
    explicit DiffOperator(Mode mode = Mode::flat) : mode_(mode) {}

    static DiffOperator zero(Mode mode = Mode::flat) { return DiffOperator(mode); }
    static DiffOperator term(SpaceExpr coeff, DerivIndex d);

    Mode mode() const { return mode_; }
    const std::map<DerivIndex, SpaceExpr>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    DiffOperator operator-() const;
    friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b);
    friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b);
    DiffOperator& operator+=(const DiffOperator& b) { return *this = *this + b; }

    DiffOperator scaled(const ScalarField& c) const;

    /// Exact action on a function of (t, x).
    SpaceExpr apply(const SpaceExpr& e) const;

    friend bool operator==(const DiffOperator& a, const DiffOperator& b);
    friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

    void add_term(const DerivIndex& d, const SpaceExpr& coeff);

private:
    Mode mode_;
    std::map<DerivIndex, SpaceExpr> terms_;
};

/// Normal-ordered composition a then b applied second: (compose(a,b))(f) = a(b(f)).
DiffOperator compose(const DiffOperator& a, const DiffOperator& b);
DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);

/// Differential realization of a generator for the given algebra.
DiffOperator standard_rep(const GeneratorName& g, const AlgebraKind& kind);

/// One abstract bracket entry: coefficient times a generator.
struct BracketTerm {
    ScalarField coeff;  // t-independent; may carry tau^-2
    GeneratorName gen;
};

/// Abstract bracket [a, b] from the algebra's structure table.
std::vector<BracketTerm> bracket(const GeneratorName& a, const GeneratorName& b,
                                 const AlgebraKind& kind);

/// Representation of a bracket combination as a differential operator.
DiffOperator rep_of(const std::vector<BracketTerm>& combo, const AlgebraKind& kind);

struct BracketCheck {
    GeneratorName a, b;
    bool ok = false;
    std::string expected;  // abstract bracket rendered for the report
};

struct AlgebraReport {
    AlgebraKind kind;
    std::vector<BracketCheck> checks;
    bool all_ok = true;
};

/// Evaluates every bracket in the differential representation and compares
/// with the structure table, exactly.
AlgebraReport verify_algebra(const AlgebraKind& kind);

}  // namespace nht

#endif
