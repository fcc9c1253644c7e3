#ifndef SMOOTHROOTS_JET_HPP
#define SMOOTHROOTS_JET_HPP

#include <optional>
#include <vector>

#include "scalar.hpp"

namespace smoothroots {

// Multiplicity of a germ at 0, as far as the truncated data can decide it.
struct Valuation {
    enum class Kind { known, at_least, identically_zero };

    Kind kind = Kind::known;
    int value = 0; // meaningful for known (the multiplicity) and at_least (= K+1)

    static Valuation known(int v) { return {Kind::known, v}; }
    static Valuation at_least(int v) { return {Kind::at_least, v}; }
    static Valuation identically_zero() { return {Kind::identically_zero, 0}; }

    bool is_known() const { return kind == Kind::known; }
    bool is_identically_zero() const { return kind == Kind::identically_zero; }
    bool is_undecided() const { return kind == Kind::at_least; }
};

// First nonzero index of one side of a jet.
struct SideValuation {
    enum class Kind { finite, flagged_zero, exhausted };
    Kind kind = Kind::finite;
    int index = 0; // for finite

    bool is_finite() const { return kind == Kind::finite; }
    bool is_flagged_zero() const { return kind == Kind::flagged_zero; }
    bool is_exhausted() const { return kind == Kind::exhausted; }
};

// Two-sided truncated Taylor expansion at 0: coefficients of t^0..t^K on each
// side, plus per-side flags meaning "this side is the zero germ, not merely
// zero to order K". Continuity requires left[0] == right[0].
class Jet {
public:
    Jet(int order, Mode mode);

    static Jet constant(int order, const Scalar& c);
    static Jet monomial(int order, int k, const Scalar& c);
    static Jet variable(int order, Mode mode) { return monomial(order, 1, Scalar::one(mode)); }
    static Jet identically_zero(int order, Mode mode);
    static Jet from_sides(std::vector<Scalar> left, std::vector<Scalar> right,
                          bool left_zero = false, bool right_zero = false);
    static Jet analytic(std::vector<Scalar> coefficients);

    int order() const { return order_; }
    Mode mode() const { return mode_; }

    const Scalar& left(int k) const { return left_[static_cast<std::size_t>(k)]; }
    const Scalar& right(int k) const { return right_[static_cast<std::size_t>(k)]; }
    const std::vector<Scalar>& left_coefficients() const { return left_; }
    const std::vector<Scalar>& right_coefficients() const { return right_; }
    bool left_exact_zero() const { return left_zero_; }
    bool right_exact_zero() const { return right_zero_; }

    bool is_identically_zero_flagged() const { return left_zero_ && right_zero_; }
    bool is_zero_to_truncation(double eps_zero) const;

    // Largest m <= K with left[k] == right[k] for all k <= m (the represented
    // germ is C^m across 0 as far as the data shows).
    int two_sided_class(double eps_zero) const;

    Jet truncated(int new_order) const;
    Jet to_float() const;

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a);
    Jet scaled(const Scalar& c) const;
    Jet conjugated() const;

    SideValuation left_valuation(double eps_zero) const;
    SideValuation right_valuation(double eps_zero) const;

    // Multiplicity m_0 per the piecewise-Taylor rule: the largest q such that
    // t^{-q} * (this germ) still has matching one-sided limits at 0.
    Valuation multiplicity(double eps_zero) const;

    // Divide by t^r: requires side valuations >= r and a continuous quotient.
    Jet shift_exponent(int r, double eps_zero) const;

    // Multiply by t^r (coefficients above the order are dropped).
    Jet monomial_multiply(int r) const;

    // Jet of t |-> f(sign * t^N).
    Jet compose_signed_power(int sign, int big_n) const;

    // Common one-sided limit of t^{-q} f(t) at 0; nullopt when the one-sided
    // limits differ ("discontinuous").
    std::optional<Scalar> limit_after_division(int q, double eps_zero) const;

    // Horner evaluation of the side selected by sgn(t).
    Scalar evaluate(double t) const;

    // Power-series inverse; requires a nonzero value at 0 on both sides.
    Jet reciprocal(double eps_zero) const;

    // Power-series square root; exact mode requires an exactly representable
    // square root of the value at 0 (e.g. 1), float mode uses the principal
    // branch.
    Jet square_root(double eps_zero) const;

private:
    static void check_binary(const Jet& a, const Jet& b);
    static SideValuation side_valuation(const std::vector<Scalar>& c, bool flagged,
                                        double eps_zero);

    int order_;
    Mode mode_;
    std::vector<Scalar> left_;
    std::vector<Scalar> right_;
    bool left_zero_ = false;
    bool right_zero_ = false;
};

} // namespace smoothroots

#endif
