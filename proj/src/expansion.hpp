#ifndef SMOOTHROOTS_EXPANSION_HPP
#define SMOOTHROOTS_EXPANSION_HPP

#include <vector>

#include "jet.hpp"

namespace smoothroots {

struct SeriesTerm {
    Rational exponent;
    Scalar coefficient;
};

// Finite fractional-power series sum_i c_i x^{e_i} with 0 <= e_i <= limit.
// Terms are kept sorted by exponent; limit records the exponent up to which
// the series is trusted (truncation bookkeeping).
struct Series {
    Mode mode = Mode::exact;
    Rational limit = Rational(0);
    std::vector<SeriesTerm> terms;

    static Series zero(Mode mode, Rational limit);

    void normalize(double eps_zero); // merge equal exponents, drop zeros, sort

    Series to_float() const;
    bool empty() const { return terms.empty(); }
    Scalar coefficient_at(const Rational& exponent) const;
    Rational min_exponent() const; // limit when empty

    // x^shift multiplication (exponent translation).
    Series shifted(const Rational& shift) const;
    // substitute x -> x^{1/big_n}: exponents and limit divide by big_n
    Series exponent_scaled(int inv_big_n) const;
    Series scaled(const Scalar& c) const;

    std::complex<double> evaluate(double x) const;
};

// Operands of different modes promote to float.
Series series_add(const Series& a, const Series& b, double eps_zero);
Series series_mul(const Series& a, const Series& b, double eps_zero);

// side: +1 takes the right side in powers of t, -1 the left side in powers
// of |t| (coefficients pick up (-1)^k).
Series series_from_jet(const Jet& jet, int side);

// One root branch: right expansion in powers of t (t > 0), left expansion in
// powers of |t| (t < 0), glued at 0.
struct RootExpansion {
    int branch_id = 0;
    int base_n = 1; // common denominator of all exponents
    Series right;
    Series left;
    bool pairing_ambiguous = false;

    std::complex<double> evaluate(double t) const {
        return t >= 0 ? right.evaluate(t) : left.evaluate(-t);
    }
};

} // namespace smoothroots

#endif
