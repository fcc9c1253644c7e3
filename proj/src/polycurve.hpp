#ifndef SMOOTHROOTS_POLYCURVE_HPP
#define SMOOTHROOTS_POLYCURVE_HPP

#include <vector>

#include "extint.hpp"
#include "jet.hpp"

namespace smoothroots {

// Monic polynomial with frozen scalar coefficients, stored as the tuple
// a = (a_1, ..., a_n) with P(z) = z^n + sum_j (-1)^j a_j z^{n-j}, so that
// a_j is the j-th elementary symmetric function of the roots.
struct PointPoly {
    int degree = 0;
    std::vector<Scalar> a;

    Mode mode() const { return a.empty() ? Mode::exact : a[0].mode(); }

    // Plain monic coefficients b_j = (-1)^j a_j of z^{n-j}.
    std::vector<Scalar> monic_coefficients() const;

    Scalar evaluate(const Scalar& z) const;
};

// Monic polynomial curve: same sign convention, coefficients are jets sharing
// one truncation order and scalar mode; p is the declared smoothness budget.
struct PolyCurve {
    int degree = 0;
    std::vector<Jet> a;
    ExtInt smoothness = ExtInt::infinity();

    int order() const { return a.empty() ? 0 : a[0].order(); }
    Mode mode() const { return a.empty() ? Mode::exact : a[0].mode(); }

    void validate() const;

    PointPoly at_zero() const;
    PointPoly evaluate(double t) const;
    PolyCurve to_float() const;
};

// Exponent data of a coefficient tuple with all roots 0 at t=0:
// m = min_k m_0(a_k)/k, N minimal with r = N m integral, the indices
// realizing the minimum, and whether the divided tuple is nonzero at 0.
struct CurveShape {
    bool infinite_m = false; // all coefficients are the zero germ
    Rational m = Rational(0);
    int big_n = 1;
    int r = 0;
    bool strict = false;
    std::vector<int> realizing_indices; // k with m_0(a_k) = k m
};

enum class EinfProbe { empty, candidate };

struct EinfResult {
    EinfProbe probe = EinfProbe::empty;
    int top_minor = 0; // s = max k with delta_k o P not identically zero
};

std::vector<Scalar> newton_sums(const PointPoly& p, int kmax);
std::vector<Jet> newton_sums(const PolyCurve& p, int kmax);

// det of the k x k leading minor of the Bezoutiant (s_{i+j-2}).
Scalar delta_minor(const PointPoly& p, int k);
Jet delta_minor(const PolyCurve& p, int k);

int distinct_root_count(const PointPoly& p, double eps_zero);

// Detects possible infinite order of contact of two distinct roots: the top
// nonvanishing Bezoutiant minor must have finite valuation. Candidate means
// the truncated data cannot exclude it.
EinfResult einf_probe(const PolyCurve& p, double eps_zero);

// P(z + a_1/n): kills the subleading coefficient identically.
PolyCurve tschirnhaus(const PolyCurve& p);

// Requires a_1 identically zero and P(0) = z^n.
CurveShape curve_shape(const PolyCurve& p, double eps_zero);

// Divide the k-th coefficient by t^{kr}; smoothness drops by n r.
PolyCurve divide_r(const PolyCurve& p, int r, double eps_zero);

// t |-> P(sign * t^N), coefficient-wise.
PolyCurve substitute_pm_n(const PolyCurve& p, int sign, int big_n);

// Whether some coefficient of a(P)_(r) is nonzero at 0 (requires
// r-divisibility, i.e. m_0(a_k) >= kr for every k).
bool strictly_r_divisible(const PolyCurve& p, int r, double eps_zero);

} // namespace smoothroots

#endif
