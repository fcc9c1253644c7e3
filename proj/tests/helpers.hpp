#ifndef SMOOTHROOTS_TEST_HELPERS_HPP
#define SMOOTHROOTS_TEST_HELPERS_HPP

#include <optional>
#include <random>
#include <vector>

#include "jet.hpp"
#include "polycurve.hpp"

namespace smoothroots::testing {

inline Scalar ex(long num, long den = 1) {
    return Scalar::from_rational(Rational(num, den));
}

inline Scalar exi(long re_num, long im_num, long den = 1) {
    return Scalar::from_rational(Rational(re_num, den), Rational(im_num, den));
}

inline Scalar fl(double re, double im = 0.0) { return Scalar(std::complex<double>(re, im)); }

// analytic jet from integer coefficients c_0, c_1, ...
inline Jet jet_poly(int order, std::vector<long> coefficients) {
    std::vector<Scalar> c(static_cast<std::size_t>(order) + 1, ex(0));
    for (std::size_t k = 0; k < coefficients.size(); ++k) c[k] = ex(coefficients[k]);
    return Jet::analytic(std::move(c));
}

// the reference germ f_p: 0 for t < 0, t^{p+1} for t >= 0
inline Jet jet_fp(int order, int p) {
    std::vector<Scalar> left(static_cast<std::size_t>(order) + 1, ex(0));
    std::vector<Scalar> right = left;
    if (p + 1 <= order) right[static_cast<std::size_t>(p + 1)] = ex(1);
    return Jet::from_sides(std::move(left), std::move(right), /*left_zero=*/true);
}

// |t|: -t for t < 0, t for t >= 0
inline Jet jet_abs(int order) {
    std::vector<Scalar> left(static_cast<std::size_t>(order) + 1, ex(0));
    std::vector<Scalar> right = left;
    left[1] = ex(-1);
    right[1] = ex(1);
    return Jet::from_sides(std::move(left), std::move(right));
}

// Monic curve from coefficient jets a_1..a_n (sign convention of the library).
inline PolyCurve curve(std::vector<Jet> a, ExtInt smoothness = ExtInt::infinity()) {
    PolyCurve p;
    p.degree = static_cast<int>(a.size());
    p.a = std::move(a);
    p.smoothness = smoothness;
    p.validate();
    return p;
}

// Brute-force multiplicity oracle: the largest q <= K such that t^{-q} f has
// matching finite one-sided limits at 0. nullopt means every q <= K passed.
inline std::optional<int> oracle_multiplicity(const Jet& f, double eps) {
    auto side_limit = [&](bool right, int q) -> std::optional<Scalar> {
        bool flagged = right ? f.right_exact_zero() : f.left_exact_zero();
        if (flagged) return Scalar::zero(f.mode());
        for (int j = 0; j < q; ++j) {
            const Scalar& c = right ? f.right(j) : f.left(j);
            if (!c.is_zero(eps)) return std::nullopt;
        }
        return right ? f.right(q) : f.left(q);
    };
    int best = -1;
    for (int q = 0; q <= f.order(); ++q) {
        auto l = side_limit(false, q);
        auto r = side_limit(true, q);
        if (!l || !r || !l->equals(*r, eps)) break;
        best = q;
    }
    if (best == f.order()) return std::nullopt;
    return best;
}

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed5u);
    return gen;
}

inline long rand_int(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng());
}

inline double rand_double(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng());
}

// random exact jet; mostly analytic-consistent, sometimes one-sided
inline Jet random_exact_jet(int order, bool allow_flags = true) {
    std::vector<Scalar> left(static_cast<std::size_t>(order) + 1, ex(0));
    std::vector<Scalar> right = left;
    int val = static_cast<int>(rand_int(0, std::min(order, 3)));
    bool analytic = rand_int(0, 2) != 0;
    for (int k = val; k <= order; ++k) {
        long num = rand_int(-4, 4);
        long im = rand_int(-2, 2);
        right[static_cast<std::size_t>(k)] = exi(num, im, rand_int(1, 3));
        left[static_cast<std::size_t>(k)] =
            analytic ? right[static_cast<std::size_t>(k)]
                     : exi(rand_int(-4, 4), rand_int(-2, 2), rand_int(1, 3));
    }
    // continuity at 0
    left[static_cast<std::size_t>(0)] = right[static_cast<std::size_t>(0)];
    if (allow_flags && rand_int(0, 9) == 0) {
        right[0] = ex(0); // keep the germ continuous when the left side is flagged zero
        return Jet::from_sides(std::move(left), std::move(right), true, false);
    }
    return Jet::from_sides(std::move(left), std::move(right));
}

} // namespace smoothroots::testing

#endif
