#include <complex>

#include "doctest.h"
#include "helpers.hpp"
#include "polycurve.hpp"

using namespace smoothroots;
using namespace smoothroots::testing;

namespace {

constexpr double kEps = 1e-12;

// a_j = sigma_j(roots), exactly
std::vector<Scalar> exact_sigma(const std::vector<Scalar>& roots) {
    std::vector<Scalar> sigma(roots.size(), ex(0));
    std::vector<Scalar> poly{ex(1)}; // prod (z - l), descending
    for (const auto& root : roots) {
        std::vector<Scalar> next(poly.size() + 1, ex(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] = next[i] + poly[i];
            next[i + 1] = next[i + 1] - poly[i] * root;
        }
        poly = std::move(next);
    }
    for (std::size_t j = 1; j < poly.size(); ++j) {
        Scalar b = poly[j];
        sigma[j - 1] = (j % 2 == 1) ? -b : b; // a_j = (-1)^j b_j
    }
    return sigma;
}

PointPoly point_from_roots(const std::vector<Scalar>& roots) {
    PointPoly p;
    p.degree = static_cast<int>(roots.size());
    p.a = exact_sigma(roots);
    return p;
}

} // namespace

TEST_CASE("newton sums follow the recurrence") {
    PointPoly p = point_from_roots({ex(1), ex(2)});
    auto s = newton_sums(p, 3);
    CHECK(s[0].equals(ex(2), 0.0));
    CHECK(s[1].equals(ex(3), 0.0));
    CHECK(s[2].equals(ex(5), 0.0));
    CHECK(s[3].equals(ex(9), 0.0));

    PointPoly zero;
    zero.degree = 3;
    zero.a = {ex(0), ex(0), ex(0)};
    auto sz = newton_sums(zero, 4);
    CHECK(sz[0].equals(ex(3), 0.0));
    for (int k = 1; k <= 4; ++k) CHECK(sz[static_cast<std::size_t>(k)].is_zero(0.0));
}

TEST_CASE("newton sums match power sums of numerically found roots") {
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::complex<double>> roots;
        for (int i = 0; i < 4; ++i)
            roots.emplace_back(rand_double(-2, 2), rand_double(-2, 2));
        std::vector<Scalar> tail{fl(1.0)};
        for (const auto& root : roots) {
            std::vector<Scalar> next(tail.size() + 1, fl(0.0));
            for (std::size_t i = 0; i < tail.size(); ++i) {
                next[i] = next[i] + tail[i];
                next[i + 1] = next[i + 1] - tail[i] * Scalar(root);
            }
            tail = std::move(next);
        }
        PointPoly p;
        p.degree = 4;
        for (int j = 1; j <= 4; ++j) {
            Scalar b = tail[static_cast<std::size_t>(j)];
            p.a.push_back(j % 2 == 1 ? -b : b);
        }
        auto s = newton_sums(p, 6);
        for (int k = 0; k <= 6; ++k) {
            std::complex<double> direct(0.0, 0.0);
            for (const auto& root : roots) direct += std::pow(root, k);
            CHECK(std::abs(s[static_cast<std::size_t>(k)].to_complex() - direct) < 1e-9);
        }
    }
}

TEST_CASE("vieta round trip is exact") {
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Scalar> roots;
        int n = static_cast<int>(rand_int(1, 4));
        for (int i = 0; i < n; ++i) roots.push_back(exi(rand_int(-3, 3), rand_int(-2, 2), rand_int(1, 2)));
        PointPoly p = point_from_roots(roots);
        auto s = newton_sums(p, 5);
        for (int k = 0; k <= 5; ++k) {
            Scalar direct = ex(0);
            for (const auto& root : roots) {
                Scalar pw = ex(1);
                for (int i = 0; i < k; ++i) pw = pw * root;
                direct = direct + pw;
            }
            CHECK(s[static_cast<std::size_t>(k)].equals(direct, 0.0));
        }
    }
}

TEST_CASE("bezoutiant minors") {
    PointPoly p12 = point_from_roots({ex(1), ex(2)});
    CHECK(delta_minor(p12, 2).equals(ex(1), 0.0)); // (1-2)^2 = 1
    CHECK(delta_minor(p12, 1).equals(ex(2), 0.0)); // delta_1 = n

    PointPoly dbl = point_from_roots({ex(3), ex(3)});
    CHECK(delta_minor(dbl, 2).is_zero(0.0));
}

TEST_CASE("distinct root count via top nonvanishing minor") {
    CHECK(distinct_root_count(point_from_roots({ex(1), ex(2)}), kEps) == 2);
    CHECK(distinct_root_count(point_from_roots({ex(1), ex(1)}), kEps) == 1);
    CHECK(distinct_root_count(point_from_roots({ex(2), ex(2), ex(5)}), kEps) == 2);
}

TEST_CASE("einf probe") {
    // z^2 - t: delta_2 o P = 4t, valuation 1 -> empty
    PolyCurve p1 = curve({Jet::identically_zero(6, Mode::exact), jet_poly(6, {0, -1})});
    auto r1 = einf_probe(p1, kEps);
    CHECK(r1.probe == EinfProbe::empty);
    CHECK(r1.top_minor == 2);
    Jet d2 = delta_minor(p1, 2);
    CHECK(d2.right(1).equals(ex(4), 0.0));

    // exactly zero coefficient: top minor drops to delta_1 = 2
    PolyCurve p2 = curve({Jet::identically_zero(6, Mode::exact), Jet::identically_zero(6, Mode::exact)});
    auto r2 = einf_probe(p2, kEps);
    CHECK(r2.probe == EinfProbe::empty);
    CHECK(r2.top_minor == 1);

    // zero to truncation without the flag: cannot exclude infinite contact
    PolyCurve p3 = curve({Jet::identically_zero(6, Mode::exact), jet_poly(6, {0})});
    CHECK(einf_probe(p3, kEps).probe == EinfProbe::candidate);
}

TEST_CASE("tschirnhaus kills the subleading coefficient") {
    // z^2 - 2tz + t^2 -> z^2 (computed cancellation, so zero to truncation)
    PolyCurve p = curve({jet_poly(6, {0, 2}), jet_poly(6, {0, 0, 1})});
    PolyCurve shifted = tschirnhaus(p);
    CHECK(shifted.a[0].is_identically_zero_flagged());
    CHECK(shifted.a[1].is_zero_to_truncation(kEps));
    CHECK(!shifted.a[1].is_identically_zero_flagged());

    // a_1 already identically zero: unchanged
    PolyCurve q = curve({Jet::identically_zero(6, Mode::exact), jet_poly(6, {0, 0, 0, -1})});
    PolyCurve qs = tschirnhaus(q);
    CHECK(qs.a[1].right(3).equals(ex(-1), 0.0));

    // z^2 - 2tz -> z^2 - t^2, i.e. new a_2 = -t^2
    PolyCurve r = curve({jet_poly(6, {0, 2}), Jet::identically_zero(6, Mode::exact)});
    PolyCurve rs = tschirnhaus(r);
    CHECK(rs.a[1].right(2).equals(ex(-1), 0.0));
    CHECK(rs.a[1].left(2).equals(ex(-1), 0.0));
}

TEST_CASE("curve shape: exponent, denominator, strictness") {
    auto z2 = [](Jet a2) {
        return curve({Jet::identically_zero(a2.order(), Mode::exact), std::move(a2)});
    };
    CurveShape s1 = curve_shape(z2(jet_poly(8, {0, 0, 0, -1})), kEps); // z^2 - t^3
    CHECK(s1.m == Rational(3, 2));
    CHECK(s1.big_n == 2);
    CHECK(s1.r == 3);
    CHECK(s1.strict);

    CurveShape s2 = curve_shape(z2(jet_poly(8, {0, 0, -1, -1})), kEps); // z^2 - t^2(1+t)
    CHECK(s2.m == Rational(1));
    CHECK(s2.big_n == 1);
    CHECK(s2.r == 1);
    CHECK(s2.strict);
    CHECK(s2.realizing_indices == std::vector<int>{2});

    // one-sided t^5 germ: m_0 = 4, non-strict
    std::vector<Scalar> left(9, ex(0)), right(9, ex(0));
    right[5] = ex(1);
    Jet f = Jet::from_sides(left, right, true, false);
    CurveShape s3 = curve_shape(z2(f), kEps);
    CHECK(s3.m == Rational(2));
    CHECK(s3.big_n == 1);
    CHECK(s3.r == 2);
    CHECK(!s3.strict);

    // all coefficients identically zero
    CurveShape s4 = curve_shape(z2(Jet::identically_zero(8, Mode::exact)), kEps);
    CHECK(s4.infinite_m);

    // zero to truncation without a flag is undecidable
    CHECK_THROWS_AS(curve_shape(z2(jet_poly(8, {0})), kEps), Error);
}

TEST_CASE("divide_r rescales coefficients") {
    PolyCurve p = curve({Jet::identically_zero(8, Mode::exact), jet_poly(8, {0, 0, -1, -1})},
                        ExtInt(5));
    PolyCurve d = divide_r(p, 1, kEps);
    CHECK(d.order() == 6);
    CHECK(d.a[1].right(0).equals(ex(-1), 0.0));
    CHECK(d.a[1].right(1).equals(ex(-1), 0.0));
    CHECK(d.smoothness == ExtInt(3));

    PolyCurve same = divide_r(p, 0, kEps);
    CHECK(same.a[1].right(2).equals(ex(-1), 0.0));

    CHECK_THROWS_AS(divide_r(p, 2, kEps), Error); // a_2 = -t^2(1+t) is not t^4-divisible
}

TEST_CASE("substitute t -> +- t^N") {
    PolyCurve p = curve({Jet::identically_zero(8, Mode::exact), jet_poly(8, {0, -1})}); // z^2 - t
    PolyCurve plus = substitute_pm_n(p, 1, 2);
    CHECK(plus.a[1].right(2).equals(ex(-1), 0.0)); // z^2 - t^2
    PolyCurve minus = substitute_pm_n(p, -1, 2);
    CHECK(minus.a[1].right(2).equals(ex(1), 0.0)); // z^2 + t^2

    PolyCurve q = curve({jet_fp(8, 2), Jet::identically_zero(8, Mode::exact)});
    PolyCurve qm = substitute_pm_n(q, -1, 2);
    CHECK(qm.a[0].is_identically_zero_flagged());
}

TEST_CASE("shape exponent scales under substitution on strict fixtures") {
    auto z2 = [](Jet a2) {
        return curve({Jet::identically_zero(a2.order(), Mode::exact), std::move(a2)});
    };
    for (int big_n : {2, 3}) {
        PolyCurve p = z2(jet_poly(12, {0, 0, 0, -1})); // m = 3/2
        CurveShape base = curve_shape(p, kEps);
        CurveShape sub = curve_shape(substitute_pm_n(p, 1, big_n), kEps);
        CHECK(sub.m == base.m * big_n);
    }
}

TEST_CASE("tschirnhaus preserves the bezoutiant minors") {
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(rand_int(2, 4));
        std::vector<Jet> a;
        for (int j = 0; j < n; ++j) a.push_back(random_exact_jet(6, /*allow_flags=*/false));
        PolyCurve p = curve(std::move(a));
        PolyCurve shifted = tschirnhaus(p);
        for (int k = 1; k <= n; ++k) {
            Jet before = delta_minor(p, k);
            Jet after = delta_minor(shifted, k);
            for (int i = 0; i <= before.order(); ++i) {
                CHECK(before.left(i).equals(after.left(i), 0.0));
                CHECK(before.right(i).equals(after.right(i), 0.0));
            }
        }
    }
}
