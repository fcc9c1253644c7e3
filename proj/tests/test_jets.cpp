#include "doctest.h"
#include "helpers.hpp"
#include "jet.hpp"

using namespace smoothroots;
using namespace smoothroots::testing;

namespace {
constexpr double kEps = 1e-12;
}

TEST_CASE("jet arithmetic: truncated products and sums") {
    // (t + t^2)(1 - t) = t - t^3
    Jet a = jet_poly(3, {0, 1, 1});
    Jet b = jet_poly(3, {1, -1});
    Jet p = a * b;
    CHECK(p.right(0).equals(ex(0), kEps));
    CHECK(p.right(1).equals(ex(1), kEps));
    CHECK(p.right(2).equals(ex(0), kEps));
    CHECK(p.right(3).equals(ex(-1), kEps));
    CHECK(p.two_sided_class(kEps) == 3);

    // f_1 + t^2: left t^2, right 2 t^2
    Jet s = jet_fp(4, 1) + jet_poly(4, {0, 0, 1});
    CHECK(s.left(2).equals(ex(1), kEps));
    CHECK(s.right(2).equals(ex(2), kEps));

    // multiplication by the identically-zero jet absorbs
    Jet z = Jet::identically_zero(4, Mode::exact);
    Jet az = a.truncated(4) * z;
    CHECK(az.is_identically_zero_flagged());
}

TEST_CASE("jet arithmetic: mode mismatch is an error") {
    Jet a = jet_poly(3, {1});
    Jet b = Jet::constant(3, fl(1.0));
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(a * b, Error);
}

TEST_CASE("multiplicity of reference germs") {
    for (int p = 0; p <= 5; ++p) {
        Valuation v = jet_fp(8, p).multiplicity(kEps);
        REQUIRE(v.is_known());
        CHECK(v.value == p);
    }
    Valuation v2 = jet_poly(6, {0, 0, 1, 1}).multiplicity(kEps); // t^2 + t^3
    REQUIRE(v2.is_known());
    CHECK(v2.value == 2);
    Valuation va = jet_abs(6).multiplicity(kEps);
    REQUIRE(va.is_known());
    CHECK(va.value == 0);
    for (int k = 0; k <= 5; ++k) {
        std::vector<long> mono(static_cast<std::size_t>(k) + 1, 0);
        mono[static_cast<std::size_t>(k)] = 1;
        Valuation vk = jet_poly(6, mono).multiplicity(kEps);
        REQUIRE(vk.is_known());
        CHECK(vk.value == k);
    }
    CHECK(Jet::identically_zero(6, Mode::exact).multiplicity(kEps).is_identically_zero());
    // zero to truncation without a flag is undecidable
    CHECK(jet_poly(6, {0}).multiplicity(kEps).is_undecided());
}

TEST_CASE("multiplicity agrees with the brute-force oracle") {
    int checked = 0;
    for (int trial = 0; trial < 800; ++trial) {
        Jet f = random_exact_jet(6);
        Valuation v = f.multiplicity(kEps);
        auto oracle = oracle_multiplicity(f, kEps);
        if (v.is_known()) {
            REQUIRE(oracle.has_value());
            CHECK(*oracle == v.value);
            ++checked;
        } else if (v.is_identically_zero()) {
            CHECK(!oracle.has_value());
        }
    }
    CHECK(checked > 400);
}

TEST_CASE("product multiplicity is superadditive") {
    int equal_cases = 0;
    for (int trial = 0; trial < 500; ++trial) {
        Jet f = random_exact_jet(8);
        Jet g = random_exact_jet(8);
        Valuation vf = f.multiplicity(kEps);
        Valuation vg = g.multiplicity(kEps);
        Valuation vp = (f * g).multiplicity(kEps);
        if (!vf.is_known() || !vg.is_known()) continue;
        if (vp.is_known()) {
            CHECK(vp.value >= vf.value + vg.value);
        }
        bool f_analytic = f.two_sided_class(kEps) == f.order() && !f.left_exact_zero();
        bool g_analytic = g.two_sided_class(kEps) == g.order() && !g.left_exact_zero();
        if (f_analytic && g_analytic && vf.value + vg.value <= 8 && vp.is_known()) {
            CHECK(vp.value == vf.value + vg.value);
            ++equal_cases;
        }
    }
    CHECK(equal_cases > 50);
}

TEST_CASE("shift_exponent divides by powers of t") {
    Jet a = jet_poly(6, {0, 0, 0, 1, 1}); // t^3 (1 + t)
    Jet q = a.shift_exponent(3, kEps);
    CHECK(q.order() == 3);
    CHECK(q.right(0).equals(ex(1), kEps));
    CHECK(q.right(1).equals(ex(1), kEps));

    Jet f2 = jet_fp(6, 2).shift_exponent(2, kEps); // left 0, right t
    CHECK(f2.left_exact_zero());
    CHECK(f2.right(1).equals(ex(1), kEps));
    CHECK(f2.right(0).equals(ex(0), kEps));

    Jet t2 = jet_poly(6, {0, 0, 1});
    CHECK_THROWS_AS(t2.shift_exponent(3, kEps), Error);
    // |t| has side valuations 1 but germ multiplicity 0
    CHECK_THROWS_AS(jet_abs(6).shift_exponent(1, kEps), Error);
}

TEST_CASE("shift then multiply round-trips exactly") {
    for (int trial = 0; trial < 200; ++trial) {
        Jet f = random_exact_jet(8, /*allow_flags=*/false);
        Valuation v = f.multiplicity(kEps);
        if (!v.is_known() || v.value == 0) continue;
        for (int r = 1; r <= v.value; ++r) {
            Jet back = f.shift_exponent(r, kEps).monomial_multiply(r);
            for (int k = 0; k <= back.order(); ++k) {
                CHECK(back.left(k).equals(f.left(k), 0.0));
                CHECK(back.right(k).equals(f.right(k), 0.0));
            }
        }
    }
}

TEST_CASE("compose_signed_power side selection") {
    // f_p composed with -t^2 lands entirely in t < 0 where f_p vanishes
    CHECK(jet_fp(8, 2).compose_signed_power(-1, 2).is_identically_zero_flagged());

    Jet t = jet_poly(6, {0, 1});
    Jet t3 = t.compose_signed_power(1, 3);
    CHECK(t3.right(3).equals(ex(1), kEps));
    CHECK(t3.left(3).equals(ex(1), kEps));
    CHECK(t3.right(1).equals(ex(0), kEps));

    Jet sq = jet_abs(6).compose_signed_power(1, 2); // |t^2| = t^2 both sides
    CHECK(sq.left(2).equals(ex(1), kEps));
    CHECK(sq.right(2).equals(ex(1), kEps));
}

TEST_CASE("compose_signed_power composes for odd exponents") {
    for (int trial = 0; trial < 100; ++trial) {
        Jet f = random_exact_jet(9);
        Jet lhs = f.compose_signed_power(1, 3).compose_signed_power(1, 3);
        Jet rhs = f.compose_signed_power(1, 9);
        for (int k = 0; k <= 9; ++k) {
            CHECK(lhs.left(k).equals(rhs.left(k), 0.0));
            CHECK(lhs.right(k).equals(rhs.right(k), 0.0));
        }
    }
}

TEST_CASE("limit_after_division") {
    auto l1 = jet_poly(6, {0, 0, 1}).limit_after_division(2, kEps);
    REQUIRE(l1.has_value());
    CHECK(l1->equals(ex(1), kEps));

    auto l2 = jet_fp(6, 3).limit_after_division(3, kEps);
    REQUIRE(l2.has_value());
    CHECK(l2->is_zero(kEps));

    CHECK(!jet_abs(6).limit_after_division(1, kEps).has_value());
    CHECK_THROWS_AS(jet_poly(2, {0, 1}).limit_after_division(3, kEps), Error);
}

TEST_CASE("evaluate uses the side selected by the sign of t") {
    CHECK(jet_poly(4, {0, 0, 1}).evaluate(0.5).to_complex().real() == doctest::Approx(0.25));
    CHECK(jet_fp(4, 1).evaluate(-0.3).is_zero(kEps));
    CHECK(jet_fp(4, 1).evaluate(0.3).to_complex().real() == doctest::Approx(0.09));
}

TEST_CASE("power series reciprocal and square root") {
    Jet f = jet_poly(8, {1, 1}); // 1 + t
    Jet inv = f.reciprocal(kEps);
    Jet one = f * inv;
    CHECK(one.right(0).equals(ex(1), 0.0));
    for (int k = 1; k <= 8; ++k) CHECK(one.right(k).is_zero(0.0));

    Jet rt = f.square_root(kEps);
    Jet sq = rt * rt;
    for (int k = 0; k <= 8; ++k) CHECK(sq.right(k).equals(f.right(k), 0.0));
    CHECK(rt.right(1).equals(ex(1, 2), 0.0)); // (1+t)^{1/2} = 1 + t/2 - ...
}
