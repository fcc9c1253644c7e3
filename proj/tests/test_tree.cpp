#include "doctest.h"
#include "helpers.hpp"
#include "tree.hpp"

using namespace smoothroots;
using namespace smoothroots::testing;

namespace {

const Tolerances kTol;

Jet zero_jet(int order) { return Jet::identically_zero(order, Mode::exact); }

// z^2 - t^{2p}(1+t), i.e. a_2 = -t^{2p}(1+t)
PolyCurve intro_curve(int p, int order, ExtInt smoothness) {
    std::vector<long> c(static_cast<std::size_t>(2 * p + 2), 0);
    c[static_cast<std::size_t>(2 * p)] = -1;
    c[static_cast<std::size_t>(2 * p + 1)] = -1;
    return curve({zero_jet(order), jet_poly(order, c)}, smoothness);
}

// z^n - t^m (1+t), i.e. a_n = (-1)^{n+1} t^m (1+t)
PolyCurve radical_curve(int n, int m, int order, ExtInt smoothness) {
    std::vector<Jet> a;
    for (int j = 1; j < n; ++j) a.push_back(zero_jet(order));
    std::vector<long> c(static_cast<std::size_t>(m + 2), 0);
    long sign = (n % 2 == 0) ? -1 : 1;
    c[static_cast<std::size_t>(m)] = sign;
    c[static_cast<std::size_t>(m + 1)] = sign;
    a.push_back(jet_poly(order, c));
    return curve(std::move(a), smoothness);
}

// z^n - t^m z + f_p sum_j (-1)^j z^{n-j}: a_j = f_p except a_{n-1} which
// carries the extra (-1)^n t^m
PolyCurve mixed_kink_curve(int n, int m, int p, int order) {
    std::vector<Jet> a;
    for (int j = 1; j <= n; ++j) {
        Jet aj = jet_fp(order, p);
        if (j == n - 1) {
            std::vector<long> c(static_cast<std::size_t>(m) + 1, 0);
            c[static_cast<std::size_t>(m)] = (n % 2 == 0) ? 1 : -1;
            aj = aj + jet_poly(order, c);
        }
        a.push_back(aj);
    }
    return curve(std::move(a), ExtInt(p));
}

int leaf_degree_sum(const TreeNode& node) {
    if (node.is_leaf()) return node.degree;
    int sum = 0;
    for (const auto& child : node.children) sum += leaf_degree_sum(child);
    return sum;
}

// random curve aimed at the admissible regime; infinite budget
PolyCurve random_admissible_candidate() {
    int n = static_cast<int>(rand_int(2, 4));
    int order = static_cast<int>(rand_int(6, 12));
    std::vector<Jet> a;
    for (int j = 1; j <= n; ++j) {
        if (rand_int(0, 3) == 0) {
            a.push_back(Jet::identically_zero(order, Mode::exact));
            continue;
        }
        int val = static_cast<int>(rand_int(1, 4));
        std::vector<Scalar> c(static_cast<std::size_t>(order) + 1, ex(0));
        for (int k = val; k <= order; ++k)
            c[static_cast<std::size_t>(k)] = exi(rand_int(-3, 3), rand_int(-2, 2), rand_int(1, 2));
        if (c[static_cast<std::size_t>(val)].is_zero(0.0)) c[static_cast<std::size_t>(val)] = ex(1);
        a.push_back(Jet::analytic(std::move(c)));
    }
    // sometimes let the curve split at the root
    if (rand_int(0, 3) == 0) {
        std::vector<Scalar> c(a[0].right_coefficients());
        c[0] = ex(rand_int(1, 3));
        a[0] = Jet::analytic(std::move(c));
    }
    return curve(std::move(a));
}

} // namespace

TEST_CASE("intro example: rescale node with linear leaves") {
    for (int p = 1; p <= 3; ++p) {
        PolyCurve c = intro_curve(p, 2 * p + 6, ExtInt(2 * p + 2));
        TreeNode tree = build_tree(c, kTol);
        CHECK(tree.kind == NodeKind::rescale);
        CHECK(tree.degree == 2);
        CHECK(tree.q == Rational(p));
        REQUIRE(tree.children.size() == 2);
        for (const auto& child : tree.children) {
            CHECK(child.degree == 1);
            CHECK(child.q == 0);
        }
        TreeClass cls = classify(tree);
        CHECK(cls.admissible);
        CHECK(cls.good);
        CHECK(!cls.bad);
        CHECK(cls.fair);
        Indices idx = indices(tree);
        CHECK(idx.big_gamma == ExtInt(2 * p));
        CHECK(idx.gamma == ExtInt(p));
        REQUIRE(idx.gamma_hat.has_value());
        CHECK(*idx.gamma_hat == ExtInt(2 * p));
    }
}

TEST_CASE("z^2 - t^3: trivial bad tree with fair sign trees") {
    PolyCurve c = radical_curve(2, 3, 12, ExtInt(8));
    TreeNode tree = build_tree(c, kTol);
    CHECK(tree.kind == NodeKind::puiseux_leaf);
    CHECK(tree.q == Rational(3, 2));
    CHECK(tree.r == 3);
    CHECK(tree.big_n == 2);
    REQUIRE(tree.aux_plus);
    REQUIRE(tree.aux_minus);
    CHECK(tree.aux_plus->kind == NodeKind::rescale);
    CHECK(tree.aux_plus->q == Rational(3));
    CHECK(tree.aux_plus->children.size() == 2);
    CHECK(tree.aux_plus->height() == 1);

    TreeClass cls = classify(tree);
    CHECK(cls.admissible);
    CHECK(!cls.good);
    CHECK(cls.bad);
    CHECK(cls.fair);

    Indices idx = indices(tree);
    CHECK(idx.big_gamma == ExtInt(3));
    CHECK(idx.gamma == ExtInt(1));
    REQUIRE(idx.gamma_hat.has_value());
    CHECK(*idx.gamma_hat == ExtInt(6));
}

TEST_CASE("degree-one curves short-circuit to a linear leaf") {
    PolyCurve c = curve({jet_poly(6, {0, 2, 1})});
    TreeNode tree = build_tree(c, kTol);
    CHECK(tree.kind == NodeKind::linear_leaf);
    CHECK(classify(tree).good);
}

TEST_CASE("identically zero curves give the zero leaf") {
    PolyCurve c = curve({zero_jet(8), zero_jet(8), zero_jet(8)});
    TreeNode tree = build_tree(c, kTol);
    CHECK(tree.kind == NodeKind::zero_leaf);
    REQUIRE(tree.children.size() == 3);
    TreeClass cls = classify(tree);
    CHECK(cls.admissible);
    CHECK(cls.good);
    Indices idx = indices(tree);
    CHECK(idx.big_gamma == ExtInt(0));
    CHECK(idx.gamma == ExtInt(0));
}

TEST_CASE("non-strict one-sided coefficient gives a non-admissible leaf") {
    std::vector<Scalar> left(13, ex(0)), right(13, ex(0));
    right[5] = ex(1);
    Jet f = Jet::from_sides(left, right, true, false);
    PolyCurve c = curve({zero_jet(12), f});
    TreeNode tree = build_tree(c, kTol);
    CHECK(tree.kind == NodeKind::nonstrict_leaf);
    TreeClass cls = classify(tree);
    CHECK(!cls.admissible);
    CHECK(!cls.good);
    CHECK(!cls.bad);
    CHECK(!cls.fair);
    CHECK_THROWS_AS(indices(tree), Error);
}

TEST_CASE("insufficient smoothness budget gives a non-admissible leaf") {
    PolyCurve c = radical_curve(2, 4, 12, ExtInt(3)); // needs ceil(2*2) = 4
    TreeNode tree = build_tree(c, kTol);
    CHECK(tree.kind == NodeKind::budget_leaf);
    CHECK(!classify(tree).admissible);
}

TEST_CASE("mixed one-sided curve: integer and fractional regimes") {
    // n = 3, l = 1, p = 7
    TreeNode good_tree = build_tree(mixed_kink_curve(3, 2, 7, 16), kTol);
    CHECK(good_tree.kind == NodeKind::rescale);
    CHECK(good_tree.q == Rational(1));
    CHECK(good_tree.children.size() == 3);
    TreeClass cls = classify(good_tree);
    CHECK(cls.good);
    Indices idx = indices(good_tree);
    CHECK(idx.big_gamma == ExtInt(3));
    CHECK(idx.gamma == ExtInt(1));

    TreeNode bad_tree = build_tree(mixed_kink_curve(3, 3, 7, 16), kTol);
    CHECK(bad_tree.kind == NodeKind::puiseux_leaf);
    CHECK(bad_tree.q == Rational(3, 2));
    TreeClass bad_cls = classify(bad_tree);
    CHECK(bad_cls.admissible);
    CHECK(bad_cls.bad);
    Indices bad_idx = indices(bad_tree);
    CHECK(bad_idx.big_gamma == ExtInt(5));
    CHECK(bad_idx.gamma == ExtInt(1));
}

TEST_CASE("bad tree that is not fair: sign trees of height two") {
    // z^4 - 2 t^3 z^2 + t^6 + t^7: the divided sign curves freeze to
    // (z^2 - 1)^2, so their clusters are double roots needing another round
    std::vector<long> a4(static_cast<std::size_t>(8), 0);
    a4[6] = 1;
    a4[7] = 1;
    PolyCurve c = curve({zero_jet(22), jet_poly(22, {0, 0, 0, -2}), zero_jet(22),
                         jet_poly(22, a4)},
                        ExtInt(15));
    TreeNode tree = build_tree(c, kTol);
    REQUIRE(tree.kind == NodeKind::puiseux_leaf);
    CHECK(tree.q == Rational(3, 2));
    REQUIRE(tree.aux_plus);
    CHECK(tree.aux_plus->height() == 2);

    TreeClass cls = classify(tree);
    CHECK(cls.admissible);
    CHECK(cls.bad);
    CHECK(!cls.fair);

    Indices idx = indices(tree);
    CHECK(idx.big_gamma == ExtInt(6)); // ceil(4 * 3/2)
    CHECK(idx.gamma == ExtInt(1));
    REQUIRE(idx.gamma_hat.has_value());
    CHECK(*idx.gamma_hat == ExtInt(14)); // 4*3 + (2*1) through the sign trees

    auto combined = combine_points({{idx, cls}});
    Certificate cert = certify({{idx, cls}}, combined, c.smoothness,
                               einf_probe(c, kTol.zero).probe, false);
    CHECK(cert.theorem_case == TheoremCase::bad);
    CHECK(cert.required_input_class == ExtInt(15)); // 1 + Gamma_hat
    CHECK(cert.verified);
    CHECK(cert.guaranteed_class == ExtInt(1));
}

TEST_CASE("combine_points follows the two-branch infimum") {
    Indices i1{ExtInt(2), ExtInt(1), ExtInt(2)};
    Indices i2{ExtInt(4), ExtInt(2), ExtInt(4)};
    TreeClass good{true, true, false, true};
    TreeClass bad{true, false, true, false};

    auto single = combine_points({{i2, good}});
    CHECK(single.big_gamma == ExtInt(4));
    CHECK(single.gamma == ExtInt(2));

    auto two_good = combine_points({{i1, good}, {i2, good}});
    CHECK(two_good.big_gamma == ExtInt(4));
    CHECK(two_good.gamma == ExtInt(2)); // min(4-2+1, 4-4+2)

    Indices ib{ExtInt(3), ExtInt(1), ExtInt(5)};
    auto mixed = combine_points({{i2, good}, {ib, bad}});
    CHECK(mixed.big_gamma == ExtInt(4));
    CHECK(mixed.gamma == ExtInt(1)); // min(2, 1)
}

TEST_CASE("certificates select the theorem case") {
    // intro example at p = 1 with declared smoothness p + 2 = 3
    PolyCurve c = intro_curve(1, 8, ExtInt(3));
    TreeNode tree = build_tree(c, kTol);
    TreeClass cls = classify(tree);
    Indices idx = indices(tree);
    auto combined = combine_points({{idx, cls}});
    Certificate cert = certify({{idx, cls}}, combined, c.smoothness,
                               einf_probe(c, kTol.zero).probe, false);
    CHECK(cert.theorem_case == TheoremCase::good);
    CHECK(cert.budget_ok);
    CHECK(cert.verified);
    CHECK(cert.guaranteed_class == ExtInt(2)); // C^{p + gamma} = C^2

    // z^3 - t^6(1+t) with declared p + 6: guaranteed C^{p+2}
    for (int p = 0; p <= 3; ++p) {
        PolyCurve rc = radical_curve(3, 6, 18, ExtInt(p + 6));
        TreeNode rt = build_tree(rc, kTol);
        TreeClass rcls = classify(rt);
        Indices ridx = indices(rt);
        auto rcomb = combine_points({{ridx, rcls}});
        Certificate rcert = certify({{ridx, rcls}}, rcomb, rc.smoothness,
                                    einf_probe(rc, kTol.zero).probe, true);
        CHECK(rcert.theorem_case == TheoremCase::good); // integer exponent radical
        CHECK(rcert.guaranteed_class == ExtInt(p + 2));
        CHECK(rcert.verified);
    }

    // z^3 - t^4(1+t): fair tree, guaranteed C^1 with denominator 3
    PolyCurve fc = radical_curve(3, 4, 12, ExtInt(6));
    TreeNode ft = build_tree(fc, kTol);
    CHECK(ft.big_n == 3);
    TreeClass fcls = classify(ft);
    CHECK(fcls.fair);
    CHECK(fcls.bad);
    Indices fidx = indices(ft);
    CHECK(fidx.big_gamma == ExtInt(4));
    CHECK(fidx.gamma == ExtInt(1));
    auto fcomb = combine_points({{fidx, fcls}});
    Certificate fcert = certify({{fidx, fcls}}, fcomb, fc.smoothness,
                                einf_probe(fc, kTol.zero).probe, true);
    CHECK(fcert.theorem_case == TheoremCase::radical);
    CHECK(fcert.guaranteed_class == ExtInt(1));
}

TEST_CASE("certificates are monotone in the declared smoothness") {
    ExtInt last_good = 0;
    ExtInt last_bad = 0;
    for (int s = 0; s <= 10; ++s) {
        PolyCurve c = intro_curve(1, 8, ExtInt(s));
        TreeNode tree = build_tree(c, kTol);
        TreeClass cls = classify(tree);
        if (!cls.admissible) continue; // low budgets are non-admissible
        Indices idx = indices(tree);
        auto comb = combine_points({{idx, cls}});
        Certificate cert = certify({{idx, cls}}, comb, c.smoothness, EinfProbe::empty, false);
        CHECK(cert.guaranteed_class >= last_good);
        last_good = cert.guaranteed_class;
    }
    for (int s = 3; s <= 10; ++s) {
        PolyCurve c = radical_curve(2, 3, 12, ExtInt(s));
        TreeNode tree = build_tree(c, kTol);
        TreeClass cls = classify(tree);
        Indices idx = indices(tree);
        auto comb = combine_points({{idx, cls}});
        Certificate cert = certify({{idx, cls}}, comb, c.smoothness, EinfProbe::empty, true);
        CHECK(cert.guaranteed_class >= last_bad);
        last_bad = cert.guaranteed_class;
    }
}

TEST_CASE("index inequalities and leaf degrees on random admissible curves") {
    int admissible_count = 0;
    int trials = 0;
    while (admissible_count < 200 && trials < 3000) {
        ++trials;
        PolyCurve c = random_admissible_candidate();
        TreeNode tree;
        try {
            tree = build_tree(c, kTol);
        } catch (const Error&) {
            continue;
        }
        CHECK(leaf_degree_sum(tree) == c.degree);
        TreeClass cls = classify(tree);
        if (!cls.admissible) continue;
        Indices idx = indices(tree);
        ++admissible_count;
        CHECK(idx.gamma <= idx.big_gamma);
        if (idx.gamma_hat) CHECK(idx.big_gamma <= *idx.gamma_hat);
    }
    CHECK(admissible_count >= 200);
}
