#include "solver.hpp"

#include <algorithm>
#include <numeric>

namespace smoothroots {

namespace {

const Rational kUnbounded = Rational(1000000000);

struct Branch {
    Series right;
    Series left;
    bool ambiguous = false;
};

Series one_series(Mode mode) {
    Series s;
    s.mode = mode;
    s.limit = kUnbounded;
    s.terms.push_back({Rational(0), Scalar::one(mode)});
    return s;
}

std::vector<Branch> solve_node(const TreeNode& node, const Tolerances& tol);

std::vector<Branch> solve_children(const TreeNode& node, const Tolerances& tol) {
    std::vector<Branch> out;
    for (const auto& child : node.children) {
        auto sub = solve_node(child, tol);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

void apply_shift(std::vector<Branch>& branches, const TreeNode& node, const Tolerances& tol) {
    if (!node.shift) return;
    Series sr = series_from_jet(*node.shift, +1);
    Series sl = series_from_jet(*node.shift, -1);
    for (auto& b : branches) {
        b.right = series_add(b.right, sr, tol.zero);
        b.left = series_add(b.left, sl, tol.zero);
    }
}

std::vector<Branch> solve_node(const TreeNode& node, const Tolerances& tol) {
    switch (node.kind) {
    case NodeKind::linear_leaf: {
        Branch b;
        b.right = series_from_jet(node.curve.a[0], +1);
        b.left = series_from_jet(node.curve.a[0], -1);
        return {b};
    }
    case NodeKind::zero_leaf: {
        Branch b;
        b.right = Series::zero(node.curve.mode(), kUnbounded);
        b.left = Series::zero(node.curve.mode(), kUnbounded);
        std::vector<Branch> out(static_cast<std::size_t>(node.degree), b);
        apply_shift(out, node, tol);
        return out;
    }
    case NodeKind::split:
        return solve_children(node, tol);
    case NodeKind::rescale: {
        std::vector<Branch> branches = solve_children(node, tol);
        Scalar sign = Scalar::from_int(node.r % 2 == 0 ? 1 : -1, Mode::exact);
        for (auto& b : branches) {
            b.right = b.right.shifted(Rational(node.r));
            Scalar s = b.left.mode == Mode::exact ? sign : sign.to_float();
            b.left = b.left.shifted(Rational(node.r)).scaled(s);
        }
        apply_shift(branches, node, tol);
        return branches;
    }
    case NodeKind::puiseux_leaf: {
        if (!node.aux_plus || !node.aux_minus)
            fail(ErrorCode::internal, "puiseux leaf without sign trees");
        std::vector<Branch> plus = solve_node(*node.aux_plus, tol);
        std::vector<Branch> out;
        if (node.big_n % 2 == 1) {
            for (auto& b : plus) {
                Branch nb;
                nb.right = b.right.exponent_scaled(node.big_n);
                nb.left = b.left.exponent_scaled(node.big_n);
                nb.ambiguous = b.ambiguous;
                out.push_back(std::move(nb));
            }
        } else {
            std::vector<Branch> minus = solve_node(*node.aux_minus, tol);
            if (plus.size() != minus.size())
                fail(ErrorCode::internal, "sign trees produced different branch counts");
            Rational key_exp(node.r);
            std::vector<std::complex<double>> key_plus, key_minus;
            for (const auto& b : plus)
                key_plus.push_back(b.right.coefficient_at(key_exp).to_complex());
            for (const auto& b : minus)
                key_minus.push_back(b.left.coefficient_at(key_exp).to_complex());
            std::vector<bool> used(minus.size(), false);
            bool tie = false;
            for (std::size_t i = 0; i < plus.size(); ++i) {
                double best = 1e300, second = 1e300;
                std::size_t pick = 0;
                for (std::size_t j = 0; j < minus.size(); ++j) {
                    if (used[j]) continue;
                    double d = std::abs(key_plus[i] - key_minus[j]);
                    if (d < best) {
                        second = best;
                        best = d;
                        pick = j;
                    } else if (d < second) {
                        second = d;
                    }
                }
                used[pick] = true;
                // a second candidate at matching distance means the pairing is
                // not determined by the constant terms
                if (second < 1e300 && second - best <= tol.match) tie = true;
                Branch nb;
                nb.right = plus[i].right.exponent_scaled(node.big_n);
                nb.left = minus[pick].left.exponent_scaled(node.big_n);
                nb.ambiguous = plus[i].ambiguous || minus[pick].ambiguous;
                out.push_back(std::move(nb));
            }
            if (tie)
                for (auto& b : out) b.ambiguous = true;
        }
        apply_shift(out, node, tol);
        return out;
    }
    case NodeKind::infinite_leaf:
    case NodeKind::budget_leaf:
    case NodeKind::nonstrict_leaf:
        fail(ErrorCode::invalid_argument,
             std::string("cannot solve through a non-admissible leaf (") +
                 node_kind_name(node.kind) + ")");
    }
    fail(ErrorCode::internal, "unhandled node kind");
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

} // namespace

std::vector<RootExpansion> solve_roots(const TreeNode& tree, const Tolerances& tol) {
    if (!classify(tree).admissible)
        fail(ErrorCode::invalid_argument, "solve requires an admissible tree");
    std::vector<Branch> branches = solve_node(tree, tol);
    std::vector<RootExpansion> out;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        RootExpansion e;
        e.branch_id = static_cast<int>(i);
        e.right = std::move(branches[i].right);
        e.left = std::move(branches[i].left);
        e.pairing_ambiguous = branches[i].ambiguous;
        long base = 1;
        for (const auto& term : e.right.terms) base = lcm_long(base, denominator_long(term.exponent));
        for (const auto& term : e.left.terms) base = lcm_long(base, denominator_long(term.exponent));
        e.base_n = static_cast<int>(base);
        out.push_back(std::move(e));
    }
    return out;
}

std::pair<Series, Series> residual_series(const PolyCurve& p, const RootExpansion& branch,
                                          double eps_zero) {
    auto horner = [&](int side, const Series& lambda) {
        Series acc = one_series(lambda.mode);
        for (int j = 1; j <= p.degree; ++j) {
            Series bj = series_from_jet(p.a[static_cast<std::size_t>(j - 1)], side);
            if (j % 2 == 1) bj = bj.scaled(Scalar::from_int(-1, bj.mode));
            acc = series_add(series_mul(acc, lambda, eps_zero), bj, eps_zero);
        }
        return acc;
    };
    return {horner(+1, branch.right), horner(-1, branch.left)};
}

double reconstruction_residual(const PolyCurve& p, const std::vector<RootExpansion>& branches,
                               double eps_zero, bool* exact_ok) {
    if (static_cast<int>(branches.size()) != p.degree)
        fail(ErrorCode::invalid_argument, "branch count does not match the degree");
    double residual = 0.0;
    bool exact = true;
    for (int side = +1; side >= -1; side -= 2) {
        // elementary symmetric functions by incremental products
        std::vector<Series> sigma;
        for (const auto& branch : branches) {
            const Series& lambda = side > 0 ? branch.right : branch.left;
            std::vector<Series> next(sigma.size() + 1,
                                     Series::zero(lambda.mode, kUnbounded));
            for (std::size_t k = 0; k < next.size(); ++k) {
                Series acc = k < sigma.size() ? sigma[k] : Series::zero(lambda.mode, kUnbounded);
                if (k == 0) {
                    acc = series_add(acc, lambda, eps_zero);
                } else {
                    Series carry = series_mul(sigma[k - 1], lambda, eps_zero);
                    acc = series_add(acc, carry, eps_zero);
                }
                next[k] = std::move(acc);
            }
            sigma = std::move(next);
        }
        for (int k = 1; k <= p.degree; ++k) {
            Series expect = series_from_jet(p.a[static_cast<std::size_t>(k - 1)], side);
            Series got = sigma[static_cast<std::size_t>(k - 1)];
            Series diff = series_add(got, expect.scaled(Scalar::from_int(-1, expect.mode)),
                                     eps_zero);
            for (const auto& term : diff.terms) {
                residual = std::max(residual, term.coefficient.abs());
                if (!term.coefficient.is_zero(0.0)) exact = false;
            }
        }
    }
    if (exact_ok) *exact_ok = exact;
    return residual;
}

} // namespace smoothroots
