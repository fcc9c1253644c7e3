#include "tree.hpp"

#include <algorithm>

#include "splitting.hpp"

namespace smoothroots {

namespace {

void collect_leaves(const TreeNode& node, std::vector<const TreeNode*>& out) {
    if (node.is_leaf()) {
        out.push_back(&node);
        return;
    }
    for (const auto& child : node.children) collect_leaves(child, out);
}

bool subtree_good(const TreeNode& node) {
    if (node.is_leaf()) return node.q == 0 && node.degree == 1;
    for (const auto& child : node.children)
        if (!subtree_good(child)) return false;
    return true;
}

bool subtree_admissible(const TreeNode& node) {
    if (node.is_leaf()) return node.q != 0 || node.degree == 1;
    for (const auto& child : node.children)
        if (!subtree_admissible(child)) return false;
    return true;
}

TreeNode linear_node(const PolyCurve& curve) {
    TreeNode node;
    node.degree = 1;
    node.q = Rational(0);
    node.kind = NodeKind::linear_leaf;
    node.curve = curve;
    return node;
}

TreeNode build(const PolyCurve& p, const Tolerances& tol);

void attach_split_children(TreeNode& node, const PolyCurve& p, const Tolerances& tol) {
    auto clusters = cluster_roots(p.at_zero(), tol.cluster);
    if (clusters.size() < 2)
        fail(ErrorCode::internal, "expected the divided curve to split");
    FactorSet factors = hensel_split(p, clusters, p.order(), tol.zero);
    if (p.mode() == Mode::floating && factors.residual > tol.hensel)
        fail(ErrorCode::numeric, "hensel reconstruction residual above tolerance");
    node.reductions.push_back("split(" + std::to_string(factors.factors.size()) + ")");
    for (const auto& factor : factors.factors) node.children.push_back(build(factor, tol));
}

TreeNode build(const PolyCurve& p, const Tolerances& tol) {
    p.validate();
    if (p.degree == 1) return linear_node(p);

    TreeNode node;
    node.degree = p.degree;
    node.curve = p;

    auto clusters = cluster_roots(p.at_zero(), tol.cluster);
    if (clusters.size() >= 2) {
        node.kind = NodeKind::split;
        node.q = Rational(0);
        FactorSet factors = hensel_split(p, clusters, p.order(), tol.zero);
        if (p.mode() == Mode::floating && factors.residual > tol.hensel)
            fail(ErrorCode::numeric, "hensel reconstruction residual above tolerance");
        node.reductions.push_back("split(" + std::to_string(factors.factors.size()) + ")");
        for (const auto& factor : factors.factors) node.children.push_back(build(factor, tol));
        return node;
    }

    // all roots of P(0) coincide: normalize with the tschirnhaus shift
    PolyCurve shifted = p;
    if (!p.a[0].is_identically_zero_flagged()) {
        Mode mode = p.mode();
        node.shift = p.a[0].scaled(mode == Mode::exact
                                       ? Scalar::from_rational(Rational(1, p.degree))
                                       : Scalar(std::complex<double>(1.0 / p.degree, 0.0)));
        shifted = tschirnhaus(p);
        node.reductions.push_back("tschirnhaus");
    }

    bool all_zero_germ = true;
    for (const auto& jet : shifted.a)
        if (!jet.is_identically_zero_flagged()) all_zero_germ = false;
    if (all_zero_germ) {
        node.kind = NodeKind::zero_leaf;
        node.q = Rational(0);
        PolyCurve zero_linear;
        zero_linear.degree = 1;
        zero_linear.smoothness = p.smoothness;
        zero_linear.a.push_back(Jet::identically_zero(p.order(), p.mode()));
        for (int i = 0; i < p.degree; ++i) node.children.push_back(linear_node(zero_linear));
        return node;
    }

    CurveShape shape = curve_shape(shifted, tol.zero);
    if (shape.infinite_m) {
        // unreachable for jet data: curve_shape reports undecidable instead
        node.kind = NodeKind::infinite_leaf;
        node.q = Rational(0);
        return node;
    }

    Rational nm = shape.m * p.degree;
    if (!p.smoothness.is_infinite() && p.smoothness.value() < ceil_long(nm)) {
        node.kind = NodeKind::budget_leaf;
        node.q = Rational(0);
        node.leaf_reason = "declared smoothness " + p.smoothness.str() + " < ceil(n m) = " +
                           std::to_string(ceil_long(nm));
        return node;
    }

    if (!shape.strict) {
        node.kind = NodeKind::nonstrict_leaf;
        node.q = Rational(0);
        node.leaf_reason = "t^{-km} a_k(t)|_{t=0} = 0 for every realizing index k";
        return node;
    }

    if (shape.big_n == 1) {
        node.kind = NodeKind::rescale;
        node.r = shape.r;
        node.q = Rational(shape.r);
        node.reductions.push_back("divide_r(" + std::to_string(shape.r) + ")");
        PolyCurve divided = divide_r(shifted, shape.r, tol.zero);
        attach_split_children(node, divided, tol);
        return node;
    }

    node.kind = NodeKind::puiseux_leaf;
    node.r = shape.r;
    node.big_n = shape.big_n;
    node.q = Rational(shape.r, shape.big_n);
    node.reductions.push_back("substitute(+-," + std::to_string(shape.big_n) + ")");
    // The sign trees witness the structure of P(+-t^N); fairness and the
    // Gamma_hat recursion read them independently of the declared budget.
    PolyCurve plus = substitute_pm_n(shifted, 1, shape.big_n);
    PolyCurve minus = substitute_pm_n(shifted, -1, shape.big_n);
    plus.smoothness = ExtInt::infinity();
    minus.smoothness = ExtInt::infinity();
    node.aux_plus = std::make_shared<TreeNode>(build(plus, tol));
    node.aux_minus = std::make_shared<TreeNode>(build(minus, tol));
    return node;
}

struct NodeIndices {
    ExtInt big_gamma = 0;
    ExtInt gamma = 0;
    std::optional<ExtInt> gamma_hat = ExtInt(0);
};

std::optional<ExtInt> opt_max(const std::optional<ExtInt>& a, const std::optional<ExtInt>& b) {
    if (!a || !b) return std::nullopt;
    return ExtInt::max(*a, *b);
}

std::optional<ExtInt> opt_plus(const std::optional<ExtInt>& a, long k) {
    if (!a) return std::nullopt;
    return *a + ExtInt(k);
}

NodeIndices node_indices(const TreeNode& node) {
    switch (node.kind) {
    case NodeKind::linear_leaf:
    case NodeKind::zero_leaf:
    case NodeKind::infinite_leaf:
        return {};
    case NodeKind::budget_leaf:
    case NodeKind::nonstrict_leaf:
        fail(ErrorCode::invalid_argument, "indices are defined for admissible trees only");
    case NodeKind::split:
    case NodeKind::rescale: {
        NodeIndices agg;
        bool first = true;
        ExtInt max_gap = 0;   // max_i (Gamma_i - gamma_i)
        ExtInt min_gamma = 0; // min_i gamma_i
        std::optional<ExtInt> hat = ExtInt(0);
        for (const auto& child : node.children) {
            NodeIndices ci = node_indices(child);
            ExtInt gap = ci.big_gamma - ci.gamma.value(); // finite by construction
            if (first) {
                agg.big_gamma = ci.big_gamma;
                max_gap = gap;
                min_gamma = ci.gamma;
                hat = ci.gamma_hat;
                first = false;
            } else {
                agg.big_gamma = ExtInt::max(agg.big_gamma, ci.big_gamma);
                max_gap = ExtInt::max(max_gap, gap);
                min_gamma = ExtInt::min(min_gamma, ci.gamma);
                hat = opt_max(hat, ci.gamma_hat);
            }
        }
        agg.gamma = subtree_good(node) ? agg.big_gamma - max_gap.value() : min_gamma;
        agg.gamma_hat = hat;
        if (node.kind == NodeKind::rescale) {
            long bump = static_cast<long>(node.degree) * node.r;
            agg.big_gamma = agg.big_gamma + ExtInt(bump);
            agg.gamma = agg.gamma + ExtInt(node.r);
            agg.gamma_hat = opt_plus(agg.gamma_hat, bump);
        }
        return agg;
    }
    case NodeKind::puiseux_leaf: {
        NodeIndices out;
        out.big_gamma = ceil_long(Rational(static_cast<long>(node.degree) * node.r, node.big_n));
        out.gamma = floor_long(Rational(node.r, node.big_n));
        out.gamma_hat = std::nullopt;
        if (node.aux_plus && node.aux_minus && subtree_admissible(*node.aux_plus) &&
            subtree_admissible(*node.aux_minus)) {
            NodeIndices plus = node_indices(*node.aux_plus);
            NodeIndices minus = node_indices(*node.aux_minus);
            out.gamma_hat = opt_max(plus.gamma_hat, minus.gamma_hat);
        }
        return out;
    }
    }
    fail(ErrorCode::internal, "unhandled node kind");
}

} // namespace

const char* node_kind_name(NodeKind kind) {
    switch (kind) {
    case NodeKind::split: return "split";
    case NodeKind::rescale: return "rescale";
    case NodeKind::puiseux_leaf: return "puiseux_leaf";
    case NodeKind::linear_leaf: return "linear_leaf";
    case NodeKind::zero_leaf: return "zero_leaf";
    case NodeKind::infinite_leaf: return "infinite_leaf";
    case NodeKind::budget_leaf: return "budget_leaf";
    case NodeKind::nonstrict_leaf: return "nonstrict_leaf";
    }
    return "?";
}

const char* theorem_case_name(TheoremCase c) {
    switch (c) {
    case TheoremCase::good: return "good";
    case TheoremCase::fair: return "fair";
    case TheoremCase::bad: return "bad";
    case TheoremCase::radical: return "radical";
    }
    return "?";
}

int TreeNode::height() const {
    int h = 0;
    for (const auto& child : children) h = std::max(h, 1 + child.height());
    return h;
}

TreeNode build_tree(const PolyCurve& p, const Tolerances& tol) { return build(p, tol); }

TreeClass classify(const TreeNode& tree) {
    TreeClass out;
    std::vector<const TreeNode*> leaves;
    collect_leaves(tree, leaves);
    out.admissible = true;
    out.good = true;
    for (const TreeNode* leaf : leaves) {
        bool unit_label = leaf->q == 0 && leaf->degree == 1;
        if (!unit_label) out.good = false;
        if (leaf->q == 0 && leaf->degree != 1) out.admissible = false;
    }
    if (!out.admissible) out.good = false;
    out.bad = out.admissible && !out.good;
    out.fair = out.admissible;
    if (out.admissible) {
        for (const TreeNode* leaf : leaves) {
            if (leaf->q == 0 && leaf->degree == 1) continue;
            // bad leaf: both sign trees must be good of height 1
            if (!leaf->aux_plus || !leaf->aux_minus) {
                out.fair = false;
                break;
            }
            TreeClass plus = classify(*leaf->aux_plus);
            TreeClass minus = classify(*leaf->aux_minus);
            if (!plus.good || !minus.good || leaf->aux_plus->height() != 1 ||
                leaf->aux_minus->height() != 1) {
                out.fair = false;
                break;
            }
        }
    }
    return out;
}

Indices indices(const TreeNode& tree) {
    if (!subtree_admissible(tree))
        fail(ErrorCode::invalid_argument, "indices are defined for admissible trees only");
    NodeIndices ni = node_indices(tree);
    Indices out;
    out.big_gamma = ni.big_gamma;
    out.gamma = ni.gamma;
    out.gamma_hat = ni.gamma_hat;
    return out;
}

CombinedIndices combine_points(const std::vector<std::pair<Indices, TreeClass>>& per_point) {
    if (per_point.empty()) fail(ErrorCode::invalid_argument, "no analysis points");
    CombinedIndices out;
    out.gamma_hat = ExtInt(0);
    for (const auto& [idx, cls] : per_point) {
        out.big_gamma = ExtInt::max(out.big_gamma, idx.big_gamma);
        out.gamma_hat = opt_max(out.gamma_hat, idx.gamma_hat);
    }
    bool have = false;
    ExtInt gamma = 0;
    for (const auto& [idx, cls] : per_point) {
        ExtInt candidate = cls.good ? out.big_gamma - idx.big_gamma.value() + idx.gamma
                                    : idx.gamma; // bad branch of the infimum
        if (!have || candidate < gamma) {
            gamma = candidate;
            have = true;
        }
    }
    out.gamma = gamma;
    return out;
}

Certificate certify(const std::vector<std::pair<Indices, TreeClass>>& per_point,
                    const CombinedIndices& combined, ExtInt declared, EinfProbe einf,
                    bool radical_shape) {
    Certificate cert;
    cert.einf = einf;
    cert.admissible_everywhere = true;
    bool all_good = true;
    bool all_fair = true;
    for (const auto& [idx, cls] : per_point) {
        if (!cls.admissible) cert.admissible_everywhere = false;
        if (!cls.good) all_good = false;
        if (!cls.fair) all_fair = false;
    }

    if (all_good) {
        cert.theorem_case = TheoremCase::good;
        cert.budget_ok = declared >= combined.big_gamma;
        ExtInt p = 0;
        if (declared.is_infinite())
            p = ExtInt::infinity();
        else if (cert.budget_ok)
            p = declared - combined.big_gamma.value();
        cert.required_input_class = combined.big_gamma + p; // C^{p + Gamma}
        cert.guaranteed_class = p + combined.gamma;         // C^{p + gamma}
    } else if (all_fair) {
        cert.theorem_case = TheoremCase::fair;
        cert.required_input_class = combined.big_gamma;
        cert.budget_ok = declared >= combined.big_gamma;
        cert.guaranteed_class = combined.gamma;
    } else {
        cert.theorem_case = TheoremCase::bad;
        if (combined.gamma_hat) {
            cert.required_input_class = *combined.gamma_hat + ExtInt(1);
            cert.budget_ok = declared >= cert.required_input_class;
        } else {
            cert.required_known = false;
            cert.budget_ok = false;
        }
        cert.guaranteed_class = combined.gamma;
    }
    // radical curves z^n - f with a fractional leading exponent go through the
    // fair case of the main theorem; integer exponents are the plain good case
    if (radical_shape && cert.theorem_case == TheoremCase::fair)
        cert.theorem_case = TheoremCase::radical;
    cert.verified = cert.admissible_everywhere && cert.budget_ok && einf == EinfProbe::empty;
    return cert;
}

} // namespace smoothroots
