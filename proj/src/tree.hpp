#ifndef SMOOTHROOTS_TREE_HPP
#define SMOOTHROOTS_TREE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polycurve.hpp"
#include "tolerances.hpp"

namespace smoothroots {

enum class NodeKind {
    split,         // P(0) has >= 2 root clusters; children are the lifted factors
    rescale,       // N = 1: q = r, children are the factors of P_(r)
    puiseux_leaf,  // N > 1: q = r/N, aux trees for P^{+-,N} attached
    linear_leaf,   // degree 1, label (1,0)
    zero_leaf,     // a(P) identically zero; n children labeled (1,0)
    infinite_leaf, // m infinite with a(P) != 0; undetectable from finite jets
    budget_leaf,   // declared smoothness below ceil(n m); non-admissible
    nonstrict_leaf // divided tuple vanishes at 0; non-admissible
};

const char* node_kind_name(NodeKind kind);

struct TreeNode {
    int degree = 1;
    Rational q = Rational(0);
    NodeKind kind = NodeKind::linear_leaf;
    int r = 0;
    int big_n = 1;
    std::vector<std::string> reductions;
    std::vector<TreeNode> children;
    std::shared_ptr<TreeNode> aux_plus;  // T(P^{+,N}) at a puiseux leaf
    std::shared_ptr<TreeNode> aux_minus; // T(P^{-,N})

    PolyCurve curve;          // the curve this vertex analyzes, as handed in
    std::optional<Jet> shift; // tschirnhaus shift: roots(curve) = shift + roots(shifted curve)
    std::string leaf_reason;  // diagnostic for budget / nonstrict leaves

    bool is_leaf() const { return children.empty(); }
    int height() const;
};

struct TreeClass {
    bool admissible = false;
    bool good = false;
    bool bad = false;
    bool fair = false;
};

struct Indices {
    ExtInt big_gamma = 0;               // Gamma_t
    ExtInt gamma = 0;                   // gamma_t
    std::optional<ExtInt> gamma_hat;    // Gamma_hat_t; empty when an aux tree is non-admissible
};

struct CombinedIndices {
    ExtInt big_gamma = 0;
    ExtInt gamma = 0;
    std::optional<ExtInt> gamma_hat;
};

TreeNode build_tree(const PolyCurve& p, const Tolerances& tol);

TreeClass classify(const TreeNode& tree);

// Structural recursion over the equivalent definitions; requires an
// admissible tree.
Indices indices(const TreeNode& tree);

CombinedIndices combine_points(const std::vector<std::pair<Indices, TreeClass>>& per_point);

enum class TheoremCase { good, fair, bad, radical };

const char* theorem_case_name(TheoremCase c);

struct Certificate {
    TheoremCase theorem_case = TheoremCase::good;
    ExtInt required_input_class = 0;
    bool required_known = true;
    ExtInt guaranteed_class = 0;
    // hypotheses
    EinfProbe einf = EinfProbe::empty;
    bool admissible_everywhere = false;
    bool budget_ok = false;
    bool verified = false; // all hypotheses hold
};

// declared = the smoothness budget of the input curve; radical_shape = the
// curve is z^n - f (every coefficient except a_n identically zero).
Certificate certify(const std::vector<std::pair<Indices, TreeClass>>& per_point,
                    const CombinedIndices& combined, ExtInt declared, EinfProbe einf,
                    bool radical_shape);

} // namespace smoothroots

#endif
