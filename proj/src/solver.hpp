#ifndef SMOOTHROOTS_SOLVER_HPP
#define SMOOTHROOTS_SOLVER_HPP

#include "expansion.hpp"
#include "tree.hpp"

namespace smoothroots {

// Descend the factorization tree and assemble one fractional-power expansion
// per root branch. Requires an admissible tree (and, for a sound certificate,
// an empty infinite-contact probe; the caller checks that).
std::vector<RootExpansion> solve_roots(const TreeNode& tree, const Tolerances& tol);

// P(t)(lambda(t)) as series per side (right in powers of t, left in powers
// of |t|); valid up to the series limit.
std::pair<Series, Series> residual_series(const PolyCurve& p, const RootExpansion& branch,
                                          double eps_zero);

// Elementary-symmetric reconstruction: max float deviation between
// sigma_k(branches) and the coefficient jets, over both sides, up to the
// common valid order. exact_ok reports exact agreement for exact-mode data.
double reconstruction_residual(const PolyCurve& p, const std::vector<RootExpansion>& branches,
                               double eps_zero, bool* exact_ok = nullptr);

} // namespace smoothroots

#endif
