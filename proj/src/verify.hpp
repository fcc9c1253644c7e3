#ifndef SMOOTHROOTS_VERIFY_HPP
#define SMOOTHROOTS_VERIFY_HPP

#include "report.hpp"

namespace smoothroots {

// Numeric root-tracking and residual-envelope checks of the solved
// expansions over [-delta, delta] \ {0}. The divided-difference probe of the
// guaranteed class is a soft heuristic: it can set "warn", never fail.
VerifyResult verify_polynomial(const PolyCurve& curve,
                               const std::vector<RootExpansion>& branches,
                               const VerifyOptions& options, ExtInt guaranteed_class);

VerifyResult verify_matrix(const MatrixCurve& curve, const EigenReport& eigen,
                           const VerifyOptions& options);

} // namespace smoothroots

#endif
