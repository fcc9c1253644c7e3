#ifndef SMOOTHROOTS_SPLITTING_HPP
#define SMOOTHROOTS_SPLITTING_HPP

#include <complex>
#include <vector>

#include "polycurve.hpp"

namespace smoothroots {

struct RootCluster {
    std::complex<double> center;
    int multiplicity = 0;
    std::vector<std::complex<double>> member_roots;
};

// Numeric roots grouped by the transitive closure of |l_i - l_j| <= eps.
// Clusters are sorted by center (re, im) for determinism. Throws when some
// inter-cluster distance falls in the ambiguous band (2 eps, 4 eps).
std::vector<RootCluster> cluster_roots(const PointPoly& p, double eps_cluster);

struct FactorSet {
    std::vector<PolyCurve> factors; // one monic factor per cluster, same order
    double residual = 0.0;          // max |coefficient of (prod factors - P)|
};

// Order-by-order Hensel lift of the coprime factorization of P(0) induced by
// the clusters. In exact mode, clusters whose centers are exactly recognizable
// Gaussian rationals keep exact factors; the remaining part of the split drops
// to float (cluster roots are generally irrational).
FactorSet hensel_split(const PolyCurve& p, const std::vector<RootCluster>& clusters, int order,
                       double eps_zero);

} // namespace smoothroots

#endif
