#ifndef SMOOTHROOTS_ROOTFIND_HPP
#define SMOOTHROOTS_ROOTFIND_HPP

#include <complex>
#include <vector>

#include "polycurve.hpp"

namespace smoothroots {

// All roots of a monic polynomial, via companion-matrix eigenvalues plus a
// Newton polish. Order is unspecified.
std::vector<std::complex<double>> find_roots(const std::vector<std::complex<double>>& monic_tail);

std::vector<std::complex<double>> find_roots(const PointPoly& p);

std::complex<double> evaluate_monic(const std::vector<std::complex<double>>& monic_tail,
                                    std::complex<double> z);

} // namespace smoothroots

#endif
