#include "rootfind.hpp"

#include <Eigen/Dense>

namespace smoothroots {

std::complex<double> evaluate_monic(const std::vector<std::complex<double>>& monic_tail,
                                    std::complex<double> z) {
    std::complex<double> acc(1.0, 0.0);
    for (const auto& b : monic_tail) acc = acc * z + b;
    return acc;
}

std::vector<std::complex<double>> find_roots(const std::vector<std::complex<double>>& monic_tail) {
    int n = static_cast<int>(monic_tail.size());
    if (n == 0) return {};
    if (n == 1) return {-monic_tail[0]};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -monic_tail[static_cast<std::size_t>(n - 1 - i)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        fail(ErrorCode::numeric, "companion eigenvalue computation failed");

    std::vector<std::complex<double>> roots;
    roots.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::complex<double> z = solver.eigenvalues()(i);
        // Newton polish; skipped automatically near multiple roots where the
        // derivative is tiny.
        for (int iter = 0; iter < 3; ++iter) {
            std::complex<double> f = evaluate_monic(monic_tail, z);
            std::complex<double> df(static_cast<double>(n), 0.0);
            for (int j = 0; j < n - 1; ++j)
                df = df * z + monic_tail[static_cast<std::size_t>(j)] * static_cast<double>(n - 1 - j);
            if (std::abs(df) < 1e-8) break;
            std::complex<double> step = f / df;
            if (std::abs(step) > 0.1 * (1.0 + std::abs(z))) break;
            z -= step;
        }
        roots.push_back(z);
    }
    return roots;
}

std::vector<std::complex<double>> find_roots(const PointPoly& p) {
    std::vector<std::complex<double>> tail;
    tail.reserve(static_cast<std::size_t>(p.degree));
    for (const auto& b : p.monic_coefficients()) tail.push_back(b.to_complex());
    return find_roots(tail);
}

} // namespace smoothroots
