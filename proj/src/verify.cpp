#include "verify.hpp"

#include <cmath>

#include "rootfind.hpp"

namespace smoothroots {

namespace {

std::vector<double> sample_points(const VerifyOptions& opt) {
    std::vector<double> out;
    for (int i = 1; i <= opt.samples; ++i) {
        double t = opt.delta * i / opt.samples;
        out.push_back(t);
        out.push_back(-t);
    }
    return out;
}

std::complex<double> evaluate_curve(const PolyCurve& curve, double t, std::complex<double> z) {
    std::complex<double> acc(1.0, 0.0);
    for (int j = 1; j <= curve.degree; ++j) {
        std::complex<double> aj = curve.a[static_cast<std::size_t>(j - 1)].evaluate(t).to_complex();
        if (j % 2 == 1) aj = -aj;
        acc = acc * z + aj;
    }
    return acc;
}

// q-th divided difference over q+1 nodes
std::complex<double> divided_difference(const std::vector<double>& nodes,
                                        const std::vector<std::complex<double>>& values) {
    std::vector<std::complex<double>> table = values;
    std::size_t n = nodes.size();
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = 0; i + level < n; ++i)
            table[i] = (table[i + 1] - table[i]) / (nodes[i + level] - nodes[i]);
    return table[0];
}

// Growth heuristic: evaluate the q-th divided difference across 0 at shrinking
// scales; a bounded q-th derivative keeps it bounded.
template <typename Evaluate>
std::string divided_difference_probe(Evaluate&& evaluate, ExtInt guaranteed, double delta) {
    if (guaranteed.is_infinite()) return "skipped";
    long q = guaranteed.value();
    if (q < 1) return "ok";
    double first = 0.0, last = 0.0;
    for (int scale = 0; scale <= 3; ++scale) {
        double h = delta / std::pow(2.0, scale);
        std::vector<double> nodes;
        std::vector<std::complex<double>> values;
        for (long j = 0; j <= q; ++j) {
            double t = (static_cast<double>(j) - static_cast<double>(q) / 2.0) * h;
            nodes.push_back(t);
            values.push_back(evaluate(t));
        }
        double dd = std::abs(divided_difference(nodes, values));
        if (scale == 0) first = dd;
        last = dd;
    }
    return last > 50.0 * std::max(1.0, first) ? "warn" : "ok";
}

} // namespace

VerifyResult verify_polynomial(const PolyCurve& curve,
                               const std::vector<RootExpansion>& branches,
                               const VerifyOptions& options, ExtInt guaranteed_class) {
    VerifyResult out;
    out.delta = options.delta;
    out.samples = options.samples;
    int base_n = 1;
    for (const auto& b : branches) base_n = std::max(base_n, b.base_n);
    Rational envelope(curve.order() + 1, base_n);
    out.envelope_exponent = format_rational(envelope);
    double expo = static_cast<double>(envelope);
    double coef_scale = 1.0;
    for (const auto& a : curve.a)
        for (int k = 0; k <= a.order(); ++k)
            coef_scale = std::max({coef_scale, a.left(k).abs(), a.right(k).abs()});
    // below this the double-precision evaluation noise dominates the envelope
    double noise_floor = 1e-13 * coef_scale;

    for (double t : sample_points(options)) {
        auto roots = find_roots(curve.evaluate(t));
        for (const auto& b : branches) {
            std::complex<double> lambda = b.evaluate(t);
            double residual = std::abs(evaluate_curve(curve, t, lambda));
            out.max_residual = std::max(out.max_residual, residual);
            double pow_t = std::pow(std::abs(t), expo);
            if (pow_t >= noise_floor)
                out.envelope_constant = std::max(out.envelope_constant, residual / pow_t);
            double nearest = 1e300;
            for (const auto& r : roots) nearest = std::min(nearest, std::abs(lambda - r));
            out.root_match_max = std::max(out.root_match_max, nearest);
        }
    }

    std::string dd = "ok";
    for (const auto& b : branches) {
        std::string one = divided_difference_probe([&](double t) { return b.evaluate(t); },
                                                   guaranteed_class, options.delta);
        if (one == "warn") dd = "warn";
        if (one == "skipped" && dd == "ok") dd = "skipped";
    }
    out.divided_difference = dd;
    out.pass = out.envelope_constant < 10.0;
    return out;
}

VerifyResult verify_matrix(const MatrixCurve& curve, const EigenReport& eigen,
                           const VerifyOptions& options) {
    VerifyResult out;
    out.delta = options.delta;
    out.samples = options.samples;
    int n = curve.size;
    for (double t : sample_points(options)) {
        auto av = curve.evaluate(t);
        // orthonormality of the frame at t
        for (int c1 = 0; c1 < n; ++c1) {
            for (int c2 = 0; c2 < n; ++c2) {
                std::complex<double> acc(0.0, 0.0);
                for (int i = 0; i < n; ++i)
                    acc += std::conj(eigen.frame.at(i, c1).evaluate(t).to_complex()) *
                           eigen.frame.at(i, c2).evaluate(t).to_complex();
                if (c1 == c2) acc -= 1.0;
                out.orthonormality_max = std::max(out.orthonormality_max, std::abs(acc));
            }
        }
        for (std::size_t j = 0; j < eigen.values.size(); ++j) {
            std::complex<double> lambda = eigen.values[j].evaluate(t).to_complex();
            double norm2 = 0.0;
            for (int i = 0; i < n; ++i) {
                std::complex<double> acc(0.0, 0.0);
                for (int k = 0; k < n; ++k)
                    acc += av[static_cast<std::size_t>(i * n + k)] *
                           eigen.frame.at(k, static_cast<int>(j)).evaluate(t).to_complex();
                acc -= lambda * eigen.frame.at(i, static_cast<int>(j)).evaluate(t).to_complex();
                norm2 += std::norm(acc);
            }
            out.eigen_residual_max = std::max(out.eigen_residual_max, std::sqrt(norm2));
        }
    }
    std::string dd = "ok";
    for (const auto& value : eigen.values) {
        std::string one = divided_difference_probe(
            [&](double t) { return value.evaluate(t).to_complex(); }, eigen.eigenvalue_class,
            options.delta);
        if (one == "warn") dd = "warn";
        if (one == "skipped" && dd == "ok") dd = "skipped";
    }
    out.divided_difference = dd;
    out.pass = out.eigen_residual_max <= 1e-8 && out.orthonormality_max <= 1e-8;
    return out;
}

} // namespace smoothroots
