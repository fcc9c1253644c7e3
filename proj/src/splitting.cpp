#include "splitting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "rootfind.hpp"

namespace smoothroots {

namespace {

// ---------------------------------------------------------------------------
// polynomial-of-jets helpers, descending coefficients, index 0 = leading
// ---------------------------------------------------------------------------

std::vector<Jet> poly_mul(const std::vector<Jet>& a, const std::vector<Jet>& b, int order,
                          Mode mode) {
    std::vector<Jet> out(a.size() + b.size() - 1, Jet::identically_zero(order, mode));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

std::vector<Scalar> scalar_poly_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                    Mode mode) {
    std::vector<Scalar> out(a.size() + b.size() - 1, Scalar::zero(mode));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

// plain monic coefficients of the curve, descending, leading 1 included
std::vector<Jet> plain_poly(const PolyCurve& p) {
    std::vector<Jet> out;
    out.push_back(Jet::constant(p.order(), Scalar::one(p.mode())));
    for (int j = 1; j <= p.degree; ++j) {
        Jet b = p.a[static_cast<std::size_t>(j - 1)];
        if (j % 2 == 1) b = -b;
        out.push_back(b);
    }
    return out;
}

PolyCurve curve_from_plain(const std::vector<Jet>& plain, const ExtInt& smoothness) {
    PolyCurve out;
    out.degree = static_cast<int>(plain.size()) - 1;
    out.smoothness = smoothness;
    for (int j = 1; j <= out.degree; ++j) {
        Jet a = plain[static_cast<std::size_t>(j)];
        if (j % 2 == 1) a = -a;
        out.a.push_back(std::move(a));
    }
    return out;
}

// Gauss-Jordan inverse over Scalars; works for both modes, throws on a
// (near-)singular pivot.
std::vector<std::vector<Scalar>> invert_matrix(std::vector<std::vector<Scalar>> m, Mode mode,
                                               double eps) {
    std::size_t n = m.size();
    std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n, Scalar::zero(mode)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Scalar::one(mode);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = m[col][col].abs();
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col].abs() > best) {
                best = m[row][col].abs();
                pivot = row;
            }
        }
        if (m[pivot][col].is_zero(eps))
            fail(ErrorCode::numeric,
                 "singular lift system: clusters too close (reduce eps_cluster or raise precision)");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Scalar d = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] = m[col][j] / d;
            inv[col][j] = inv[col][j] / d;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col) continue;
            Scalar f = m[row][col];
            if (f.is_zero(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                m[row][j] = m[row][j] - f * m[col][j];
                inv[row][j] = inv[row][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

std::vector<Scalar> mat_vec(const std::vector<std::vector<Scalar>>& m,
                            const std::vector<Scalar>& v, Mode mode) {
    std::vector<Scalar> out(m.size(), Scalar::zero(mode));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] = out[i] + m[i][j] * v[j];
    return out;
}

// Mutable factor representation during the lift: per z-coefficient (descending,
// leading 1 first) the per-side t-coefficient arrays.
struct WorkFactor {
    int degree = 0;
    std::vector<std::vector<Scalar>> left;  // [z index][t order]
    std::vector<std::vector<Scalar>> right;

    std::vector<Jet> to_jets() const {
        std::vector<Jet> out;
        for (std::size_t i = 0; i < left.size(); ++i)
            out.push_back(Jet::from_sides(left[i], right[i]));
        return out;
    }
};

// The core lift. initial[i] = descending scalar coefficients of the monic
// initial factor; all scalars and the curve share one mode.
std::vector<std::vector<Jet>> lift_factors(const PolyCurve& p,
                                           const std::vector<std::vector<Scalar>>& initial,
                                           int order, double eps_zero) {
    Mode mode = p.mode();
    int n = p.degree;
    std::vector<Jet> target = plain_poly(p);

    // Bezout operator: (G_1,..,G_l) -> sum_i C_i G_i with C_i = prod_{l != i} F_l(0).
    std::vector<std::vector<Scalar>> coproducts;
    for (std::size_t i = 0; i < initial.size(); ++i) {
        std::vector<Scalar> c{Scalar::one(mode)};
        for (std::size_t l = 0; l < initial.size(); ++l)
            if (l != i) c = scalar_poly_mul(c, initial[l], mode);
        coproducts.push_back(std::move(c));
    }
    std::vector<std::vector<Scalar>> m(static_cast<std::size_t>(n),
                                       std::vector<Scalar>(static_cast<std::size_t>(n),
                                                           Scalar::zero(mode)));
    { // column for unknown (factor i, z^j): coefficients of C_i * z^j
        std::size_t col = 0;
        for (std::size_t i = 0; i < initial.size(); ++i) {
            int di = static_cast<int>(initial[i].size()) - 1;
            int ci_deg = n - di;
            for (int j = 0; j < di; ++j, ++col) {
                for (int row = j; row <= ci_deg + j && row < n; ++row) {
                    // ascending z^row; coproducts stored descending
                    m[static_cast<std::size_t>(row)][col] =
                        coproducts[i][static_cast<std::size_t>(ci_deg - (row - j))];
                }
            }
        }
    }
    auto m_inv = invert_matrix(std::move(m), mode, eps_zero);

    std::vector<WorkFactor> work;
    for (const auto& init : initial) {
        WorkFactor w;
        w.degree = static_cast<int>(init.size()) - 1;
        for (const auto& c : init) {
            std::vector<Scalar> series(static_cast<std::size_t>(order) + 1, Scalar::zero(mode));
            series[0] = c;
            w.left.push_back(series);
            w.right.push_back(std::move(series));
        }
        work.push_back(std::move(w));
    }

    for (int ord = 1; ord <= order; ++ord) {
        std::vector<Jet> prod{Jet::constant(order, Scalar::one(mode))};
        for (const auto& w : work) prod = poly_mul(prod, w.to_jets(), order, mode);
        for (int side = 0; side < 2; ++side) {
            bool is_right = (side == 1);
            std::vector<Scalar> rhs(static_cast<std::size_t>(n), Scalar::zero(mode));
            for (int zj = 0; zj < n; ++zj) {
                const Jet& t = target[static_cast<std::size_t>(n - zj)];
                const Jet& q = prod[static_cast<std::size_t>(n - zj)];
                Scalar tv = is_right ? t.right(ord) : t.left(ord);
                Scalar qv = is_right ? q.right(ord) : q.left(ord);
                rhs[static_cast<std::size_t>(zj)] = tv - qv;
            }
            std::vector<Scalar> g = mat_vec(m_inv, rhs, mode);
            std::size_t col = 0;
            for (auto& w : work) {
                for (int j = 0; j < w.degree; ++j, ++col) {
                    auto& series = is_right ? w.right[static_cast<std::size_t>(w.degree - j)]
                                            : w.left[static_cast<std::size_t>(w.degree - j)];
                    series[static_cast<std::size_t>(ord)] =
                        series[static_cast<std::size_t>(ord)] + g[col];
                }
            }
        }
    }

    std::vector<std::vector<Jet>> out;
    for (const auto& w : work) out.push_back(w.to_jets());
    return out;
}

double product_residual(const PolyCurve& p, const std::vector<PolyCurve>& factors) {
    PolyCurve pf = p.to_float();
    int order = pf.order();
    std::vector<Jet> prod{Jet::constant(order, Scalar::one(Mode::floating))};
    for (const auto& f : factors) prod = poly_mul(prod, plain_poly(f.to_float()), order,
                                                  Mode::floating);
    std::vector<Jet> target = plain_poly(pf);
    double residual = 0.0;
    for (std::size_t i = 0; i < target.size(); ++i) {
        Jet diff = prod[i] - target[i];
        for (int k = 0; k <= diff.order(); ++k) {
            residual = std::max(residual, diff.left(k).abs());
            residual = std::max(residual, diff.right(k).abs());
        }
    }
    return residual;
}

// Exact recognition of a cluster: its center must round-trip to a Gaussian
// rational c with (z - c)^mult exactly dividing P(0).
bool recognize_exact_center(const PointPoly& p0, const RootCluster& cluster,
                            GaussianRational& out) {
    constexpr long kMaxDen = 1L << 20;
    double scale = std::max(1.0, std::abs(cluster.center));
    Rational re, im;
    if (!rationalize(cluster.center.real(), kMaxDen, 1e-7 * scale, re)) return false;
    if (!rationalize(cluster.center.imag(), kMaxDen, 1e-7 * scale, im)) return false;
    GaussianRational c{re, im};

    std::vector<GaussianRational> coeffs; // descending, monic
    coeffs.emplace_back(Rational(1), Rational(0));
    for (const auto& b : p0.monic_coefficients()) coeffs.push_back(b.rational());
    for (int step = 0; step < cluster.multiplicity; ++step) {
        std::vector<GaussianRational> quotient;
        GaussianRational acc{Rational(0), Rational(0)};
        for (const auto& coef : coeffs) {
            acc = acc * c + coef;
            quotient.push_back(acc);
        }
        GaussianRational remainder = quotient.back();
        quotient.pop_back();
        if (!remainder.is_zero()) return false;
        coeffs = std::move(quotient);
    }
    { // the cluster multiplicity must be exact, not an undercount
        GaussianRational acc{Rational(0), Rational(0)};
        for (const auto& coef : coeffs) acc = acc * c + coef;
        if (acc.is_zero()) return false;
    }
    out = c;
    return true;
}

std::vector<Scalar> exact_power_factor(const GaussianRational& c, int mult) {
    // (z - c)^mult, descending
    std::vector<Scalar> out{Scalar::one(Mode::exact)};
    for (int i = 0; i < mult; ++i) {
        std::vector<Scalar> next(out.size() + 1, Scalar::zero(Mode::exact));
        for (std::size_t j = 0; j < out.size(); ++j) {
            next[j] = next[j] + out[j];
            next[j + 1] = next[j + 1] - out[j] * Scalar(c);
        }
        out = std::move(next);
    }
    return out;
}

std::vector<Scalar> float_cluster_factor(const RootCluster& cluster) {
    std::vector<Scalar> out{Scalar(std::complex<double>(1.0, 0.0))};
    for (const auto& root : cluster.member_roots) {
        std::vector<Scalar> next(out.size() + 1, Scalar::zero(Mode::floating));
        for (std::size_t j = 0; j < out.size(); ++j) {
            next[j] = next[j] + out[j];
            next[j + 1] = next[j + 1] - out[j] * Scalar(root);
        }
        out = std::move(next);
    }
    return out;
}

// Exact synthetic division of plain scalar coefficients by a monic divisor.
std::vector<Scalar> exact_poly_divide(const std::vector<Scalar>& dividend,
                                      const std::vector<Scalar>& divisor) {
    std::vector<Scalar> rem = dividend;
    std::vector<Scalar> quot;
    std::size_t dn = divisor.size() - 1;
    for (std::size_t i = 0; i + dn < rem.size(); ++i) {
        Scalar q = rem[i];
        quot.push_back(q);
        for (std::size_t j = 0; j <= dn; ++j) rem[i + j] = rem[i + j] - q * divisor[j];
    }
    return quot;
}

} // namespace

namespace {

using ComplexVec = std::vector<std::complex<double>>;

std::vector<ComplexVec> closure_groups(const ComplexVec& points, double tol) {
    int n = static_cast<int>(points.size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(points[static_cast<std::size_t>(i)] -
                         points[static_cast<std::size_t>(j)]) <= tol)
                parent[static_cast<std::size_t>(find(i))] = find(j);
    std::vector<ComplexVec> groups;
    for (int i = 0; i < n; ++i) {
        if (find(i) != i) continue;
        ComplexVec g;
        for (int j = 0; j < n; ++j)
            if (find(j) == i) g.push_back(points[static_cast<std::size_t>(j)]);
        groups.push_back(std::move(g));
    }
    return groups;
}

std::complex<double> eval_derivative(const ComplexVec& monic_tail, std::complex<double> z,
                                     int order) {
    // p = z^n + tail; returns p^(order)(z) / order!
    int n = static_cast<int>(monic_tail.size());
    ComplexVec coeffs; // descending, monic
    coeffs.emplace_back(1.0, 0.0);
    for (const auto& b : monic_tail) coeffs.push_back(b);
    for (int d = 0; d < order; ++d) {
        ComplexVec next;
        int deg = static_cast<int>(coeffs.size()) - 1;
        for (int i = 0; i < deg; ++i)
            next.push_back(coeffs[static_cast<std::size_t>(i)] *
                           static_cast<double>(deg - i) / static_cast<double>(d + 1));
        coeffs = std::move(next);
    }
    std::complex<double> acc(0.0, 0.0);
    for (const auto& c : coeffs) acc = acc * z + c;
    return acc;
}

// Companion eigenvalues of an m-fold root scatter like eps^(1/m). A clump of
// m numeric roots is collapsed to one point when Newton on p^(m-1) converges
// and the lower derivatives vanish to machine-level, i.e. the polynomial
// genuinely looks like it has an m-fold root there.
std::vector<std::pair<std::complex<double>, int>> refine_multiple_roots(
    const ComplexVec& monic_tail, const ComplexVec& points, double scale, double coef_scale) {
    std::vector<std::pair<std::complex<double>, int>> out;
    if (points.size() == 1) {
        out.emplace_back(points[0], 1);
        return out;
    }
    int m = static_cast<int>(points.size());
    double bound = 1e-11 * std::max(1.0, coef_scale);
    for (int trial = m; trial >= 2; --trial) {
        double tau = 50.0 * scale * std::pow(2.2e-16, 1.0 / trial);
        auto groups = closure_groups(points, tau);
        if (groups.size() > 1) {
            for (const auto& g : groups)
                for (const auto& ref : refine_multiple_roots(monic_tail, g, scale, coef_scale))
                    out.push_back(ref);
            return out;
        }
        if (trial != m) continue;
        std::complex<double> c(0.0, 0.0);
        for (const auto& z : points) c += z;
        c /= static_cast<double>(m);
        bool converged = false;
        for (int iter = 0; iter < 40; ++iter) {
            std::complex<double> f = eval_derivative(monic_tail, c, m - 1);
            std::complex<double> df = eval_derivative(monic_tail, c, m) * static_cast<double>(m);
            if (std::abs(df) < 1e-300) break;
            std::complex<double> step = f / df;
            c -= step;
            if (std::abs(step) <= 1e-15 * scale) {
                converged = true;
                break;
            }
        }
        bool consistent = converged;
        for (int j = 0; consistent && j < m; ++j)
            if (std::abs(eval_derivative(monic_tail, c, j)) > bound) consistent = false;
        if (consistent) {
            out.emplace_back(c, m);
            return out;
        }
    }
    for (const auto& z : points) out.emplace_back(z, 1);
    return out;
}

} // namespace

std::vector<RootCluster> cluster_roots(const PointPoly& p, double eps_cluster) {
    auto roots = find_roots(p);
    ComplexVec tail;
    for (const auto& b : p.monic_coefficients()) tail.push_back(b.to_complex());
    double scale = 1.0;
    for (const auto& z : roots) scale = std::max(scale, std::abs(z));
    double coef_scale = 0.0;
    for (const auto& b : tail) coef_scale = std::max(coef_scale, std::abs(b));

    std::vector<std::pair<std::complex<double>, int>> refined;
    double coarse = 50.0 * scale * std::pow(2.2e-16, 1.0 / std::max(2, p.degree));
    for (const auto& clump : closure_groups(roots, coarse))
        for (const auto& r : refine_multiple_roots(tail, clump, scale, coef_scale))
            refined.push_back(r);

    // regroup the refined representatives at the requested tolerance
    int nr = static_cast<int>(refined.size());
    std::vector<int> parent(static_cast<std::size_t>(nr));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (int i = 0; i < nr; ++i)
        for (int j = i + 1; j < nr; ++j)
            if (std::abs(refined[static_cast<std::size_t>(i)].first -
                         refined[static_cast<std::size_t>(j)].first) <= eps_cluster)
                parent[static_cast<std::size_t>(find(i))] = find(j);

    std::vector<RootCluster> clusters;
    for (int i = 0; i < nr; ++i) {
        if (find(i) != i) continue;
        RootCluster c;
        std::complex<double> sum(0.0, 0.0);
        int reps = 0;
        for (int j = 0; j < nr; ++j) {
            if (find(j) != i) continue;
            const auto& r = refined[static_cast<std::size_t>(j)];
            for (int k = 0; k < r.second; ++k) c.member_roots.push_back(r.first);
            sum += r.first;
            ++reps;
        }
        c.multiplicity = static_cast<int>(c.member_roots.size());
        c.center = sum / static_cast<double>(reps);
        clusters.push_back(std::move(c));
    }
    std::sort(clusters.begin(), clusters.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
        return a.center.imag() < b.center.imag();
    });
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        for (std::size_t j = i + 1; j < clusters.size(); ++j) {
            double d = 1e300;
            for (const auto& x : clusters[i].member_roots)
                for (const auto& y : clusters[j].member_roots)
                    d = std::min(d, std::abs(x - y));
            if (d > 2.0 * eps_cluster && d < 4.0 * eps_cluster)
                fail(ErrorCode::numeric,
                     "ambiguous clustering: inter-cluster distance in (2 eps, 4 eps); adjust "
                     "eps_cluster");
        }
    }
    return clusters;
}

FactorSet hensel_split(const PolyCurve& p, const std::vector<RootCluster>& clusters, int order,
                       double eps_zero) {
    p.validate();
    if (clusters.size() < 2) fail(ErrorCode::invalid_argument, "nothing to split: single cluster");
    int total = 0;
    for (const auto& c : clusters) total += c.multiplicity;
    if (total != p.degree)
        fail(ErrorCode::invalid_argument, "cluster multiplicities do not sum to the degree");
    order = std::min(order, p.order());
    PolyCurve curve = p;
    if (order < p.order()) {
        for (auto& jet : curve.a) jet = jet.truncated(order);
    }

    FactorSet out;
    if (curve.mode() == Mode::floating) {
        std::vector<std::vector<Scalar>> initial;
        for (const auto& c : clusters) initial.push_back(float_cluster_factor(c));
        auto lifted = lift_factors(curve, initial, order, eps_zero);
        for (auto& f : lifted) out.factors.push_back(curve_from_plain(f, p.smoothness));
        out.residual = product_residual(curve, out.factors);
        return out;
    }

    // Exact mode: recognize rational clusters; the rest is lifted as one
    // merged cofactor and then split numerically.
    PointPoly p0 = curve.at_zero();
    std::vector<GaussianRational> centers(clusters.size());
    std::vector<bool> exact(clusters.size(), false);
    int exact_count = 0;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        if (recognize_exact_center(p0, clusters[i], centers[i])) {
            exact[i] = true;
            ++exact_count;
        }
    }

    if (exact_count == 0) {
        return hensel_split(curve.to_float(), clusters, order, eps_zero);
    }

    std::vector<std::vector<Scalar>> initial;
    std::vector<int> exact_cluster_of_factor;
    std::vector<Scalar> merged{Scalar::one(Mode::exact)};
    {
        std::vector<Scalar> plain0{Scalar::one(Mode::exact)};
        for (const auto& b : p0.monic_coefficients()) plain0.push_back(b);
        std::vector<Scalar> divisor{Scalar::one(Mode::exact)};
        for (std::size_t i = 0; i < clusters.size(); ++i) {
            if (!exact[i]) continue;
            auto f = exact_power_factor(centers[i], clusters[i].multiplicity);
            divisor = scalar_poly_mul(divisor, f, Mode::exact);
            initial.push_back(std::move(f));
            exact_cluster_of_factor.push_back(static_cast<int>(i));
        }
        if (exact_count < static_cast<int>(clusters.size()))
            merged = exact_poly_divide(plain0, divisor);
    }
    bool has_merged = merged.size() > 1;
    if (has_merged) initial.push_back(merged);

    std::vector<std::vector<Jet>> lifted;
    if (initial.size() >= 2) {
        lifted = lift_factors(curve, initial, order, eps_zero);
    } else {
        // single exact cluster and nothing else: the curve is its own factor
        lifted.push_back(plain_poly(curve));
    }

    // reassemble factors in cluster order
    std::vector<PolyCurve> per_cluster(clusters.size());
    for (std::size_t f = 0; f < exact_cluster_of_factor.size(); ++f)
        per_cluster[static_cast<std::size_t>(exact_cluster_of_factor[f])] =
            curve_from_plain(lifted[f], p.smoothness);

    if (has_merged) {
        PolyCurve cofactor = curve_from_plain(lifted.back(), p.smoothness).to_float();
        std::vector<RootCluster> sub;
        std::vector<std::size_t> sub_index;
        for (std::size_t i = 0; i < clusters.size(); ++i) {
            if (exact[i]) continue;
            sub.push_back(clusters[i]);
            sub_index.push_back(i);
        }
        if (sub.size() == 1) {
            per_cluster[sub_index[0]] = cofactor;
        } else {
            FactorSet inner = hensel_split(cofactor, sub, order, eps_zero);
            for (std::size_t i = 0; i < sub.size(); ++i)
                per_cluster[sub_index[i]] = inner.factors[i];
        }
    }
    out.factors = std::move(per_cluster);
    out.residual = product_residual(curve, out.factors);
    return out;
}

} // namespace smoothroots
