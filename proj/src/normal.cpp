#include "normal.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <functional>
#include <numeric>

namespace smoothroots {

namespace {

std::vector<std::vector<std::complex<double>>> cluster_values(
    const std::vector<std::complex<double>>& values, double tol) {
    int n = static_cast<int>(values.size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(values[static_cast<std::size_t>(i)] -
                         values[static_cast<std::size_t>(j)]) <= tol)
                parent[static_cast<std::size_t>(find(i))] = find(j);
    std::vector<std::vector<std::complex<double>>> groups;
    for (int i = 0; i < n; ++i) {
        if (find(i) != i) continue;
        std::vector<std::complex<double>> g;
        for (int j = 0; j < n; ++j)
            if (find(j) == i) g.push_back(values[static_cast<std::size_t>(j)]);
        groups.push_back(std::move(g));
    }
    std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        std::complex<double> ca(0, 0), cb(0, 0);
        for (const auto& z : a) ca += z;
        for (const auto& z : b) cb += z;
        ca /= static_cast<double>(a.size());
        cb /= static_cast<double>(b.size());
        if (ca.real() != cb.real()) return ca.real() < cb.real();
        return ca.imag() < cb.imag();
    });
    return groups;
}

Jet det_jets(const std::vector<std::vector<Jet>>& m, int order, Mode mode) {
    std::size_t k = m.size();
    if (k == 1) return m[0][0];
    Jet acc = Jet::identically_zero(order, mode);
    bool subtract = false;
    for (std::size_t col = 0; col < k; ++col) {
        std::vector<std::vector<Jet>> sub;
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<Jet> row;
            for (std::size_t j = 0; j < k; ++j)
                if (j != col) row.push_back(m[i][j]);
            sub.push_back(std::move(row));
        }
        Jet term = m[0][col] * det_jets(sub, order, mode);
        acc = subtract ? acc - term : acc + term;
        subtract = !subtract;
    }
    return acc;
}

Jet jet_inner_product(const std::vector<Jet>& u, const std::vector<Jet>& v, int order, Mode mode) {
    Jet acc = Jet::identically_zero(order, mode);
    for (std::size_t i = 0; i < u.size(); ++i) acc = acc + u[i].conjugated() * v[i];
    return acc;
}

} // namespace

JetMatrix JetMatrix::identity(int n, int order, Mode mode) {
    JetMatrix m(n, n, order, mode);
    for (int i = 0; i < n; ++i) m.at(i, i) = Jet::constant(order, Scalar::one(mode));
    return m;
}

JetMatrix JetMatrix::adjoint() const {
    JetMatrix out(cols, rows, order(), mode());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j).conjugated();
    return out;
}

JetMatrix JetMatrix::to_float() const {
    JetMatrix out = *this;
    for (auto& jet : out.entries) jet = jet.to_float();
    return out;
}

JetMatrix operator*(const JetMatrix& a, const JetMatrix& b) {
    if (a.cols != b.rows) fail(ErrorCode::internal, "jet matrix shape mismatch");
    int order = std::min(a.order(), b.order());
    JetMatrix out(a.rows, b.cols, order, a.mode());
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
            Jet acc = Jet::identically_zero(order, a.mode());
            for (int k = 0; k < a.cols; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            out.at(i, j) = std::move(acc);
        }
    return out;
}

JetMatrix operator+(const JetMatrix& a, const JetMatrix& b) {
    JetMatrix out = a;
    for (std::size_t i = 0; i < out.entries.size(); ++i)
        out.entries[i] = out.entries[i] + b.entries[i];
    return out;
}

JetMatrix operator-(const JetMatrix& a, const JetMatrix& b) {
    JetMatrix out = a;
    for (std::size_t i = 0; i < out.entries.size(); ++i)
        out.entries[i] = out.entries[i] - b.entries[i];
    return out;
}

double JetMatrix::max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& jet : entries) {
        for (int k = 0; k <= jet.order(); ++k) {
            m = std::max(m, jet.left(k).abs());
            m = std::max(m, jet.right(k).abs());
        }
    }
    return m;
}

void MatrixCurve::validate() const {
    if (size < 1) fail(ErrorCode::invalid_argument, "matrix size must be >= 1");
    if (entries.rows != size || entries.cols != size)
        fail(ErrorCode::invalid_argument, "entry grid does not match the size");
    for (const auto& jet : entries.entries) {
        if (jet.order() != order()) fail(ErrorCode::invalid_argument, "entry orders differ");
        if (jet.mode() != mode()) fail(ErrorCode::invalid_argument, "entry modes differ");
    }
}

std::vector<std::complex<double>> MatrixCurve::values_at_zero() const {
    std::vector<std::complex<double>> out;
    for (const auto& jet : entries.entries) out.push_back(jet.left(0).to_complex());
    return out;
}

std::vector<std::complex<double>> MatrixCurve::evaluate(double t) const {
    std::vector<std::complex<double>> out;
    for (const auto& jet : entries.entries) out.push_back(jet.evaluate(t).to_complex());
    return out;
}

bool check_normal(const MatrixCurve& a, double eps_normal) {
    a.validate();
    JetMatrix adj = a.entries.adjoint();
    JetMatrix commutator = a.entries * adj - adj * a.entries;
    if (a.mode() == Mode::exact) {
        for (const auto& jet : commutator.entries)
            for (int k = 0; k <= jet.order(); ++k)
                if (!jet.left(k).is_zero(0.0) || !jet.right(k).is_zero(0.0)) return false;
        return true;
    }
    return commutator.max_abs_coefficient() <= eps_normal;
}

PolyCurve char_poly(const MatrixCurve& a) {
    a.validate();
    int n = a.size;
    int order = a.order();
    Mode mode = a.mode();
    PolyCurve out;
    out.degree = n;
    out.smoothness = a.smoothness;
    for (int k = 1; k <= n; ++k) {
        Jet acc = Jet::identically_zero(order, mode);
        // iterate k-subsets of the index set
        std::vector<int> idx(static_cast<std::size_t>(k));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<std::vector<Jet>> minor;
            for (int i : idx) {
                std::vector<Jet> row;
                for (int j : idx) row.push_back(a.entries.at(i, j));
                minor.push_back(std::move(row));
            }
            acc = acc + det_jets(minor, order, mode);
            int pos = k - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int q = pos + 1; q < k; ++q)
                idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
        }
        out.a.push_back(std::move(acc));
    }
    return out;
}

SpectralSplit spectral_split(const MatrixCurve& a_in, int order, const Tolerances& tol) {
    a_in.validate();
    MatrixCurve a;
    a.size = a_in.size;
    a.smoothness = a_in.smoothness;
    a.entries = a_in.entries.to_float();
    order = std::min(order, a.order());
    int n = a.size;

    // clustered eigenbasis of A(0)
    Eigen::MatrixXcd a0(n, n);
    auto v0 = a.values_at_zero();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a0(i, j) = v0[static_cast<std::size_t>(i * n + j)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a0, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) fail(ErrorCode::numeric, "eigendecomposition failed");
    std::vector<std::complex<double>> values(solver.eigenvalues().data(),
                                             solver.eigenvalues().data() + n);
    auto groups = cluster_values(values, tol.cluster);
    if (groups.size() < 2) fail(ErrorCode::invalid_argument, "nothing to split: single cluster");

    // order eigenvector columns by cluster, then orthonormalize; QR preserves
    // the leading spans, so columns stay grouped by invariant subspace
    std::vector<int> col_order;
    std::vector<int> block_sizes;
    std::vector<bool> taken(static_cast<std::size_t>(n), false);
    for (const auto& g : groups) {
        int count = 0;
        for (const auto& target : g) {
            int best = -1;
            double bd = 1e300;
            for (int i = 0; i < n; ++i) {
                if (taken[static_cast<std::size_t>(i)]) continue;
                double d = std::abs(values[static_cast<std::size_t>(i)] - target);
                if (d < bd) {
                    bd = d;
                    best = i;
                }
            }
            taken[static_cast<std::size_t>(best)] = true;
            col_order.push_back(best);
            ++count;
        }
        block_sizes.push_back(count);
    }
    Eigen::MatrixXcd vecs(n, n);
    for (int c = 0; c < n; ++c) vecs.col(c) = solver.eigenvectors().col(col_order[static_cast<std::size_t>(c)]);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(vecs);
    Eigen::MatrixXcd u = qr.householderQ();

    // transform the curve into the eigenbasis
    JetMatrix u_jets(n, n, order, Mode::floating);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) u_jets.at(i, j) = Jet::constant(order, Scalar(u(i, j)));
    JetMatrix b = u_jets.adjoint() * a.entries * u_jets;

    // per-side order coefficients of B
    auto b_coef = [&](bool right, int ord) {
        Eigen::MatrixXcd m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m(i, j) = right ? b.at(i, j).right(ord).to_complex()
                                : b.at(i, j).left(ord).to_complex();
        return m;
    };

    SpectralSplit out;
    int offset = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        int bs = block_sizes[g];
        // lift the spectral projector in eigenbasis coordinates, per side
        std::vector<Eigen::MatrixXcd> x_side[2];
        for (int side = 0; side < 2; ++side) {
            bool right = side == 1;
            Eigen::MatrixXcd d = b_coef(right, 0);
            std::vector<int> inb, outb;
            for (int i = 0; i < n; ++i)
                (i >= offset && i < offset + bs ? inb : outb).push_back(i);
            auto solve_sylvester = [&](const std::vector<int>& rows_set,
                                       const std::vector<int>& cols_set,
                                       const Eigen::MatrixXcd& rhs) {
                int p = static_cast<int>(rows_set.size());
                int q = static_cast<int>(cols_set.size());
                Eigen::MatrixXcd dp(p, p), dq(q, q);
                for (int i = 0; i < p; ++i)
                    for (int j = 0; j < p; ++j) dp(i, j) = d(rows_set[static_cast<std::size_t>(i)], rows_set[static_cast<std::size_t>(j)]);
                for (int i = 0; i < q; ++i)
                    for (int j = 0; j < q; ++j) dq(i, j) = d(cols_set[static_cast<std::size_t>(i)], cols_set[static_cast<std::size_t>(j)]);
                Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(p * q, p * q);
                for (int i = 0; i < p; ++i)
                    for (int j = 0; j < q; ++j)
                        for (int kk = 0; kk < p; ++kk)
                            for (int l = 0; l < q; ++l) {
                                std::complex<double> v(0.0, 0.0);
                                if (j == l) v += dp(i, kk);
                                if (i == kk) v -= dq(l, j);
                                k(j * p + i, l * p + kk) += v;
                            }
                Eigen::PartialPivLU<Eigen::MatrixXcd> lu(k);
                Eigen::VectorXcd rhs_v(p * q);
                for (int i = 0; i < p; ++i)
                    for (int j = 0; j < q; ++j) rhs_v(j * p + i) = rhs(i, j);
                Eigen::VectorXcd sol = lu.solve(rhs_v);
                if (!sol.allFinite())
                    fail(ErrorCode::numeric, "singular sylvester system: clusters too close");
                Eigen::MatrixXcd m(p, q);
                for (int i = 0; i < p; ++i)
                    for (int j = 0; j < q; ++j) m(i, j) = sol(j * p + i);
                return m;
            };

            std::vector<Eigen::MatrixXcd> x;
            Eigen::MatrixXcd x0 = Eigen::MatrixXcd::Zero(n, n);
            for (int i : inb) x0(i, i) = 1.0;
            x.push_back(x0);
            for (int ord = 1; ord <= order; ++ord) {
                Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
                for (int j = 1; j < ord; ++j)
                    s -= x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(ord - j)];
                Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
                for (int j = 1; j <= ord; ++j) {
                    Eigen::MatrixXcd bj = b_coef(right, j);
                    c -= bj * x[static_cast<std::size_t>(ord - j)] -
                         x[static_cast<std::size_t>(ord - j)] * bj;
                }
                Eigen::MatrixXcd xm = Eigen::MatrixXcd::Zero(n, n);
                for (int i : inb)
                    for (int j : inb) xm(i, j) = s(i, j);
                for (int i : outb)
                    for (int j : outb) xm(i, j) = -s(i, j);
                if (!outb.empty()) {
                    Eigen::MatrixXcd c_po(static_cast<int>(inb.size()),
                                          static_cast<int>(outb.size()));
                    for (std::size_t i = 0; i < inb.size(); ++i)
                        for (std::size_t j = 0; j < outb.size(); ++j)
                            c_po(static_cast<int>(i), static_cast<int>(j)) = c(inb[i], outb[j]);
                    Eigen::MatrixXcd x_po = solve_sylvester(inb, outb, c_po);
                    for (std::size_t i = 0; i < inb.size(); ++i)
                        for (std::size_t j = 0; j < outb.size(); ++j)
                            xm(inb[i], outb[j]) = x_po(static_cast<int>(i), static_cast<int>(j));
                    Eigen::MatrixXcd c_op(static_cast<int>(outb.size()),
                                          static_cast<int>(inb.size()));
                    for (std::size_t i = 0; i < outb.size(); ++i)
                        for (std::size_t j = 0; j < inb.size(); ++j)
                            c_op(static_cast<int>(i), static_cast<int>(j)) = c(outb[i], inb[j]);
                    Eigen::MatrixXcd x_op = solve_sylvester(outb, inb, c_op);
                    for (std::size_t i = 0; i < outb.size(); ++i)
                        for (std::size_t j = 0; j < inb.size(); ++j)
                            xm(outb[i], inb[j]) = x_op(static_cast<int>(i), static_cast<int>(j));
                }
                x.push_back(std::move(xm));
            }
            x_side[side] = std::move(x);
        }

        // assemble the lifted projector in eigenbasis coordinates
        JetMatrix x_jets(n, n, order, Mode::floating);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<Scalar> left, right;
                for (int ord = 0; ord <= order; ++ord) {
                    left.emplace_back(Scalar(x_side[0][static_cast<std::size_t>(ord)](i, j)));
                    right.emplace_back(Scalar(x_side[1][static_cast<std::size_t>(ord)](i, j)));
                }
                x_jets.at(i, j) = Jet::from_sides(std::move(left), std::move(right));
            }

        // frame: gram-schmidt on the projected basis columns
        std::vector<std::vector<Jet>> w_cols;
        for (int aa = 0; aa < bs; ++aa) {
            std::vector<Jet> v;
            for (int i = 0; i < n; ++i) v.push_back(x_jets.at(i, offset + aa));
            for (const auto& w : w_cols) {
                Jet proj = jet_inner_product(w, v, order, Mode::floating);
                for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] =
                    v[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(i)] * proj;
            }
            Jet norm2 = jet_inner_product(v, v, order, Mode::floating);
            Jet inv_norm = norm2.square_root(tol.zero).reciprocal(tol.zero);
            for (auto& vi : v) vi = vi * inv_norm;
            w_cols.push_back(std::move(v));
        }
        JetMatrix w(n, bs, order, Mode::floating);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < bs; ++j) w.at(i, j) = w_cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];

        JetMatrix frame = u_jets * w;
        MatrixCurve block;
        block.size = bs;
        block.smoothness = a.smoothness;
        block.entries = w.adjoint() * b * w;
        out.projectors.push_back(u_jets * x_jets * u_jets.adjoint());
        out.frames.push_back(std::move(frame));
        out.blocks.push_back(std::move(block));
        offset += bs;
    }
    return out;
}

namespace {

MatrixTreeNode build_matrix(const MatrixCurve& a, const Tolerances& tol);

void attach_matrix_split(MatrixTreeNode& node, const MatrixCurve& a, const Tolerances& tol) {
    SpectralSplit split = spectral_split(a, a.order(), tol);
    node.reductions.push_back("spectral_split(" + std::to_string(split.blocks.size()) + ")");
    node.frames = split.frames;
    for (const auto& block : split.blocks) node.children.push_back(build_matrix(block, tol));
}

MatrixTreeNode build_matrix(const MatrixCurve& a, const Tolerances& tol) {
    a.validate();
    MatrixTreeNode node;
    node.size = a.size;
    node.curve = a;
    if (a.size == 1) {
        node.kind = NodeKind::linear_leaf;
        return node;
    }

    auto v0 = a.values_at_zero();
    Eigen::MatrixXcd a0(a.size, a.size);
    for (int i = 0; i < a.size; ++i)
        for (int j = 0; j < a.size; ++j) a0(i, j) = v0[static_cast<std::size_t>(i * a.size + j)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a0, false);
    std::vector<std::complex<double>> values(solver.eigenvalues().data(),
                                             solver.eigenvalues().data() + a.size);
    if (cluster_values(values, tol.cluster).size() >= 2) {
        node.kind = NodeKind::split;
        node.q = Rational(0);
        attach_matrix_split(node, a, tol);
        return node;
    }

    // all eigenvalues of A(0) coincide: remove the trace part
    MatrixCurve shifted = a;
    Jet trace = Jet::identically_zero(a.order(), a.mode());
    for (int i = 0; i < a.size; ++i) trace = trace + a.entries.at(i, i);
    if (!trace.is_identically_zero_flagged()) {
        Scalar inv_n = a.mode() == Mode::exact
                           ? Scalar::from_rational(Rational(1, a.size))
                           : Scalar(std::complex<double>(1.0 / a.size, 0.0));
        Jet tau = trace.scaled(inv_n);
        node.trace_shift = tau;
        node.reductions.push_back("trace_shift");
        for (int i = 0; i < a.size; ++i)
            shifted.entries.at(i, i) = shifted.entries.at(i, i) - tau;
    }

    bool all_zero = true;
    int r = -1;
    for (const auto& jet : shifted.entries.entries) {
        Valuation v = jet.multiplicity(tol.zero);
        if (v.is_identically_zero()) continue;
        all_zero = false;
        if (v.is_undecided())
            fail(ErrorCode::undecidable,
                 "matrix entry is zero to truncation without an exact-zero flag");
        if (r < 0 || v.value < r) r = v.value;
    }
    if (all_zero) {
        node.kind = NodeKind::zero_leaf;
        node.q = Rational(0);
        MatrixCurve unit;
        unit.size = 1;
        unit.smoothness = a.smoothness;
        unit.entries = JetMatrix(1, 1, a.order(), a.mode());
        for (int i = 0; i < a.size; ++i) node.children.push_back(build_matrix(unit, tol));
        return node;
    }
    if (r == 0)
        fail(ErrorCode::numeric,
             "cluster tolerance straddles distinct eigenvalues of A(0); adjust eps_cluster");

    if (!a.smoothness.is_infinite() && a.smoothness.value() < r) {
        node.kind = NodeKind::budget_leaf;
        node.q = Rational(0);
        node.r = r;
        node.leaf_reason = "declared smoothness " + a.smoothness.str() + " < r = " +
                           std::to_string(r);
        return node;
    }

    MatrixCurve divided;
    divided.size = a.size;
    divided.smoothness = a.smoothness.is_infinite()
                             ? ExtInt::infinity()
                             : ExtInt(std::max(0L, a.smoothness.value() - r));
    divided.entries = JetMatrix(a.size, a.size, a.order() - r, a.mode());
    for (int i = 0; i < a.size; ++i)
        for (int j = 0; j < a.size; ++j)
            divided.entries.at(i, j) =
                shifted.entries.at(i, j).shift_exponent(r, tol.zero).truncated(a.order() - r);

    bool divided_zero_at_0 = true;
    for (const auto& jet : divided.entries.entries)
        if (!jet.left(0).is_zero(tol.zero)) divided_zero_at_0 = false;
    if (divided_zero_at_0) {
        node.kind = NodeKind::nonstrict_leaf;
        node.q = Rational(0);
        node.r = r;
        node.leaf_reason = "A_(r)(0) = 0";
        return node;
    }

    node.kind = NodeKind::rescale;
    node.r = r;
    node.q = Rational(r);
    node.reductions.push_back("divide_r(" + std::to_string(r) + ")");
    attach_matrix_split(node, divided, tol);
    return node;
}

bool matrix_subtree_admissible(const MatrixTreeNode& node) {
    if (node.is_leaf()) return node.q != 0 || node.size == 1;
    for (const auto& child : node.children)
        if (!matrix_subtree_admissible(child)) return false;
    return true;
}

Jet jet_add_promote(const Jet& a, const Jet& b) {
    if (a.mode() == b.mode()) return a + b;
    return a.to_float() + b.to_float();
}

struct WalkResult {
    std::vector<Jet> eigenvalues;
    JetMatrix frame;
};

WalkResult walk_eigen(const MatrixTreeNode& node, const Tolerances& tol) {
    switch (node.kind) {
    case NodeKind::linear_leaf: {
        WalkResult out;
        out.eigenvalues.push_back(node.curve.entries.at(0, 0));
        out.frame = JetMatrix::identity(1, node.curve.order(), node.curve.mode());
        return out;
    }
    case NodeKind::zero_leaf: {
        WalkResult out;
        for (int i = 0; i < node.size; ++i)
            out.eigenvalues.push_back(Jet::identically_zero(node.curve.order(), node.curve.mode()));
        out.frame = JetMatrix::identity(node.size, node.curve.order(), node.curve.mode());
        if (node.trace_shift)
            for (auto& ev : out.eigenvalues) ev = jet_add_promote(ev, *node.trace_shift);
        return out;
    }
    case NodeKind::split:
    case NodeKind::rescale: {
        WalkResult out;
        int order = node.curve.order();
        for (const auto& child : node.children) order = std::min(order, child.curve.order());
        // frame columns compose: full = F_i * sub_frame
        std::vector<std::vector<Jet>> columns;
        for (std::size_t c = 0; c < node.children.size(); ++c) {
            WalkResult sub = walk_eigen(node.children[c], tol);
            JetMatrix composed = node.frames[c].to_float() * sub.frame.to_float();
            order = std::min(order, composed.order());
            for (int j = 0; j < composed.cols; ++j) {
                std::vector<Jet> col;
                for (int i = 0; i < composed.rows; ++i) col.push_back(composed.at(i, j));
                columns.push_back(std::move(col));
            }
            for (auto& ev : sub.eigenvalues) out.eigenvalues.push_back(ev);
        }
        out.frame = JetMatrix(node.size, node.size, order, Mode::floating);
        for (int j = 0; j < node.size; ++j)
            for (int i = 0; i < node.size; ++i)
                out.frame.at(i, j) = columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].truncated(order);
        if (node.kind == NodeKind::rescale)
            for (auto& ev : out.eigenvalues) ev = ev.monomial_multiply(node.r);
        if (node.trace_shift)
            for (auto& ev : out.eigenvalues) ev = jet_add_promote(ev, *node.trace_shift);
        return out;
    }
    default:
        fail(ErrorCode::invalid_argument,
             std::string("cannot decompose through a non-admissible leaf (") +
                 node_kind_name(node.kind) + ")");
    }
}

ExtInt theta_node(const MatrixTreeNode& node) {
    switch (node.kind) {
    case NodeKind::linear_leaf:
    case NodeKind::zero_leaf:
        return 0;
    case NodeKind::split:
    case NodeKind::rescale: {
        ExtInt best = 0;
        for (const auto& child : node.children) best = ExtInt::max(best, theta_node(child));
        if (node.kind == NodeKind::rescale) best = best + ExtInt(node.r);
        return best;
    }
    default:
        fail(ErrorCode::invalid_argument, "theta is defined for admissible trees only");
    }
}

} // namespace

MatrixTreeNode build_tree_normal(const MatrixCurve& a, const Tolerances& tol) {
    return build_matrix(a, tol);
}

TreeClass classify_matrix_tree(const MatrixTreeNode& tree) {
    TreeClass out;
    out.admissible = matrix_subtree_admissible(tree);
    std::function<bool(const MatrixTreeNode&)> all_unit = [&](const MatrixTreeNode& node) {
        if (node.is_leaf()) return node.q == 0 && node.size == 1;
        for (const auto& child : node.children)
            if (!all_unit(child)) return false;
        return true;
    };
    out.good = out.admissible && all_unit(tree);
    out.bad = out.admissible && !out.good;
    out.fair = out.admissible;
    return out;
}

ExtInt theta(const MatrixTreeNode& tree) {
    if (!matrix_subtree_admissible(tree))
        fail(ErrorCode::invalid_argument, "theta is defined for admissible trees only");
    return theta_node(tree);
}

ExtInt theta_global(const std::vector<ExtInt>& per_point) {
    ExtInt best = 0;
    for (const auto& t : per_point) best = ExtInt::max(best, t);
    return best;
}

EigenDecomposition eigendecompose(const MatrixCurve& a, const MatrixTreeNode& tree,
                                  ExtInt theta_value, const Tolerances& tol) {
    a.validate();
    WalkResult walk = walk_eigen(tree, tol);
    EigenDecomposition out;
    out.eigenvalues = std::move(walk.eigenvalues);
    out.frame = std::move(walk.frame);
    out.budget_ok = a.smoothness >= theta_value;
    out.eigenvalue_class = a.smoothness;
    if (a.smoothness.is_infinite()) {
        out.eigenvector_class = ExtInt::infinity();
    } else if (out.budget_ok) {
        out.eigenvector_class = a.smoothness - theta_value.value();
    } else {
        out.eigenvector_class = 0;
    }
    return out;
}

} // namespace smoothroots
