#ifndef SMOOTHROOTS_NORMAL_HPP
#define SMOOTHROOTS_NORMAL_HPP

#include "tree.hpp"

namespace smoothroots {

struct JetMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Jet> entries; // row-major

    JetMatrix() = default;
    JetMatrix(int r, int c, int order, Mode mode)
        : rows(r), cols(c),
          entries(static_cast<std::size_t>(r) * static_cast<std::size_t>(c),
                  Jet::identically_zero(order, mode)) {}

    Jet& at(int i, int j) { return entries[static_cast<std::size_t>(i * cols + j)]; }
    const Jet& at(int i, int j) const { return entries[static_cast<std::size_t>(i * cols + j)]; }

    int order() const { return entries.empty() ? 0 : entries[0].order(); }
    Mode mode() const { return entries.empty() ? Mode::exact : entries[0].mode(); }

    static JetMatrix identity(int n, int order, Mode mode);

    JetMatrix adjoint() const; // conjugate transpose
    JetMatrix to_float() const;

    friend JetMatrix operator*(const JetMatrix& a, const JetMatrix& b);
    friend JetMatrix operator+(const JetMatrix& a, const JetMatrix& b);
    friend JetMatrix operator-(const JetMatrix& a, const JetMatrix& b);

    double max_abs_coefficient() const;
};

struct MatrixCurve {
    int size = 0;
    JetMatrix entries;
    ExtInt smoothness = ExtInt::infinity();

    int order() const { return entries.order(); }
    Mode mode() const { return entries.mode(); }
    void validate() const;

    std::vector<std::complex<double>> values_at_zero() const;  // row-major
    std::vector<std::complex<double>> evaluate(double t) const; // row-major
};

bool check_normal(const MatrixCurve& a, double eps_normal);

// a_k(P_A) = trace of the k-th exterior power = sum of principal k x k minors.
PolyCurve char_poly(const MatrixCurve& a);

struct SpectralSplit {
    std::vector<MatrixCurve> blocks;
    std::vector<JetMatrix> frames;     // n x n_i, orthonormal columns to order K
    std::vector<JetMatrix> projectors; // n x n spectral projectors to order K
};

// Order-by-order projector lifting from the clustered eigendecomposition of
// A(0); frames by Gram-Schmidt on jet columns. Output is float-mode (the
// eigenbasis is numeric).
SpectralSplit spectral_split(const MatrixCurve& a, int order, const Tolerances& tol);

struct MatrixTreeNode {
    int size = 1;
    Rational q = Rational(0);
    NodeKind kind = NodeKind::linear_leaf;
    int r = 0;
    std::vector<std::string> reductions;
    std::vector<MatrixTreeNode> children;
    MatrixCurve curve;
    std::optional<Jet> trace_shift; // eigenvalues(curve) = trace_shift + ...
    std::vector<JetMatrix> frames;  // per child at split/rescale nodes
    std::string leaf_reason;

    bool is_leaf() const { return children.empty(); }
};

MatrixTreeNode build_tree_normal(const MatrixCurve& a, const Tolerances& tol);

TreeClass classify_matrix_tree(const MatrixTreeNode& tree);

ExtInt theta(const MatrixTreeNode& tree); // requires an admissible tree

ExtInt theta_global(const std::vector<ExtInt>& per_point);

struct EigenDecomposition {
    std::vector<Jet> eigenvalues; // one jet per eigenvalue branch
    JetMatrix frame;              // n x n, column j pairs with eigenvalues[j]
    ExtInt eigenvalue_class = 0;  // declared smoothness (no loss for eigenvalues)
    ExtInt eigenvector_class = 0; // declared - Theta
    bool budget_ok = false;
};

// Requires an admissible tree; throws otherwise (the caller reports the
// failed hypothesis and omits the certificate).
EigenDecomposition eigendecompose(const MatrixCurve& a, const MatrixTreeNode& tree,
                                  ExtInt theta_value, const Tolerances& tol);

} // namespace smoothroots

#endif
