#include "jet.hpp"

#include <algorithm>

namespace smoothroots {

namespace {

std::vector<Scalar> zeros(int order, Mode mode) {
    return std::vector<Scalar>(static_cast<std::size_t>(order) + 1, Scalar::zero(mode));
}

std::vector<Scalar> convolve(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                             int order, Mode mode) {
    std::vector<Scalar> out = zeros(order, mode);
    for (int i = 0; i <= order; ++i) {
        for (int j = 0; i + j <= order; ++j) {
            if (j >= static_cast<int>(b.size()) || i >= static_cast<int>(a.size())) continue;
            out[static_cast<std::size_t>(i + j)] =
                out[static_cast<std::size_t>(i + j)] +
                a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

} // namespace

Jet::Jet(int order, Mode mode)
    : order_(order), mode_(mode), left_(zeros(order, mode)), right_(zeros(order, mode)) {
    if (order < 0) fail(ErrorCode::invalid_argument, "jet order must be nonnegative");
}

Jet Jet::constant(int order, const Scalar& c) {
    Jet j(order, c.mode());
    j.left_[0] = c;
    j.right_[0] = c;
    return j;
}

Jet Jet::monomial(int order, int k, const Scalar& c) {
    Jet j(order, c.mode());
    if (k < 0) fail(ErrorCode::invalid_argument, "monomial exponent must be nonnegative");
    if (k <= order) {
        j.left_[static_cast<std::size_t>(k)] = c;
        j.right_[static_cast<std::size_t>(k)] = c;
    }
    return j;
}

Jet Jet::identically_zero(int order, Mode mode) {
    Jet j(order, mode);
    j.left_zero_ = true;
    j.right_zero_ = true;
    return j;
}

Jet Jet::from_sides(std::vector<Scalar> left, std::vector<Scalar> right, bool left_zero,
                    bool right_zero) {
    if (left.empty() || left.size() != right.size())
        fail(ErrorCode::invalid_argument, "jet sides must be nonempty and equally long");
    Mode m = left[0].mode();
    for (const auto& c : left)
        if (c.mode() != m) fail(ErrorCode::invalid_argument, "jet coefficients mix modes");
    for (const auto& c : right)
        if (c.mode() != m) fail(ErrorCode::invalid_argument, "jet coefficients mix modes");
    Jet j(static_cast<int>(left.size()) - 1, m);
    j.left_ = std::move(left);
    j.right_ = std::move(right);
    j.left_zero_ = left_zero;
    j.right_zero_ = right_zero;
    if (left_zero)
        for (auto& c : j.left_) c = Scalar::zero(m);
    if (right_zero)
        for (auto& c : j.right_) c = Scalar::zero(m);
    return j;
}

Jet Jet::analytic(std::vector<Scalar> coefficients) {
    std::vector<Scalar> copy = coefficients;
    return from_sides(std::move(coefficients), std::move(copy));
}

bool Jet::is_zero_to_truncation(double eps_zero) const {
    for (const auto& c : left_)
        if (!c.is_zero(eps_zero)) return false;
    for (const auto& c : right_)
        if (!c.is_zero(eps_zero)) return false;
    return true;
}

int Jet::two_sided_class(double eps_zero) const {
    for (int k = 0; k <= order_; ++k) {
        if (!left_[static_cast<std::size_t>(k)].equals(right_[static_cast<std::size_t>(k)],
                                                       eps_zero))
            return k - 1;
    }
    return order_;
}

Jet Jet::truncated(int new_order) const {
    if (new_order < 0) fail(ErrorCode::undecidable, "truncation order exhausted");
    if (new_order >= order_) return *this;
    Jet j(new_order, mode_);
    for (int k = 0; k <= new_order; ++k) {
        j.left_[static_cast<std::size_t>(k)] = left_[static_cast<std::size_t>(k)];
        j.right_[static_cast<std::size_t>(k)] = right_[static_cast<std::size_t>(k)];
    }
    j.left_zero_ = left_zero_;
    j.right_zero_ = right_zero_;
    return j;
}

Jet Jet::to_float() const {
    if (mode_ == Mode::floating) return *this;
    Jet j(order_, Mode::floating);
    for (int k = 0; k <= order_; ++k) {
        j.left_[static_cast<std::size_t>(k)] = left_[static_cast<std::size_t>(k)].to_float();
        j.right_[static_cast<std::size_t>(k)] = right_[static_cast<std::size_t>(k)].to_float();
    }
    j.left_zero_ = left_zero_;
    j.right_zero_ = right_zero_;
    return j;
}

void Jet::check_binary(const Jet& a, const Jet& b) {
    if (a.mode_ != b.mode_)
        fail(ErrorCode::invalid_argument, "jet mode mismatch (exact vs float)");
}

Jet operator+(const Jet& a, const Jet& b) {
    Jet::check_binary(a, b);
    int order = std::min(a.order_, b.order_);
    Jet out(order, a.mode_);
    for (int k = 0; k <= order; ++k) {
        out.left_[static_cast<std::size_t>(k)] =
            a.left_[static_cast<std::size_t>(k)] + b.left_[static_cast<std::size_t>(k)];
        out.right_[static_cast<std::size_t>(k)] =
            a.right_[static_cast<std::size_t>(k)] + b.right_[static_cast<std::size_t>(k)];
    }
    out.left_zero_ = a.left_zero_ && b.left_zero_;
    out.right_zero_ = a.right_zero_ && b.right_zero_;
    return out;
}

Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }

Jet operator-(const Jet& a) {
    Jet out = a;
    for (auto& c : out.left_) c = -c;
    for (auto& c : out.right_) c = -c;
    return out;
}

Jet operator*(const Jet& a, const Jet& b) {
    Jet::check_binary(a, b);
    int order = std::min(a.order_, b.order_);
    Jet out(order, a.mode_);
    out.left_zero_ = a.left_zero_ || b.left_zero_;
    out.right_zero_ = a.right_zero_ || b.right_zero_;
    if (!out.left_zero_) out.left_ = convolve(a.left_, b.left_, order, a.mode_);
    if (!out.right_zero_) out.right_ = convolve(a.right_, b.right_, order, a.mode_);
    return out;
}

Jet Jet::scaled(const Scalar& c) const {
    if (c.mode() != mode_) fail(ErrorCode::invalid_argument, "jet/scalar mode mismatch");
    Jet out = *this;
    for (auto& x : out.left_) x = x * c;
    for (auto& x : out.right_) x = x * c;
    return out;
}

Jet Jet::conjugated() const {
    Jet out = *this;
    for (auto& x : out.left_) x = x.conj();
    for (auto& x : out.right_) x = x.conj();
    return out;
}

SideValuation Jet::side_valuation(const std::vector<Scalar>& c, bool flagged, double eps_zero) {
    if (flagged) return {SideValuation::Kind::flagged_zero, 0};
    for (int k = 0; k < static_cast<int>(c.size()); ++k) {
        if (!c[static_cast<std::size_t>(k)].is_zero(eps_zero))
            return {SideValuation::Kind::finite, k};
    }
    return {SideValuation::Kind::exhausted, 0};
}

SideValuation Jet::left_valuation(double eps_zero) const {
    return side_valuation(left_, left_zero_, eps_zero);
}

SideValuation Jet::right_valuation(double eps_zero) const {
    return side_valuation(right_, right_zero_, eps_zero);
}

Valuation Jet::multiplicity(double eps_zero) const {
    SideValuation vl = left_valuation(eps_zero);
    SideValuation vr = right_valuation(eps_zero);
    if (vl.is_flagged_zero() && vr.is_flagged_zero()) return Valuation::identically_zero();

    // A side with all stored coefficients zero but no flag leaves the germ
    // undetermined beyond order K; the side valuation is only known to be
    // >= K+1. That still decides the multiplicity when the other side pins it
    // below K (mismatch rule), and is undecidable otherwise.
    if (vl.is_finite() && vr.is_finite()) {
        if (vl.index == vr.index) {
            int v = vl.index;
            if (left_[static_cast<std::size_t>(v)].equals(right_[static_cast<std::size_t>(v)],
                                                          eps_zero))
                return Valuation::known(v);
            return Valuation::known(std::max(0, v - 1));
        }
        return Valuation::known(std::max(0, std::min(vl.index, vr.index) - 1));
    }
    if (vl.is_finite() || vr.is_finite()) {
        int v = vl.is_finite() ? vl.index : vr.index;
        // other side is flagged zero (valuation infinity) or exhausted
        // (valuation >= K+1 > v); either way the valuations mismatch
        return Valuation::known(std::max(0, v - 1));
    }
    return Valuation::at_least(order_ + 1);
}

Jet Jet::shift_exponent(int r, double eps_zero) const {
    if (r < 0) fail(ErrorCode::invalid_argument, "shift exponent must be nonnegative");
    if (r == 0) return *this;
    if (r > order_)
        fail(ErrorCode::undecidable, "truncation order too low to divide by t^" + std::to_string(r));
    auto check_side = [&](const std::vector<Scalar>& c, bool flagged) {
        if (flagged) return;
        for (int k = 0; k < r; ++k) {
            if (!c[static_cast<std::size_t>(k)].is_zero(eps_zero))
                fail(ErrorCode::invalid_argument,
                     "not divisible: nonzero coefficient below t^" + std::to_string(r));
        }
    };
    check_side(left_, left_zero_);
    check_side(right_, right_zero_);
    Jet out(order_ - r, mode_);
    out.left_zero_ = left_zero_;
    out.right_zero_ = right_zero_;
    for (int k = 0; k <= out.order_; ++k) {
        if (!left_zero_) out.left_[static_cast<std::size_t>(k)] = left_[static_cast<std::size_t>(k + r)];
        if (!right_zero_) out.right_[static_cast<std::size_t>(k)] = right_[static_cast<std::size_t>(k + r)];
    }
    // The quotient must still be a continuous germ; a mismatch at the new
    // order-0 coefficient means the germ multiplicity was < r.
    if (!out.left_[0].equals(out.right_[0], eps_zero))
        fail(ErrorCode::invalid_argument, "not divisible: quotient discontinuous at 0");
    return out;
}

Jet Jet::monomial_multiply(int r) const {
    if (r < 0) fail(ErrorCode::invalid_argument, "monomial exponent must be nonnegative");
    if (r == 0) return *this;
    // the product is determined through order + r
    Jet out(order_ + r, mode_);
    out.left_zero_ = left_zero_;
    out.right_zero_ = right_zero_;
    for (int k = r; k <= out.order_; ++k) {
        if (!left_zero_) out.left_[static_cast<std::size_t>(k)] = left_[static_cast<std::size_t>(k - r)];
        if (!right_zero_) out.right_[static_cast<std::size_t>(k)] = right_[static_cast<std::size_t>(k - r)];
    }
    return out;
}

Jet Jet::compose_signed_power(int sign, int big_n) const {
    if (sign != 1 && sign != -1) fail(ErrorCode::invalid_argument, "sign must be +1 or -1");
    if (big_n <= 0) fail(ErrorCode::invalid_argument, "N must be positive");
    bool even = (big_n % 2 == 0);
    // Source side for the result's right side (t > 0): sgn(sign * t^N) = sign.
    // For the left side (t < 0) and odd N it is -sign, for even N it is sign.
    auto source = [&](bool result_right) -> const std::vector<Scalar>& {
        int arg_sign = result_right ? sign : (even ? sign : -sign);
        return arg_sign > 0 ? right_ : left_;
    };
    auto source_zero = [&](bool result_right) {
        int arg_sign = result_right ? sign : (even ? sign : -sign);
        return arg_sign > 0 ? right_zero_ : left_zero_;
    };
    Jet out(order_, mode_);
    out.right_zero_ = source_zero(true);
    out.left_zero_ = source_zero(false);
    Scalar sgn = Scalar::from_int(sign, mode_);
    for (int result_side = 0; result_side < 2; ++result_side) {
        bool is_right = (result_side == 1);
        if (is_right ? out.right_zero_ : out.left_zero_) continue;
        const std::vector<Scalar>& src = source(is_right);
        Scalar factor = Scalar::one(mode_);
        for (int k = 0; k * big_n <= order_; ++k) {
            Scalar value = src[static_cast<std::size_t>(k)] * factor;
            if (is_right)
                out.right_[static_cast<std::size_t>(k * big_n)] = value;
            else
                out.left_[static_cast<std::size_t>(k * big_n)] = value;
            factor = factor * sgn;
        }
    }
    return out;
}

std::optional<Scalar> Jet::limit_after_division(int q, double eps_zero) const {
    if (q < 0) fail(ErrorCode::invalid_argument, "division exponent must be nonnegative");
    if (q > order_)
        fail(ErrorCode::undecidable,
             "truncation order too low for limit of t^-" + std::to_string(q) + " f");
    auto side_limit = [&](const std::vector<Scalar>& c, bool flagged) -> std::optional<Scalar> {
        if (flagged) return Scalar::zero(mode_);
        for (int k = 0; k < q; ++k) {
            if (!c[static_cast<std::size_t>(k)].is_zero(eps_zero))
                return std::nullopt; // diverges on this side
        }
        return c[static_cast<std::size_t>(q)];
    };
    auto li = side_limit(left_, left_zero_);
    auto ri = side_limit(right_, right_zero_);
    if (!li || !ri) return std::nullopt;
    if (!li->equals(*ri, eps_zero)) return std::nullopt;
    return *li;
}

Scalar Jet::evaluate(double t) const {
    const std::vector<Scalar>& side = (t >= 0) ? right_ : left_;
    bool flagged = (t >= 0) ? right_zero_ : left_zero_;
    if (flagged) return Scalar::zero(mode_);
    if (mode_ == Mode::exact) {
        // exact Horner over the rational image of t
        Rational tr = rational_from_double(t);
        GaussianRational acc{Rational(0), Rational(0)};
        for (int k = order_; k >= 0; --k) {
            acc = GaussianRational{acc.re * tr, acc.im * tr} + side[static_cast<std::size_t>(k)].rational();
        }
        return Scalar(acc);
    }
    std::complex<double> acc(0.0, 0.0);
    for (int k = order_; k >= 0; --k) acc = acc * t + side[static_cast<std::size_t>(k)].to_complex();
    return Scalar(acc);
}

Jet Jet::reciprocal(double eps_zero) const {
    if (left_zero_ || right_zero_ || left_[0].is_zero(eps_zero) || right_[0].is_zero(eps_zero))
        fail(ErrorCode::invalid_argument, "reciprocal requires a nonzero value at 0");
    Jet out(order_, mode_);
    auto invert_side = [&](const std::vector<Scalar>& c, std::vector<Scalar>& o) {
        o[0] = Scalar::one(mode_) / c[0];
        for (int k = 1; k <= order_; ++k) {
            Scalar acc = Scalar::zero(mode_);
            for (int j = 1; j <= k; ++j)
                acc = acc + c[static_cast<std::size_t>(j)] * o[static_cast<std::size_t>(k - j)];
            o[static_cast<std::size_t>(k)] = -(acc / c[0]);
        }
    };
    invert_side(left_, out.left_);
    invert_side(right_, out.right_);
    return out;
}

Jet Jet::square_root(double eps_zero) const {
    if (left_zero_ || right_zero_)
        fail(ErrorCode::invalid_argument, "square root requires a nonzero value at 0");
    Scalar c0 = right_[0];
    if (c0.is_zero(eps_zero))
        fail(ErrorCode::invalid_argument, "square root requires a nonzero value at 0");
    Scalar s0 = Scalar::zero(mode_);
    if (mode_ == Mode::exact) {
        const GaussianRational& g = c0.rational();
        Rational root;
        if (!g.is_real() || !exact_sqrt(g.re, root))
            fail(ErrorCode::unsupported, "no exact square root for the value at 0");
        s0 = Scalar::from_rational(root);
    } else {
        s0 = Scalar(std::sqrt(c0.to_complex()));
    }
    Jet out(order_, mode_);
    Scalar two = Scalar::from_int(2, mode_);
    auto sqrt_side = [&](const std::vector<Scalar>& c, std::vector<Scalar>& o) {
        o[0] = s0;
        for (int k = 1; k <= order_; ++k) {
            Scalar acc = Scalar::zero(mode_);
            for (int j = 1; j < k; ++j)
                acc = acc + o[static_cast<std::size_t>(j)] * o[static_cast<std::size_t>(k - j)];
            o[static_cast<std::size_t>(k)] = (c[static_cast<std::size_t>(k)] - acc) / (two * s0);
        }
    };
    sqrt_side(left_, out.left_);
    sqrt_side(right_, out.right_);
    return out;
}

} // namespace smoothroots
