#include "polycurve.hpp"

#include <algorithm>

namespace smoothroots {

namespace {

Scalar scalar_from_rational(const Rational& r, Mode mode) {
    if (mode == Mode::exact) return Scalar::from_rational(r);
    return Scalar(std::complex<double>(static_cast<double>(r), 0.0));
}

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long acc = 1;
    for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return acc;
}

template <typename T>
T det_cofactor(const std::vector<std::vector<T>>& m, const T& zero) {
    std::size_t k = m.size();
    if (k == 1) return m[0][0];
    T acc = zero;
    bool subtract = false;
    for (std::size_t col = 0; col < k; ++col) {
        std::vector<std::vector<T>> sub;
        sub.reserve(k - 1);
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<T> row;
            row.reserve(k - 1);
            for (std::size_t j = 0; j < k; ++j)
                if (j != col) row.push_back(m[i][j]);
            sub.push_back(std::move(row));
        }
        T term = m[0][col] * det_cofactor(sub, zero);
        acc = subtract ? acc - term : acc + term;
        subtract = !subtract;
    }
    return acc;
}

// Newton recurrence s_k = sum_{i=1}^{k-1} (-1)^{i-1} sigma_i s_{k-i}
//                        + (-1)^{k-1} k sigma_k, with sigma_i = a_i (0 beyond n).
template <typename T, typename FromInt>
std::vector<T> newton_sums_impl(const std::vector<T>& sigma, int n, int kmax, FromInt from_int) {
    std::vector<T> s;
    s.reserve(static_cast<std::size_t>(kmax) + 1);
    s.push_back(from_int(n));
    for (int k = 1; k <= kmax; ++k) {
        T acc = from_int(0);
        for (int i = 1; i < k && i <= n; ++i) {
            T term = sigma[static_cast<std::size_t>(i - 1)] * s[static_cast<std::size_t>(k - i)];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        if (k <= n) {
            T term = sigma[static_cast<std::size_t>(k - 1)] * from_int(k);
            acc = (k % 2 == 1) ? acc + term : acc - term;
        }
        s.push_back(std::move(acc));
    }
    return s;
}

template <typename T>
T delta_minor_impl(const std::vector<T>& sums, int k, const T& zero) {
    std::vector<std::vector<T>> h(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        h[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j)
            h[static_cast<std::size_t>(i)].push_back(sums[static_cast<std::size_t>(i + j)]);
    }
    return det_cofactor(h, zero);
}

} // namespace

std::vector<Scalar> PointPoly::monic_coefficients() const {
    std::vector<Scalar> b = a;
    for (int j = 1; j <= degree; ++j)
        if (j % 2 == 1) b[static_cast<std::size_t>(j - 1)] = -b[static_cast<std::size_t>(j - 1)];
    return b;
}

Scalar PointPoly::evaluate(const Scalar& z) const {
    Scalar acc = Scalar::one(mode());
    std::vector<Scalar> b = monic_coefficients();
    for (int j = 1; j <= degree; ++j) acc = acc * z + b[static_cast<std::size_t>(j - 1)];
    return acc;
}

void PolyCurve::validate() const {
    if (degree < 1) fail(ErrorCode::invalid_argument, "polynomial degree must be >= 1");
    if (static_cast<int>(a.size()) != degree)
        fail(ErrorCode::invalid_argument, "coefficient count does not match degree");
    for (const auto& jet : a) {
        if (jet.order() != order()) fail(ErrorCode::invalid_argument, "coefficient orders differ");
        if (jet.mode() != mode()) fail(ErrorCode::invalid_argument, "coefficient modes differ");
    }
}

PointPoly PolyCurve::at_zero() const {
    PointPoly p;
    p.degree = degree;
    for (const auto& jet : a) p.a.push_back(jet.left(0));
    return p;
}

PointPoly PolyCurve::evaluate(double t) const {
    PointPoly p;
    p.degree = degree;
    for (const auto& jet : a) p.a.push_back(jet.evaluate(t));
    return p;
}

PolyCurve PolyCurve::to_float() const {
    PolyCurve out;
    out.degree = degree;
    out.smoothness = smoothness;
    for (const auto& jet : a) out.a.push_back(jet.to_float());
    return out;
}

std::vector<Scalar> newton_sums(const PointPoly& p, int kmax) {
    Mode m = p.mode();
    return newton_sums_impl(p.a, p.degree, kmax,
                            [m](long k) { return Scalar::from_int(k, m); });
}

std::vector<Jet> newton_sums(const PolyCurve& p, int kmax) {
    Mode m = p.mode();
    int order = p.order();
    // zero accumulators are the zero germ, so exact-zero flags survive sums
    return newton_sums_impl(p.a, p.degree, kmax, [m, order](long k) {
        return k == 0 ? Jet::identically_zero(order, m)
                      : Jet::constant(order, Scalar::from_int(k, m));
    });
}

Scalar delta_minor(const PointPoly& p, int k) {
    if (k < 1 || k > p.degree) fail(ErrorCode::invalid_argument, "minor index out of range");
    auto sums = newton_sums(p, 2 * k - 2);
    return delta_minor_impl(sums, k, Scalar::zero(p.mode()));
}

Jet delta_minor(const PolyCurve& p, int k) {
    if (k < 1 || k > p.degree) fail(ErrorCode::invalid_argument, "minor index out of range");
    auto sums = newton_sums(p, 2 * k - 2);
    return delta_minor_impl(sums, k, Jet::identically_zero(p.order(), p.mode()));
}

int distinct_root_count(const PointPoly& p, double eps_zero) {
    auto sums = newton_sums(p, 2 * p.degree - 2);
    for (int k = p.degree; k >= 1; --k) {
        Scalar d = delta_minor_impl(sums, k, Scalar::zero(p.mode()));
        if (!d.is_zero(eps_zero)) return k;
    }
    return 0; // unreachable: delta_1 = n
}

EinfResult einf_probe(const PolyCurve& p, double eps_zero) {
    auto sums = newton_sums(p, 2 * p.degree - 2);
    for (int k = p.degree; k >= 1; --k) {
        Jet d = delta_minor_impl(sums, k, Jet::identically_zero(p.order(), p.mode()));
        if (d.is_identically_zero_flagged()) continue;
        if (d.is_zero_to_truncation(eps_zero)) return {EinfProbe::candidate, k};
        return {EinfProbe::empty, k};
    }
    return {EinfProbe::empty, 0}; // unreachable
}

PolyCurve tschirnhaus(const PolyCurve& p) {
    p.validate();
    int n = p.degree;
    const Jet& a1 = p.a[0];
    if (a1.is_identically_zero_flagged()) return p;
    Mode mode = p.mode();
    int order = p.order();
    Jet c = a1.scaled(scalar_from_rational(Rational(1, n), mode));

    // plain monic coefficients b_0..b_n, b_0 = 1
    std::vector<Jet> b;
    b.push_back(Jet::constant(order, Scalar::one(mode)));
    for (int j = 1; j <= n; ++j) {
        Jet bj = p.a[static_cast<std::size_t>(j - 1)];
        if (j % 2 == 1) bj = -bj;
        b.push_back(bj);
    }
    std::vector<Jet> c_pow;
    c_pow.push_back(Jet::constant(order, Scalar::one(mode)));
    for (int i = 1; i <= n; ++i) c_pow.push_back(c_pow.back() * c);

    PolyCurve out;
    out.degree = n;
    out.smoothness = p.smoothness;
    for (int i = 1; i <= n; ++i) {
        Jet acc = Jet::identically_zero(order, mode);
        for (int j = 0; j <= i; ++j) {
            long bc = binomial(n - j, i - j);
            if (bc == 0) continue;
            Jet term = b[static_cast<std::size_t>(j)] * c_pow[static_cast<std::size_t>(i - j)];
            acc = acc + term.scaled(Scalar::from_int(bc, mode));
        }
        if (i % 2 == 1) acc = -acc;
        out.a.push_back(std::move(acc));
    }
    // a_1 vanishes identically by construction
    out.a[0] = Jet::identically_zero(order, mode);
    return out;
}

CurveShape curve_shape(const PolyCurve& p, double eps_zero) {
    p.validate();
    if (p.degree < 2)
        fail(ErrorCode::invalid_argument, "shape analysis applies to degree >= 2 only");
    if (!p.a[0].is_identically_zero_flagged())
        fail(ErrorCode::invalid_argument, "shape analysis requires a_1 = 0 (apply tschirnhaus)");
    for (const auto& jet : p.a)
        if (!jet.left(0).is_zero(eps_zero))
            fail(ErrorCode::invalid_argument, "shape analysis requires P(0) = z^n");

    CurveShape shape;
    bool have_min = false;
    std::vector<int> mults(static_cast<std::size_t>(p.degree) + 1, -1);
    for (int k = 1; k <= p.degree; ++k) {
        Valuation v = p.a[static_cast<std::size_t>(k - 1)].multiplicity(eps_zero);
        if (v.is_identically_zero()) continue;
        if (v.is_undecided())
            fail(ErrorCode::undecidable, "coefficient a_" + std::to_string(k) +
                                             " is zero to truncation without an exact-zero flag");
        mults[static_cast<std::size_t>(k)] = v.value;
        Rational candidate(v.value, k);
        if (!have_min || candidate < shape.m) {
            shape.m = candidate;
            have_min = true;
        }
    }
    if (!have_min) {
        shape.infinite_m = true;
        return shape;
    }
    shape.big_n = static_cast<int>(denominator_long(shape.m));
    Rational r_exact = shape.m * shape.big_n;
    shape.r = static_cast<int>(boost::multiprecision::numerator(r_exact).convert_to<long>());
    for (int k = 1; k <= p.degree; ++k) {
        if (mults[static_cast<std::size_t>(k)] < 0) continue;
        if (Rational(mults[static_cast<std::size_t>(k)], k) == shape.m)
            shape.realizing_indices.push_back(k);
    }
    // Strictness probe on the realizing coefficients: the one-sided limits of
    // t^{-km} a_k at 0. For N > 1 this equals the strict r-divisibility of
    // a(P^{+-,N}); for jets the two tests provably coincide, and the direct
    // probe stays within the truncation budget.
    shape.strict = false;
    for (int k : shape.realizing_indices) {
        int q = mults[static_cast<std::size_t>(k)];
        auto lim = p.a[static_cast<std::size_t>(k - 1)].limit_after_division(q, eps_zero);
        if (lim && !lim->is_zero(eps_zero)) {
            shape.strict = true;
            break;
        }
    }
    return shape;
}

PolyCurve divide_r(const PolyCurve& p, int r, double eps_zero) {
    p.validate();
    if (r == 0) return p;
    if (r < 0) fail(ErrorCode::invalid_argument, "division exponent must be nonnegative");
    int new_order = p.order() - p.degree * r;
    if (new_order < 0)
        fail(ErrorCode::undecidable, "truncation order too low for dividing by t^" +
                                         std::to_string(p.degree * r));
    PolyCurve out;
    out.degree = p.degree;
    if (p.smoothness.is_infinite()) {
        out.smoothness = ExtInt::infinity();
    } else {
        long v = p.smoothness.value() - static_cast<long>(p.degree) * r;
        out.smoothness = ExtInt(std::max(0L, v));
    }
    for (int k = 1; k <= p.degree; ++k) {
        Jet shifted = p.a[static_cast<std::size_t>(k - 1)].shift_exponent(k * r, eps_zero);
        out.a.push_back(shifted.truncated(new_order));
    }
    return out;
}

PolyCurve substitute_pm_n(const PolyCurve& p, int sign, int big_n) {
    p.validate();
    PolyCurve out;
    out.degree = p.degree;
    out.smoothness = p.smoothness;
    for (const auto& jet : p.a) out.a.push_back(jet.compose_signed_power(sign, big_n));
    return out;
}

bool strictly_r_divisible(const PolyCurve& p, int r, double eps_zero) {
    for (int k = 1; k <= p.degree; ++k) {
        auto lim = p.a[static_cast<std::size_t>(k - 1)].limit_after_division(k * r, eps_zero);
        if (!lim)
            fail(ErrorCode::invalid_argument,
                 "coefficient a_" + std::to_string(k) + " is not t^" + std::to_string(k * r) +
                     "-divisible");
        if (!lim->is_zero(eps_zero)) return true;
    }
    return false;
}

} // namespace smoothroots
