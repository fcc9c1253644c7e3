#include "scalar.hpp"

namespace smoothroots {

void Scalar::check_modes(const Scalar& a, const Scalar& b) {
    if (a.mode() != b.mode())
        fail(ErrorCode::invalid_argument, "scalar mode mismatch (exact vs float)");
}

bool Scalar::equals(const Scalar& other, double eps_zero) const {
    check_modes(*this, other);
    if (mode() == Mode::exact) return rational() == other.rational();
    return std::abs(to_complex() - other.to_complex()) <= eps_zero;
}

Scalar Scalar::scaled_by(const Rational& factor) const {
    if (mode() == Mode::exact) {
        const auto& q = rational();
        return Scalar(GaussianRational{q.re * factor, q.im * factor});
    }
    return Scalar(to_complex() * static_cast<double>(factor));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::check_modes(a, b);
    if (a.mode() == Mode::exact) return Scalar(a.rational() + b.rational());
    return Scalar(a.to_complex() + b.to_complex());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar::check_modes(a, b);
    if (a.mode() == Mode::exact) return Scalar(a.rational() - b.rational());
    return Scalar(a.to_complex() - b.to_complex());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::check_modes(a, b);
    if (a.mode() == Mode::exact) return Scalar(a.rational() * b.rational());
    return Scalar(a.to_complex() * b.to_complex());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    Scalar::check_modes(a, b);
    if (a.mode() == Mode::exact) return Scalar(a.rational() / b.rational());
    std::complex<double> d = b.to_complex();
    if (d == std::complex<double>(0.0, 0.0))
        fail(ErrorCode::invalid_argument, "division by zero (float mode)");
    return Scalar(a.to_complex() / d);
}

Scalar operator-(const Scalar& a) {
    if (a.mode() == Mode::exact) return Scalar(-a.rational());
    return Scalar(-a.to_complex());
}

} // namespace smoothroots
