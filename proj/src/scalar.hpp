#ifndef SMOOTHROOTS_SCALAR_HPP
#define SMOOTHROOTS_SCALAR_HPP

#include <complex>
#include <variant>

#include "rational.hpp"

namespace smoothroots {

enum class Mode { exact, floating };

// One coefficient of a jet: an exact Gaussian rational or a complex double.
// A computation never mixes the two; mixed-mode arithmetic throws.
class Scalar {
public:
    Scalar() : v_(GaussianRational{}) {}
    explicit Scalar(GaussianRational q) : v_(std::move(q)) {}
    explicit Scalar(std::complex<double> z) : v_(z) {}

    static Scalar zero(Mode m) {
        return m == Mode::exact ? Scalar(GaussianRational{})
                                : Scalar(std::complex<double>(0.0, 0.0));
    }
    static Scalar one(Mode m) { return from_int(1, m); }
    static Scalar from_int(long k, Mode m) {
        if (m == Mode::exact) return Scalar(GaussianRational{Rational(k), Rational(0)});
        return Scalar(std::complex<double>(static_cast<double>(k), 0.0));
    }
    static Scalar from_rational(Rational re, Rational im = Rational(0)) {
        return Scalar(GaussianRational{std::move(re), std::move(im)});
    }

    Mode mode() const {
        return std::holds_alternative<GaussianRational>(v_) ? Mode::exact : Mode::floating;
    }

    const GaussianRational& rational() const {
        if (mode() != Mode::exact) fail(ErrorCode::internal, "float scalar has no rational view");
        return std::get<GaussianRational>(v_);
    }

    std::complex<double> to_complex() const {
        if (mode() == Mode::exact) return std::get<GaussianRational>(v_).to_complex();
        return std::get<std::complex<double>>(v_);
    }

    Scalar to_float() const { return Scalar(to_complex()); }

    bool is_zero(double eps_zero) const {
        if (mode() == Mode::exact) return std::get<GaussianRational>(v_).is_zero();
        return std::abs(std::get<std::complex<double>>(v_)) <= eps_zero;
    }

    double abs() const { return std::abs(to_complex()); }

    Scalar conj() const {
        if (mode() == Mode::exact) return Scalar(std::get<GaussianRational>(v_).conj());
        return Scalar(std::conj(std::get<std::complex<double>>(v_)));
    }

    // Exact comparison in exact mode, |a-b| <= eps in float mode.
    bool equals(const Scalar& other, double eps_zero) const;

    Scalar scaled_by(const Rational& factor) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a);

private:
    static void check_modes(const Scalar& a, const Scalar& b);

    std::variant<GaussianRational, std::complex<double>> v_;
};

} // namespace smoothroots

#endif
