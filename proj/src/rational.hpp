#ifndef SMOOTHROOTS_RATIONAL_HPP
#define SMOOTHROOTS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>

#include "errors.hpp"

namespace smoothroots {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

long floor_long(const Rational& r);
long ceil_long(const Rational& r);

// Smallest positive N with N*r integral (the reduced denominator).
long denominator_long(const Rational& r);

// Accepts "p/q", "p", and plain decimal strings without exponent ("1.25").
Rational parse_rational(const std::string& text);

// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double value);

std::string format_rational(const Rational& r);

// Continued-fraction reconstruction of a nearby rational with bounded
// denominator. Returns false when no denominator <= max_den approximates
// value within tol.
bool rationalize(double value, long max_den, double tol, Rational& out);

// Exact complex number over Q(i).
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n2 = b.norm2();
        if (n2 == 0) fail(ErrorCode::invalid_argument, "division by zero (exact mode)");
        GaussianRational p = a * b.conj();
        return {p.re / n2, p.im / n2};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

// Exact square root of a nonnegative rational, when one exists.
bool exact_sqrt(const Rational& value, Rational& out);

} // namespace smoothroots

#endif
