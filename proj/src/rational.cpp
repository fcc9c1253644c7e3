#include "rational.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace smoothroots {

long floor_long(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r); // > 0 canonical
    BigInt q = num / den;
    if (num % den != 0 && num < 0) q -= 1;
    return q.convert_to<long>();
}

long ceil_long(const Rational& r) {
    return -floor_long(-r);
}

long denominator_long(const Rational& r) {
    return boost::multiprecision::denominator(r).convert_to<long>();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) fail(ErrorCode::parse, "empty rational literal");
    auto bad = [&]() { fail(ErrorCode::parse, "invalid rational literal '" + text + "'"); };
    std::size_t slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(text.substr(0, slash));
            BigInt den(text.substr(slash + 1));
            if (den == 0) bad();
            return Rational(num, den);
        }
        std::size_t dot = text.find('.');
        if (dot == std::string::npos) return Rational(BigInt(text));
        // decimal form: sign, integer part, fractional part
        std::string head = text.substr(0, dot);
        std::string tail = text.substr(dot + 1);
        if (tail.find_first_not_of("0123456789") != std::string::npos) bad();
        bool negative = !head.empty() && head[0] == '-';
        if (negative || (!head.empty() && head[0] == '+')) head = head.substr(1);
        if (head.empty()) head = "0";
        BigInt ip(head);
        BigInt scale = 1;
        for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
        BigInt num = ip * scale + (tail.empty() ? BigInt(0) : BigInt(tail));
        Rational r(num, scale);
        return negative ? -r : r;
    } catch (const std::exception&) {
        bad();
    }
    return Rational(0); // unreachable
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) fail(ErrorCode::parse, "non-finite number in exact-mode input");
    if (value == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(value, &exp); // value = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings make the mantissa integral
    BigInt m(static_cast<long long>(std::ldexp(mant, 53)));
    exp -= 53;
    Rational r(m);
    if (exp >= 0) {
        r *= Rational(BigInt(1) << exp);
    } else {
        r /= Rational(BigInt(1) << (-exp));
    }
    return r;
}

std::string format_rational(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

bool rationalize(double value, long max_den, double tol, Rational& out) {
    if (!std::isfinite(value)) return false;
    // continued fraction convergents of value
    double x = value;
    long long p_prev = 1, q_prev = 0;
    long long p = static_cast<long long>(std::floor(x)), q = 1;
    double frac = x - std::floor(x);
    for (int iter = 0; iter < 64; ++iter) {
        if (std::llabs(q) <= max_den &&
            std::fabs(value - static_cast<double>(p) / static_cast<double>(q)) <= tol) {
            out = Rational(BigInt(p), BigInt(q));
            return true;
        }
        if (frac < 1e-18) break;
        x = 1.0 / frac;
        double fl = std::floor(x);
        if (fl > 9.0e17) break;
        long long a = static_cast<long long>(fl);
        frac = x - fl;
        long long p_next = a * p + p_prev;
        long long q_next = a * q + q_prev;
        p_prev = p; q_prev = q;
        p = p_next; q = q_next;
        if (q > max_den && q_prev > 0 &&
            std::fabs(value - static_cast<double>(p_prev) / static_cast<double>(q_prev)) <= tol) {
            out = Rational(BigInt(p_prev), BigInt(q_prev));
            return true;
        }
        if (q > max_den) break;
    }
    if (std::llabs(q) <= max_den &&
        std::fabs(value - static_cast<double>(p) / static_cast<double>(q)) <= tol) {
        out = Rational(BigInt(p), BigInt(q));
        return true;
    }
    return false;
}

bool exact_sqrt(const Rational& value, Rational& out) {
    if (value < 0) return false;
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    BigInt sn = boost::multiprecision::sqrt(num);
    BigInt sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return false;
    out = Rational(sn, sd);
    return true;
}

} // namespace smoothroots
