#include "expansion.hpp"

#include <algorithm>
#include <cmath>

namespace smoothroots {

Series Series::zero(Mode mode, Rational limit) {
    Series s;
    s.mode = mode;
    s.limit = std::move(limit);
    return s;
}

void Series::normalize(double eps_zero) {
    std::sort(terms.begin(), terms.end(),
              [](const SeriesTerm& a, const SeriesTerm& b) { return a.exponent < b.exponent; });
    std::vector<SeriesTerm> merged;
    for (auto& term : terms) {
        if (term.exponent > limit) continue;
        if (!merged.empty() && merged.back().exponent == term.exponent) {
            merged.back().coefficient = merged.back().coefficient + term.coefficient;
        } else {
            merged.push_back(std::move(term));
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [&](const SeriesTerm& t) {
                                    return t.coefficient.is_zero(mode == Mode::exact ? 0.0
                                                                                     : eps_zero);
                                }),
                 merged.end());
    terms = std::move(merged);
}

Series Series::to_float() const {
    if (mode == Mode::floating) return *this;
    Series out = *this;
    out.mode = Mode::floating;
    for (auto& term : out.terms) term.coefficient = term.coefficient.to_float();
    return out;
}

Scalar Series::coefficient_at(const Rational& exponent) const {
    for (const auto& term : terms)
        if (term.exponent == exponent) return term.coefficient;
    return Scalar::zero(mode);
}

Rational Series::min_exponent() const { return terms.empty() ? limit : terms.front().exponent; }

Series Series::shifted(const Rational& shift) const {
    Series out = *this;
    out.limit += shift;
    for (auto& term : out.terms) term.exponent += shift;
    return out;
}

Series Series::exponent_scaled(int inv_big_n) const {
    Series out = *this;
    out.limit /= inv_big_n;
    for (auto& term : out.terms) term.exponent /= inv_big_n;
    return out;
}

Series Series::scaled(const Scalar& c) const {
    Series out = *this;
    for (auto& term : out.terms) term.coefficient = term.coefficient * c;
    return out;
}

std::complex<double> Series::evaluate(double x) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& term : terms)
        acc += term.coefficient.to_complex() * std::pow(x, static_cast<double>(term.exponent));
    return acc;
}

namespace {

std::pair<Series, Series> promote(const Series& a, const Series& b) {
    if (a.mode == b.mode) return {a, b};
    return {a.to_float(), b.to_float()};
}

} // namespace

Series series_add(const Series& a0, const Series& b0, double eps_zero) {
    auto [a, b] = promote(a0, b0);
    Series out;
    out.mode = a.mode;
    out.limit = std::min(a.limit, b.limit);
    out.terms = a.terms;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    out.normalize(eps_zero);
    return out;
}

Series series_mul(const Series& a0, const Series& b0, double eps_zero) {
    auto [a, b] = promote(a0, b0);
    Series out;
    out.mode = a.mode;
    // a is trusted through a.limit, so products beyond a.limit + min_e(b)
    // (and symmetrically) are not
    out.limit = std::min(a.limit + b.min_exponent(), b.limit + a.min_exponent());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms)
            out.terms.push_back({ta.exponent + tb.exponent, ta.coefficient * tb.coefficient});
    out.normalize(eps_zero);
    return out;
}

Series series_from_jet(const Jet& jet, int side) {
    Series out;
    out.mode = jet.mode();
    out.limit = Rational(jet.order());
    bool flagged = side > 0 ? jet.right_exact_zero() : jet.left_exact_zero();
    if (flagged) return out;
    for (int k = 0; k <= jet.order(); ++k) {
        Scalar c = side > 0 ? jet.right(k) : jet.left(k);
        if (side < 0 && k % 2 == 1) c = -c; // powers of |t| on the left side
        if (c.is_zero(0.0)) continue;
        out.terms.push_back({Rational(k), c});
    }
    return out;
}

} // namespace smoothroots
