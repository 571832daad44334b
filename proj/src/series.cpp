#include "chordforest/series.hpp"

#include <algorithm>
#include <string>

#include "chordforest/errors.hpp"

namespace chordforest::series {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<ExactInt> coeffs)
    : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::constant(ExactInt value, std::size_t order) {
    return monomial(std::move(value), 0, order);
}

TruncatedSeries TruncatedSeries::monomial(ExactInt coefficient, std::size_t degree,
                                          std::size_t order) {
    TruncatedSeries s(order);
    if (degree <= order) s.coeffs_[degree] = std::move(coefficient);
    return s;
}

const ExactInt& TruncatedSeries::operator[](std::size_t i) const {
    if (i > order()) {
        throw DomainError("series: coefficient " + std::to_string(i) +
                          " requested beyond truncation order " + std::to_string(order()));
    }
    return coeffs_[i];
}

bool TruncatedSeries::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ExactInt& c) { return c == 0; });
}

std::size_t TruncatedSeries::valuation() const noexcept {
    auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](const ExactInt& c) { return c != 0; });
    return static_cast<std::size_t>(it - coeffs_.begin());
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    if (order >= this->order()) return *this;
    return TruncatedSeries(order, std::vector<ExactInt>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries operator+(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    const std::size_t order = std::min(lhs.order(), rhs.order());
    TruncatedSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) out.coeffs_[i] = lhs.coeffs_[i] + rhs.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    return lhs + (-rhs);
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    const std::size_t order = std::min(lhs.order(), rhs.order());
    TruncatedSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return out;
}

TruncatedSeries operator*(const ExactInt& scalar, const TruncatedSeries& s) {
    TruncatedSeries out = s;
    for (auto& c : out.coeffs_) c *= scalar;
    return out;
}

TruncatedSeries add(const TruncatedSeries& lhs, const TruncatedSeries& rhs) { return lhs + rhs; }

TruncatedSeries mul(const TruncatedSeries& lhs, const TruncatedSeries& rhs) { return lhs * rhs; }

TruncatedSeries pow(const TruncatedSeries& s, std::uint64_t exponent) {
    TruncatedSeries result = TruncatedSeries::constant(1, s.order());
    TruncatedSeries base = s;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

TruncatedSeries derivative(const TruncatedSeries& s) {
    if (s.order() == 0) return TruncatedSeries(0);
    std::vector<ExactInt> out(s.order());
    for (std::size_t i = 1; i <= s.order(); ++i) out[i - 1] = s[i] * i;
    return TruncatedSeries(s.order() - 1, std::move(out));
}

TruncatedSeries shift_div_x(const TruncatedSeries& s, std::size_t k) {
    if (k > s.order()) {
        throw DomainError("shift_div_x: shift " + std::to_string(k) + " exceeds order " +
                          std::to_string(s.order()));
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (s[i] != 0) {
            throw DomainError("shift_div_x: coefficient " + std::to_string(i) +
                              " is non-zero, cannot divide by x^" + std::to_string(k));
        }
    }
    auto c = s.coeffs();
    return TruncatedSeries(s.order() - k, std::vector<ExactInt>(c.begin() + k, c.end()));
}

TruncatedSeries shift_mul_x(const TruncatedSeries& s, std::size_t k) {
    std::vector<ExactInt> out(k);
    auto c = s.coeffs();
    out.insert(out.end(), c.begin(), c.end());
    return TruncatedSeries(s.order() + k, std::move(out));
}

TruncatedSeries reciprocal(const TruncatedSeries& s) {
    const ExactInt& lead = s[0];
    if (lead != 1 && lead != -1) {
        throw DomainError("reciprocal: constant term must be +1 or -1, got " + lead.str());
    }
    // Solve s * r = 1 degree by degree; lead is its own inverse.
    std::vector<ExactInt> r(s.order() + 1);
    r[0] = lead;
    for (std::size_t i = 1; i <= s.order(); ++i) {
        ExactInt acc = 0;
        for (std::size_t j = 1; j <= i; ++j) acc += s[j] * r[i - j];
        r[i] = -acc * lead;
    }
    return TruncatedSeries(s.order(), std::move(r));
}

TruncatedSeries ternary_residual(const TruncatedSeries& g) {
    const std::size_t order = g.order();
    const TruncatedSeries one = TruncatedSeries::constant(1, order);
    return g - one - shift_mul_x(pow(g, 3), 1).truncated(order);
}

TruncatedSeries tree_residual(const TruncatedSeries& t) {
    const std::size_t order = t.order();
    const TruncatedSeries x_squared = TruncatedSeries::monomial(1, 2, order);
    return shift_mul_x(t, 1).truncated(order) - x_squared - pow(t, 3);
}

TruncatedSeries solve_ternary_gf(std::size_t order) {
    const TruncatedSeries one = TruncatedSeries::constant(1, order);
    TruncatedSeries g = one;
    // Iteration i fixes coefficient i, so `order` rounds suffice.
    for (std::size_t iter = 0; iter < order; ++iter) {
        g = one + shift_mul_x(pow(g, 3), 1).truncated(order);
    }
    if (!ternary_residual(g).is_zero()) {
        throw InconsistencyError("solve_ternary_gf: G - 1 - xG^3 is non-zero at order " +
                                 std::to_string(order));
    }
    return g;
}

TruncatedSeries tree_gf(std::size_t order) {
    if (order < 1) throw DomainError("tree_gf: requires order >= 1");
    TruncatedSeries t = shift_mul_x(solve_ternary_gf(order - 1), 1);
    if (!tree_residual(t).is_zero()) {
        throw InconsistencyError("tree_gf: xT - x^2 - T^3 is non-zero at order " +
                                 std::to_string(order));
    }
    return t;
}

TruncatedSeries rooted_gf_closed_form(const TruncatedSeries& tree) {
    const std::size_t order = tree.order();
    const TruncatedSeries x = TruncatedSeries::monomial(1, 1, order);
    const TruncatedSeries numerator = shift_div_x(ExactInt(2) * x - tree, 1);
    const TruncatedSeries denominator = shift_div_x(x - ExactInt(3) * pow(tree, 2), 1);
    return shift_mul_x(numerator * reciprocal(denominator), 1);
}

TruncatedSeries rooted_gf(std::size_t order) {
    if (order < 1) throw DomainError("rooted_gf: requires order >= 1");
    const TruncatedSeries t = tree_gf(order);
    TruncatedSeries r = shift_mul_x(derivative(t), 1);
    if (r != rooted_gf_closed_form(t)) {
        throw InconsistencyError("rooted_gf: xT' disagrees with x(2x - T)/(x - 3T^2) at order " +
                                 std::to_string(order));
    }
    return r;
}

ExactInt coeff_of_power(const TruncatedSeries& s, std::uint64_t m, std::size_t n) {
    if (n > s.order()) {
        throw DomainError("coeff_of_power: degree " + std::to_string(n) +
                          " exceeds truncation order " + std::to_string(s.order()));
    }
    return pow(s.truncated(n), m)[n];
}

}  // namespace chordforest::series
