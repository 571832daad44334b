#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chordforest/exact_int.hpp"

namespace chordforest::series {

/// A power series known modulo x^(order+1), with exact integer coefficients.
///
/// Values are immutable. Binary operations on operands of different orders
/// truncate to the smaller order; nothing above the order is ever stored.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order);

    /// Coefficients c_0..c_order; missing entries are zero, extra entries are
    /// discarded.
    TruncatedSeries(std::size_t order, std::vector<ExactInt> coeffs);

    static TruncatedSeries constant(ExactInt value, std::size_t order);

    /// coefficient * x^degree.
    static TruncatedSeries monomial(ExactInt coefficient, std::size_t degree, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const ExactInt> coeffs() const noexcept { return coeffs_; }

    /// [x^i]; throws DomainError when i exceeds the order.
    const ExactInt& operator[](std::size_t i) const;

    bool is_zero() const noexcept;

    /// Index of the first non-zero coefficient, or order+1 for the zero series.
    std::size_t valuation() const noexcept;

    /// Re-truncates to a lower order (no-op when `order` >= this->order()).
    TruncatedSeries truncated(std::size_t order) const;

    friend TruncatedSeries operator+(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
    friend TruncatedSeries operator-(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
    friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
    friend TruncatedSeries operator*(const ExactInt& scalar, const TruncatedSeries& s);
    TruncatedSeries operator-() const;

    friend bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs) = default;

private:
    std::vector<ExactInt> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
TruncatedSeries mul(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

/// s^exponent by repeated squaring; s^0 is the constant 1.
TruncatedSeries pow(const TruncatedSeries& s, std::uint64_t exponent);

/// Formal derivative. The result is known one degree less, so its order is
/// order-1 (a constant series of order 0 maps to the zero series of order 0).
TruncatedSeries derivative(const TruncatedSeries& s);

/// s / x^k. Requires c_0..c_{k-1} == 0 and k <= order; throws DomainError
/// otherwise. Result order is order-k.
TruncatedSeries shift_div_x(const TruncatedSeries& s, std::size_t k);

/// s * x^k, order raised by k.
TruncatedSeries shift_mul_x(const TruncatedSeries& s, std::size_t k);

/// Exact reciprocal. Only unit constant terms (+1 or -1) are accepted, so
/// every coefficient stays an integer; anything else throws DomainError.
TruncatedSeries reciprocal(const TruncatedSeries& s);

/// G with G = 1 + x G^3 mod x^(order+1), by fixed-point iteration from G = 1.
/// Checks that the residual vanishes.
TruncatedSeries solve_ternary_gf(std::size_t order);

/// T = x G, the tree generating function. Requires order >= 1. Checks
/// x T = x^2 + T^3.
TruncatedSeries tree_gf(std::size_t order);

/// R = x T'. Requires order >= 1. Cross-checked against the rational form
/// x (2x - T) / (x - 3T^2).
TruncatedSeries rooted_gf(std::size_t order);

/// The rational-form route for R on its own: x * (2x - T)/x * reciprocal((x - 3T^2)/x).
TruncatedSeries rooted_gf_closed_form(const TruncatedSeries& tree);

/// Residuals of the three defining identities; each is the zero series when
/// the construction is correct.
TruncatedSeries ternary_residual(const TruncatedSeries& g);
TruncatedSeries tree_residual(const TruncatedSeries& t);

/// [x^n] s^m. Throws DomainError when n exceeds the order of s.
ExactInt coeff_of_power(const TruncatedSeries& s, std::uint64_t m, std::size_t n);

}  // namespace chordforest::series
