#pragma once

#include <cstdint>

#include "chordforest/exact_int.hpp"
#include "chordforest/partition_type.hpp"

// Closed-form counts for tree, forest and rooted-forest chord diagrams.
//
// Every division below is exact. Numerators are evaluated in full and a
// non-zero remainder throws InconsistencyError.

namespace chordforest::kernel {

/// C(a, b); zero when b < 0 or b > a. Throws DomainError if a < 0.
ExactInt binomial(std::int64_t a, std::int64_t b);

/// n (n-1) ... (n-len+1); one for len == 0.
ExactInt falling_factorial(std::int64_t n, std::int64_t len);

/// (2n-1)!!, the number of perfect matchings of 2n labelled points.
ExactInt double_factorial_pairings(std::int64_t n);

/// (2n)! / (n! (n+1)!).
ExactInt catalan(std::int64_t n);

/// Number of tree chord diagrams with n chords: C(3n-3, n-1) / (2n-1).
ExactInt tree_count(std::int64_t n);

/// f(n, m): forest chord diagrams with n chords and m trees, 1 <= m <= n.
ExactInt forest_count(std::int64_t n, std::int64_t m);

/// r(n, m): forest chord diagrams with n chords and m rooted trees.
///
/// Evaluated as (1/m) C(2n, m-1) (S1 + S2) with the alternating double sum S1
/// over k in [0, m], j in [0, n-m-1] (empty when m == n) and the single sum S2
/// over k in [0, m]. Intermediates are signed; the result is checked to be
/// non-negative.
ExactInt rooted_forest_count(std::int64_t n, std::int64_t m);

/// The two inner sums of rooted_forest_count, exposed for inspection.
struct RootedSums {
    ExactInt double_sum;
    ExactInt single_sum;
};
RootedSums rooted_forest_sums(std::int64_t n, std::int64_t m);

/// Number of non-crossing partitions of [ground_size] of the given type:
/// (N)_{k-1} / (s_1! ... s_N!) with k the block count.
/// Throws DomainError if the type's total size differs from ground_size.
ExactInt kreweras_count(const PartitionType& type, std::int64_t ground_size);

/// [x^b] T(x)^a where T is the tree generating function.
/// One when a == b, zero when a > b or a == 0 < b, otherwise
/// a/(b-a) * C(3b-2a-1, b-a-1).
ExactInt lagrange_coeff(std::int64_t a, std::int64_t b);

/// f(n, m) as the explicit sum over block-size types: for each type with
/// sum s_i = m and sum i s_i = n, add
///   t_1^{s_1} ... t_n^{s_n} (2n)! / ((2n+1-m)! s_1! ... s_n!).
/// Independent of forest_count's closed form.
ExactInt type_sum_forest_count(std::int64_t n, std::int64_t m);

}  // namespace chordforest::kernel
