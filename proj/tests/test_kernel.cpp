#include <random>
#include <vector>

#include "doctest.h"

#include "chordforest/errors.hpp"
#include "chordforest/kernel.hpp"
#include "chordforest/oracle.hpp"

using namespace chordforest;
using kernel::binomial;

namespace {

// Pascal's rule, row by row; independent of the multiplicative formula.
std::vector<std::vector<ExactInt>> pascal_triangle(int rows) {
    std::vector<std::vector<ExactInt>> t(static_cast<std::size_t>(rows) + 1);
    for (int a = 0; a <= rows; ++a) {
        auto& row = t[static_cast<std::size_t>(a)];
        row.assign(static_cast<std::size_t>(a) + 1, 1);
        for (int b = 1; b < a; ++b) {
            const auto& prev = t[static_cast<std::size_t>(a - 1)];
            row[static_cast<std::size_t>(b)] = prev[static_cast<std::size_t>(b - 1)] + prev[static_cast<std::size_t>(b)];
        }
    }
    return t;
}

ExactInt count_noncrossing_diagrams(int n) {
    ExactInt count = 0;
    oracle::enumerate_diagrams(n, [&](const diagrams::ChordDiagram& d) {
        if (diagrams::intersection_graph(d).edges.empty()) ++count;
    });
    return count;
}

}  // namespace

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK_THROWS_AS(binomial(-1, 0), DomainError);

    const auto pascal = pascal_triangle(60);
    CHECK(pascal[12][4] == 495);
    CHECK(binomial(12, 4) == pascal[12][4]);
    for (int a = 0; a <= 60; ++a) {
        for (int b = -2; b <= a + 2; ++b) {
            const ExactInt expected = (b < 0 || b > a) ? ExactInt(0) : pascal[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            CHECK(binomial(a, b) == expected);
        }
    }
}

TEST_CASE("binomial satisfies Pascal's rule at large random indices") {
    std::mt19937_64 rng(20241014);
    std::uniform_int_distribution<int> top(1, 800);
    for (int trial = 0; trial < 200; ++trial) {
        const int a = top(rng);
        const int b = std::uniform_int_distribution<int>(0, a)(rng);
        CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
        CHECK(binomial(a, b) == binomial(a, a - b));
    }
}

TEST_CASE("falling_factorial") {
    CHECK(kernel::falling_factorial(4, 1) == 4);
    CHECK(kernel::falling_factorial(9, 0) == 1);
    CHECK(kernel::falling_factorial(6, 3) == 6 * 5 * 4);
    CHECK(kernel::falling_factorial(3, 5) == 0);
    CHECK_THROWS_AS(kernel::falling_factorial(3, -1), DomainError);
}

TEST_CASE("double_factorial_pairings matches the enumeration visit count") {
    CHECK(kernel::double_factorial_pairings(1) == 1);
    CHECK(kernel::double_factorial_pairings(3) == 15);
    CHECK(kernel::double_factorial_pairings(6) == 10395);
    for (int n = 1; n <= 6; ++n) {
        CHECK(oracle::enumerate_diagrams(n, [](const auto&) {}) == kernel::double_factorial_pairings(n));
    }
    CHECK_THROWS_AS(kernel::double_factorial_pairings(0), DomainError);
}

TEST_CASE("catalan counts non-crossing diagrams") {
    CHECK(kernel::catalan(0) == 1);
    CHECK(kernel::catalan(3) == 5);
    CHECK(kernel::catalan(4) == 14);
    for (int n = 1; n <= 6; ++n) CHECK(kernel::catalan(n) == count_noncrossing_diagrams(n));
    CHECK(kernel::catalan(30) == ExactInt("3814986502092304"));
}

TEST_CASE("tree_count") {
    CHECK(kernel::tree_count(1) == 1);
    CHECK(kernel::tree_count(3) == 3);
    CHECK(kernel::tree_count(5) == 55);
    CHECK_THROWS_AS(kernel::tree_count(0), DomainError);
}

TEST_CASE("forest_count spot values and domain") {
    CHECK(kernel::forest_count(3, 3) == 5);
    CHECK(kernel::forest_count(3, 2) == 6);
    CHECK(kernel::forest_count(4, 1) == 12);
    CHECK(kernel::forest_count(2, 1) == 1);
    CHECK(kernel::forest_count(4, 2) == 28);
    CHECK_THROWS_AS(kernel::forest_count(3, 0), DomainError);
    CHECK_THROWS_AS(kernel::forest_count(3, 4), DomainError);
}

TEST_CASE("rooted_forest_count spot values and domain") {
    CHECK(kernel::rooted_forest_count(3, 3) == 5);
    CHECK(kernel::rooted_forest_count(3, 2) == 12);
    CHECK(kernel::rooted_forest_count(2, 1) == 2);
    CHECK(kernel::rooted_forest_count(3, 1) == 9);
    CHECK_THROWS_AS(kernel::rooted_forest_count(2, 3), DomainError);
    CHECK_THROWS_AS(kernel::rooted_forest_count(2, 0), DomainError);
}

TEST_CASE("rooted_forest_sums: empty double sum at m == n, signed single sum") {
    for (int n = 1; n <= 20; ++n) {
        const auto sums = kernel::rooted_forest_sums(n, n);
        CHECK(sums.double_sum == 0);
        // With no j range, the single sum collapses to (2 - 1)^n = 1.
        CHECK(sums.single_sum == 1);
    }
    // The single sum is sum_k (-1)^k C(m,k) 2^(m-k) * C(n-1, n-m) 3^(n-m).
    const auto s = kernel::rooted_forest_sums(6, 2);
    CHECK(s.single_sum == binomial(5, 4) * 81);
}

TEST_CASE("special-case identities up to n = 200") {
    for (int n = 1; n <= 200; ++n) {
        const ExactInt t = kernel::tree_count(n);
        const ExactInt c = kernel::catalan(n);
        CHECK(kernel::forest_count(n, 1) == t);
        CHECK(kernel::forest_count(n, n) == c);
        CHECK(kernel::rooted_forest_count(n, 1) == n * t);
        CHECK(kernel::rooted_forest_count(n, n) == c);
    }
}

TEST_CASE("every asserted division stays exact across a dense grid") {
    for (int n = 1; n <= 80; ++n) {
        for (int m = 1; m <= n; ++m) {
            CHECK_NOTHROW(kernel::forest_count(n, m));
            CHECK(kernel::rooted_forest_count(n, m) >= kernel::forest_count(n, m));
        }
    }
}

TEST_CASE("total forests are bounded by all pairings, with equality only for n <= 2") {
    for (int n = 1; n <= 8; ++n) {
        ExactInt total = 0;
        for (int m = 1; m <= n; ++m) total += kernel::forest_count(n, m);
        const ExactInt all = kernel::double_factorial_pairings(n);
        CHECK(total <= all);
        CHECK((total == all) == (n <= 2));
    }
}

TEST_CASE("kreweras_count") {
    CHECK(kernel::kreweras_count(PartitionType::from_entries({{2, 2}}), 4) == 2);
    for (int n = 1; n <= 12; ++n) {
        CHECK(kernel::kreweras_count(PartitionType::from_entries({{n, 1}}), n) == 1);
        CHECK(kernel::kreweras_count(PartitionType::from_entries({{1, n}}), n) == 1);
    }
    CHECK_THROWS_AS(kernel::kreweras_count(PartitionType::from_entries({{2, 1}}), 4), DomainError);
}

TEST_CASE("lagrange_coeff") {
    for (int b = 1; b <= 30; ++b) {
        CHECK(kernel::lagrange_coeff(b, b) == 1);
        CHECK(kernel::lagrange_coeff(0, b) == 0);
        CHECK(kernel::lagrange_coeff(b + 1, b) == 0);
        CHECK(kernel::lagrange_coeff(1, b) == kernel::tree_count(b));
    }
    CHECK(kernel::lagrange_coeff(2, 3) == 2);
    CHECK(kernel::lagrange_coeff(1, 4) == 12);
    CHECK_THROWS_AS(kernel::lagrange_coeff(1, 0), DomainError);
}

TEST_CASE("type_sum_forest_count agrees with the closed form") {
    CHECK(kernel::type_sum_forest_count(3, 2) == 6);
    CHECK(kernel::type_sum_forest_count(4, 4) == 14);
    CHECK(kernel::type_sum_forest_count(4, 2) == 28);
    for (int n = 1; n <= 12; ++n) {
        for (int m = 1; m <= n; ++m) CHECK(kernel::type_sum_forest_count(n, m) == kernel::forest_count(n, m));
    }
    CHECK_THROWS_AS(kernel::type_sum_forest_count(3, 4), DomainError);
}

TEST_CASE("exact_divide rejects remainders") {
    CHECK(exact_divide(ExactInt(12), ExactInt(4), "t") == 3);
    CHECK(exact_divide(ExactInt(-12), ExactInt(4), "t") == -3);
    CHECK_THROWS_AS(exact_divide(ExactInt(13), ExactInt(4), "t"), InconsistencyError);
    CHECK_THROWS_AS(exact_divide(ExactInt(13), ExactInt(0), "t"), InconsistencyError);
}

TEST_CASE("PartitionType is sparse and canonical") {
    const auto a = PartitionType::from_block_sizes({2, 1, 2, 4});
    const auto b = PartitionType::from_dense({1, 2, 0, 1});
    CHECK(a == b);
    CHECK(a.entries().size() == 3);
    CHECK(a.block_count() == 4);
    CHECK(a.total_size() == 9);
    CHECK(a.multiplicity(2) == 2);
    CHECK(a.multiplicity(3) == 0);
    CHECK(a.scaled(2).total_size() == 18);
    CHECK(a.to_string() == "4^1 2^2 1^1");
    CHECK_THROWS_AS(PartitionType::from_entries({{0, 1}}), DomainError);
    CHECK_THROWS_AS(PartitionType::from_entries({{1, -1}}), DomainError);
}
