#include "chordforest/kernel.hpp"

#include <string>

#include "chordforest/errors.hpp"
#include "chordforest/oracle.hpp"

namespace chordforest {

ExactInt exact_divide(const ExactInt& numerator, const ExactInt& denominator,
                      const char* what) {
    if (denominator == 0) {
        throw InconsistencyError(std::string(what) + ": division by zero");
    }
    ExactInt quotient;
    ExactInt remainder;
    boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
    if (remainder != 0) {
        throw InconsistencyError(std::string(what) + ": non-exact division " +
                                 numerator.str() + " / " + denominator.str());
    }
    return quotient;
}

namespace kernel {

namespace {

void require_forest_domain(const char* what, std::int64_t n, std::int64_t m) {
    if (m < 1 || m > n) {
        throw DomainError(std::string(what) + ": requires 1 <= m <= n, got n=" +
                          std::to_string(n) + ", m=" + std::to_string(m));
    }
}

ExactInt power(std::int64_t base, std::int64_t exponent) {
    return boost::multiprecision::pow(ExactInt(base), static_cast<unsigned>(exponent));
}

ExactInt factorial(std::int64_t n) { return falling_factorial(n, n); }

}  // namespace

ExactInt binomial(std::int64_t a, std::int64_t b) {
    if (a < 0) throw DomainError("binomial: top index must be non-negative, got " + std::to_string(a));
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    // Running product C(a-b+i, i) stays integral at each step.
    ExactInt result = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        result *= (a - b + i);
        result /= i;
    }
    return result;
}

ExactInt falling_factorial(std::int64_t n, std::int64_t len) {
    if (len < 0) throw DomainError("falling_factorial: length must be non-negative");
    ExactInt result = 1;
    for (std::int64_t i = 0; i < len; ++i) result *= (n - i);
    return result;
}

ExactInt double_factorial_pairings(std::int64_t n) {
    if (n < 1) throw DomainError("double_factorial_pairings: requires n >= 1, got " + std::to_string(n));
    ExactInt result = 1;
    for (std::int64_t odd = 3; odd <= 2 * n - 1; odd += 2) result *= odd;
    return result;
}

ExactInt catalan(std::int64_t n) {
    if (n < 0) throw DomainError("catalan: requires n >= 0, got " + std::to_string(n));
    return exact_divide(factorial(2 * n), factorial(n) * factorial(n + 1), "catalan");
}

ExactInt tree_count(std::int64_t n) {
    if (n < 1) throw DomainError("tree_count: requires n >= 1, got " + std::to_string(n));
    return exact_divide(binomial(3 * n - 3, n - 1), ExactInt(2 * n - 1), "tree_count");
}

ExactInt forest_count(std::int64_t n, std::int64_t m) {
    require_forest_domain("forest_count", n, m);
    if (m == n) return catalan(n);
    const ExactInt numerator = binomial(2 * n, m - 1) * binomial(3 * n - 2 * m - 1, n - m - 1);
    return exact_divide(numerator, ExactInt(n - m), "forest_count");
}

RootedSums rooted_forest_sums(std::int64_t n, std::int64_t m) {
    require_forest_domain("rooted_forest_count", n, m);
    RootedSums sums;
    for (std::int64_t k = 0; k <= m; ++k) {
        const ExactInt signed_choose = (k % 2 == 0 ? 1 : -1) * binomial(m, k);
        const ExactInt outer = signed_choose * power(2, m - k);
        // j runs over [0, n-m-1]; the range is empty when m == n.
        for (std::int64_t j = 0; j <= n - m - 1; ++j) {
            const ExactInt tail = exact_divide(
                (2 * j + k) * binomial(3 * n - 3 * m + k - j - 1, n - m - j - 1),
                ExactInt(n - m - j), "rooted_forest_count double sum");
            sums.double_sum += outer * binomial(m + j - 1, j) * power(3, j) * tail;
        }
        sums.single_sum += outer * binomial(n - 1, n - m) * power(3, n - m);
    }
    return sums;
}

ExactInt rooted_forest_count(std::int64_t n, std::int64_t m) {
    const RootedSums sums = rooted_forest_sums(n, m);
    const ExactInt value = exact_divide(binomial(2 * n, m - 1) * (sums.double_sum + sums.single_sum),
                                        ExactInt(m), "rooted_forest_count");
    if (value < 0) {
        throw InconsistencyError("rooted_forest_count: negative result " + value.str() +
                                 " at n=" + std::to_string(n) + ", m=" + std::to_string(m));
    }
    return value;
}

ExactInt kreweras_count(const PartitionType& type, std::int64_t ground_size) {
    if (type.total_size() != ground_size) {
        throw DomainError("kreweras_count: type " + type.to_string() + " has total size " +
                          std::to_string(type.total_size()) + ", expected " +
                          std::to_string(ground_size));
    }
    const std::int64_t blocks = type.block_count();
    ExactInt denominator = 1;
    for (const auto& entry : type.entries()) denominator *= factorial(entry.second);
    return exact_divide(falling_factorial(ground_size, blocks - 1), denominator, "kreweras_count");
}

ExactInt lagrange_coeff(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 1) {
        throw DomainError("lagrange_coeff: requires a >= 0 and b >= 1, got a=" + std::to_string(a) +
                          ", b=" + std::to_string(b));
    }
    if (a > b) return 0;
    if (a == b) return 1;
    if (a == 0) return 0;
    return exact_divide(a * binomial(3 * b - 2 * a - 1, b - a - 1), ExactInt(b - a), "lagrange_coeff");
}

ExactInt type_sum_forest_count(std::int64_t n, std::int64_t m) {
    require_forest_domain("type_sum_forest_count", n, m);
    std::vector<ExactInt> trees(static_cast<std::size_t>(n) + 1);
    for (std::int64_t i = 1; i <= n; ++i) trees[static_cast<std::size_t>(i)] = tree_count(i);

    ExactInt total = 0;
    oracle::enumerate_types(n, m, [&](const PartitionType& type) {
        ExactInt weight = 1;
        for (const auto& [chords, count] : type.entries()) {
            weight *= boost::multiprecision::pow(trees[static_cast<std::size_t>(chords)],
                                                 static_cast<unsigned>(count));
        }
        // Number of non-crossing partitions of [2n] with s_i blocks of size 2i.
        ExactInt denominator = factorial(2 * n + 1 - m);
        for (const auto& entry : type.entries()) denominator *= factorial(entry.second);
        total += weight * exact_divide(factorial(2 * n), denominator, "type_sum_forest_count");
    });
    return total;
}

}  // namespace kernel
}  // namespace chordforest
