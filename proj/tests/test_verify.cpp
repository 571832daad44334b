#include <sstream>

#include "doctest.h"

#include "chordforest/kernel.hpp"
#include "chordforest/verify.hpp"

using namespace chordforest;

namespace {

// Rooted-forest formula with the double sum stopping one term early.
ExactInt rooted_with_short_double_sum(std::int64_t n, std::int64_t m) {
    using kernel::binomial;
    ExactInt total = 0;
    for (std::int64_t k = 0; k <= m; ++k) {
        const ExactInt outer = (k % 2 ? -1 : 1) * binomial(m, k) * boost::multiprecision::pow(ExactInt(2), static_cast<unsigned>(m - k));
        for (std::int64_t j = 0; j <= n - m - 2; ++j) {
            total += outer * binomial(m + j - 1, j) * boost::multiprecision::pow(ExactInt(3), static_cast<unsigned>(j)) *
                     kernel::lagrange_coeff(2 * j + k, n - m + k + j);
        }
        total += outer * binomial(n - 1, n - m) * boost::multiprecision::pow(ExactInt(3), static_cast<unsigned>(n - m));
    }
    return binomial(2 * n, m - 1) * total / m;
}

verify::Options small() {
    verify::Options o;
    o.max_n_formula = 15;
    o.max_n_brute = 5;
    o.max_n_kreweras = 7;
    o.max_n_types = 8;
    return o;
}

}  // namespace

TEST_CASE("verification passes on the closed forms") {
    const auto report = verify::run(small());
    CHECK(report.passed());
    CHECK(report.suites.size() == 6);
    for (const auto& s : report.suites) CHECK(s.checks > 0);
    std::ostringstream out;
    verify::print(report, out);
    CHECK(out.str().find("[FAIL]") == std::string::npos);
    CHECK(out.str().find("n=3: 14 of 15 diagrams are forests") != std::string::npos);
}

TEST_CASE("a corrupted rooted formula is caught with a counterexample") {
    auto formulas = verify::Formulas::closed_forms();
    formulas.rooted = rooted_with_short_double_sum;
    const auto report = verify::run(small(), formulas);
    CHECK_FALSE(report.passed());
    const auto& brute = report.suites.at(1);
    REQUIRE(brute.first_mismatch);
    CHECK(brute.first_mismatch->quantity == "r");
    CHECK(brute.first_mismatch->n == 2);
    CHECK(brute.first_mismatch->m == 1);
    CHECK(brute.first_mismatch->expected == 2);
    CHECK(brute.first_mismatch->expected_source == "bruteforce");
    // Suites that don't use the rooted formula stay green.
    CHECK(report.suites.at(2).passed());
    CHECK(report.suites.at(3).passed());

    std::ostringstream out;
    verify::print(report, out);
    CHECK(out.str().find("first counterexample: r n=2 m=1 expected 2 [bruteforce]") != std::string::npos);
}

TEST_CASE("exceptions inside a suite are reported as failures") {
    auto formulas = verify::Formulas::closed_forms();
    formulas.forest = [](std::int64_t, std::int64_t) -> ExactInt { throw std::runtime_error("boom"); };
    const auto result = verify::check_type_sum(formulas, 3);
    CHECK_FALSE(result.passed());
    REQUIRE(result.error);
    CHECK(*result.error == "boom");
}
