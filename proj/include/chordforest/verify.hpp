#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chordforest/exact_int.hpp"
#include "chordforest/oracle.hpp"

namespace chordforest::verify {

/// The closed forms under test. Swappable so the checker itself can be
/// exercised against a deliberately broken formula.
struct Formulas {
    std::function<ExactInt(std::int64_t)> tree;
    std::function<ExactInt(std::int64_t, std::int64_t)> forest;
    std::function<ExactInt(std::int64_t, std::int64_t)> rooted;

    static Formulas closed_forms();
};

struct Options {
    int max_n_formula = 60;
    int max_n_brute = 7;
    int max_n_kreweras = 9;
    int max_n_types = 12;
    int threads = 1;
    oracle::EnumerationCaps caps = oracle::kDefaultCaps;
};

struct Mismatch {
    std::string quantity;  // "f", "r", "t", "kreweras", ...
    std::int64_t n = 0;
    std::optional<std::int64_t> m;
    std::string detail;  // extra coordinates, e.g. a partition type
    ExactInt expected;
    ExactInt got;
    std::string expected_source;
    std::string got_source;
};

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::optional<Mismatch> first_mismatch;
    std::optional<std::string> error;  // an exception escaped a computation
    std::vector<std::string> notes;

    bool passed() const noexcept { return !first_mismatch && !error; }
};

struct Report {
    std::vector<SuiteResult> suites;

    bool passed() const noexcept;
};

SuiteResult check_formula_vs_series(const Formulas& f, int max_n);
SuiteResult check_formula_vs_bruteforce(const Formulas& f, int max_n, const oracle::EnumerationCaps& caps,
                                        int threads);
SuiteResult check_kreweras(int max_ground, const oracle::EnumerationCaps& caps);
SuiteResult check_type_sum(const Formulas& f, int max_n);
SuiteResult check_gf_residuals(int order);
SuiteResult check_special_cases(const Formulas& f, int max_n);

/// Runs every suite in a fixed order.
Report run(const Options& options, const Formulas& formulas = Formulas::closed_forms());

/// One "[PASS]"/"[FAIL]" line per suite, followed by the first counterexample
/// for failing suites.
void print(const Report& report, std::ostream& out);

}  // namespace chordforest::verify
