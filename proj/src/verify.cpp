#include "chordforest/verify.hpp"

#include <exception>
#include <ostream>

#include "chordforest/kernel.hpp"
#include "chordforest/series.hpp"

namespace chordforest::verify {

namespace {

// Records the first mismatch only; later checks still count.
class Checker {
public:
    explicit Checker(std::string name) { result_.name = std::move(name); }

    bool expect(std::string quantity, std::int64_t n, std::optional<std::int64_t> m,
                const ExactInt& expected, const std::string& expected_source, const ExactInt& got,
                const std::string& got_source, std::string detail = {}) {
        ++result_.checks;
        if (expected == got) return true;
        if (!result_.first_mismatch) {
            result_.first_mismatch = Mismatch{std::move(quantity), n, m, std::move(detail), expected,
                                              got, expected_source, got_source};
        }
        return false;
    }

    void note(std::string text) { result_.notes.push_back(std::move(text)); }

    template <typename Body>
    SuiteResult run(Body&& body) {
        try {
            body(*this);
        } catch (const std::exception& e) {
            result_.error = e.what();
        }
        return std::move(result_);
    }

private:
    SuiteResult result_;
};

ExactInt prefactor_times(std::int64_t n, std::int64_t m, const ExactInt& coefficient) {
    return exact_divide(kernel::binomial(2 * n, m - 1) * coefficient, ExactInt(m), "series prefactor");
}

}  // namespace

Formulas Formulas::closed_forms() {
    return {kernel::tree_count, kernel::forest_count, kernel::rooted_forest_count};
}

bool Report::passed() const noexcept {
    for (const auto& s : suites) {
        if (!s.passed()) return false;
    }
    return true;
}

SuiteResult check_formula_vs_series(const Formulas& f, int max_n) {
    return Checker("formula-vs-series (n <= " + std::to_string(max_n) + ")").run([&](Checker& c) {
        const auto order = static_cast<std::size_t>(max_n);
        const series::TruncatedSeries tree = series::tree_gf(order);
        const series::TruncatedSeries rooted = series::rooted_gf(order);
        for (std::int64_t n = 1; n <= max_n; ++n) {
            c.expect("t", n, std::nullopt, tree[static_cast<std::size_t>(n)], "series", f.tree(n), "formula");
        }
        // Powers are built incrementally; [x^n]T^m vanishes for n < m.
        series::TruncatedSeries tree_power = series::TruncatedSeries::constant(1, order);
        series::TruncatedSeries rooted_power = tree_power;
        for (std::int64_t m = 1; m <= max_n; ++m) {
            tree_power = tree_power * tree;
            rooted_power = rooted_power * rooted;
            for (std::int64_t n = m; n <= max_n; ++n) {
                const auto idx = static_cast<std::size_t>(n);
                c.expect("f", n, m, prefactor_times(n, m, tree_power[idx]), "series", f.forest(n, m),
                         "formula");
                c.expect("r", n, m, prefactor_times(n, m, rooted_power[idx]), "series", f.rooted(n, m),
                         "formula");
                c.expect("lagrange", n, m, tree_power[idx], "series", kernel::lagrange_coeff(m, n),
                         "formula");
            }
            for (std::int64_t n = 0; n < m; ++n) {
                c.expect("T^m valuation", n, m, 0, "theory", tree_power[static_cast<std::size_t>(n)],
                         "series");
            }
        }
    });
}

SuiteResult check_formula_vs_bruteforce(const Formulas& f, int max_n, const oracle::EnumerationCaps& caps,
                                        int threads) {
    return Checker("formula-vs-bruteforce (n <= " + std::to_string(max_n) + ")").run([&](Checker& c) {
        for (int n = 1; n <= max_n; ++n) {
            const oracle::CountTable table = oracle::brute_force_counts(n, caps, threads);
            c.expect("diagrams", n, std::nullopt, kernel::double_factorial_pairings(n), "formula",
                     table.total_diagrams, "bruteforce");
            c.expect("t", n, std::nullopt, table.tree_count, "bruteforce", f.tree(n), "formula");
            for (const auto& [m, counts] : table.by_components) {
                c.expect("f", n, m, counts.forests, "bruteforce", f.forest(n, m), "formula");
                c.expect("r", n, m, counts.rooted_forests, "bruteforce", f.rooted(n, m), "formula");
            }
            c.note("n=" + std::to_string(n) + ": " + table.total_forests.str() + " of " +
                   table.total_diagrams.str() + " diagrams are forests");
        }
    });
}

SuiteResult check_kreweras(int max_ground, const oracle::EnumerationCaps& caps) {
    return Checker("kreweras-vs-enumeration (N <= " + std::to_string(max_ground) + ")").run([&](Checker& c) {
        for (int ground = 1; ground <= max_ground; ++ground) {
            ExactInt total = 0;
            for (const auto& [type, count] : oracle::enumerate_noncrossing_partitions(ground, caps)) {
                c.expect("kreweras", ground, std::nullopt, count, "enumeration",
                         kernel::kreweras_count(type, ground), "formula", "type " + type.to_string());
                total += count;
            }
            c.expect("catalan", ground, std::nullopt, total, "enumeration", kernel::catalan(ground), "formula");
        }
    });
}

SuiteResult check_type_sum(const Formulas& f, int max_n) {
    return Checker("type-sum-vs-closed-form (n <= " + std::to_string(max_n) + ")").run([&](Checker& c) {
        for (std::int64_t n = 1; n <= max_n; ++n) {
            for (std::int64_t m = 1; m <= n; ++m) {
                c.expect("f", n, m, kernel::type_sum_forest_count(n, m), "type-sum", f.forest(n, m), "formula");
            }
        }
    });
}

SuiteResult check_gf_residuals(int order) {
    return Checker("gf-residuals (order " + std::to_string(order) + ")").run([&](Checker& c) {
        const auto o = static_cast<std::size_t>(order);
        const auto g = series::solve_ternary_gf(o);
        const auto t = series::tree_gf(o);
        const auto r = series::shift_mul_x(series::derivative(t), 1);
        const auto closed = series::rooted_gf_closed_form(t);
        const auto residuals = {series::ternary_residual(g), series::tree_residual(t), r - closed};
        const char* names[] = {"G - 1 - xG^3", "xT - x^2 - T^3", "xT' - x(2x-T)/(x-3T^2)"};
        std::size_t which = 0;
        for (const auto& residual : residuals) {
            for (std::size_t i = 0; i <= residual.order(); ++i) {
                c.expect(names[which], static_cast<std::int64_t>(i), std::nullopt, 0, "identity", residual[i],
                         "series");
            }
            ++which;
        }
    });
}

SuiteResult check_special_cases(const Formulas& f, int max_n) {
    return Checker("special-case identities (n <= " + std::to_string(max_n) + ")").run([&](Checker& c) {
        for (std::int64_t n = 1; n <= max_n; ++n) {
            const ExactInt t = f.tree(n);
            const ExactInt cat = kernel::catalan(n);
            c.expect("f(n,1)", n, 1, t, "t(n)", f.forest(n, 1), "formula");
            c.expect("f(n,n)", n, n, cat, "catalan", f.forest(n, n), "formula");
            c.expect("r(n,1)", n, 1, n * t, "n*t(n)", f.rooted(n, 1), "formula");
            c.expect("r(n,n)", n, n, cat, "catalan", f.rooted(n, n), "formula");
            for (std::int64_t m = 1; m < n; ++m) {
                ExactInt collapsed = 0;
                for (std::int64_t k = 1; k <= m; ++k) {
                    collapsed += kernel::binomial(m - 1, k - 1) * kernel::binomial(3 * (n - m), n - m - k);
                }
                c.expect("vandermonde", n, m, kernel::binomial(3 * n - 2 * m - 1, n - m - 1), "closed",
                         collapsed, "sum");
            }
        }
    });
}

Report run(const Options& options, const Formulas& formulas) {
    Report report;
    report.suites.push_back(check_formula_vs_series(formulas, options.max_n_formula));
    report.suites.push_back(
        check_formula_vs_bruteforce(formulas, options.max_n_brute, options.caps, options.threads));
    report.suites.push_back(check_kreweras(options.max_n_kreweras, options.caps));
    report.suites.push_back(check_type_sum(formulas, options.max_n_types));
    report.suites.push_back(check_gf_residuals(options.max_n_formula));
    report.suites.push_back(check_special_cases(formulas, options.max_n_formula));
    return report;
}

void print(const Report& report, std::ostream& out) {
    for (const auto& suite : report.suites) {
        out << (suite.passed() ? "[PASS] " : "[FAIL] ") << suite.name << ": " << suite.checks << " checks\n";
        for (const auto& note : suite.notes) out << "       " << note << '\n';
        if (suite.error) out << "       error: " << *suite.error << '\n';
        if (const auto& mm = suite.first_mismatch) {
            out << "       first counterexample: " << mm->quantity << " n=" << mm->n;
            if (mm->m) out << " m=" << *mm->m;
            if (!mm->detail.empty()) out << " (" << mm->detail << ")";
            out << " expected " << mm->expected << " [" << mm->expected_source << "] got " << mm->got << " ["
                << mm->got_source << "]\n";
        }
    }
    out << (report.passed() ? "all suites passed\n" : "verification FAILED\n");
}

}  // namespace chordforest::verify
