#include "chordforest/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "chordforest/diagrams.hpp"
#include "chordforest/errors.hpp"
#include "chordforest/kernel.hpp"
#include "chordforest/oracle.hpp"
#include "chordforest/series.hpp"
#include "chordforest/svg.hpp"
#include "chordforest/verify.hpp"

namespace chordforest::cli {

namespace {

constexpr int kMaxSeriesOrder = 2000;

enum class Kind { Forest, Rooted, Tree, Catalan };
enum class Source { Formula, Series, BruteForce };

const std::map<std::string, Kind> kKinds{
    {"f", Kind::Forest}, {"r", Kind::Rooted}, {"t", Kind::Tree}, {"catalan", Kind::Catalan}};
const std::map<std::string, Source> kSources{
    {"formula", Source::Formula}, {"series", Source::Series}, {"bruteforce", Source::BruteForce}};

std::string kind_name(Kind k) {
    for (const auto& [name, value] : kKinds) {
        if (value == k) return name;
    }
    return "?";
}

std::string source_name(Source s) {
    for (const auto& [name, value] : kSources) {
        if (value == s) return name;
    }
    return "?";
}

bool takes_m(Kind k) { return k == Kind::Forest || k == Kind::Rooted; }

struct OutputRecord {
    Kind kind;
    std::int64_t n;
    std::optional<std::int64_t> m;
    ExactInt value;
    Source source;
};

// Evaluates counts through one route, caching the expensive intermediates.
class Calculator {
public:
    Calculator(Source source, oracle::EnumerationCaps caps, int threads)
        : source_(source), caps_(caps), threads_(threads) {}

    ExactInt value(Kind kind, std::int64_t n, std::int64_t m) {
        if (n < 1 && kind != Kind::Catalan) {
            throw DomainError(kind_name(kind) + ": requires n >= 1, got n=" + std::to_string(n));
        }
        if (takes_m(kind) && (m < 1 || m > n)) {
            throw DomainError(kind_name(kind) + ": requires 1 <= m <= n, got n=" + std::to_string(n) +
                              ", m=" + std::to_string(m));
        }
        switch (source_) {
            case Source::Formula: return formula(kind, n, m);
            case Source::Series: return from_series(kind, n, m);
            case Source::BruteForce: return from_bruteforce(kind, n, m);
        }
        return 0;
    }

private:
    static ExactInt formula(Kind kind, std::int64_t n, std::int64_t m) {
        switch (kind) {
            case Kind::Forest: return kernel::forest_count(n, m);
            case Kind::Rooted: return kernel::rooted_forest_count(n, m);
            case Kind::Tree: return kernel::tree_count(n);
            case Kind::Catalan: return kernel::catalan(n);
        }
        return 0;
    }

    ExactInt from_series(Kind kind, std::int64_t n, std::int64_t m) {
        if (n < 1) return 1;  // catalan(0)
        if (n > kMaxSeriesOrder) {
            throw DomainError("series source: n=" + std::to_string(n) + " exceeds order limit " +
                              std::to_string(kMaxSeriesOrder));
        }
        const auto order = static_cast<std::size_t>(n);
        if (!tree_ || tree_->order() < order) {
            tree_ = series::tree_gf(order);
            rooted_.reset();
        }
        const auto prefactor = [&](std::int64_t parts, const ExactInt& coefficient) {
            return exact_divide(kernel::binomial(2 * n, parts - 1) * coefficient, ExactInt(parts), "series prefactor");
        };
        switch (kind) {
            case Kind::Tree: return (*tree_)[order];
            case Kind::Forest: return prefactor(m, series::coeff_of_power(*tree_, static_cast<std::uint64_t>(m), order));
            case Kind::Catalan: return prefactor(n, series::coeff_of_power(*tree_, static_cast<std::uint64_t>(n), order));
            case Kind::Rooted:
                if (!rooted_ || rooted_->order() < order) rooted_ = series::rooted_gf(tree_->order());
                return prefactor(m, series::coeff_of_power(*rooted_, static_cast<std::uint64_t>(m), order));
        }
        return 0;
    }

    ExactInt from_bruteforce(Kind kind, std::int64_t n, std::int64_t m) {
        if (n < 1) return 1;  // the empty matching
        auto it = tables_.find(n);
        if (it == tables_.end()) {
            if (n > caps_.max_diagram_chords) {
                throw ResourceGuardError("bruteforce source: n=" + std::to_string(n) + " exceeds cap " +
                                         std::to_string(caps_.max_diagram_chords) + " (see --override-cap)");
            }
            it = tables_.emplace(n, oracle::brute_force_counts(static_cast<int>(n), caps_, threads_)).first;
        }
        const oracle::CountTable& table = it->second;
        switch (kind) {
            case Kind::Tree: return table.tree_count;
            case Kind::Forest: return table.by_components.at(static_cast<int>(m)).forests;
            case Kind::Rooted: return table.by_components.at(static_cast<int>(m)).rooted_forests;
            case Kind::Catalan: return table.by_components.at(static_cast<int>(n)).forests;
        }
        return 0;
    }

    Source source_;
    oracle::EnumerationCaps caps_;
    int threads_;
    std::optional<series::TruncatedSeries> tree_;
    std::optional<series::TruncatedSeries> rooted_;
    std::map<std::int64_t, oracle::CountTable> tables_;
};

void write_csv_header(std::ostream& out) { out << "kind,n,m,value\n"; }

void write_csv_row(std::ostream& out, const OutputRecord& r) {
    out << kind_name(r.kind) << ',' << r.n << ',';
    if (r.m) out << *r.m;
    out << ',' << r.value.str() << '\n';
}

nlohmann::ordered_json to_json(const OutputRecord& r) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(r.kind);
    j["n"] = r.n;
    if (r.m) j["m"] = *r.m;
    j["value"] = r.value.str();
    j["source"] = source_name(r.source);
    return j;
}

oracle::EnumerationCaps caps_for(bool override_cap) {
    return override_cap ? oracle::EnumerationCaps::raised() : oracle::kDefaultCaps;
}

struct CountArgs {
    std::string kind;
    std::int64_t n = 0;
    std::optional<std::int64_t> m;
    std::string source = "formula";
    std::string format = "text";
    bool override_cap = false;
    int threads = 1;
};

struct TableArgs {
    std::string kind;
    std::int64_t max_n = 0;
    std::string source = "formula";
    std::string format = "csv";
    bool override_cap = false;
    int threads = 1;
};

struct VerifyArgs {
    verify::Options options;
    bool override_cap = false;
};

struct SeriesArgs {
    std::string which;
    std::size_t order = 0;
};

struct EnumerateArgs {
    int n = 0;
    bool list = false;
    bool override_cap = false;
    int threads = 1;
};

struct RenderArgs {
    std::string diagram;
    std::string out;
};

int cmd_count(const CountArgs& a, std::ostream& out) {
    const Kind kind = kKinds.at(a.kind);
    if (takes_m(kind) && !a.m) throw DomainError("count: --m is required for kind " + a.kind);
    const Source source = kSources.at(a.source);
    Calculator calc(source, caps_for(a.override_cap), a.threads);
    const std::optional<std::int64_t> m = takes_m(kind) ? a.m : std::nullopt;
    const OutputRecord record{kind, a.n, m, calc.value(kind, a.n, m.value_or(0)), source};
    if (a.format == "csv") {
        write_csv_header(out);
        write_csv_row(out, record);
    } else if (a.format == "json") {
        out << to_json(record).dump() << '\n';
    } else {
        out << record.value.str() << '\n';
    }
    return kOk;
}

int cmd_table(const TableArgs& a, std::ostream& out) {
    if (a.max_n < 1) throw DomainError("table: requires --max-n >= 1, got " + std::to_string(a.max_n));
    const Kind kind = kKinds.at(a.kind);
    const Source source = kSources.at(a.source);
    Calculator calc(source, caps_for(a.override_cap), a.threads);
    std::vector<OutputRecord> rows;
    for (std::int64_t n = 1; n <= a.max_n; ++n) {
        if (takes_m(kind)) {
            for (std::int64_t m = 1; m <= n; ++m) rows.push_back({kind, n, m, calc.value(kind, n, m), source});
        } else {
            rows.push_back({kind, n, std::nullopt, calc.value(kind, n, 0), source});
        }
    }
    if (a.format == "json") {
        auto array = nlohmann::ordered_json::array();
        for (const auto& r : rows) array.push_back(to_json(r));
        out << array.dump(2) << '\n';
    } else {
        write_csv_header(out);
        for (const auto& r : rows) write_csv_row(out, r);
    }
    return kOk;
}

int cmd_verify(VerifyArgs a, std::ostream& out) {
    auto& o = a.options;
    o.caps = caps_for(a.override_cap);
    if (o.max_n_formula < 1 || o.max_n_brute < 1 || o.max_n_kreweras < 1 || o.max_n_types < 1) {
        throw DomainError("verify: every --max-n-* bound must be >= 1");
    }
    if (o.max_n_brute > o.caps.max_diagram_chords) {
        throw ResourceGuardError("verify: --max-n-brute " + std::to_string(o.max_n_brute) + " exceeds cap " +
                                 std::to_string(o.caps.max_diagram_chords));
    }
    if (o.max_n_kreweras > o.caps.max_partition_ground) {
        throw ResourceGuardError("verify: --max-n-kreweras " + std::to_string(o.max_n_kreweras) +
                                 " exceeds cap " + std::to_string(o.caps.max_partition_ground));
    }
    if (o.max_n_formula > kMaxSeriesOrder) {
        throw DomainError("verify: --max-n-formula exceeds " + std::to_string(kMaxSeriesOrder));
    }
    const verify::Report report = verify::run(o);
    verify::print(report, out);
    return report.passed() ? kOk : kVerificationFailed;
}

int cmd_series(const SeriesArgs& a, std::ostream& out) {
    series::TruncatedSeries s(0);
    if (a.which == "G") {
        s = series::solve_ternary_gf(a.order);
    } else if (a.which == "T") {
        s = series::tree_gf(a.order);
    } else {
        s = series::rooted_gf(a.order);
    }
    const auto coeffs = s.coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) out << i << ',' << coeffs[i].str() << '\n';
    return kOk;
}

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
    const auto caps = caps_for(a.override_cap);
    const oracle::CountTable table = oracle::brute_force_counts(a.n, caps, a.list ? 1 : a.threads);
    out << "chords: " << table.n << '\n'
        << "diagrams: " << table.total_diagrams << '\n'
        << "forests: " << table.total_forests << '\n'
        << "trees: " << table.tree_count << '\n'
        << "m forests rooted\n";
    for (const auto& [m, counts] : table.by_components) {
        out << m << ' ' << counts.forests << ' ' << counts.rooted_forests << '\n';
    }
    if (a.list) {
        oracle::enumerate_diagrams(
            a.n,
            [&](const diagrams::ChordDiagram& d) {
                const auto c = diagrams::classify(d);
                if (!c.is_forest) return;
                out << diagrams::to_text(d) << " m=" << c.component_count << " sizes=";
                for (std::size_t i = 0; i < c.tree_sizes->size(); ++i) {
                    out << (i ? "," : "") << (*c.tree_sizes)[i];
                }
                out << '\n';
            },
            caps);
    }
    return kOk;
}

int cmd_render(const RenderArgs& a, std::ostream& out, std::ostream& err) {
    const diagrams::ChordDiagram d = diagrams::parse(a.diagram);
    std::ofstream file(a.out, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open '" << a.out << "' for writing\n";
        return kIoError;
    }
    file << svg::render(d);
    file.close();
    if (!file) {
        err << "error: failed writing '" << a.out << "'\n";
        return kIoError;
    }
    out << "wrote " << a.out << " (" << d.size() << " chords)\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counts of tree, forest and rooted-forest chord diagrams", "chordforest"};
    app.require_subcommand(1);

    std::vector<std::string> kind_names;
    for (const auto& entry : kKinds) kind_names.push_back(entry.first);
    std::vector<std::string> source_names;
    for (const auto& entry : kSources) source_names.push_back(entry.first);

    CountArgs count;
    auto* count_cmd = app.add_subcommand("count", "Print one exact count");
    count_cmd->add_option("--kind", count.kind, "f, r, t or catalan")->required()->check(CLI::IsMember(kind_names));
    count_cmd->add_option("--n", count.n, "Number of chords")->required();
    count_cmd->add_option("--m", count.m, "Number of trees (f and r)");
    count_cmd->add_option("--source", count.source, "formula, series or bruteforce")
        ->check(CLI::IsMember(source_names));
    count_cmd->add_option("--format", count.format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    count_cmd->add_flag("--override-cap", count.override_cap, "Raise the brute-force enumeration cap");
    count_cmd->add_option("--threads", count.threads, "Brute-force worker threads")->check(CLI::PositiveNumber);

    TableArgs table;
    auto* table_cmd = app.add_subcommand("table", "Print all counts up to a chord bound");
    table_cmd->add_option("--kind", table.kind, "f, r, t or catalan")->required()->check(CLI::IsMember(kind_names));
    table_cmd->add_option("--max-n", table.max_n, "Largest chord count")->required();
    table_cmd->add_option("--format", table.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table_cmd->add_option("--source", table.source, "formula, series or bruteforce")
        ->check(CLI::IsMember(source_names));
    table_cmd->add_flag("--override-cap", table.override_cap, "Raise the brute-force enumeration cap");
    table_cmd->add_option("--threads", table.threads, "Brute-force worker threads")->check(CLI::PositiveNumber);

    VerifyArgs ver;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check formulas, series and enumeration");
    verify_cmd->add_option("--max-n-formula", ver.options.max_n_formula, "Chord bound for series checks")
        ->capture_default_str();
    verify_cmd->add_option("--max-n-brute", ver.options.max_n_brute, "Chord bound for exhaustive checks")
        ->capture_default_str();
    verify_cmd->add_option("--max-n-kreweras", ver.options.max_n_kreweras, "Ground-set bound for partitions")
        ->capture_default_str();
    verify_cmd->add_option("--max-n-types", ver.options.max_n_types, "Chord bound for the type sum")
        ->capture_default_str();
    verify_cmd->add_option("--threads", ver.options.threads, "Brute-force worker threads")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--override-cap", ver.override_cap, "Raise the enumeration caps");

    SeriesArgs ser;
    auto* series_cmd = app.add_subcommand("series", "Print generating-function coefficients");
    series_cmd->add_option("--which", ser.which, "G, T or R")->required()->check(CLI::IsMember({"G", "T", "R"}));
    series_cmd->add_option("--order", ser.order, "Truncation order")
        ->required()
        ->check(CLI::Range(std::size_t{0}, static_cast<std::size_t>(kMaxSeriesOrder)));

    EnumerateArgs en;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Exhaustively classify all diagrams of a size");
    enumerate_cmd->add_option("--n", en.n, "Number of chords")->required();
    enumerate_cmd->add_flag("--list", en.list, "Print every forest diagram");
    enumerate_cmd->add_flag("--override-cap", en.override_cap, "Raise the enumeration cap");
    enumerate_cmd->add_option("--threads", en.threads, "Worker threads")->check(CLI::PositiveNumber);

    RenderArgs ren;
    auto* render_cmd = app.add_subcommand("render", "Write an SVG drawing of one diagram");
    render_cmd->add_option("--diagram", ren.diagram, "Pairs as a-b,c-d,...")->required();
    render_cmd->add_option("--out", ren.out, "Output SVG path")->required();

    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (count_cmd->parsed()) return cmd_count(count, out);
        if (table_cmd->parsed()) return cmd_table(table, out);
        if (verify_cmd->parsed()) return cmd_verify(ver, out);
        if (series_cmd->parsed()) return cmd_series(ser, out);
        if (enumerate_cmd->parsed()) return cmd_enumerate(en, out);
        if (render_cmd->parsed()) return cmd_render(ren, out, err);
    } catch (const InconsistencyError& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace chordforest::cli
