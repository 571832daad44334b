#include "chordforest/diagrams.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "chordforest/errors.hpp"
#include "chordforest/union_find.hpp"

namespace chordforest::diagrams {

ChordDiagram ChordDiagram::from_pairs(std::span<const std::pair<Point, Point>> pairs, int n) {
    if (n < 1) throw ValidationError("chord diagram: needs at least one chord");
    if (static_cast<int>(pairs.size()) != n) {
        throw ValidationError("chord diagram: expected " + std::to_string(n) + " pairs, got " +
                              std::to_string(pairs.size()));
    }
    const int points = 2 * n;
    std::vector<Point> partner(static_cast<std::size_t>(points) + 1, 0);
    for (const auto& [a, b] : pairs) {
        for (Point p : {a, b}) {
            if (p < 1 || p > points) {
                throw ValidationError("chord diagram: point " + std::to_string(p) +
                                      " out of range [1, " + std::to_string(points) + "]");
            }
        }
        if (a == b || partner[static_cast<std::size_t>(a)] != 0) {
            throw ValidationError("chord diagram: point " + std::to_string(a) + " duplicated");
        }
        if (partner[static_cast<std::size_t>(b)] != 0) {
            throw ValidationError("chord diagram: point " + std::to_string(b) + " duplicated");
        }
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
    }
    // n pairs over 2n labels with no repeats covers everything.
    return from_partner(std::move(partner));
}

ChordDiagram ChordDiagram::from_pairs(std::span<const std::pair<Point, Point>> pairs) {
    return from_pairs(pairs, static_cast<int>(pairs.size()));
}

ChordDiagram ChordDiagram::from_partner(std::vector<Point> partner) {
    if (partner.size() < 3 || partner.size() % 2 == 0) {
        throw ValidationError("chord diagram: partner table must have size 2n+1 with n >= 1");
    }
    const int points = static_cast<int>(partner.size()) - 1;
    std::vector<Chord> chords;
    chords.reserve(static_cast<std::size_t>(points / 2));
    for (Point p = 1; p <= points; ++p) {
        const Point q = partner[static_cast<std::size_t>(p)];
        if (q == 0) throw ValidationError("chord diagram: point " + std::to_string(p) + " missing");
        if (q < 1 || q > points || q == p || partner[static_cast<std::size_t>(q)] != p) {
            throw ValidationError("chord diagram: point " + std::to_string(p) +
                                  " is not matched consistently");
        }
        if (p < q) chords.push_back({p, q});
    }
    return ChordDiagram(std::move(partner), std::move(chords));
}

ChordDiagram parse(std::string_view text) {
    std::vector<std::pair<Point, Point>> pairs;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
            s.remove_suffix(1);
        }
        return s;
    };
    auto parse_point = [](std::string_view token, std::string_view pair_text) {
        Point value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ValidationError("chord diagram: malformed pair '" + std::string(pair_text) + "'");
        }
        return value;
    };
    text = trim(text);
    if (text.empty()) throw ValidationError("chord diagram: empty input");
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view pair_text = trim(text.substr(start, end - start));
        const std::size_t dash = pair_text.find('-');
        if (dash == std::string_view::npos) {
            throw ValidationError("chord diagram: malformed pair '" + std::string(pair_text) + "'");
        }
        pairs.emplace_back(parse_point(trim(pair_text.substr(0, dash)), pair_text),
                           parse_point(trim(pair_text.substr(dash + 1)), pair_text));
        start = end + 1;
    }
    return ChordDiagram::from_pairs(pairs);
}

std::string to_text(const ChordDiagram& d) {
    std::ostringstream os;
    bool first = true;
    for (const auto& c : d.chords()) {
        if (!first) os << ',';
        os << c.first << '-' << c.second;
        first = false;
    }
    return os.str();
}

IntersectionGraph intersection_graph(const ChordDiagram& d) {
    const auto& chords = d.chords();
    const int n = d.size();
    IntersectionGraph g;
    g.vertex_count = n;
    UnionFind sets(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (crosses(chords[static_cast<std::size_t>(u)], chords[static_cast<std::size_t>(v)])) {
                g.edges.emplace_back(u, v);
                sets.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
            }
        }
    }
    std::vector<int> label_of_root(static_cast<std::size_t>(n), -1);
    g.component_id.resize(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        auto& label = label_of_root[sets.find(static_cast<std::size_t>(u))];
        if (label < 0) {
            label = g.component_count();
            g.component_sizes.push_back(0);
        }
        g.component_id[static_cast<std::size_t>(u)] = label;
        ++g.component_sizes[static_cast<std::size_t>(label)];
    }
    return g;
}

Classification classify(const IntersectionGraph& g) {
    Classification c;
    c.component_count = g.component_count();
    c.is_forest = static_cast<int>(g.edges.size()) == g.vertex_count - c.component_count;
    c.is_tree = c.is_forest && c.component_count == 1;
    if (c.is_forest) {
        std::vector<int> sizes = g.component_sizes;
        std::sort(sizes.begin(), sizes.end(), std::greater<>());
        c.tree_sizes = std::move(sizes);
    }
    return c;
}

Classification classify(const ChordDiagram& d) { return classify(intersection_graph(d)); }

bool crosses_blocks(std::span<const Point> lhs, std::span<const Point> rhs) {
    // Merge by label; the blocks interleave as a-b-c-d iff the merged sequence
    // switches owner at least three times.
    std::size_t i = 0;
    std::size_t j = 0;
    int runs = 0;
    int last = -1;
    while (i < lhs.size() || j < rhs.size()) {
        const bool take_lhs = j == rhs.size() || (i < lhs.size() && lhs[i] < rhs[j]);
        const int owner = take_lhs ? 0 : 1;
        take_lhs ? ++i : ++j;
        if (owner != last) {
            ++runs;
            last = owner;
        }
    }
    return runs >= 4;
}

SupportPartition support_partition(const ChordDiagram& d) {
    const IntersectionGraph g = intersection_graph(d);
    SupportPartition sp;
    sp.blocks.resize(static_cast<std::size_t>(g.component_count()));
    for (std::size_t u = 0; u < d.chords().size(); ++u) {
        auto& block = sp.blocks[static_cast<std::size_t>(g.component_id[u])];
        block.push_back(d.chords()[u].first);
        block.push_back(d.chords()[u].second);
    }
    // Components are labelled by first chord, whose first endpoint is the
    // block minimum, so the block order is already by smallest point.
    for (auto& block : sp.blocks) std::sort(block.begin(), block.end());
    for (std::size_t a = 0; a < sp.blocks.size(); ++a) {
        for (std::size_t b = a + 1; b < sp.blocks.size(); ++b) {
            if (crosses_blocks(sp.blocks[a], sp.blocks[b])) {
                throw InconsistencyError("support_partition: blocks " + std::to_string(a) + " and " +
                                         std::to_string(b) + " cross in " + to_text(d));
            }
        }
    }
    return sp;
}

}  // namespace chordforest::diagrams
