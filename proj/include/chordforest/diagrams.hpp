#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chordforest::diagrams {

/// Point labels are 1-based and run clockwise around the circle.
using Point = int;

/// A chord with endpoints first < second.
struct Chord {
    Point first;
    Point second;

    auto operator<=>(const Chord&) const = default;
};

/// A perfect matching of the points 1..2n.
///
/// Held both as an involution (partner(p)) and as the canonical chord list:
/// chords normalised to (min, max) and sorted by first endpoint, so chord 0
/// always starts at point 1.
class ChordDiagram {
public:
    /// Validates `pairs` as a perfect matching of 1..2n. Throws ValidationError
    /// naming the first duplicate, missing or out-of-range label.
    static ChordDiagram from_pairs(std::span<const std::pair<Point, Point>> pairs, int n);

    /// Same, with n taken from the pair count. An empty list is rejected.
    static ChordDiagram from_pairs(std::span<const std::pair<Point, Point>> pairs);

    /// Builds from a partner table of size 2n+1 (index 0 unused). Validated.
    static ChordDiagram from_partner(std::vector<Point> partner);

    int size() const noexcept { return static_cast<int>(chords_.size()); }
    int point_count() const noexcept { return 2 * size(); }
    Point partner(Point p) const { return partner_.at(static_cast<std::size_t>(p)); }
    const std::vector<Chord>& chords() const noexcept { return chords_; }

    friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

private:
    ChordDiagram(std::vector<Point> partner, std::vector<Chord> chords)
        : partner_(std::move(partner)), chords_(std::move(chords)) {}

    std::vector<Point> partner_;
    std::vector<Chord> chords_;
};

/// Parses "a-b,c-d,..." (whitespace around tokens allowed).
ChordDiagram parse(std::string_view text);

/// Canonical text form, e.g. "1-8,2-9,3-5,4-6,7-10".
std::string to_text(const ChordDiagram& d);

/// True iff the endpoints interleave around the circle.
constexpr bool crosses(const Chord& c1, const Chord& c2) noexcept {
    return (c1.first < c2.first && c2.first < c1.second && c1.second < c2.second) ||
           (c2.first < c1.first && c1.first < c2.second && c2.second < c1.second);
}

struct IntersectionGraph {
    int vertex_count = 0;
    /// Chord-index pairs (u, v), u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges;
    /// component_id[chord] in 0..m-1, numbered by first appearance.
    std::vector<int> component_id;
    /// component_sizes[c] = number of chords in component c.
    std::vector<int> component_sizes;

    int component_count() const noexcept { return static_cast<int>(component_sizes.size()); }
};

IntersectionGraph intersection_graph(const ChordDiagram& d);

struct Classification {
    int component_count = 0;
    bool is_forest = false;
    bool is_tree = false;
    /// Chord counts per tree, sorted descending; present only for forests.
    std::optional<std::vector<int>> tree_sizes;
};

Classification classify(const IntersectionGraph& g);
Classification classify(const ChordDiagram& d);

/// The supports (endpoint sets) of the components, one sorted block per
/// component, blocks ordered by their smallest point.
struct SupportPartition {
    std::vector<std::vector<Point>> blocks;
};

/// Throws InconsistencyError if two blocks cross (cannot happen for a valid
/// diagram).
SupportPartition support_partition(const ChordDiagram& d);

/// Literal crossing test on two disjoint sorted blocks: some a < b < c < d with
/// a, c in one block and b, d in the other.
bool crosses_blocks(std::span<const Point> lhs, std::span<const Point> rhs);

}  // namespace chordforest::diagrams
