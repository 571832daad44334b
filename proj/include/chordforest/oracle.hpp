#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "chordforest/diagrams.hpp"
#include "chordforest/exact_int.hpp"
#include "chordforest/partition_type.hpp"

// Exhaustive enumeration: the ground truth every closed form is checked
// against. Deliberately naive.

namespace chordforest::oracle {

/// Upper bounds on exhaustive sweeps. Exceeding one throws ResourceGuardError.
struct EnumerationCaps {
    int max_diagram_chords = 8;
    int max_partition_ground = 10;

    /// Ceilings used when the caller explicitly overrides the defaults.
    static EnumerationCaps raised() { return {9, 12}; }
};

inline constexpr EnumerationCaps kDefaultCaps{};

using DiagramVisitor = std::function<void(const diagrams::ChordDiagram&)>;

/// Visits every perfect matching of 1..2n once: the smallest unmatched point
/// is paired with each larger unmatched point in ascending order. Returns the
/// number of visits.
ExactInt enumerate_diagrams(int n, const DiagramVisitor& visit,
                            const EnumerationCaps& caps = kDefaultCaps);

/// Restriction of enumerate_diagrams to matchings with partner(1) ==
/// first_partner, in the same relative order. The 2n-1 subtrees are disjoint.
ExactInt enumerate_diagrams_with_first(int n, int first_partner, const DiagramVisitor& visit,
                                       const EnumerationCaps& caps = kDefaultCaps);

struct ComponentCounts {
    ExactInt forests;
    ExactInt rooted_forests;

    friend bool operator==(const ComponentCounts&, const ComponentCounts&) = default;
};

struct CountTable {
    int n = 0;
    /// Keyed by tree count m, one entry for every m in 1..n.
    std::map<int, ComponentCounts> by_components;
    ExactInt tree_count;
    ExactInt total_diagrams;
    ExactInt total_forests;

    friend bool operator==(const CountTable&, const CountTable&) = default;
};

/// Sweeps every diagram of size n. A forest with trees of a_1..a_m chords adds
/// one to forests(m) and a_1 * ... * a_m (a root per tree) to
/// rooted_forests(m). With threads > 1 the sweep splits on partner(1); the
/// table is identical for every thread count.
CountTable brute_force_counts(int n, const EnumerationCaps& caps = kDefaultCaps, int threads = 1);

/// Tallies the non-crossing set partitions of [ground] by type. Set partitions
/// come from restricted-growth strings and the filter is the literal
/// a < b < c < d test on every pair of blocks.
std::map<PartitionType, ExactInt> enumerate_noncrossing_partitions(
    int ground, const EnumerationCaps& caps = kDefaultCaps);

/// Literal block-crossing test: a, c in one block and b, d in the other with
/// a < b < c < d.
bool blocks_cross_literal(const std::vector<int>& lhs, const std::vector<int>& rhs);

using TypeVisitor = std::function<void(const PartitionType&)>;

/// Visits every (s_1..s_n) with sum s_i = m and sum i s_i = n exactly once,
/// i.e. every partition of n into exactly m parts. Returns the visit count.
std::uint64_t enumerate_types(std::int64_t n, std::int64_t m, const TypeVisitor& visit);

}  // namespace chordforest::oracle
