#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace chordforest {

/// Block-size multiplicities of a partition, stored sparsely.
///
/// Entries are (block size, multiplicity) pairs sorted by block size, with
/// every multiplicity strictly positive. The same type records a set
/// partition of [N] (block size = cardinality) and an integer partition of n
/// (block size = part).
class PartitionType {
public:
    using Entry = std::pair<std::int64_t, std::int64_t>;

    PartitionType() = default;

    /// Builds from arbitrary (size, multiplicity) pairs. Duplicate sizes are
    /// merged and zero multiplicities dropped. Throws DomainError on a
    /// non-positive size or a negative multiplicity.
    static PartitionType from_entries(std::vector<Entry> entries);

    /// Builds from the multiset of block sizes.
    static PartitionType from_block_sizes(const std::vector<std::int64_t>& sizes);

    /// Dense view: dense[j-1] = s_j for j in [1, length].
    static PartitionType from_dense(const std::vector<std::int64_t>& dense);

    const std::vector<Entry>& entries() const noexcept { return entries_; }

    std::int64_t multiplicity(std::int64_t block_size) const noexcept;

    /// Sum of multiplicities (the number of blocks).
    std::int64_t block_count() const noexcept;

    /// Sum of size * multiplicity (the ground-set size).
    std::int64_t total_size() const noexcept;

    /// Every block size multiplied by `factor`.
    PartitionType scaled(std::int64_t factor) const;

    /// e.g. "2^2 1^1" (size^multiplicity, descending size).
    std::string to_string() const;

    auto operator<=>(const PartitionType&) const = default;

private:
    explicit PartitionType(std::vector<Entry> entries) : entries_(std::move(entries)) {}

    std::vector<Entry> entries_;
};

}  // namespace chordforest
