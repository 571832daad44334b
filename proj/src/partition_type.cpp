#include "chordforest/partition_type.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "chordforest/errors.hpp"

namespace chordforest {

PartitionType PartitionType::from_entries(std::vector<Entry> entries) {
    std::map<std::int64_t, std::int64_t> merged;
    for (const auto& [size, count] : entries) {
        if (size <= 0) {
            throw DomainError("partition type: block size must be positive, got " +
                              std::to_string(size));
        }
        if (count < 0) {
            throw DomainError("partition type: negative multiplicity for block size " +
                              std::to_string(size));
        }
        merged[size] += count;
    }
    std::vector<Entry> sparse;
    sparse.reserve(merged.size());
    for (const auto& [size, count] : merged) {
        if (count > 0) sparse.emplace_back(size, count);
    }
    return PartitionType(std::move(sparse));
}

PartitionType PartitionType::from_block_sizes(const std::vector<std::int64_t>& sizes) {
    std::vector<Entry> entries;
    entries.reserve(sizes.size());
    for (auto size : sizes) entries.emplace_back(size, 1);
    return from_entries(std::move(entries));
}

PartitionType PartitionType::from_dense(const std::vector<std::int64_t>& dense) {
    std::vector<Entry> entries;
    for (std::size_t j = 0; j < dense.size(); ++j) {
        entries.emplace_back(static_cast<std::int64_t>(j + 1), dense[j]);
    }
    return from_entries(std::move(entries));
}

std::int64_t PartitionType::multiplicity(std::int64_t block_size) const noexcept {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), block_size,
                               [](const Entry& e, std::int64_t s) { return e.first < s; });
    return (it != entries_.end() && it->first == block_size) ? it->second : 0;
}

std::int64_t PartitionType::block_count() const noexcept {
    std::int64_t k = 0;
    for (const auto& e : entries_) k += e.second;
    return k;
}

std::int64_t PartitionType::total_size() const noexcept {
    std::int64_t total = 0;
    for (const auto& [size, count] : entries_) total += size * count;
    return total;
}

PartitionType PartitionType::scaled(std::int64_t factor) const {
    if (factor <= 0) throw DomainError("partition type: scale factor must be positive");
    std::vector<Entry> out = entries_;
    for (auto& e : out) e.first *= factor;
    return PartitionType(std::move(out));
}

std::string PartitionType::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        if (!first) os << ' ';
        os << it->first << '^' << it->second;
        first = false;
    }
    return os.str();
}

}  // namespace chordforest
