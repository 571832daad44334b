#include "chordforest/oracle.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

#include "chordforest/errors.hpp"

namespace chordforest::oracle {

namespace {

void check_diagram_cap(int n, const EnumerationCaps& caps) {
    if (n < 1) throw DomainError("enumerate_diagrams: requires n >= 1, got " + std::to_string(n));
    if (n > caps.max_diagram_chords) {
        throw ResourceGuardError("enumerate_diagrams: n=" + std::to_string(n) + " exceeds cap " +
                                 std::to_string(caps.max_diagram_chords));
    }
}

// Pairs the smallest unmatched point with each larger unmatched point.
class MatchingWalker {
public:
    MatchingWalker(int n, const DiagramVisitor& visit)
        : points_(2 * n), partner_(static_cast<std::size_t>(2 * n) + 1, 0), visit_(visit) {}

    void pin(int a, int b) {
        partner_[static_cast<std::size_t>(a)] = b;
        partner_[static_cast<std::size_t>(b)] = a;
    }

    void run(int from) {
        int a = from;
        while (a <= points_ && partner_[static_cast<std::size_t>(a)] != 0) ++a;
        if (a > points_) {
            ++count_;
            visit_(diagrams::ChordDiagram::from_partner(partner_));
            return;
        }
        for (int b = a + 1; b <= points_; ++b) {
            if (partner_[static_cast<std::size_t>(b)] != 0) continue;
            pin(a, b);
            run(a + 1);
            partner_[static_cast<std::size_t>(a)] = 0;
            partner_[static_cast<std::size_t>(b)] = 0;
        }
    }

    std::uint64_t count() const noexcept { return count_; }

private:
    int points_;
    std::vector<int> partner_;
    const DiagramVisitor& visit_;
    std::uint64_t count_ = 0;
};

struct Tally {
    std::vector<std::uint64_t> forests;
    std::vector<std::uint64_t> rooted;
    std::uint64_t diagrams = 0;

    explicit Tally(int n) : forests(static_cast<std::size_t>(n) + 1), rooted(static_cast<std::size_t>(n) + 1) {}

    void add(const diagrams::ChordDiagram& d) {
        ++diagrams;
        const auto c = diagrams::classify(d);
        if (!c.is_forest) return;
        std::uint64_t roots = 1;
        for (int size : *c.tree_sizes) roots *= static_cast<std::uint64_t>(size);
        ++forests[static_cast<std::size_t>(c.component_count)];
        rooted[static_cast<std::size_t>(c.component_count)] += roots;
    }

    void merge(const Tally& other) {
        diagrams += other.diagrams;
        for (std::size_t m = 0; m < forests.size(); ++m) {
            forests[m] += other.forests[m];
            rooted[m] += other.rooted[m];
        }
    }
};

}  // namespace

ExactInt enumerate_diagrams(int n, const DiagramVisitor& visit, const EnumerationCaps& caps) {
    check_diagram_cap(n, caps);
    MatchingWalker walker(n, visit);
    walker.run(1);
    return walker.count();
}

ExactInt enumerate_diagrams_with_first(int n, int first_partner, const DiagramVisitor& visit,
                                       const EnumerationCaps& caps) {
    check_diagram_cap(n, caps);
    if (first_partner < 2 || first_partner > 2 * n) {
        throw DomainError("enumerate_diagrams_with_first: partner of point 1 must lie in [2, " +
                          std::to_string(2 * n) + "]");
    }
    MatchingWalker walker(n, visit);
    walker.pin(1, first_partner);
    walker.run(2);
    return walker.count();
}

CountTable brute_force_counts(int n, const EnumerationCaps& caps, int threads) {
    check_diagram_cap(n, caps);
    Tally total(n);
    if (threads <= 1) {
        enumerate_diagrams(n, [&](const diagrams::ChordDiagram& d) { total.add(d); }, caps);
    } else {
        // One tally per subtree, merged in subtree order after joining.
        const int subtrees = 2 * n - 1;
        std::vector<Tally> partial(static_cast<std::size_t>(subtrees), Tally(n));
        std::vector<std::jthread> workers;
        const int worker_count = std::min(threads, subtrees);
        for (int w = 0; w < worker_count; ++w) {
            workers.emplace_back([&, w] {
                for (int s = w; s < subtrees; s += worker_count) {
                    auto& tally = partial[static_cast<std::size_t>(s)];
                    enumerate_diagrams_with_first(
                        n, s + 2, [&](const diagrams::ChordDiagram& d) { tally.add(d); }, caps);
                }
            });
        }
        workers.clear();
        for (const auto& t : partial) total.merge(t);
    }

    CountTable table;
    table.n = n;
    table.total_diagrams = total.diagrams;
    for (int m = 1; m <= n; ++m) {
        ComponentCounts counts{total.forests[static_cast<std::size_t>(m)],
                               total.rooted[static_cast<std::size_t>(m)]};
        table.total_forests += counts.forests;
        table.by_components.emplace(m, std::move(counts));
    }
    table.tree_count = table.by_components.at(1).forests;
    return table;
}

bool blocks_cross_literal(const std::vector<int>& lhs, const std::vector<int>& rhs) {
    auto interleaves = [](const std::vector<int>& outer, const std::vector<int>& inner) {
        for (int a : outer) {
            for (int c : outer) {
                if (c <= a) continue;
                for (int b : inner) {
                    if (b <= a || b >= c) continue;
                    for (int d : inner) {
                        if (d > c) return true;
                    }
                }
            }
        }
        return false;
    };
    return interleaves(lhs, rhs) || interleaves(rhs, lhs);
}

std::map<PartitionType, ExactInt> enumerate_noncrossing_partitions(int ground,
                                                                  const EnumerationCaps& caps) {
    if (ground < 1) {
        throw DomainError("enumerate_noncrossing_partitions: requires N >= 1, got " +
                          std::to_string(ground));
    }
    if (ground > caps.max_partition_ground) {
        throw ResourceGuardError("enumerate_noncrossing_partitions: N=" + std::to_string(ground) +
                                 " exceeds cap " + std::to_string(caps.max_partition_ground));
    }
    std::map<PartitionType, ExactInt> tally;
    const auto size = static_cast<std::size_t>(ground);
    // Restricted-growth string: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
    std::vector<int> rgs(size, 0);
    std::vector<int> prefix_max(size, 0);
    while (true) {
        const int block_count = prefix_max[size - 1] + 1;
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(block_count));
        for (std::size_t i = 0; i < size; ++i) {
            blocks[static_cast<std::size_t>(rgs[i])].push_back(static_cast<int>(i) + 1);
        }
        bool noncrossing = true;
        for (std::size_t a = 0; a < blocks.size() && noncrossing; ++a) {
            for (std::size_t b = a + 1; b < blocks.size() && noncrossing; ++b) {
                noncrossing = !blocks_cross_literal(blocks[a], blocks[b]);
            }
        }
        if (noncrossing) {
            std::vector<std::int64_t> sizes;
            for (const auto& block : blocks) sizes.push_back(static_cast<std::int64_t>(block.size()));
            tally[PartitionType::from_block_sizes(sizes)] += 1;
        }

        // Advance to the next restricted-growth string.
        std::size_t i = size - 1;
        while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
        if (i == 0) break;
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < size; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
    return tally;
}

std::uint64_t enumerate_types(std::int64_t n, std::int64_t m, const TypeVisitor& visit) {
    if (m < 1 || m > n) {
        throw DomainError("enumerate_types: requires 1 <= m <= n, got n=" + std::to_string(n) +
                          ", m=" + std::to_string(m));
    }
    // Parts in non-increasing order; each seat picks a part no larger than
    // the previous one and leaves enough for the remaining seats.
    std::vector<std::int64_t> parts;
    parts.reserve(static_cast<std::size_t>(m));
    std::uint64_t count = 0;
    std::function<void(std::int64_t, std::int64_t, std::int64_t)> place =
        [&](std::int64_t remaining, std::int64_t seats, std::int64_t max_part) {
            if (seats == 0) {
                if (remaining == 0) {
                    ++count;
                    visit(PartitionType::from_block_sizes(parts));
                }
                return;
            }
            const std::int64_t hi = std::min(max_part, remaining - (seats - 1));
            for (std::int64_t part = hi; part >= 1; --part) {
                if (part * seats < remaining) break;
                parts.push_back(part);
                place(remaining - part, seats - 1, part);
                parts.pop_back();
            }
        };
    place(n, m, n);
    return count;
}

}  // namespace chordforest::oracle
