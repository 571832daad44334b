#include <set>

#include "doctest.h"

#include "chordforest/errors.hpp"
#include "chordforest/kernel.hpp"
#include "chordforest/oracle.hpp"

using namespace chordforest;

namespace {

// p(n, m) = p(n-1, m-1) + p(n-m, m): partitions of n into exactly m parts.
std::uint64_t partitions_into(int n, int m) {
    if (n == 0 && m == 0) return 1;
    if (n <= 0 || m <= 0 || m > n) return 0;
    return partitions_into(n - 1, m - 1) + partitions_into(n - m, m);
}

}  // namespace

TEST_CASE("enumerate_diagrams visit counts and order") {
    auto noop = [](const diagrams::ChordDiagram&) {};
    CHECK(oracle::enumerate_diagrams(1, noop) == 1);
    CHECK(oracle::enumerate_diagrams(3, noop) == 15);
    CHECK(oracle::enumerate_diagrams(5, noop) == 945);

    std::vector<std::string> order;
    oracle::enumerate_diagrams(2, [&](const diagrams::ChordDiagram& d) { order.push_back(diagrams::to_text(d)); });
    CHECK(order == std::vector<std::string>{"1-2,3-4", "1-3,2-4", "1-4,2-3"});

    std::set<std::string> distinct;
    oracle::enumerate_diagrams(5, [&](const diagrams::ChordDiagram& d) { distinct.insert(diagrams::to_text(d)); });
    CHECK(distinct.size() == 945);
}

TEST_CASE("enumerate_diagrams caps and bounds") {
    auto noop = [](const diagrams::ChordDiagram&) {};
    CHECK_THROWS_AS(oracle::enumerate_diagrams(9, noop), ResourceGuardError);
    CHECK_THROWS_AS(oracle::enumerate_diagrams(0, noop), DomainError);
    CHECK_THROWS_AS(oracle::brute_force_counts(9), ResourceGuardError);
    oracle::EnumerationCaps tight{3, 4};
    CHECK_THROWS_AS(oracle::enumerate_diagrams(4, noop, tight), ResourceGuardError);
    CHECK_NOTHROW(oracle::enumerate_diagrams(3, noop, tight));
}

TEST_CASE("subtrees on partner(1) concatenate to the full sweep") {
    std::vector<std::string> full;
    oracle::enumerate_diagrams(4, [&](const auto& d) { full.push_back(diagrams::to_text(d)); });
    std::vector<std::string> pieces;
    for (int p = 2; p <= 8; ++p) {
        oracle::enumerate_diagrams_with_first(4, p, [&](const auto& d) {
            CHECK(d.partner(1) == p);
            pieces.push_back(diagrams::to_text(d));
        });
    }
    CHECK(pieces == full);
    CHECK_THROWS_AS(oracle::enumerate_diagrams_with_first(4, 9, [](const auto&) {}), DomainError);
}

TEST_CASE("brute_force_counts small tables") {
    const auto two = oracle::brute_force_counts(2);
    CHECK(two.total_diagrams == 3);
    CHECK(two.by_components.at(1) == oracle::ComponentCounts{1, 2});
    CHECK(two.by_components.at(2) == oracle::ComponentCounts{2, 2});

    const auto three = oracle::brute_force_counts(3);
    CHECK(three.total_diagrams == 15);
    CHECK(three.total_forests == 14);
    CHECK(three.tree_count == 3);
    CHECK(three.by_components.at(1) == oracle::ComponentCounts{3, 9});
    CHECK(three.by_components.at(2) == oracle::ComponentCounts{6, 12});
    CHECK(three.by_components.at(3) == oracle::ComponentCounts{5, 5});

    const auto one = oracle::brute_force_counts(1);
    CHECK(one.by_components.size() == 1);
    CHECK(one.by_components.at(1) == oracle::ComponentCounts{1, 1});
}

TEST_CASE("brute force matches the closed forms for n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        const auto table = oracle::brute_force_counts(n);
        CHECK(table.total_diagrams == kernel::double_factorial_pairings(n));
        CHECK(table.tree_count == kernel::tree_count(n));
        ExactInt sum = 0;
        for (const auto& [m, c] : table.by_components) {
            CHECK(c.forests == kernel::forest_count(n, m));
            CHECK(c.rooted_forests == kernel::rooted_forest_count(n, m));
            sum += c.forests;
        }
        CHECK(sum == table.total_forests);
    }
}

TEST_CASE("parallel sweep is identical to the serial one") {
    const auto serial = oracle::brute_force_counts(6, oracle::kDefaultCaps, 1);
    for (int threads : {2, 3, 11, 64}) CHECK(oracle::brute_force_counts(6, oracle::kDefaultCaps, threads) == serial);
}

TEST_CASE("enumerate_noncrossing_partitions") {
    const auto four = oracle::enumerate_noncrossing_partitions(4);
    CHECK(four.at(PartitionType::from_entries({{2, 2}})) == 2);
    ExactInt total4 = 0;
    for (const auto& [type, count] : four) total4 += count;
    CHECK(total4 == 14);

    const auto three = oracle::enumerate_noncrossing_partitions(3);
    ExactInt total3 = 0;
    for (const auto& [type, count] : three) total3 += count;
    CHECK(total3 == 5);

    for (int ground = 1; ground <= 9; ++ground) {
        ExactInt total = 0;
        for (const auto& [type, count] : oracle::enumerate_noncrossing_partitions(ground)) {
            CHECK(type.total_size() == ground);
            CHECK(count == kernel::kreweras_count(type, ground));
            total += count;
        }
        CHECK(total == kernel::catalan(ground));
    }
    CHECK_THROWS_AS(oracle::enumerate_noncrossing_partitions(11), ResourceGuardError);
    CHECK_THROWS_AS(oracle::enumerate_noncrossing_partitions(0), DomainError);
}

TEST_CASE("blocks_cross_literal") {
    CHECK(oracle::blocks_cross_literal({1, 3}, {2, 4}));
    CHECK(oracle::blocks_cross_literal({2, 4}, {1, 3}));
    CHECK_FALSE(oracle::blocks_cross_literal({1, 4}, {2, 3}));
    CHECK_FALSE(oracle::blocks_cross_literal({1, 2}, {3, 4}));
    CHECK(oracle::blocks_cross_literal({1, 5, 9}, {3, 7}));
}

TEST_CASE("enumerate_types") {
    std::vector<PartitionType> seen;
    auto collect = [&](const PartitionType& t) { seen.push_back(t); };

    CHECK(oracle::enumerate_types(3, 2, collect) == 1);
    CHECK(seen == std::vector<PartitionType>{PartitionType::from_entries({{1, 1}, {2, 1}})});

    seen.clear();
    CHECK(oracle::enumerate_types(7, 7, collect) == 1);
    CHECK(seen.front() == PartitionType::from_entries({{1, 7}}));

    seen.clear();
    CHECK(oracle::enumerate_types(6, 3, collect) == 3);
    const std::set<PartitionType> six(seen.begin(), seen.end());
    CHECK(six == std::set<PartitionType>{PartitionType::from_block_sizes({4, 1, 1}),
                                         PartitionType::from_block_sizes({3, 2, 1}),
                                         PartitionType::from_block_sizes({2, 2, 2})});

    for (int n = 1; n <= 12; ++n) {
        for (int m = 1; m <= n; ++m) {
            std::set<PartitionType> distinct;
            const auto count = oracle::enumerate_types(n, m, [&](const PartitionType& t) {
                CHECK(t.block_count() == m);
                CHECK(t.total_size() == n);
                distinct.insert(t);
            });
            CHECK(count == partitions_into(n, m));
            CHECK(distinct.size() == count);
        }
    }
    CHECK_THROWS_AS(oracle::enumerate_types(3, 0, collect), DomainError);
    CHECK_THROWS_AS(oracle::enumerate_types(3, 4, collect), DomainError);
}
