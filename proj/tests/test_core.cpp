#include <doctest.h>

#include <algorithm>
#include <set>

#include "nestcount/bigint.hpp"
#include "nestcount/partition.hpp"

using namespace nestcount;

namespace {

SetPartition running_example() { return SetPartition::from_blocks({{1}, {2, 5, 6, 8}, {3, 7}, {4}}); }

// Largest subset of arcs satisfying `family` pairwise, by subset enumeration.
template <typename Pairwise>
int brute_force_family(const ArcDiagram& d, Pairwise&& pairwise) {
    const std::size_t k = d.arcs.size();
    int best = 0;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        bool ok = true;
        for (std::size_t a = 0; a < k && ok; ++a)
            for (std::size_t b = a + 1; b < k && ok; ++b)
                if ((mask >> a & 1) && (mask >> b & 1)) ok = pairwise(d.arcs[a], d.arcs[b]);
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

bool nested(const Arc& a, const Arc& b) {
    return (a.open < b.open && b.close < a.close) || (b.open < a.open && a.close < b.close);
}
bool crossing(const Arc& a, const Arc& b) {
    return (a.open < b.open && b.open < a.close && a.close < b.close) ||
           (b.open < a.open && a.open < b.close && b.close < a.close);
}

} // namespace

TEST_CASE("restricted growth strings are validated") {
    CHECK_THROWS_AS(SetPartition({2}), std::invalid_argument);
    CHECK_THROWS_AS(SetPartition({1, 3}), std::invalid_argument);
    CHECK(SetPartition({1, 2, 1}).block_count() == 2);
    CHECK(SetPartition().block_count() == 0);
    CHECK(running_example().to_string() == "1|2 5 6 8|3 7|4");
}

TEST_CASE("enumerate yields each partition once") {
    int count = 0;
    for_each_partition(0, [&](const SetPartition& p) {
        CHECK(p.size() == 0);
        ++count;
    });
    CHECK(count == 1);

    std::set<std::vector<int>> seen;
    for_each_partition(3, [&](const SetPartition& p) { seen.insert(p.rgs()); });
    CHECK(seen.size() == 5);

    count = 0;
    for_each_partition(8, [&](const SetPartition&) { ++count; });
    CHECK(count == 4140);

    const auto bell = bell_numbers(9);
    for (int n = 0; n <= 9; ++n) {
        long total = 0;
        for_each_partition(n, [&](const SetPartition&) { ++total; });
        CHECK(BigInt(total) == bell[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("prefix enumeration covers the full stream") {
    for (int n = 1; n <= 7; ++n) {
        long total = 0;
        for (const auto& prefix : rgs_prefixes(std::min(n, 3))) {
            PartitionEnumerator it(n, prefix);
            while (auto p = it.next()) {
                CHECK(std::equal(prefix.begin(), prefix.end(), p->rgs().begin()));
                ++total;
            }
        }
        CHECK(BigInt(total) == bell_numbers(n)[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("standard representation") {
    const auto d = standard_representation(running_example());
    CHECK(d.arcs == std::vector<Arc>{{2, 5}, {3, 7}, {5, 6}, {6, 8}});
    CHECK(standard_representation(SetPartition({1, 2, 3})).arcs.empty());
    CHECK(standard_representation(SetPartition({1, 1, 1})).arcs == std::vector<Arc>{{1, 2}, {2, 3}});

    for_each_partition(7, [](const SetPartition& p) {
        CHECK(static_cast<int>(standard_representation(p).arcs.size()) == p.size() - p.block_count());
    });
}

TEST_CASE("blocks ordered by maximal element") {
    const auto blocks = running_example().blocks_by_max_desc();
    CHECK(blocks == std::vector<std::vector<int>>{{2, 5, 6, 8}, {3, 7}, {4}, {1}});
}

TEST_CASE("max nesting and crossing examples") {
    const auto d = standard_representation(running_example());
    CHECK(max_nesting(d) == 2);
    CHECK(max_crossing(d) == 2); // frozen from subset brute force
    CHECK(max_nesting(SetPartition::from_blocks({{1, 3}, {2}})) == 1);
    CHECK(max_nesting(ArcDiagram{}) == 0);
    CHECK(max_crossing(ArcDiagram{}) == 0);
    CHECK(max_crossing(ArcDiagram{4, {{1, 3}, {2, 4}}}) == 2);
}

TEST_CASE("nesting and crossing numbers agree with subset brute force") {
    for (int n = 0; n <= 9; ++n) {
        for_each_partition(n, [](const SetPartition& p) {
            const auto d = standard_representation(p);
            REQUIRE(max_nesting(d) == brute_force_family(d, nested));
            if (p.size() <= 8) REQUIRE(max_crossing(d) == brute_force_family(d, crossing));
        });
    }
}

TEST_CASE("label examples") {
    CHECK(label(running_example(), 3) == Label{3, 4, 5});
    CHECK(label(SetPartition(), 4) == Label{1, 1, 1, 1});
    CHECK(label(SetPartition({1, 2}), 2) == Label{3, 3});
}

TEST_CASE("labels are non-decreasing and bounded") {
    for (int n = 0; n <= 8; ++n)
        for_each_partition(n, [n](const SetPartition& p) {
            for (int m = 1; m <= 3; ++m) {
                if (max_nesting(p) > m) continue;
                const Label l = label(p, m);
                CHECK(l.is_non_decreasing());
                CHECK(l.last() <= n + 1);
            }
        });
}

TEST_CASE("children of the running example") {
    const auto kids = children_partitions(running_example(), 3);
    REQUIRE(kids.size() == 5);
    const std::vector<std::string> shapes{"1|2 5 6 8|3 7|4|9", "1|2 5 6 8 9|3 7|4", "1|2 5 6 8|3 7 9|4",
                                          "1|2 5 6 8|3 7|4 9", "1 9|2 5 6 8|3 7|4"};
    const std::vector<Label> labels{{4, 5, 6}, {2, 4, 5}, {3, 4, 5}, {4, 4, 5}, {4, 5, 5}};
    for (std::size_t i = 0; i < kids.size(); ++i) {
        CHECK(kids[i].to_string() == shapes[i]);
        CHECK(label(kids[i], 3) == labels[i]);
    }
}

TEST_CASE("children edge cases") {
    const auto root_kids = children_partitions(SetPartition(), 2);
    REQUIRE(root_kids.size() == 1);
    CHECK(root_kids[0] == SetPartition({1}));

    const SetPartition two({1, 2});
    CHECK(label(two, 1) == Label{3});
    const auto kids = children_partitions(two, 1);
    CHECK(kids.size() == 3);
    for (const auto& k : kids) CHECK(max_nesting(k) <= 1);

    // 1 4|2 3 has a 2-nesting, so it is not a node of the m = 1 tree.
    CHECK_THROWS_AS(children_partitions(SetPartition::from_blocks({{1, 4}, {2, 3}}), 1), std::invalid_argument);
}

TEST_CASE("exhaustive counts") {
    CHECK(count_nonnesting(5, 1) == 42);
    CHECK(count_nonnesting(8, 2) == 3930);
    CHECK(count_nonnesting(0, 3) == 1);
    CHECK(count_noncrossing(8, 2) == 3930);
    CHECK(count_noncrossing(3, 1) == 5);
    CHECK(count_noncrossing(4, 1) == 14);
}

TEST_CASE("serial and OpenMP oracle agree") {
    for (int n = 0; n <= 10; ++n)
        for (int m = 1; m <= 3; ++m) CHECK(count_nonnesting_parallel(n, m) == count_nonnesting(n, m));
}

TEST_CASE("resource guard") {
    CHECK_THROWS_AS(count_nonnesting(14, 1), ResourceLimitError);
    CHECK_THROWS_AS(count_noncrossing(20, 1), ResourceLimitError);
    CHECK_THROWS_AS(label_distribution(14, 2), ResourceLimitError);
    CHECK(count_nonnesting(3, 1, OracleLimits{3}) == 5);
    CHECK_THROWS_AS(count_nonnesting(4, 1, OracleLimits{3}), ResourceLimitError);
}

TEST_CASE("label distributions") {
    CHECK(label_distribution(0, 2) == std::map<Label, BigInt>{{Label{1, 1}, 1}});
    CHECK(label_distribution(1, 2) == std::map<Label, BigInt>{{Label{2, 2}, 1}});
    CHECK(label_distribution(3, 2) ==
          std::map<Label, BigInt>{{Label{4, 4}, 1}, {Label{3, 3}, 2}, {Label{2, 2}, 1}, {Label{2, 3}, 1}});
    BigInt total = 0;
    for (const auto& [l, c] : label_distribution(7, 2)) total += c;
    CHECK(total == count_nonnesting(7, 2));
}

TEST_CASE("Bell prefix at oracle scale") {
    const auto bell = bell_numbers(10);
    for (int m = 1; m <= 4; ++m)
        for (int n = 0; n <= 10; ++n) {
            if (n < 2 * (m + 1))
                CHECK(count_nonnesting(n, m) == bell[static_cast<std::size_t>(n)]);
            else if (n == 2 * (m + 1))
                CHECK(count_nonnesting(n, m) == bell[static_cast<std::size_t>(n)] - 1);
        }
    CHECK(bell_numbers(14)[14] == BigInt("190899322"));
}

TEST_CASE("joint nesting/crossing distribution") {
    auto joint = nesting_crossing_distribution(3);
    CHECK(joint.size() == 2);
    BigInt total = 0;
    for (const auto& [key, c] : joint) {
        CHECK(key.first <= 1);
        CHECK(key.second <= 1);
        total += c;
    }
    CHECK(total == 5);

    joint = nesting_crossing_distribution(4);
    BigInt nest2 = 0, cross2 = 0;
    for (const auto& [key, c] : joint) {
        if (key.first == 2) nest2 += c;
        if (key.second == 2) cross2 += c;
    }
    CHECK(nest2 == 1);
    CHECK(cross2 == 1);

    CHECK(nesting_crossing_distribution(0) == std::map<std::pair<int, int>, BigInt>{{{0, 0}, 1}});
}
