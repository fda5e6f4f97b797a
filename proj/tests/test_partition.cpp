#include "tvlink/partition.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tvlink;

namespace {

// Cells listed directly from the row lengths, independent of cell_stats.
std::vector<std::pair<int, int>> cells_of(const Partition& nu) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 1; i <= nu.length(); ++i)
        for (int j = 1; j <= nu.row(i); ++j) out.push_back({static_cast<int>(i), j});
    return out;
}

}  // namespace

TEST_CASE("partition construction rejects unsorted or nonpositive parts") {
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition({2, 0, 1}));
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK(Partition().size() == 0);
}

TEST_CASE("conjugate examples") {
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition{5, 4, 3, 2, 2, 1}) == Partition({6, 5, 3, 2, 1}));
    CHECK(conjugate(Partition{2}) == Partition({1, 1}));
}

TEST_CASE("statistics examples") {
    auto e = statistics(Partition{});
    CHECK(e.size == 0);
    CHECK(e.norm_sq == 0);
    CHECK(e.kappa == 0);
    auto a = statistics(Partition{2});
    CHECK(a.size == 2);
    CHECK(a.norm_sq == 4);
    CHECK(a.kappa == 2);
    auto b = statistics(Partition{1, 1});
    CHECK(b.size == 2);
    CHECK(b.norm_sq == 2);
    CHECK(b.kappa == -2);
}

TEST_CASE("conjugation, size and kappa invariants through size 12") {
    for (const auto& nu : enumerate_up_to(12)) {
        const Partition nt = conjugate(nu);
        REQUIRE(conjugate(nt) == nu);
        REQUIRE(nt.size() == nu.size());
        REQUIRE(kappa(nu) + kappa(nt) == 0);
        // 2 * sum over cells of (j - i), computed from the cell list
        int content = 0;
        for (auto [i, j] : cells_of(nu)) content += j - i;
        REQUIRE(kappa(nu) == 2 * content);
        REQUIRE(kappa(nu) == norm_sq(nu) - norm_sq(nt));
        REQUIRE((norm_sq(nt) - nu.size()) % 2 == 0);
    }
}

TEST_CASE("cell statistics") {
    CHECK(cell_stats(Partition{}).empty());
    auto one = cell_stats(Partition{1});
    REQUIRE(one.size() == 1);
    CHECK(one.begin()->second.arm == 0);
    CHECK(one.begin()->second.leg == 0);
    CHECK(one.begin()->second.hook == 1);
    auto row = cell_stats(Partition{2});
    std::multiset<int> hooks;
    for (const auto& [c, s] : row) hooks.insert(s.hook);
    CHECK(hooks == std::multiset<int>{1, 2});
}

TEST_CASE("cell statistics agree with brute-force geometry and hook sums are transpose invariant") {
    for (const auto& nu : enumerate_up_to(9)) {
        const auto cells = cells_of(nu);
        const auto st = cell_stats(nu);
        REQUIRE(st.size() == cells.size());
        int hook_sum = 0;
        for (auto [i, j] : cells) {
            int arm = 0, leg = 0;
            for (auto [i2, j2] : cells) {
                if (i2 == i && j2 > j) ++arm;
                if (j2 == j && i2 > i) ++leg;
            }
            const auto& s = st.at({i, j});
            REQUIRE(s.arm == arm);
            REQUIRE(s.leg == leg);
            REQUIRE(s.hook == arm + leg + 1);
            hook_sum += s.hook;
        }
        int hook_sum_t = 0;
        for (const auto& [c, s] : cell_stats(conjugate(nu))) hook_sum_t += s.hook;
        REQUIRE(hook_sum == hook_sum_t);
    }
}

TEST_CASE("enumeration counts follow the partition numbers") {
    CHECK(enumerate_up_to(0) == std::vector<Partition>{Partition{}});
    const auto three = enumerate_up_to(3);
    CHECK(three.size() == 7);
    // 1+1+2+3+5+7+11+15+22
    CHECK(enumerate_up_to(8).size() == 67);
    // p(n) by the pentagonal recurrence, independent of the enumerator
    std::vector<long> p(13, 0);
    p[0] = 1;
    for (int n = 1; n <= 12; ++n)
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const long sign = k % 2 ? 1 : -1;
            p[static_cast<std::size_t>(n)] += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) p[static_cast<std::size_t>(n)] += sign * p[static_cast<std::size_t>(n - g2)];
        }
    for (int n = 0; n <= 12; ++n) CHECK(static_cast<long>(partitions_of(n).size()) == p[static_cast<std::size_t>(n)]);
    // every listed partition is distinct and of the right size
    std::set<Partition> seen;
    for (const auto& nu : partitions_of(10)) {
        CHECK(nu.size() == 10);
        CHECK(seen.insert(nu).second);
    }
}

TEST_CASE("containment and common subpartitions") {
    CHECK(contains(Partition{2, 1}, Partition{1}));
    CHECK(contains(Partition{2, 1}, Partition{2, 1}));
    CHECK_FALSE(contains(Partition{2, 1}, Partition{1, 1, 1}));
    const auto common = common_subpartitions(Partition{2, 1}, Partition{1, 1});
    CHECK(common == std::vector<Partition>{Partition{}, Partition{1}, Partition{1, 1}});
}

TEST_CASE("partition text format") {
    CHECK(parse_partition("[2,1]") == Partition({2, 1}));
    CHECK(parse_partition("[]") == Partition{});
    CHECK(parse_partition(" [ 3, 3 ] ") == Partition({3, 3}));
    CHECK(to_string(Partition{3, 1}) == "[3,1]");
    CHECK(to_string(Partition{}) == "[]");
    CHECK_THROWS(parse_partition("2,1"));
    CHECK_THROWS(parse_partition("[1,2]"));
    CHECK_THROWS(parse_partition("[a]"));
    for (const auto& nu : enumerate_up_to(6)) CHECK(parse_partition(to_string(nu)) == nu);
}
