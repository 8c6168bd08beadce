#include "doctest.h"

#include <map>
#include <set>

#include "ncprob/errors.hpp"
#include "ncprob/partitions.hpp"
#include "oracles.hpp"

using namespace ncprob;

TEST_SUITE("partitions") {

TEST_CASE("set partition counts match the Bell triangle") {
  auto bell = oracles::bell_numbers(10);
  for (int n = 1; n <= 10; ++n) {
    Int count = 0;
    for_each_set_partition(n, [&](const Partition&) { ++count; });
    CHECK_EQ(count, bell[n]);
  }
}

TEST_CASE("set partition base cases") {
  auto one = enum_set_partitions(1);
  REQUIRE_EQ(one.size(), 1);
  CHECK_EQ(one[0].blocks, std::vector<std::vector<int>>{{1}});
  CHECK_EQ(enum_set_partitions(3).size(), 5);
  CHECK_EQ(enum_set_partitions(8).size(), 4140);
}

TEST_CASE("set partitions are distinct, canonical and cover the ground set") {
  for (int n = 1; n <= 7; ++n) {
    std::set<Partition> seen;
    for (const auto& p : enum_set_partitions(n)) {
      CHECK(seen.insert(p).second);
      int total = 0;
      int prev_min = 0;
      for (const auto& b : p.blocks) {
        REQUIRE(!b.empty());
        CHECK_GT(b.front(), prev_min);  // blocks ordered by least element
        prev_min = b.front();
        for (size_t i = 1; i < b.size(); ++i) CHECK_LT(b[i - 1], b[i]);
        total += static_cast<int>(b.size());
      }
      CHECK_EQ(total, n);
    }
  }
}

TEST_CASE("noncrossing counts match the Catalan recurrence") {
  auto catalan = oracles::catalan_numbers(10);
  for (int n = 1; n <= 10; ++n) {
    Int count = 0;
    for_each_noncrossing(n, [&](const Partition&) { ++count; });
    CHECK_EQ(count, catalan[n]);
  }
}

TEST_CASE("noncrossing enumeration equals the definition filter") {
  for (int n = 1; n <= 8; ++n) {
    std::set<Partition> direct;
    for (const auto& p : enum_noncrossing(n)) CHECK(direct.insert(p).second);
    std::set<Partition> filtered;
    for (const auto& p : enum_set_partitions(n))
      if (!oracles::crossing_by_definition(p)) filtered.insert(p);
    CHECK(direct == filtered);
  }
}

TEST_CASE("noncrossing base cases") {
  CHECK_EQ(enum_noncrossing(2).size(), 2);
  auto nc4 = enum_noncrossing(4);
  CHECK_EQ(nc4.size(), 14);
  Partition crossing;
  crossing.n = 4;
  crossing.blocks = {{1, 3}, {2, 4}};
  for (const auto& p : nc4) CHECK_FALSE(p == crossing);
  CHECK_FALSE(is_noncrossing(crossing));
}

TEST_CASE("interval partitions are the compositions") {
  CHECK_EQ(enum_interval(1).size(), 1);
  CHECK_EQ(enum_interval(4).size(), 8);
  for (int n = 1; n <= 10; ++n) CHECK_EQ(enum_interval(n).size(), 1ull << (n - 1));

  std::set<Partition> got;
  for (const auto& p : enum_interval(3)) got.insert(p);
  std::set<Partition> expected;
  auto mk = [](std::vector<std::vector<int>> blocks) {
    Partition p;
    p.n = 3;
    p.blocks = std::move(blocks);
    return p;
  };
  expected.insert(mk({{1, 2, 3}}));
  expected.insert(mk({{1}, {2, 3}}));
  expected.insert(mk({{1, 2}, {3}}));
  expected.insert(mk({{1}, {2}, {3}}));
  CHECK(got == expected);
}

TEST_CASE("interval partitions have consecutive blocks and sit inside noncrossing") {
  for (int n = 1; n <= 8; ++n) {
    std::set<Partition> all;
    for (const auto& p : enum_set_partitions(n)) all.insert(p);
    std::set<Partition> nc;
    for (const auto& p : enum_noncrossing(n)) nc.insert(p);
    for (const auto& p : enum_interval(n)) {
      for (const auto& b : p.blocks)
        for (size_t i = 1; i < b.size(); ++i) CHECK_EQ(b[i], b[i - 1] + 1);
      CHECK(nc.count(p) == 1);
    }
    for (const auto& p : nc) CHECK(all.count(p) == 1);
  }
}

TEST_CASE("monotone counts match the brute-force order oracle") {
  // the permutation-filter oracle gives 1, 3, 12, 60, 360, 2520
  for (int n = 1; n <= 6; ++n) {
    long expected = 0;
    for (const auto& p : enum_noncrossing(n)) expected += oracles::brute_force_order_count(p);
    Int count = 0;
    for_each_monotone(n, [&](const MonotonePartition&) { ++count; });
    CHECK_EQ(count, Int(expected));
  }
  CHECK_EQ(enum_monotone(1).size(), 1);
  CHECK_EQ(enum_monotone(2).size(), 3);
  CHECK_EQ(enum_monotone(3).size(), 12);
}

TEST_CASE("monotone orders respect nesting and project onto noncrossing") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> seen;
    std::map<Partition, long> per_base;
    for (const auto& mp : enum_monotone(n)) {
      CHECK(seen.insert(mp.to_string()).second);
      per_base[mp.base]++;
      size_t k = mp.base.blocks.size();
      std::set<int> labels(mp.order.begin(), mp.order.end());
      CHECK_EQ(labels.size(), k);
      CHECK_EQ(*labels.begin(), 1);
      CHECK_EQ(*labels.rbegin(), static_cast<int>(k));
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
          if (i == j) continue;
          const auto& inner = mp.base.blocks[i];
          const auto& outer = mp.base.blocks[j];
          if (outer.front() < inner.front() && inner.back() < outer.back())
            CHECK_LT(mp.order[j], mp.order[i]);
        }
    }
    auto nc = enum_noncrossing(n);
    CHECK_EQ(per_base.size(), nc.size());
    for (const auto& p : nc) {
      CHECK_GE(per_base[p], 1);
      CHECK_EQ(Int(per_base[p]), compatible_order_count(p));
      CHECK_EQ(per_base[p], oracles::brute_force_order_count(p));
    }
  }
}

TEST_CASE("is_nested") {
  CHECK(is_nested({2}, {1, 3}));
  CHECK_FALSE(is_nested({1}, {2, 3}));
  CHECK(is_nested({2, 3}, {1, 4}));
  CHECK_FALSE(is_nested({1, 4}, {2, 3}));
  CHECK_THROWS_AS((void)is_nested({1, 2}, {2, 3}), InvalidInputError);
}

TEST_CASE("enumeration caps and bad sizes") {
  CHECK_THROWS_AS((void)enum_set_partitions(0), InvalidInputError);
  CHECK_THROWS_AS((void)enum_set_partitions(15), SizeLimitError);
  CHECK_THROWS_AS((void)enum_noncrossing(5, 4), SizeLimitError);
  CHECK_NOTHROW((void)enum_noncrossing(5, 5));
  CHECK_THROWS_AS((void)enum_interval(15), SizeLimitError);
  CHECK_THROWS_AS((void)enum_monotone(15), SizeLimitError);
}

TEST_CASE("partition rendering") {
  Partition p;
  p.n = 3;
  p.blocks = {{1, 3}, {2}};
  CHECK_EQ(p.to_string(), "{1,3}{2}");
  MonotonePartition mp{p, {1, 2}};
  CHECK_EQ(mp.to_string(), "{1,3}:1{2}:2");
}

}  // TEST_SUITE
