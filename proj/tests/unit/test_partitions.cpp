#include <set>

#include "doctest.h"
#include "gwh/errors.hpp"
#include "gwh/partitions.hpp"
#include "oracles.hpp"

using namespace gwh;

namespace {

// Every composition of n, sorted and deduplicated.
std::set<std::vector<int>> partitions_by_compositions(int n) {
  std::set<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      auto s = cur;
      std::sort(s.rbegin(), s.rend());
      out.insert(s);
      return;
    }
    for (int k = 1; k <= rest; ++k) {
      cur.push_back(k);
      self(self, rest - k);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

}  // namespace

TEST_CASE("partitions of small n") {
  auto p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].parts().empty());
  auto p1 = partitions_of(1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0] == Partition({1}));
  CHECK(partitions_of(4).size() == 5);
}

TEST_CASE("enumeration matches compositions and is reverse-lexicographic") {
  for (int n = 1; n <= 10; ++n) {
    const auto ps = partitions_of(n);
    std::set<std::vector<int>> got;
    for (const auto& p : ps) got.insert(p.parts());
    CHECK(got == partitions_by_compositions(n));
    CHECK(got.size() == ps.size());
    for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] > ps[i]);
  }
  for (int n = 0; n <= 30; ++n) CHECK(partition_count(n) == partitions_of(n).size());
}

TEST_CASE("age, sign and automorphisms") {
  CHECK(age(Partition({1, 1, 1})) == 0);
  CHECK(age(Partition({3})) == 2);
  CHECK(age(Partition({2, 2, 1})) == 2);
  CHECK(sign(Partition({2, 1})) == -1);
  CHECK(aut_order(Partition({1, 1, 1})) == 6);
  CHECK(aut_order(Partition({2, 1})) == 1);
  CHECK(aut_order(Partition({2, 2, 1})) == 2);
}

TEST_CASE("centralizers and classes") {
  CHECK(centralizer_order(Partition({1, 1})) == 2);
  CHECK(centralizer_order(Partition({2, 1})) == 2);
  CHECK(class_size(Partition({1, 1})) == 1);
  CHECK(class_size(Partition({2, 1})) == 3);
  CHECK(class_size(Partition({3})) == 2);
  for (int n = 1; n <= 6; ++n) {
    CHECK(centralizer_order(Partition::one_row(n)) == static_cast<std::uint64_t>(n));
    for (const auto& mu : partitions_of(n)) CHECK(centralizer_order(mu) == oracle::centralizer_brute(mu.parts()));
  }
}

TEST_CASE("class equation and split sequence up to n = 8") {
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t total = 0;
    for (const auto& mu : partitions_of(n)) {
      CHECK(class_size(mu) * centralizer_order(mu) == factorial_u64(n));
      CHECK(centralizer_order(mu) == normal_subgroup_order(mu) * aut_order(mu));
      CHECK(age(mu) + mu.length() == n);
      total += class_size(mu);
    }
    CHECK(total == factorial_u64(n));
  }
}

TEST_CASE("multiplicity form round trip and conjugation") {
  for (int n = 0; n <= 9; ++n) {
    for (const auto& mu : partitions_of(n)) {
      const MultiplicityForm f = mu.multiplicities();
      CHECK(f.size() == n);
      for (std::size_t t = 1; t < f.terms.size(); ++t) CHECK(f.terms[t - 1].first > f.terms[t].first);
      CHECK(Partition(f) == mu);
      CHECK(mu.conjugate().conjugate() == mu);
      CHECK(mu.conjugate().size() == n);
    }
  }
  CHECK(Partition({3, 1, 1}).to_string() == "[3,1,1]");
}

TEST_CASE("invalid parts are rejected") {
  CHECK_THROWS_AS(Partition({2, 0}), ValidationError);
  CHECK_THROWS_AS(Partition({-1}), ValidationError);
  CHECK_THROWS_AS(factorial_u64(21), CapacityError);
}
