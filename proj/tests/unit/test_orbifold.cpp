#include <set>

#include "doctest.h"
#include "gwh/errors.hpp"
#include "gwh/orbifold.hpp"
#include "oracles.hpp"

using namespace gwh;

namespace {

const std::vector<std::vector<int>> kProfiles{{1}, {1, 0, 22, 0, 1}, {1, 0, 7, 0, 1}};

}  // namespace

TEST_CASE("label sets") {
  const GradedLabelSet s({1, 0, 2, 0, 1});
  REQUIRE(s.size() == 4);
  CHECK(s.degree(0) == 0);
  CHECK(s.degree(1) == 2);
  CHECK(s.degree(2) == 2);
  CHECK(s.degree(3) == 4);
  CHECK(s.labels()[1].name == "h2_1");
  CHECK(s.labels()[2].name == "h2_2");
  CHECK_THROWS_AS(GradedLabelSet({1, 1}), ValidationError);
  CHECK_THROWS_AS(GradedLabelSet({1, 0, -1}), ValidationError);
}

TEST_CASE("weighted partition ordering") {
  const WeightedPartition w({{1, 0}, {2, 1}, {1, 2}, {2, 0}});
  const std::vector<std::pair<int, int>> expected{{2, 1}, {2, 0}, {1, 2}, {1, 0}};
  CHECK(w.pairs() == expected);
  CHECK(w.size() == 6);
  CHECK(w.partition() == Partition({2, 2, 1, 1}));
  CHECK(weighted_aut_order(WeightedPartition({{1, 0}, {1, 0}, {2, 1}})) == 2);
  CHECK(weighted_aut_order(WeightedPartition({{1, 0}, {1, 1}})) == 1);
  CHECK_THROWS_AS(WeightedPartition({{0, 0}}), ValidationError);
}

TEST_CASE("orbifold basis examples") {
  const GradedLabelSet point({1});
  const auto b1 = orbifold_basis(1, GradedLabelSet({1, 0, 3, 0, 1}));
  REQUIRE(b1.size() == 5);
  std::multiset<int> d1;
  for (const auto& e : b1) d1.insert(e.degree);
  CHECK(d1 == std::multiset<int>{0, 2, 2, 2, 4});

  const auto b3 = orbifold_basis(3, point);
  REQUIRE(b3.size() == 3);
  std::multiset<int> degrees;
  for (const auto& e : b3) degrees.insert(e.degree);
  CHECK(degrees == std::multiset<int>{0, 2, 4});
  CHECK(poincare_orbifold(3, point) == std::vector<Integer>{1, 0, 1, 0, 1});

  // one degree-0 and one degree-4 class, n = 2
  const GradedLabelSet surface({1, 0, 0, 0, 1});
  std::multiset<int> d2;
  for (const auto& e : orbifold_basis(2, surface)) d2.insert(e.degree);
  CHECK(d2 == std::multiset<int>{0, 4, 8, 2, 6});
  CHECK_THROWS_AS(orbifold_basis(0, point), ValidationError);
}

TEST_CASE("enumeration agrees with the materialized basis") {
  const GradedLabelSet s({1, 0, 3, 0, 1});
  for (int n = 1; n <= 5; ++n) {
    std::vector<WeightedPartition> seen;
    for_each_weighted_partition(n, s, [&](const WeightedPartition& w) { seen.push_back(w); });
    const auto basis = orbifold_basis(n, s);
    REQUIRE(seen.size() == basis.size());
    std::set<WeightedPartition> unique(seen.begin(), seen.end());
    CHECK(unique.size() == seen.size());
    for (std::size_t i = 0; i < seen.size(); ++i) {
      CHECK(seen[i] == basis[i].label);
      CHECK(seen[i].size() == n);
      CHECK(basis[i].degree == orbifold_degree(seen[i], s));
    }
  }
}

TEST_CASE("graded dimensions") {
  for (const auto& betti : kProfiles) {
    const GradedLabelSet s(betti);
    for (int n = 1; n <= 6; ++n) {
      const auto p = poincare_orbifold(n, s);
      CHECK(p == oracle::gottsche_coefficient(n, betti));
      CHECK(p[0] == 1);
      Integer total = 0;
      for (const auto& c : p) total += c;
      CHECK(total == Integer(static_cast<long>(orbifold_basis(n, s).size())));
      for (const auto& e : orbifold_basis(n, s)) CHECK(nakajima_degree(e.label, s) == e.degree);
    }
  }
  CHECK(poincare_orbifold(1, GradedLabelSet({1, 0, 7, 0, 1})) == std::vector<Integer>{1, 0, 7, 0, 1});
}

TEST_CASE("Nakajima identification") {
  const GradedLabelSet point({1});
  CHECK(L_map(WeightedPartition({{1, 0}, {1, 0}, {1, 0}})).scalar == GaussianRational(1));
  CHECK(L_map(WeightedPartition({{2, 0}})).scalar == -GaussianRational::imaginary_unit());
  CHECK(L_map(WeightedPartition({{3, 0}})).scalar == GaussianRational(-1));
  const WeightedPartition w({{2, 0}, {1, 0}});
  CHECK(L_map(w).label == w);
  CHECK(nakajima_degree(WeightedPartition({{2, 0}}), point) == 2);
  CHECK(nakajima_degree(WeightedPartition({{1, 0}, {1, 0}}), point) == 0);

  CHECK(QL_coefficient(0).sign == 1);
  CHECK(QL_coefficient(0).e_iu_power == 0);
  CHECK(QL_coefficient(1).sign == -1);
  CHECK(QL_coefficient(2).sign == 1);
  CHECK(QL_coefficient(2).e_iu_power == 2);
  CHECK(QL_coefficient(-3).sign == -1);
  const QLImage q = QL_map(WeightedPartition({{2, 0}}), 1);
  CHECK(q.scalar == GaussianRational::imaginary_unit());
  CHECK(q.e_iu_power == 1);
  CHECK(QL_map(w, 2).scalar == L_map(w).scalar);
}
