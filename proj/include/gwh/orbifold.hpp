#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gwh/partitions.hpp"
#include "gwh/rational.hpp"

namespace gwh {

struct CohomologyLabel {
  int id;      ///< position in the ordered basis
  int degree;  ///< real cohomological degree
  std::string name;
};

/// Ordered basis of H*(X) with one label per Betti dimension, sorted by degree.
class GradedLabelSet {
 public:
  /// betti[d] = dim H^d(X). Odd Betti numbers must vanish (ValidationError).
  explicit GradedLabelSet(std::vector<int> betti);

  const std::vector<int>& betti() const { return betti_; }
  const std::vector<CohomologyLabel>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  int degree(int id) const { return labels_[static_cast<std::size_t>(id)].degree; }

 private:
  std::vector<int> betti_;
  std::vector<CohomologyLabel> labels_;
};

/// Pairs (part, label id) in the standard ordering: descending in part, then
/// descending in label among equal parts.
class WeightedPartition {
 public:
  WeightedPartition() = default;
  explicit WeightedPartition(std::vector<std::pair<int, int>> pairs);  ///< sorts; throws on part < 1 or label < 0

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  Partition partition() const;
  int size() const;

  friend bool operator==(const WeightedPartition&, const WeightedPartition&) = default;
  friend auto operator<=>(const WeightedPartition& a, const WeightedPartition& b) { return a.pairs_ <=> b.pairs_; }

 private:
  friend void for_each_weighted_partition(int, const GradedLabelSet&, const std::function<void(const WeightedPartition&)>&);
  std::vector<std::pair<int, int>> pairs_;
};

/// Orbifold degree: sum of label degrees + 2 age(mu).
int orbifold_degree(const WeightedPartition& w, const GradedLabelSet& labels);

/// Degree of the Nakajima class P_{d1}[mu_1]...P_{dk}[mu_k] 1: sum_i (deg d_i + 2(mu_i - 1)).
int nakajima_degree(const WeightedPartition& w, const GradedLabelSet& labels);

/// |Aut(mu-vector)|: product of factorials of repeated (part, label) pairs.
std::uint64_t weighted_aut_order(const WeightedPartition& w);

/// Visits every Aut(mu)-orbit of label assignments, grouped by partition in
/// canonical order. The visited object is reused between calls.
void for_each_weighted_partition(int n, const GradedLabelSet& labels,
                                 const std::function<void(const WeightedPartition&)>& visit);

struct OrbifoldBasisElement {
  WeightedPartition label;
  int degree;
};

/// Materialized basis of H*_orb(Sym^n X). Requires n >= 1.
std::vector<OrbifoldBasisElement> orbifold_basis(int n, const GradedLabelSet& labels);

/// Coefficients of the orbifold Poincare polynomial: result[k] = dim H^k_orb.
std::vector<Integer> poincare_orbifold(int n, const GradedLabelSet& labels);

/// L(lambda(mu-vector)) = (-i)^{age(mu)} theta(mu-vector); the label is unchanged.
struct LImage {
  GaussianRational scalar;
  WeightedPartition label;
};
LImage L_map(const WeightedPartition& w);

/// QL(alpha y^k) = (-1)^k L(alpha) e^{iku}: a sign and the exponent k of the e^{iu} tag.
struct QLRule {
  int sign;
  int e_iu_power;
};
QLRule QL_coefficient(int k);

/// Full QL image of w y^k: scalar (-1)^k (-i)^{age}, label w, tag e^{iku}.
struct QLImage {
  GaussianRational scalar;
  WeightedPartition label;
  int e_iu_power;
};
QLImage QL_map(const WeightedPartition& w, int k);

}  // namespace gwh
