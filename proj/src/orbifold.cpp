#include "gwh/orbifold.hpp"

#include <algorithm>

#include "gwh/errors.hpp"

namespace gwh {

GradedLabelSet::GradedLabelSet(std::vector<int> betti) : betti_(std::move(betti)) {
  for (std::size_t d = 0; d < betti_.size(); ++d) {
    if (betti_[d] < 0) throw ValidationError("Betti numbers must be non-negative");
    if (d % 2 == 1 && betti_[d] != 0) throw ValidationError("odd cohomology is not supported");
    for (int j = 1; j <= betti_[d]; ++j) {
      const int id = static_cast<int>(labels_.size());
      labels_.push_back({id, static_cast<int>(d), "h" + std::to_string(d) + "_" + std::to_string(j)});
    }
  }
  if (labels_.empty()) throw ValidationError("label set must be non-empty");
}

WeightedPartition::WeightedPartition(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
  for (const auto& [part, label] : pairs_) {
    if (part < 1) throw ValidationError("weighted partition parts must be positive");
    if (label < 0) throw ValidationError("label ids must be non-negative");
  }
  std::sort(pairs_.begin(), pairs_.end(), std::greater<>());
}

Partition WeightedPartition::partition() const {
  std::vector<int> parts;
  parts.reserve(pairs_.size());
  for (const auto& pr : pairs_) parts.push_back(pr.first);
  return Partition(std::move(parts));
}

int WeightedPartition::size() const {
  int n = 0;
  for (const auto& pr : pairs_) n += pr.first;
  return n;
}

int orbifold_degree(const WeightedPartition& w, const GradedLabelSet& labels) {
  int deg = 0;
  for (const auto& pr : w.pairs()) deg += labels.degree(pr.second);
  return deg + 2 * age(w.partition());
}

int nakajima_degree(const WeightedPartition& w, const GradedLabelSet& labels) {
  int deg = 0;
  for (const auto& [part, label] : w.pairs()) deg += labels.degree(label) + 2 * (part - 1);
  return deg;
}

std::uint64_t weighted_aut_order(const WeightedPartition& w) {
  std::uint64_t order = 1;
  const auto& p = w.pairs();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    order *= factorial_u64(static_cast<int>(j - i));
    i = j;
  }
  return order;
}

void for_each_weighted_partition(int n, const GradedLabelSet& labels,
                                 const std::function<void(const WeightedPartition&)>& visit) {
  if (n < 1) throw ValidationError("orbifold basis requires n >= 1");
  const int top = static_cast<int>(labels.size()) - 1;
  WeightedPartition w;
  for (const Partition& mu : partitions_of(n)) {
    const auto& parts = mu.parts();
    w.pairs_.assign(parts.size(), {0, 0});
    for (std::size_t i = 0; i < parts.size(); ++i) w.pairs_[i].first = parts[i];
    // Labels are non-increasing within each block of equal parts.
    auto fill = [&](auto&& self, std::size_t pos) -> void {
      if (pos == parts.size()) {
        visit(w);
        return;
      }
      const bool same_block = pos > 0 && parts[pos] == parts[pos - 1];
      const int hi = same_block ? w.pairs_[pos - 1].second : top;
      for (int l = hi; l >= 0; --l) {
        w.pairs_[pos].second = l;
        self(self, pos + 1);
      }
    };
    fill(fill, 0);
  }
}

std::vector<OrbifoldBasisElement> orbifold_basis(int n, const GradedLabelSet& labels) {
  std::vector<OrbifoldBasisElement> out;
  for_each_weighted_partition(n, labels, [&](const WeightedPartition& w) {
    out.push_back({w, orbifold_degree(w, labels)});
  });
  return out;
}

std::vector<Integer> poincare_orbifold(int n, const GradedLabelSet& labels) {
  if (n < 1) throw ValidationError("poincare_orbifold requires n >= 1");
  // h[m] = complete homogeneous polynomial of degree m in the variables t^{deg}.
  using Poly = std::vector<Integer>;
  auto add_shifted = [](Poly& into, const Poly& p, int shift) {
    if (into.size() < p.size() + static_cast<std::size_t>(shift)) into.resize(p.size() + shift);
    for (std::size_t k = 0; k < p.size(); ++k) into[k + shift] += p[k];
  };
  auto mul = [](const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  };
  std::vector<Poly> h(static_cast<std::size_t>(n) + 1, Poly{Integer(0)});
  h[0] = Poly{Integer(1)};
  for (const auto& label : labels.labels()) {
    for (int m = 1; m <= n; ++m) add_shifted(h[m], h[m - 1], label.degree);
  }
  Poly total{Integer(0)};
  for (const Partition& mu : partitions_of(n)) {
    Poly term{Integer(1)};
    for (const auto& [part, mult] : mu.multiplicities().terms) {
      (void)part;
      term = mul(term, h[mult]);
    }
    add_shifted(total, term, 2 * age(mu));
  }
  while (total.size() > 1 && total.back() == 0) total.pop_back();
  return total;
}

LImage L_map(const WeightedPartition& w) {
  const GaussianRational minus_i = -GaussianRational::imaginary_unit();
  return {minus_i.pow(age(w.partition())), w};
}

QLRule QL_coefficient(int k) { return {k % 2 == 0 ? 1 : -1, k}; }

QLImage QL_map(const WeightedPartition& w, int k) {
  const LImage l = L_map(w);
  const QLRule rule = QL_coefficient(k);
  return {l.scalar * GaussianRational(rule.sign), l.label, rule.e_iu_power};
}

}  // namespace gwh
