#include "gwh/characters.hpp"

#include <algorithm>
#include <map>

#include "gwh/errors.hpp"

namespace gwh {

namespace {

// Border strips are removed on the beta-set (first-column hook lengths): a strip
// of length r is a move beta -> beta - r onto an empty position, with sign given
// by the parity of the beads jumped over.
class BorderStripEvaluator {
 public:
  std::int64_t chi(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t from) {
    if (from == mu.size()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, std::vector<int>(mu.begin() + static_cast<std::ptrdiff_t>(from), mu.end()));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int strip = mu[from];
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;

    std::int64_t total = 0;
    for (int i = 0; i < len; ++i) {
      const int from_pos = beta[static_cast<std::size_t>(i)];
      const int to_pos = from_pos - strip;
      if (to_pos < 0) continue;
      if (std::find(beta.begin(), beta.end(), to_pos) != beta.end()) continue;
      int jumped = 0;
      for (int b : beta) {
        if (b > to_pos && b < from_pos) ++jumped;
      }
      std::vector<int> moved = beta;
      moved[static_cast<std::size_t>(i)] = to_pos;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> next;
      for (int k = 0; k < len; ++k) {
        int part = moved[static_cast<std::size_t>(k)] - (len - 1 - k);
        if (part > 0) next.push_back(part);
      }
      std::int64_t sub = chi(next, mu, from + 1);
      total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> memo_;
};

}  // namespace

CharTable::CharTable(int n, std::vector<Partition> labels, std::vector<std::int64_t> values)
    : n_(n), labels_(std::move(labels)), values_(std::move(values)) {}

std::size_t CharTable::index_of(const Partition& p) const {
  // labels_ is sorted descending
  auto it = std::lower_bound(labels_.begin(), labels_.end(), p, std::greater<>());
  if (it == labels_.end() || *it != p) {
    throw ValidationError("partition " + p.to_string() + " is not a partition of " + std::to_string(n_));
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

std::int64_t CharTable::value(const Partition& irrep, const Partition& cls) const {
  return at(index_of(irrep), index_of(cls));
}

CharTable character_table(int n, Exec exec, int bound) {
  if (n < 1) throw ValidationError("character_table: n must be >= 1");
  if (n > bound) {
    throw CapacityError("character_table: n = " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  }
  std::vector<Partition> labels = partitions_of(n);
  const std::size_t k = labels.size();
  std::vector<std::int64_t> values(k * k);

  auto fill_row = [&](std::size_t row) {
    BorderStripEvaluator eval;
    for (std::size_t col = 0; col < k; ++col) {
      values[row * k + col] = eval.chi(labels[row].parts(), labels[col].parts(), 0);
    }
  };

  if (exec == Exec::parallel) {
    const auto rows = static_cast<std::int64_t>(k);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t row = 0; row < rows; ++row) fill_row(static_cast<std::size_t>(row));
  } else {
    for (std::size_t row = 0; row < k; ++row) fill_row(row);
  }
  return CharTable(n, std::move(labels), std::move(values));
}

std::int64_t character_value(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw ValidationError("character_value: partitions of different size");
  BorderStripEvaluator eval;
  return eval.chi(lambda.parts(), mu.parts(), 0);
}

Integer irrep_dimension(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
      int arm = lambda[static_cast<std::size_t>(i)] - j - 1;
      int leg = conj[static_cast<std::size_t>(j)] - i - 1;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

}  // namespace gwh
