#include "gwh/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "gwh/errors.hpp"

namespace gwh {

namespace {

constexpr int kMaxExactDegree = 20;

void check_degree(int n) {
  if (n > kMaxExactDegree) {
    throw CapacityError("group orders are exact only for n <= 20 (got " + std::to_string(n) + ")");
  }
}

}  // namespace

int MultiplicityForm::size() const {
  int n = 0;
  for (auto [part, mult] : terms) n += part * mult;
  return n;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw ValidationError("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(const MultiplicityForm& form) {
  int previous = 0;
  for (auto [part, mult] : form.terms) {
    if (part <= 0 || mult <= 0) throw ValidationError("multiplicity form entries must be positive");
    if (previous != 0 && part >= previous) {
      throw ValidationError("multiplicity form parts must be strictly decreasing");
    }
    previous = part;
    parts_.insert(parts_.end(), static_cast<std::size_t>(mult), part);
    n_ += part * mult;
  }
}

Partition Partition::one_row(int n) { return n == 0 ? Partition{} : Partition({n}); }

Partition Partition::one_column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

MultiplicityForm Partition::multiplicities() const {
  MultiplicityForm form;
  for (int p : parts_) {
    if (!form.terms.empty() && form.terms.back().first == p) {
      ++form.terms.back().second;
    } else {
      form.terms.emplace_back(p, 1);
    }
  }
  return form;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (!parts_.empty()) {
    out.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
      for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
    }
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw ValidationError("partitions_of: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> current;
  // Depth-first with the largest admissible part first yields reverse-lex order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::uint64_t partition_count(int n) {
  std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::int64_t acc = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      std::int64_t s = (k % 2 == 1) ? 1 : -1;
      acc += s * static_cast<std::int64_t>(p[static_cast<std::size_t>(m - g1)]);
      if (g2 <= m) acc += s * static_cast<std::int64_t>(p[static_cast<std::size_t>(m - g2)]);
    }
    p[static_cast<std::size_t>(m)] = static_cast<std::uint64_t>(acc);
  }
  return p[static_cast<std::size_t>(n)];
}

int age(const Partition& mu) { return mu.size() - mu.length(); }

int sign(const Partition& mu) { return age(mu) % 2 == 0 ? 1 : -1; }

std::uint64_t factorial_u64(int n) {
  check_degree(n);
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t aut_order(const Partition& mu) {
  check_degree(mu.size());
  std::uint64_t a = 1;
  for (auto [part, mult] : mu.multiplicities().terms) a *= factorial_u64(mult);
  return a;
}

std::uint64_t normal_subgroup_order(const Partition& mu) {
  check_degree(mu.size());
  std::uint64_t a = 1;
  for (int p : mu.parts()) a *= static_cast<std::uint64_t>(p);
  return a;
}

std::uint64_t centralizer_order(const Partition& mu) {
  return normal_subgroup_order(mu) * aut_order(mu);
}

std::uint64_t class_size(const Partition& mu) {
  return factorial_u64(mu.size()) / centralizer_order(mu);
}

}  // namespace gwh
