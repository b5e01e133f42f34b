#include "gwh/permutations.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gwh/errors.hpp"

namespace gwh {

namespace {

Partition cycle_type_of(const Perm& p, int n) {
  std::vector<int> parts;
  std::array<bool, kBruteForceDegree> seen{};
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

}  // namespace

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  if (n < 1) throw ValidationError("SymmetricGroup: degree must be >= 1");
  if (n > kBruteForceDegree) {
    throw CapacityError("brute-force enumeration supports n <= " + std::to_string(kBruteForceDegree));
  }
  Perm p{};
  std::iota(p.begin(), p.begin() + n, std::uint8_t{0});
  do {
    elements_.push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + n));

  std::map<Perm, std::uint32_t> index;
  for (std::uint32_t i = 0; i < elements_.size(); ++i) index.emplace(elements_[i], i);

  const std::size_t order = elements_.size();
  table_.resize(order * order);
  inverse_.resize(order);
  types_.reserve(order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      Perm c{};
      for (int x = 0; x < n; ++x) {
        c[static_cast<std::size_t>(x)] = elements_[a][elements_[b][static_cast<std::size_t>(x)]];
      }
      table_[a * order + b] = index.at(c);
    }
    Perm inv{};
    for (int x = 0; x < n; ++x) inv[elements_[a][static_cast<std::size_t>(x)]] = static_cast<std::uint8_t>(x);
    inverse_[a] = index.at(inv);
    types_.push_back(cycle_type_of(elements_[a], n));
  }
}

std::vector<std::uint32_t> SymmetricGroup::conjugacy_class(const Partition& mu) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < order(); ++i) {
    if (types_[i] == mu) out.push_back(i);
  }
  return out;
}

namespace {

bool generates_transitive(const SymmetricGroup& g, const std::vector<std::uint32_t>& tuple) {
  const int n = g.degree();
  std::array<int, kBruteForceDegree> parent{};
  std::iota(parent.begin(), parent.begin() + n, 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  int components = n;
  for (std::uint32_t idx : tuple) {
    const Perm& p = g.element(idx);
    for (int x = 0; x < n; ++x) {
      int a = find(x);
      int b = find(p[static_cast<std::size_t>(x)]);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --components;
      }
    }
  }
  return components == 1;
}

// Enumeration state for one branch of the outer loop.
struct Walker {
  const SymmetricGroup& group;
  const std::vector<std::vector<std::uint32_t>>& slots;  // choices per free slot
  int genus;
  bool last_is_determined;              // true when at least one profile is present
  const std::vector<bool>* last_class;  // membership mask for the last profile
  bool count_transitive;
  std::vector<std::uint32_t> tuple;
  TupleCount count;

  std::uint32_t product_of_prefix() const {
    std::uint32_t acc = 0;
    for (int j = 0; j < genus; ++j) {
      std::uint32_t a = tuple[static_cast<std::size_t>(2 * j)];
      std::uint32_t b = tuple[static_cast<std::size_t>(2 * j + 1)];
      std::uint32_t comm = group.compose(group.compose(a, b), group.compose(group.inverse(a), group.inverse(b)));
      acc = group.compose(acc, comm);
    }
    for (std::size_t s = static_cast<std::size_t>(2 * genus); s < tuple.size(); ++s) acc = group.compose(acc, tuple[s]);
    return acc;
  }

  void finish() {
    std::uint32_t prod = product_of_prefix();
    if (last_is_determined) {
      std::uint32_t last = group.inverse(prod);
      if (!(*last_class)[last]) return;
      ++count.all;
      if (count_transitive) {
        tuple.push_back(last);
        if (generates_transitive(group, tuple)) ++count.transitive;
        tuple.pop_back();
      }
    } else {
      if (prod != 0) return;
      ++count.all;
      if (count_transitive && generates_transitive(group, tuple)) ++count.transitive;
    }
  }

  void walk(std::size_t slot) {
    if (slot == slots.size()) {
      finish();
      return;
    }
    for (std::uint32_t choice : slots[slot]) {
      tuple.push_back(choice);
      walk(slot + 1);
      tuple.pop_back();
    }
  }
};

}  // namespace

TupleCount count_monodromy_tuples(const SymmetricGroup& group, int genus, const std::vector<Partition>& profiles,
                                  bool count_transitive, Exec exec, std::uint64_t max_tuples) {
  if (genus < 0) throw ValidationError("genus must be non-negative");
  for (const auto& p : profiles) {
    if (p.size() != group.degree()) {
      throw ValidationError("profile " + p.to_string() + " is not a partition of " + std::to_string(group.degree()));
    }
  }
  std::vector<std::uint32_t> everything(group.order());
  std::iota(everything.begin(), everything.end(), 0U);

  std::vector<std::vector<std::uint32_t>> slots;
  for (int j = 0; j < 2 * genus; ++j) slots.push_back(everything);
  const bool last_is_determined = !profiles.empty();
  for (std::size_t i = 0; i + 1 < profiles.size(); ++i) slots.push_back(group.conjugacy_class(profiles[i]));
  std::vector<bool> last_class(group.order(), false);
  if (last_is_determined) {
    for (std::uint32_t idx : group.conjugacy_class(profiles.back())) last_class[idx] = true;
  }

  long double visits = 1;
  for (const auto& s : slots) visits *= static_cast<long double>(s.size());
  if (visits > static_cast<long double>(max_tuples)) {
    throw CapacityError("monodromy enumeration would visit more than " + std::to_string(max_tuples) + " tuples");
  }

  auto make_walker = [&]() {
    return Walker{group, slots, genus, last_is_determined, &last_class, count_transitive, {}, {}};
  };

  if (slots.empty()) {
    Walker w = make_walker();
    w.walk(0);
    return w.count;
  }

  const auto outer = static_cast<std::int64_t>(slots.front().size());
  std::uint64_t all = 0;
  std::uint64_t transitive = 0;
  auto branch = [&](std::int64_t i, std::uint64_t& a, std::uint64_t& t) {
    Walker w = make_walker();
    w.tuple.reserve(slots.size() + 1);
    w.tuple.push_back(slots.front()[static_cast<std::size_t>(i)]);
    w.walk(1);
    a += w.count.all;
    t += w.count.transitive;
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) reduction(+ : all, transitive)
    for (std::int64_t i = 0; i < outer; ++i) branch(i, all, transitive);
  } else {
    for (std::int64_t i = 0; i < outer; ++i) branch(i, all, transitive);
  }
  return {all, transitive};
}

}  // namespace gwh
