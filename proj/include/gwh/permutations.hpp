#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gwh/exec.hpp"
#include "gwh/partitions.hpp"

namespace gwh {

/// Largest degree handled by explicit enumeration of S_n.
inline constexpr int kBruteForceDegree = 6;

using Perm = std::array<std::uint8_t, kBruteForceDegree>;

/// S_n with an explicit multiplication table; elements are addressed by index.
/// Index 0 is the identity.
class SymmetricGroup {
 public:
  explicit SymmetricGroup(int n);  ///< throws CapacityError for n > kBruteForceDegree

  int degree() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const Perm& element(std::size_t idx) const { return elements_[idx]; }

  /// Index of (a o b): apply b, then a.
  std::uint32_t compose(std::uint32_t a, std::uint32_t b) const { return table_[a * order() + b]; }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  const Partition& cycle_type(std::uint32_t a) const { return types_[a]; }
  /// All element indices of cycle type mu.
  std::vector<std::uint32_t> conjugacy_class(const Partition& mu) const;

 private:
  int n_;
  std::vector<Perm> elements_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<Partition> types_;
};

struct TupleCount {
  std::uint64_t all = 0;         ///< tuples with product identity
  std::uint64_t transitive = 0;  ///< of those, tuples generating a transitive subgroup
};

/// Counts (a_1,b_1,...,a_g,b_g,s_1,...,s_k) in S_n with s_i of cycle type
/// profiles[i] and [a_1,b_1]...[a_g,b_g] s_1...s_k = id by explicit enumeration.
/// The transitive count is only filled when count_transitive is set.
/// Throws CapacityError when more than max_tuples tuples would be visited.
TupleCount count_monodromy_tuples(const SymmetricGroup& group, int genus, const std::vector<Partition>& profiles,
                                  bool count_transitive, Exec exec = Exec::parallel,
                                  std::uint64_t max_tuples = 2'000'000'000ULL);

}  // namespace gwh
