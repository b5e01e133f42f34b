#pragma once

#include <cstdint>
#include <vector>

#include "gwh/exec.hpp"
#include "gwh/partitions.hpp"
#include "gwh/rational.hpp"

namespace gwh {

inline constexpr int kDefaultCharacterBound = 14;

/// Integer character table of S_n. Rows are irreps, columns are classes, both
/// indexed by partitions_of(n) in canonical order, so the class (1^n) is the
/// last column and the trivial irrep (n) is the first row.
class CharTable {
 public:
  CharTable(int n, std::vector<Partition> labels, std::vector<std::int64_t> values);

  int degree() const { return n_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<Partition>& labels() const { return labels_; }

  std::int64_t at(std::size_t irrep, std::size_t cls) const { return values_[irrep * labels_.size() + cls]; }
  std::int64_t value(const Partition& irrep, const Partition& cls) const;
  std::int64_t dimension(std::size_t irrep) const { return at(irrep, labels_.size() - 1); }
  std::size_t index_of(const Partition& p) const;

  const std::vector<std::int64_t>& raw() const { return values_; }
  friend bool operator==(const CharTable&, const CharTable&) = default;

 private:
  int n_;
  std::vector<Partition> labels_;
  std::vector<std::int64_t> values_;
};

/// Full table by the Murnaghan-Nakayama rule. Throws CapacityError when
/// n > bound and ValidationError when n < 1. Both execution paths are bit-identical.
CharTable character_table(int n, Exec exec = Exec::parallel, int bound = kDefaultCharacterBound);

/// Single value chi^lambda(mu) by border-strip removal.
std::int64_t character_value(const Partition& lambda, const Partition& mu);

/// dim lambda = n! / prod(hook lengths).
Integer irrep_dimension(const Partition& lambda);

}  // namespace gwh
