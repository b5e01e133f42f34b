#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gwh {

/// Pairs (part value, multiplicity) with strictly decreasing part values.
struct MultiplicityForm {
  std::vector<std::pair<int, int>> terms;

  int size() const;  ///< Sum of part * multiplicity.
  friend bool operator==(const MultiplicityForm&, const MultiplicityForm&) = default;
};

/// Integer partition stored as a non-increasing list of positive parts.
///
/// Labels both conjugacy classes of S_n (cycle types) and irreducible
/// representations. Ordering compares the part lists lexicographically, so
/// sorting descending gives the canonical reverse-lexicographic order used for
/// every table and CLI listing.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts; throws ValidationError on a non-positive part.
  explicit Partition(std::vector<int> parts);
  explicit Partition(const MultiplicityForm& form);

  static Partition one_row(int n);     ///< (n)
  static Partition one_column(int n);  ///< (1^n)

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }  ///< n = sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }

  MultiplicityForm multiplicities() const;
  Partition conjugate() const;
  std::string to_string() const;  ///< "[3,1,1]"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// Number of partitions of n (Euler's recurrence), used as an independent count.
std::uint64_t partition_count(int n);

/// n - length; also the degree shift (in complex units) of the twisted sector.
int age(const Partition& mu);

/// Sign of any permutation of cycle type mu: (-1)^age.
int sign(const Partition& mu);

// Group orders below are exact for n <= 20 and throw CapacityError beyond.

/// |Aut(mu)| = prod_t m_t!
std::uint64_t aut_order(const Partition& mu);
/// |N(mu)| = prod_t eta_t^{m_t}, the normal subgroup of cyclic rotations.
std::uint64_t normal_subgroup_order(const Partition& mu);
/// z_mu = |C(mu)| = |N(mu)| * |Aut(mu)|, the centralizer order in S_n.
std::uint64_t centralizer_order(const Partition& mu);
/// n! / z_mu
std::uint64_t class_size(const Partition& mu);

std::uint64_t factorial_u64(int n);

}  // namespace gwh
