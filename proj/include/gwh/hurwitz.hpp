#pragma once

#include <vector>

#include "gwh/exec.hpp"
#include "gwh/partitions.hpp"
#include "gwh/rational.hpp"

namespace gwh {

/// Degree-n covers of a genus-g target with prescribed ramification profiles
/// over k distinct branch points.
struct HurwitzProblem {
  int genus = 0;
  int degree = 1;
  std::vector<Partition> profiles;
  bool connected = false;
};

/// A cover count weighted by 1/|Aut|, together with the underlying labelled
/// monodromy-tuple count (= value * n!).
struct HurwitzValue {
  Rational value;
  Integer tuple_count;
};

/// Throws ValidationError unless genus >= 0, degree >= 1 and each profile is a partition of degree.
void validate(const HurwitzProblem& p);

/// Possibly disconnected covers via the Frobenius character formula:
///   H = (n!)^{2g-2} prod_i |C_i| sum_lambda prod_i chi^lambda(C_i) / (dim lambda)^{k+2g-2}.
/// Bounded by the character-table bound (n <= 14).
HurwitzValue hurwitz_disconnected(const HurwitzProblem& p, Exec exec = Exec::parallel);

/// Same count by explicit enumeration of monodromy tuples (n <= 6).
HurwitzValue hurwitz_disconnected_enumerated(const HurwitzProblem& p, Exec exec = Exec::parallel);

/// Connected covers: tuples generating a transitive subgroup, weighted by 1/n!.
/// Throws CapacityError for n > 6.
HurwitzValue hurwitz_connected(const HurwitzProblem& p, Exec exec = Exec::parallel);

/// Dispatches on p.connected.
HurwitzValue hurwitz(const HurwitzProblem& p, Exec exec = Exec::parallel);

/// Riemann-Hurwitz solved for the branch-divisor degree:
///   m = (2h - 2) - n (2g - 2) - sum_i age(profile_i).
/// h is the source genus in the 1 - chi(O) convention, so disjoint unions are
/// allowed (n disjoint copies of P^1 have h = 1 - n). Throws InfeasibleError when m < 0.
int branch_degree_from_rh(int g_target, int h_source, int n, const std::vector<Partition>& profiles);

/// (2, 1^{n-2}), the profile of a simple branch point.
Partition simple_profile(int n);

/// Covers with the given profiles plus m unordered simple branch points, where m
/// comes from branch_degree_from_rh.
HurwitzValue simple_hurwitz(int g_target, int h_source, int n, const std::vector<Partition>& profiles, bool connected,
                            Exec exec = Exec::parallel);

}  // namespace gwh
