#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gwh/partitions.hpp"
#include "gwh/rational.hpp"

namespace gwh {

struct TargetComponent {
  std::string id;
  int genus = 0;
  std::vector<std::string> markings;
};

/// Target node joining two distinct components; the name doubles as the point
/// name on both sides.
struct TargetEdge {
  std::string a;
  std::string b;
  std::string name;
};

/// A source component. Non-contracted components cover their target component
/// with the given degree and carry a ramification profile per point (points not
/// listed are unramified). Contracted components map to the single smooth point
/// `at` and are glued to non-contracted components over the same target by
/// `attach` nodes.
struct SourceComponent {
  std::string id;
  int genus = 0;
  std::string over;
  bool contracted = false;
  int degree = 0;
  std::map<std::string, Partition> profiles;
  std::string at;
  int attach = 1;
  std::vector<std::string> attached_to;  ///< optional; size must equal attach when given
  int L_degree = 0;
};

/// A node of the source joining two non-contracted components over a smooth target point.
struct SmoothNode {
  std::string over;
  std::string at;
  std::array<std::string, 2> between;
};

/// Coarse combinatorial model of a pre-admissible map f: P -> C.
struct CoverGraph {
  std::vector<TargetComponent> target;
  std::vector<TargetEdge> target_edges;
  std::vector<SourceComponent> source;
  std::vector<SmoothNode> smooth_nodes;
};

/// Throws ValidationError on structural problems: unknown ids, degree sums that
/// differ between target components, profiles that are not partitions of the
/// component degree, unmatched profiles over target nodes, contracted
/// components or smooth nodes placed at nodes or markings.
/// Riemann-Hurwitz consistency is not part of validation (see rh_check).
void validate(const CoverGraph& g);

/// Cover degree n; requires a valid graph.
int cover_degree(const CoverGraph& g);

/// Profile of a non-contracted component at a point, defaulting to (1^{n_v}).
Partition profile_at(const SourceComponent& v, const std::string& point);

/// Multiplicity of br(f) at each smooth unmarked target point (nonzero entries only):
///   sum of ages of non-contracted profiles + sum (2h - 2 + 2 attach) over
///   contracted components + 2 per smooth node.
std::map<std::string, int> branch_divisor(const CoverGraph& g);

struct RhReport {
  int source_genus;   ///< 1 - chi(O_P)
  int target_genus;   ///< 1 - chi(O_C)
  int branch_degree;  ///< deg br(f)
  int marking_age;    ///< sum of ages over markings
  bool consistent;    ///< 2g(P) - 2 = n (2g(C) - 2) + deg br + marking_age
};

RhReport rh_check(const CoverGraph& g);

/// d0 = e^{-1/epsilon}: a positive rational, or infinity for epsilon = 0.
struct Threshold {
  bool infinite = false;
  Rational value{1};

  static Threshold finite(Rational v);
  static Threshold infinity() { return {true, Rational(0)}; }
  static Threshold parse(const std::string& text);  ///< "inf" or a rational
  std::string to_string() const;
};

struct AdmissibilityOptions {
  /// Also require deg br|B + deg L|B > 0 on every rational bridge B.
  bool bridge_positivity = false;
};

struct Verdict {
  bool admissible = true;
  std::vector<std::string> violations;
};

/// Conditions: (i) mult_p(br) + L_p <= d0 at every point; (ii) every rational
/// tail T has deg br|T + deg L|T > d0; (iv) finitely many automorphisms.
Verdict is_epsilon_admissible(const CoverGraph& g, const Threshold& d0, const AdmissibilityOptions& opts = {});

/// Finite automorphism check alone, with the offending pieces listed.
Verdict automorphisms_finite(const CoverGraph& g);

/// Genus-0 target components with exactly one node and no markings.
std::vector<std::string> rational_tails(const CoverGraph& g);
/// Genus-0 target components with exactly two special points, at least one a node.
std::vector<std::string> rational_bridges(const CoverGraph& g);

struct ExtremalClass {
  bool minus_infinity_stable;  ///< no contracted parts, simple ramification, finite automorphisms
  bool zero_stable;            ///< no rational tails, finite automorphisms
};

ExtremalClass classify_extremal(const CoverGraph& g);

/// deg br|T + deg L|T for a target component.
int tail_weight(const CoverGraph& g, const std::string& component);

/// mult_p(br) + L_p, where L_p sums L-degrees of contracted components at p.
int point_weight(const CoverGraph& g, const std::string& point);

/// Replaces the rational tail T by the point where it was attached. Every
/// connected piece of the source over T becomes a contracted component there;
/// genus-0 pieces with one node and L-degree 0 are dropped. Asserts
/// deg br|T + deg L|T = mult_p(br') + L'_p. Throws ValidationError when T is not
/// a rational tail.
CoverGraph contract_tail(const CoverGraph& g, const std::string& tail);

/// Sorted distinct positive values of point_weight over points and tail_weight over tails.
std::vector<int> wall_spectrum(const CoverGraph& g);

struct RandomGraphOptions {
  int max_degree = 6;
  int max_components = 4;
  bool contracted = true;
  bool smooth_nodes = true;
  bool require_tail = false;
};

/// A random valid, Riemann-Hurwitz-consistent graph on a tree-shaped target.
CoverGraph random_cover_graph(std::mt19937_64& rng, const RandomGraphOptions& opts = {});

/// Applies one random change to a ramification multiplicity or a source genus,
/// keeping the graph structurally valid. Returns a description of the change.
std::string mutate_multiplicity(CoverGraph& g, std::mt19937_64& rng);

}  // namespace gwh
