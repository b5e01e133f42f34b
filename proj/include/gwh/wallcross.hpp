#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "gwh/series.hpp"

namespace gwh {

enum class Side { gw, dt };

/// A generating series together with the discrete data that fixes its
/// normalization. Transforms change only the payload.
struct NormalizedSeries {
  Side side = Side::gw;
  int c = 0;       ///< gamma . c_1(S)
  int genus = 0;
  int points = 0;  ///< n
  std::vector<int> ages;
  Series payload;  ///< in u on the GW side, in s = y^{1/2} on the DT side
};

/// Multiplies the payload by sin_half_norm^{c} (or ^{-c} when invert is set).
/// The result is known to min(order, payload order); order only matters when
/// the payload is exact.
NormalizedSeries gw_normalize(const NormalizedSeries& x, bool invert, Series::Order order);

/// Multiplies the payload by [(s - 1/s)^c (i s)^{-c}]^{+-1}, using (-y)^{1/2} = i s.
NormalizedSeries dt_normalize(const NormalizedSeries& x, bool invert, Series::Order order);

/// Multiplies by u^{2n - sum ages}.
NormalizedSeries prime_u(const NormalizedSeries& x);
/// Multiplies by y^{(g-1)n} = s^{2(g-1)n}.
NormalizedSeries prime_y(const NormalizedSeries& x);

/// Analytic continuation to y = -e^{iu}: reconstructs x (in y or s) as a
/// rational function with the given degree bounds, then re-expands it at
/// s = unit * e^{iu/2}. For y input the degrees refer to y. Throws
/// NotRationalError when the reconstruction does not reproduce every known
/// coefficient.
Series crc_continue(const Series& x, int pmax, int qmax, const GaussianRational& unit, Series::Order order);

struct EquivalenceReport {
  Series dt_side;      ///< DT pipeline output in u
  Series gw_side;      ///< GW pipeline output in u
  Series discrepancy;  ///< dt_side / gw_side
};

/// Runs both pipelines on a y-series payload that is rational of degree at most
/// (pmax, qmax) and returns the ratio of the results, known to order T.
EquivalenceReport equivalence_check(int c, int genus, int points, const std::vector<int>& ages, const Series& payload,
                                    int pmax, int qmax, const GaussianRational& unit, Series::Order order);

/// y-expansion, known to the given order, of a random P/Q with small integer
/// coefficients, deg P <= p, deg Q <= q, Q(0) = 1 and P != 0. Draws use raw
/// engine output only, so a seed gives the same payload on every platform.
Series random_rational_payload(std::mt19937_64& rng, int p, int q, Series::Order order);

/// Insertion multiset: label -> multiplicity.
using Insertions = std::map<std::string, int>;

/// Finitely supported correlators <I>_d of a formal theory; F = sum <I>_d q^d t^I / I!.
class CorrelatorTable {
 public:
  using Key = std::pair<Insertions, int>;

  void add(const Insertions& ins, int degree, const GaussianRational& value);
  GaussianRational get(const Insertions& ins, int degree) const;
  const std::map<Key, GaussianRational>& entries() const { return entries_; }

  friend bool operator==(const CorrelatorTable&, const CorrelatorTable&) = default;

 private:
  std::map<Key, GaussianRational> entries_;
};

/// mu: degree -> (label -> coefficient), i.e. mu_a(q) = sum_d mu[d][a] q^d.
using PotentialShift = std::map<int, std::map<std::string, GaussianRational>>;

/// Correlators of F(t + mu).
CorrelatorTable shift_potential(const CorrelatorTable& table, const PotentialShift& mu);

struct Wall {
  int d0;
  std::string epsilon_tag;  ///< "-1/ln(d0)"
};

/// Walls d0 = 2..d between epsilon-chambers for curve degree d.
std::vector<Wall> walls(int d);

}  // namespace gwh
