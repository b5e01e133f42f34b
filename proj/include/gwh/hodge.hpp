#pragma once

#include <string>

#include "gwh/series.hpp"

namespace gwh {

/// F(a,b) = 1 + sum_h u^{2h} (Hodge integral over M_{h,1} at weights a, b),
/// which equals sin_half_norm^{a+b}.
struct HodgeSeries {
  Rational a;
  Rational b;
  Series series;
};

/// F(a,b) known to order T (exponents < T). Requires T >= 2.
HodgeSeries hodge_F(const Rational& a, const Rational& b, Series::Order order);

struct HodgeIdentityReport {
  Series::Order order = 0;          ///< requested order
  Series::Order inverse_holds_to = 0;  ///< F(a,b) F(-a,-b) = 1
  Series::Order shift_holds_to = 0;    ///< F(a,b) F(-a,1-b) = F(0,1)

  bool holds() const { return inverse_holds_to >= order && shift_holds_to >= order; }
};

HodgeIdentityReport verify_hodge_identities(const Rational& a, const Rational& b, Series::Order order);

/// Coefficient of u^{2h} in F(a,b); h >= 1.
Rational hodge_integral(int h, const Rational& a, const Rational& b);

/// log(sin(u/2)/(u/2)) to order T, the scalar part of I_1. Requires T >= 2.
Series i1_series(Series::Order order);

/// Truncated I-function of a del Pezzo surface. Only I_1 is stored: I_0 = 1 and
/// every I_{-k} vanishes for degree reasons. The cohomology class multiplying
/// the scalar series is kept as an opaque tag.
struct DelPezzoIFunction {
  Series i1;
  std::string class_tag = "pi_*(c_1(S))/(d-1)!";

  static DelPezzoIFunction truncated(Series::Order order);
  Series component(int k) const;  ///< k = 1 gives i1, k = 0 gives 1, k < 0 gives 0
};

}  // namespace gwh
