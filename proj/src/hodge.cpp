#include "gwh/hodge.hpp"

#include "gwh/errors.hpp"

namespace gwh {

HodgeSeries hodge_F(const Rational& a, const Rational& b, Series::Order order) {
  if (order < 2) throw ValidationError("hodge_F: order must be >= 2");
  return {a, b, pow_rational(sin_half_norm(order), a + b)};
}

HodgeIdentityReport verify_hodge_identities(const Rational& a, const Rational& b, Series::Order order) {
  HodgeIdentityReport r;
  r.order = order;
  const Series one = Series::constant(Var::u, GaussianRational(1));
  const Series f = hodge_F(a, b, order).series;
  r.inverse_holds_to = agreement_order(f * hodge_F(-a, -b, order).series, one);
  r.shift_holds_to = agreement_order(f * hodge_F(-a, 1 - b, order).series, hodge_F(0, 1, order).series);
  return r;
}

Rational hodge_integral(int h, const Rational& a, const Rational& b) {
  if (h < 1) throw ValidationError("hodge_integral: h must be >= 1");
  const GaussianRational c = hodge_F(a, b, 2 * h + 1).series.coeff(2 * h);
  return c.re();
}

Series i1_series(Series::Order order) {
  if (order < 2) throw ValidationError("i1_series: order must be >= 2");
  return log_series(sin_half_norm(order));
}

DelPezzoIFunction DelPezzoIFunction::truncated(Series::Order order) {
  DelPezzoIFunction f;
  f.i1 = i1_series(order);
  return f;
}

Series DelPezzoIFunction::component(int k) const {
  if (k == 1) return i1;
  if (k == 0) return Series::constant(Var::u, GaussianRational(1));
  if (k < 0) return Series(Var::u);
  throw ValidationError("del Pezzo I-function has no components of positive index above 1");
}

}  // namespace gwh
