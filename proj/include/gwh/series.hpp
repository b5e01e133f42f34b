#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gwh/rational.hpp"

namespace gwh {

/// Formal variable tags. s is the square root of y; y-series embed into
/// s-series by doubling exponents.
enum class Var { u, y, s, q, z };

std::string_view var_name(Var v);
Var parse_var(std::string_view name);  ///< throws ValidationError

/// Truncated Laurent series over Q(i):
///   sum_{e < order} c_e var^e + O(var^order).
/// Only nonzero coefficients are stored. An order of kExact marks a Laurent
/// polynomial with no truncation. Every operation propagates the order
/// pessimistically, so no coefficient at or beyond the known order is ever
/// reported.
class Series {
 public:
  using Order = std::int64_t;
  static constexpr Order kExact = Order{1} << 40;

  explicit Series(Var var = Var::u, Order order = kExact);
  static Series constant(Var var, const GaussianRational& c, Order order = kExact);
  static Series monomial(Var var, int exponent, const GaussianRational& c = GaussianRational(1), Order order = kExact);
  /// Terms at or beyond order are dropped.
  static Series from_terms(Var var, const std::map<int, GaussianRational>& terms, Order order = kExact);

  Var var() const { return var_; }
  Order order() const { return order_; }
  bool is_exact() const { return order_ == kExact; }
  bool is_zero() const { return terms_.empty(); }
  /// Lowest exponent with a nonzero coefficient, or order() when there is none.
  Order valuation() const;
  /// Highest stored exponent; requires !is_zero().
  int top_exponent() const;
  const std::map<int, GaussianRational>& terms() const { return terms_; }
  /// Coefficient of var^e; throws std::out_of_range when e >= order().
  GaussianRational coeff(int e) const;

  Series truncated(Order order) const;
  /// Multiplies by var^k.
  Series shifted(int k) const;
  Series scaled(const GaussianRational& c) const;
  /// Same coefficients, different variable tag.
  Series retagged(Var var) const;
  /// e -> factor * e on every exponent (y -> s embedding uses factor 2).
  Series exponents_scaled(int factor) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Series& o);
  Series operator-() const;
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Series& b) { return a *= b; }

  /// Same variable, same order, same coefficients.
  friend bool operator==(const Series& a, const Series& b) = default;

  std::string to_string() const;

 private:
  void set(int e, GaussianRational c);
  static Order clamp(Order o);

  Var var_;
  Order order_;
  std::map<int, GaussianRational> terms_;
};

/// First exponent below both orders where a and b differ, or the smaller order
/// when they agree on everything known. Throws on variable mismatch.
Series::Order agreement_order(const Series& a, const Series& b);

/// Multiplicative inverse. Relative precision is preserved: a known to order T
/// with valuation v gives an inverse known to order T - 2v. An exact monomial
/// inverts exactly; any other exact input must be truncated first.
Series invert(const Series& a);

/// Inverse known to at least target_order, truncating an exact input as needed.
Series invert_to(const Series& a, Series::Order target_order);

Series pow_int(const Series& a, long k);

/// exp(a); requires finite order and no terms of exponent <= 0.
Series exp_series(const Series& a);
/// log(a); requires finite order, constant term 1 and no negative exponents.
Series log_series(const Series& a);
/// a^e for rational e; requires finite order, constant term 1 and no negative exponents.
Series pow_rational(const Series& a, const Rational& e);

/// The four admissible branch units for s = y^{1/2}.
std::vector<GaussianRational> branch_units();
/// True for 1, -1, i, -i.
bool is_branch_unit(const GaussianRational& unit);

/// Substitutes s -> unit * e^{iu/2} into an exact Laurent polynomial in s:
/// s^k -> unit^k sum_j (ik/2)^j u^j / j!, returning a u-series known to order T.
/// Throws ValidationError when the input is truncated (its unknown tail would
/// contribute to every order of u).
Series subst_exp(const Series& a, const GaussianRational& unit, Series::Order order);

/// P/Q with Q(0) = 1, both as coefficient lists from degree 0 upward.
struct RationalFunction {
  Var var = Var::y;
  std::vector<GaussianRational> numerator;
  std::vector<GaussianRational> denominator;

  Series numerator_series() const;
  Series denominator_series() const;
  /// Taylor expansion of P/Q to the given order.
  Series expand(Series::Order order) const;
};

struct PadeResult {
  /// Empty when the defining linear system is inconsistent.
  std::optional<RationalFunction> fit;
  /// First exponent where a*Q - P is nonzero, or the input order if none.
  Series::Order residual_clear_to = 0;
  Series::Order input_order = 0;

  bool reproduces_input() const { return fit.has_value() && residual_clear_to >= input_order; }
};

/// [p/q] Pade approximant of a Taylor series. Requires no negative exponents
/// and order >= p + q + 1 (ValidationError otherwise). The residual a*Q - P is
/// checked against every known coefficient, not just the first p + q + 1.
PadeResult pade(const Series& a, int p, int q);

/// sin(u/2) / (u/2) = sum_j (-1)^j u^{2j} / (4^j (2j+1)!) to order T.
Series sin_half_norm(Series::Order order);

}  // namespace gwh
