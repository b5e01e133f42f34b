#include <random>

#include "doctest.h"
#include "gwh/errors.hpp"
#include "gwh/wallcross.hpp"
#include "oracles.hpp"

using namespace gwh;

namespace {

const GaussianRational I = GaussianRational::imaginary_unit();

Series random_payload(std::mt19937_64& rng, Var v, int lo, int hi, Series::Order order) {
  std::map<int, GaussianRational> t;
  for (int e = lo; e <= hi && e < order; ++e) {
    t[e] = GaussianRational(Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3)),
                            Rational(static_cast<long>(rng() % 5) - 2));
  }
  return Series::from_terms(v, t, order);
}

// Closed-form ratio of the two pipelines with trivial metadata:
// (4 unit sin^2(u/2))^c for unit = +-1, (-2 i unit sin u)^c for unit = +-i.
Series discrepancy_oracle(int c, const GaussianRational& unit, Series::Order order) {
  const Series::Order work = order + 2 * std::abs(2 * c) + 4;
  std::map<int, GaussianRational> base;
  for (int e = 0; e < work; ++e) {
    if (unit.is_real()) {
      // 4 sin^2(u/2) = 2 - 2 cos u
      Rational v = -2 * oracle::cos_coeff(e);
      if (e == 0) v += 2;
      base[e] = unit * GaussianRational(v);
    } else {
      base[e] = GaussianRational(Rational(0), Rational(-2)) * unit * GaussianRational(oracle::sin_coeff(e));
    }
  }
  const Series b = Series::from_terms(Var::u, base, work);
  return pow_int(b, c).truncated(order);
}

}  // namespace

TEST_CASE("GW prefactor") {
  NormalizedSeries x{Side::gw, 0, 0, 0, {}, Series::constant(Var::u, GaussianRational(1), 10)};
  CHECK(gw_normalize(x, false, 10).payload == x.payload);
  x.c = 2;
  const Series sq = gw_normalize(x, false, 10).payload;
  for (int e = 0; e < 10; ++e) {
    Rational expected = 0;
    for (int j = 0; j <= e; ++j) expected += oracle::sin_half_norm_coeff(j) * oracle::sin_half_norm_coeff(e - j);
    CHECK(sq.coeff(e) == GaussianRational(expected));
  }
  CHECK(sq.coeff(2) == GaussianRational(Rational(-1, 12)));
  std::mt19937_64 rng(1);
  for (int k = 0; k < 20; ++k) {
    NormalizedSeries y{Side::gw, static_cast<int>(rng() % 9) - 4, 0, 0, {}, random_payload(rng, Var::u, -3, 8, 12)};
    const NormalizedSeries back = gw_normalize(gw_normalize(y, false, 12), true, 12);
    CHECK(back.payload == y.payload);
  }
}

TEST_CASE("DT prefactor") {
  NormalizedSeries x{Side::dt, 0, 0, 0, {}, Series::constant(Var::s, GaussianRational(1), 10)};
  CHECK(dt_normalize(x, false, 10).payload == x.payload);
  const Series diff = Series::monomial(Var::s, 1) - Series::monomial(Var::s, -1);
  const Series y_side = Series::from_terms(Var::y, {{-1, 1}, {0, -2}, {1, 1}}).exponents_scaled(2).retagged(Var::s);
  CHECK(diff * diff == y_side);
  // c = 2 with payload 1: (s - 1/s)^2 (i s)^{-2} = -(s - 1/s)^2 s^{-2}
  x.c = 2;
  x.payload = Series::constant(Var::s, GaussianRational(1));
  CHECK(dt_normalize(x, false, 10).payload == (-(diff * diff) * Series::monomial(Var::s, -2)).truncated(10));
  std::mt19937_64 rng(4);
  for (int k = 0; k < 20; ++k) {
    const int c = static_cast<int>(rng() % 9) - 4;
    NormalizedSeries y{Side::dt, c, 0, 0, {}, random_payload(rng, Var::s, -2, 9, 14)};
    for (bool first : {false, true}) {
      const NormalizedSeries back = dt_normalize(dt_normalize(y, first, 40), !first, 40);
      CHECK(agreement_order(back.payload, y.payload) == back.payload.order());
      CHECK(back.payload.order() >= y.payload.order() - 2 * std::abs(c));
    }
  }
}

TEST_CASE("primed conventions") {
  const Series p = Series::from_terms(Var::u, {{0, 1}, {3, 2}}, 8);
  NormalizedSeries x{Side::gw, 1, 2, 0, {}, p};
  CHECK(prime_u(x).payload == p);
  x.points = 2;
  x.ages = {1, 1};
  CHECK(prime_u(x).payload == p.shifted(2));
  NormalizedSeries d{Side::dt, 1, 1, 3, {}, p.retagged(Var::s)};
  CHECK(prime_y(d).payload == d.payload);
  d.genus = 3;
  d.points = 2;
  CHECK(prime_y(d).payload == d.payload.shifted(8));
  CHECK_THROWS_AS(prime_y(x), ValidationError);
}

TEST_CASE("analytic continuation") {
  const Series c = Series::constant(Var::y, GaussianRational(Rational(2, 5)), 6);
  CHECK(crc_continue(c, 0, 0, I, 8) == Series::constant(Var::u, GaussianRational(Rational(2, 5)), 8));

  std::map<int, GaussianRational> t;
  for (int e = 1; e < 16; ++e) t[e] = GaussianRational(e % 2 ? e : -e);  // y/(1+y)^2
  const Series x = Series::from_terms(Var::y, t, 16);
  const Series r = crc_continue(x, 1, 2, I, 11);
  CHECK(r.order() == 11);
  CHECK(r.valuation() == -2);
  for (int e = -2; e < 11; ++e) CHECK(r.coeff(e) == GaussianRational(oracle::inv_four_sin_sq_coeff(e)));

  std::map<int, GaussianRational> g;
  for (int e = 0; e < 12; ++e) g[e] = GaussianRational(e % 2 ? -1 : 1);  // 1/(1+y)
  const Series r2 = crc_continue(Series::from_terms(Var::y, g, 12), 0, 1, I, 9);
  const auto b = oracle::bernoulli(12);
  for (int e = -1; e < 9; ++e) {
    // 1/(1 - e^{iu}) = -sum_n B_n (iu)^{n-1} / n!
    const int n = e + 1;
    CHECK(r2.coeff(e) == -GaussianRational(b[n] / oracle::factorial_q(n)) * I.pow(n - 1));
  }

  std::map<int, GaussianRational> ex;
  for (int e = 0; e < 14; ++e) ex[e] = GaussianRational(Rational(1) / oracle::factorial_q(e));
  CHECK_THROWS_AS(crc_continue(Series::from_terms(Var::y, ex, 14), 2, 2, I, 6), NotRationalError);
}

TEST_CASE("continuation is multiplicative") {
  std::mt19937_64 rng(8);
  for (const auto& unit : branch_units()) {
    for (int k = 0; k < 5; ++k) {
      const Series a = random_rational_payload(rng, 1, 1, 20);
      const Series b = random_rational_payload(rng, 1, 2, 20);
      const Series lhs = crc_continue(a * b, 2, 3, unit, 8);
      const Series rhs = crc_continue(a, 1, 1, unit, 12) * crc_continue(b, 1, 2, unit, 12);
      CHECK(agreement_order(lhs, rhs) >= 8);
    }
  }
}

TEST_CASE("squared prefactor under the substitution") {
  const Series diff = Series::monomial(Var::s, 1) - Series::monomial(Var::s, -1);
  const Series image = subst_exp(diff * diff, I, 25);
  for (int e = 0; e < 25; ++e) {
    // -(e^{iu/2} + e^{-iu/2})^2 = -2 - 2 cos u
    Rational expected = -2 * oracle::cos_coeff(e);
    if (e == 0) expected -= 2;
    CHECK(image.coeff(e) == GaussianRational(expected));
  }
}

TEST_CASE("equivalence check") {
  const Series one = Series::constant(Var::y, GaussianRational(1), 12);
  CHECK(equivalence_check(0, 0, 0, {}, one, 0, 0, I, 10).discrepancy == Series::constant(Var::u, GaussianRational(1), 10));
  std::map<int, GaussianRational> t;
  for (int e = 1; e < 20; ++e) t[e] = GaussianRational(e % 2 ? e : -e);
  const Series x = Series::from_terms(Var::y, t, 20);
  CHECK(equivalence_check(0, 0, 0, {}, x, 1, 2, I, 10).discrepancy == Series::constant(Var::u, GaussianRational(1), 10));

  std::mt19937_64 rng(12);
  for (int c = -1; c <= 3; ++c) {
    for (const auto& unit : branch_units()) {
      const Series expected = discrepancy_oracle(c, unit, 10);
      for (int k = 0; k < 3; ++k) {
        const Series payload = random_rational_payload(rng, 2, 2, 2 + 2 + 2 * std::abs(c) + 8);
        CHECK(equivalence_check(c, 0, 0, {}, payload, 2, 2, unit, 10).discrepancy == expected);
      }
    }
  }
  // Non-trivial metadata stays payload independent.
  const Series p1 = random_rational_payload(rng, 2, 2, 20);
  const Series p2 = random_rational_payload(rng, 2, 2, 20);
  CHECK(equivalence_check(2, 2, 3, {1, 0, 2}, p1, 2, 2, I, 8).discrepancy ==
        equivalence_check(2, 2, 3, {1, 0, 2}, p2, 2, 2, I, 8).discrepancy);
}

TEST_CASE("potential shift") {
  CorrelatorTable f;
  f.add({{"x", 2}}, 0, GaussianRational(1));
  CHECK(shift_potential(f, {}) == f);
  const PotentialShift mu{{1, {{"x", GaussianRational(1)}}}};
  const CorrelatorTable g = shift_potential(f, mu);
  CHECK(g.get({{"x", 2}}, 0) == GaussianRational(1));
  CHECK(g.get({{"x", 1}}, 1) == GaussianRational(1));
  CHECK(g.get({}, 2) == GaussianRational(Rational(1, 2)));
  CHECK(g.entries().size() == 3);

  std::mt19937_64 rng(6);
  for (int k = 0; k < 10; ++k) {
    CorrelatorTable t;
    for (int j = 0; j < 4; ++j) {
      t.add({{"a", static_cast<int>(rng() % 3)}, {"b", static_cast<int>(rng() % 3)}}, static_cast<int>(rng() % 3),
            GaussianRational(static_cast<long>(rng() % 7) - 3));
    }
    PotentialShift m1;
    PotentialShift m2;
    m1[static_cast<int>(rng() % 3)]["a"] = GaussianRational(static_cast<long>(rng() % 5) - 2);
    m2[static_cast<int>(rng() % 3)]["b"] = GaussianRational(Rational(1, 2));
    m2[1]["a"] += GaussianRational(1);
    PotentialShift sum = m1;
    for (const auto& [d, row] : m2) {
      for (const auto& [label, c] : row) sum[d][label] += c;
    }
    CHECK(shift_potential(shift_potential(t, m1), m2) == shift_potential(t, sum));
  }
}

TEST_CASE("walls") {
  CHECK(walls(1).empty());
  CHECK(walls(2).size() == 1);
  const auto w = walls(3);
  REQUIRE(w.size() == 2);
  CHECK(w[0].d0 == 2);
  CHECK(w[1].d0 == 3);
  CHECK(w[1].epsilon_tag == "-1/ln(3)");
  CHECK_THROWS_AS(walls(0), ValidationError);
}
