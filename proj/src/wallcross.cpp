#include "gwh/wallcross.hpp"

#include <algorithm>
#include <numeric>

#include "gwh/errors.hpp"

namespace gwh {

namespace {

using Order = Series::Order;

void require_var(const Series& s, Var v, const char* what) {
  if (s.var() != v) {
    throw ValidationError(std::string(what) + ": payload must be a series in " + std::string(var_name(v)));
  }
}

// base = (s - 1/s) / (i s) = -i + i s^{-2}
Series dt_base() {
  const GaussianRational i = GaussianRational::imaginary_unit();
  return Series::monomial(Var::s, 0, -i) + Series::monomial(Var::s, -2, i);
}

using Poly = std::map<int, GaussianRational>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

NormalizedSeries gw_normalize(const NormalizedSeries& x, bool invert, Order order) {
  require_var(x.payload, Var::u, "gw_normalize");
  if (x.c == 0) return x;
  NormalizedSeries out = x;
  const Order target = std::min(order, x.payload.order());
  if (x.payload.is_zero()) {
    out.payload = x.payload.truncated(target);
    return out;
  }
  const Order rel = std::max<Order>(target - x.payload.valuation(), 1);
  const Series factor = pow_rational(sin_half_norm(rel), Rational(invert ? -x.c : x.c));
  out.payload = (x.payload * factor).truncated(target);
  return out;
}

NormalizedSeries dt_normalize(const NormalizedSeries& x, bool invert, Order order) {
  require_var(x.payload, Var::s, "dt_normalize");
  if (x.c == 0) return x;
  NormalizedSeries out = x;
  const int e = invert ? -x.c : x.c;
  const Order target = std::min(order, x.payload.order());
  const Series poly = pow_int(dt_base(), std::abs(e));
  if (e > 0 || x.payload.is_zero()) {
    out.payload = (x.payload * poly).truncated(target);
    return out;
  }
  const Series inv = invert_to(poly, target - x.payload.valuation());
  out.payload = (x.payload * inv).truncated(target);
  return out;
}

NormalizedSeries prime_u(const NormalizedSeries& x) {
  require_var(x.payload, Var::u, "prime_u");
  NormalizedSeries out = x;
  const int shift = 2 * x.points - std::accumulate(x.ages.begin(), x.ages.end(), 0);
  out.payload = x.payload.shifted(shift);
  return out;
}

NormalizedSeries prime_y(const NormalizedSeries& x) {
  require_var(x.payload, Var::s, "prime_y");
  NormalizedSeries out = x;
  out.payload = x.payload.shifted(2 * (x.genus - 1) * x.points);
  return out;
}

Series crc_continue(const Series& x, int pmax, int qmax, const GaussianRational& unit, Order order) {
  if (x.var() != Var::y && x.var() != Var::s) throw ValidationError("crc_continue: input must be a series in y or s");
  if (!is_branch_unit(unit)) throw ValidationError("branch unit must be one of 1, -1, i, -i");
  if (x.is_zero()) return Series(Var::u, order);
  const int stretch = x.var() == Var::y ? 2 : 1;
  const int v = static_cast<int>(x.valuation());
  const PadeResult fit = pade(x.shifted(-v), pmax, qmax);
  if (!fit.reproduces_input()) {
    throw NotRationalError("series is not rational of degree (" + std::to_string(pmax) + "," + std::to_string(qmax) +
                           "): residual nonzero at exponent " + std::to_string(fit.residual_clear_to));
  }
  const Series num = fit.fit->numerator_series().shifted(v).exponents_scaled(stretch).retagged(Var::s);
  const Series den = fit.fit->denominator_series().exponents_scaled(stretch).retagged(Var::s);

  Order work = order + 2 * (den.is_zero() ? 0 : den.top_exponent()) + 2;
  for (int attempt = 0; attempt < 32; ++attempt) {
    const Series du = subst_exp(den, unit, work);
    if (!du.is_zero()) {
      const Series result = subst_exp(num, unit, work) * invert(du);
      if (result.order() >= order) return result.truncated(order);
    }
    work += std::max<Order>(order, 8);
  }
  throw CapacityError("crc_continue: working order did not converge");
}

EquivalenceReport equivalence_check(int c, int genus, int points, const std::vector<int>& ages, const Series& payload,
                                    int pmax, int qmax, const GaussianRational& unit, Order order) {
  require_var(payload, Var::y, "equivalence_check");
  if (payload.is_zero()) throw ValidationError("equivalence_check: payload must be nonzero");
  const Series ps = payload.exponents_scaled(2).retagged(Var::s);
  const GaussianRational i = GaussianRational::imaginary_unit();

  NormalizedSeries dt{Side::dt, c, genus, points, ages, ps};
  dt = prime_y(dt_normalize(dt, false, ps.order()));
  const int dt_p = 2 * pmax + 2 * std::max(c, 0);
  const int dt_q = 2 * qmax + 2 * std::max(-c, 0);

  // (-y)^{-c/2} Z(y) = (-iu)^c Z'(u), with (-y)^{1/2} = i s.
  const Series gw_input = ps * Series::monomial(Var::s, -c, i.pow(-c));

  Order work = order + 2;
  for (int attempt = 0; attempt < 32; ++attempt) {
    const Series d = crc_continue(dt.payload, dt_p, dt_q, unit, work);
    const Series g0 =
        crc_continue(gw_input, 2 * pmax, 2 * qmax, unit, work + c) * Series::monomial(Var::u, -c, (-i).pow(-c));
    NormalizedSeries gw{Side::gw, c, genus, points, ages, g0};
    gw = prime_u(gw_normalize(gw, true, g0.order()));
    if (gw.payload.is_zero()) {
      work += order + 8;
      continue;
    }
    const Series ratio = d * invert(gw.payload);
    if (ratio.order() >= order) {
      return {d, gw.payload, ratio.truncated(order)};
    }
    work += (order - ratio.order()) + 2;
  }
  throw CapacityError("equivalence_check: working order did not converge");
}

Series random_rational_payload(std::mt19937_64& rng, int p, int q, Order order) {
  auto small = [&](long span) { return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * span + 1)) - span; };
  RationalFunction f;
  f.var = Var::y;
  f.numerator.resize(static_cast<std::size_t>(p) + 1);
  f.denominator.resize(static_cast<std::size_t>(q) + 1);
  do {
    for (auto& c : f.numerator) c = GaussianRational(small(3));
  } while (std::all_of(f.numerator.begin(), f.numerator.end(), [](const auto& c) { return c.is_zero(); }));
  f.denominator[0] = 1;
  for (std::size_t j = 1; j < f.denominator.size(); ++j) f.denominator[j] = GaussianRational(small(2));
  return f.expand(order);
}

void CorrelatorTable::add(const Insertions& ins, int degree, const GaussianRational& value) {
  Insertions clean;
  for (const auto& [label, m] : ins) {
    if (m < 0) throw ValidationError("negative insertion multiplicity");
    if (m > 0) clean.emplace(label, m);
  }
  const Key key{clean, degree};
  GaussianRational sum = get(clean, degree) + value;
  if (sum.is_zero()) {
    entries_.erase(key);
  } else {
    entries_[key] = std::move(sum);
  }
}

GaussianRational CorrelatorTable::get(const Insertions& ins, int degree) const {
  auto it = entries_.find({ins, degree});
  return it == entries_.end() ? GaussianRational() : it->second;
}

CorrelatorTable shift_potential(const CorrelatorTable& table, const PotentialShift& mu) {
  std::map<std::string, Poly> mu_of;
  for (const auto& [d, row] : mu) {
    for (const auto& [label, coef] : row) {
      if (!coef.is_zero()) mu_of[label][d] += coef;
    }
  }
  // mu_a^k / k!, cached per label.
  std::map<std::pair<std::string, int>, Poly> cache;
  auto power = [&](const std::string& label, int k) -> const Poly& {
    auto key = std::make_pair(label, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Poly p{{0, GaussianRational(1)}};
    auto m = mu_of.find(label);
    if (k > 0) {
      if (m == mu_of.end()) {
        p.clear();
      } else {
        for (int j = 0; j < k; ++j) p = poly_mul(p, m->second);
        const GaussianRational inv(Rational(1) / Rational(factorial(static_cast<unsigned>(k))));
        for (auto& [e, c] : p) c *= inv;
      }
    }
    return cache.emplace(key, std::move(p)).first->second;
  };

  CorrelatorTable out;
  for (const auto& [key, value] : table.entries()) {
    const auto& [ins, degree] = key;
    std::vector<std::pair<std::string, int>> labels(ins.begin(), ins.end());
    std::vector<int> take(labels.size(), 0);
    // Iterate over every choice of how many copies of each label are absorbed by mu.
    while (true) {
      Poly coef{{0, value}};
      Insertions rest;
      for (std::size_t a = 0; a < labels.size() && !coef.empty(); ++a) {
        coef = poly_mul(coef, power(labels[a].first, take[a]));
        if (labels[a].second - take[a] > 0) rest.emplace(labels[a].first, labels[a].second - take[a]);
      }
      for (const auto& [e, c] : coef) out.add(rest, degree + e, c);
      std::size_t a = 0;
      while (a < labels.size() && take[a] == labels[a].second) take[a++] = 0;
      if (a == labels.size()) break;
      ++take[a];
    }
  }
  return out;
}

std::vector<Wall> walls(int d) {
  if (d < 1) throw ValidationError("walls: degree must be >= 1");
  std::vector<Wall> out;
  for (int d0 = 2; d0 <= d; ++d0) out.push_back({d0, "-1/ln(" + std::to_string(d0) + ")"});
  return out;
}

}  // namespace gwh
