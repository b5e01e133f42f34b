#include "gwh/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gwh/errors.hpp"

namespace gwh {

namespace {

using Order = Series::Order;

bool exact_order(Order o) { return o >= Series::kExact / 2; }

void require_same_var(const Series& a, const Series& b) {
  if (a.var() != b.var()) {
    throw ValidationError("series variable mismatch: " + std::string(var_name(a.var())) + " vs " +
                          std::string(var_name(b.var())));
  }
}

void require_taylor_unit(const Series& a, const char* op) {
  if (a.is_exact()) throw ValidationError(std::string(op) + ": input must carry a finite truncation order");
  if (!a.is_zero() && a.terms().begin()->first < 0) {
    throw ValidationError(std::string(op) + ": negative exponents not allowed");
  }
  if (a.order() < 1 || a.coeff(0) != GaussianRational(1)) {
    throw ValidationError(std::string(op) + ": constant term must be 1");
  }
}

// Dense coefficients a_0..a_{T-1} of a Taylor series.
std::vector<GaussianRational> dense(const Series& a, Order order) {
  std::vector<GaussianRational> out(static_cast<std::size_t>(std::max<Order>(order, 0)));
  for (const auto& [e, c] : a.terms()) {
    if (e >= 0 && e < order) out[static_cast<std::size_t>(e)] = c;
  }
  return out;
}

Series from_dense(Var var, const std::vector<GaussianRational>& c, Order order) {
  std::map<int, GaussianRational> terms;
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (!c[e].is_zero()) terms.emplace(static_cast<int>(e), c[e]);
  }
  return Series::from_terms(var, terms, order);
}

}  // namespace

std::string_view var_name(Var v) {
  switch (v) {
    case Var::u: return "u";
    case Var::y: return "y";
    case Var::s: return "s";
    case Var::q: return "q";
    case Var::z: return "z";
  }
  return "?";
}

Var parse_var(std::string_view name) {
  for (Var v : {Var::u, Var::y, Var::s, Var::q, Var::z}) {
    if (var_name(v) == name) return v;
  }
  throw ValidationError("unknown series variable: " + std::string(name));
}

Series::Series(Var var, Order order) : var_(var), order_(clamp(order)) {}

Order Series::clamp(Order o) { return exact_order(o) ? kExact : o; }

Series Series::constant(Var var, const GaussianRational& c, Order order) { return monomial(var, 0, c, order); }

Series Series::monomial(Var var, int exponent, const GaussianRational& c, Order order) {
  Series s(var, order);
  if (exponent < s.order_) s.set(exponent, c);
  return s;
}

Series Series::from_terms(Var var, const std::map<int, GaussianRational>& terms, Order order) {
  Series s(var, order);
  for (const auto& [e, c] : terms) {
    if (e < s.order_) s.set(e, c);
  }
  return s;
}

void Series::set(int e, GaussianRational c) {
  if (c.is_zero()) {
    terms_.erase(e);
  } else {
    terms_[e] = std::move(c);
  }
}

Order Series::valuation() const { return terms_.empty() ? order_ : terms_.begin()->first; }

int Series::top_exponent() const {
  if (terms_.empty()) throw std::logic_error("top_exponent of a zero series");
  return terms_.rbegin()->first;
}

GaussianRational Series::coeff(int e) const {
  if (e >= order_) throw std::out_of_range("coefficient beyond known order");
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational() : it->second;
}

Series Series::truncated(Order order) const { return from_terms(var_, terms_, std::min(order_, order)); }

Series Series::shifted(int k) const {
  Series out(var_, exact_order(order_) ? kExact : order_ + k);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

Series Series::scaled(const GaussianRational& c) const {
  Series out(var_, order_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

Series Series::retagged(Var var) const {
  Series out = *this;
  out.var_ = var;
  return out;
}

Series Series::exponents_scaled(int factor) const {
  if (factor < 1) throw ValidationError("exponent scale factor must be positive");
  Series out(var_, exact_order(order_) ? kExact : order_ * factor);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e * factor, c);
  return out;
}

Series& Series::operator+=(const Series& o) {
  require_same_var(*this, o);
  order_ = std::min(order_, o.order_);
  for (auto it = terms_.lower_bound(static_cast<int>(std::min<Order>(order_, INT32_MAX))); it != terms_.end();) {
    it = terms_.erase(it);
  }
  for (const auto& [e, c] : o.terms_) {
    if (e >= order_) break;
    set(e, coeff(e) + c);
  }
  return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series Series::operator-() const { return scaled(GaussianRational(-1)); }

Series& Series::operator*=(const Series& o) {
  require_same_var(*this, o);
  const Order va = valuation();
  const Order vb = o.valuation();
  Order order = std::min(order_ + vb, o.order_ + va);
  order = clamp(order);
  std::map<int, GaussianRational> out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      const Order e = Order{ea} + eb;
      if (e >= order) break;
      out[static_cast<int>(e)] += ca * cb;
    }
  }
  Series r(var_, order);
  for (auto& [e, c] : out) r.set(e, std::move(c));
  return *this = std::move(r);
}

std::string Series::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (e != 0) os << "*" << var_name(var_) << "^" << e;
  }
  if (first) os << "0";
  if (!is_exact()) os << " + O(" << var_name(var_) << "^" << order_ << ")";
  return os.str();
}

Order agreement_order(const Series& a, const Series& b) {
  require_same_var(a, b);
  const Order limit = std::min(a.order(), b.order());
  Series d = a - b;
  return d.is_zero() ? limit : std::min<Order>(d.valuation(), limit);
}

Series invert(const Series& a) {
  if (a.is_zero()) throw ValidationError("cannot invert a zero series");
  const int v = static_cast<int>(a.valuation());
  if (a.is_exact()) {
    if (a.terms().size() != 1) {
      throw ValidationError("exact multi-term series has no finite inverse; truncate first");
    }
    return Series::monomial(a.var(), -v, a.terms().begin()->second.inverse());
  }
  // a = x^v * b with b(0) != 0; invert b to relative precision T - v.
  const Order rel = a.order() - v;
  const std::vector<GaussianRational> b = dense(a.shifted(-v), rel);
  std::vector<GaussianRational> r(b.size());
  const GaussianRational inv0 = b[0].inverse();
  r[0] = inv0;
  for (std::size_t k = 1; k < b.size(); ++k) {
    GaussianRational acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (!b[j].is_zero()) acc += b[j] * r[k - j];
    }
    r[k] = -acc * inv0;
  }
  return from_dense(a.var(), r, rel).shifted(-v);
}

Series invert_to(const Series& a, Order target_order) {
  if (a.is_zero()) throw ValidationError("cannot invert a zero series");
  const Order v = a.valuation();
  if (a.is_exact()) {
    if (a.terms().size() == 1) return invert(a);
    return invert(a.truncated(target_order + 2 * v)).truncated(target_order);
  }
  return invert(a).truncated(target_order);
}

Series pow_int(const Series& a, long k) {
  Series base = k < 0 ? invert(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Series result = Series::constant(a.var(), GaussianRational(1));
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Series exp_series(const Series& a) {
  if (a.is_exact()) throw ValidationError("exp: input must carry a finite truncation order");
  if (!a.is_zero() && a.terms().begin()->first <= 0) {
    throw ValidationError("exp: input must have no terms of exponent <= 0");
  }
  const Order T = a.order();
  if (T <= 0) return Series(a.var(), T);
  const auto c = dense(a, T);
  std::vector<GaussianRational> f(c.size());
  f[0] = 1;
  // n f_n = sum_{k=1}^n k a_k f_{n-k}
  for (std::size_t n = 1; n < f.size(); ++n) {
    GaussianRational acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (!c[k].is_zero()) acc += c[k] * f[n - k] * GaussianRational(static_cast<long>(k));
    }
    f[n] = acc / GaussianRational(static_cast<long>(n));
  }
  return from_dense(a.var(), f, T);
}

Series log_series(const Series& a) {
  require_taylor_unit(a, "log");
  const Order T = a.order();
  const auto c = dense(a, T);
  std::vector<GaussianRational> b(c.size());
  // n b_n = n a_n - sum_{k=1}^{n-1} k b_k a_{n-k}
  for (std::size_t n = 1; n < b.size(); ++n) {
    GaussianRational acc = c[n] * GaussianRational(static_cast<long>(n));
    for (std::size_t k = 1; k < n; ++k) {
      if (!c[n - k].is_zero()) acc -= b[k] * c[n - k] * GaussianRational(static_cast<long>(k));
    }
    b[n] = acc / GaussianRational(static_cast<long>(n));
  }
  return from_dense(a.var(), b, T);
}

Series pow_rational(const Series& a, const Rational& e) {
  require_taylor_unit(a, "rational power");
  const Order T = a.order();
  const auto c = dense(a, T);
  std::vector<GaussianRational> f(c.size());
  f[0] = 1;
  // n f_n = sum_{k=1}^n (e k - (n - k)) a_k f_{n-k}
  for (std::size_t n = 1; n < f.size(); ++n) {
    GaussianRational acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (c[k].is_zero()) continue;
      const Rational w = e * static_cast<long>(k) - static_cast<long>(n - k);
      acc += c[k] * f[n - k] * GaussianRational(w);
    }
    f[n] = acc / GaussianRational(static_cast<long>(n));
  }
  return from_dense(a.var(), f, T);
}

std::vector<GaussianRational> branch_units() {
  const GaussianRational i = GaussianRational::imaginary_unit();
  return {GaussianRational(1), GaussianRational(-1), i, -i};
}

bool is_branch_unit(const GaussianRational& unit) {
  for (const auto& b : branch_units()) {
    if (b == unit) return true;
  }
  return false;
}

Series subst_exp(const Series& a, const GaussianRational& unit, Order order) {
  if (!is_branch_unit(unit)) throw ValidationError("branch unit must be one of 1, -1, i, -i");
  if (!a.is_exact()) {
    throw ValidationError("subst_exp: input has unbounded support (truncated series); reconstruct a Laurent polynomial first");
  }
  if (order <= 0) return Series(Var::u, order);
  const std::size_t T = static_cast<std::size_t>(order);
  std::vector<Rational> inv_fact(T);
  inv_fact[0] = 1;
  for (std::size_t j = 1; j < T; ++j) inv_fact[j] = inv_fact[j - 1] / static_cast<long>(j);
  const GaussianRational i = GaussianRational::imaginary_unit();
  std::vector<GaussianRational> out(T);
  for (const auto& [k, c] : a.terms()) {
    // c unit^k exp(i k u / 2)
    const GaussianRational step = i * GaussianRational(Rational(k, 2));
    GaussianRational pw = c * unit.pow(k);
    for (std::size_t j = 0; j < T; ++j) {
      out[j] += pw * GaussianRational(inv_fact[j]);
      pw *= step;
    }
  }
  return from_dense(Var::u, out, order);
}

Series RationalFunction::numerator_series() const {
  std::map<int, GaussianRational> t;
  for (std::size_t e = 0; e < numerator.size(); ++e) {
    if (!numerator[e].is_zero()) t.emplace(static_cast<int>(e), numerator[e]);
  }
  return Series::from_terms(var, t);
}

Series RationalFunction::denominator_series() const {
  std::map<int, GaussianRational> t;
  for (std::size_t e = 0; e < denominator.size(); ++e) {
    if (!denominator[e].is_zero()) t.emplace(static_cast<int>(e), denominator[e]);
  }
  return Series::from_terms(var, t);
}

Series RationalFunction::expand(Order order) const {
  return (numerator_series() * invert_to(denominator_series(), order)).truncated(order);
}

namespace {

// Solves M x = rhs over Q(i); free variables are set to zero.
std::optional<std::vector<GaussianRational>> solve_linear(std::vector<std::vector<GaussianRational>> m,
                                                          std::vector<GaussianRational> rhs) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    std::swap(rhs[p], rhs[r]);
    const GaussianRational inv = m[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const GaussianRational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!rhs[i].is_zero()) return std::nullopt;
  }
  std::vector<GaussianRational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

}  // namespace

PadeResult pade(const Series& a, int p, int q) {
  if (p < 0 || q < 0) throw ValidationError("pade: degrees must be non-negative");
  if (!a.is_zero() && a.terms().begin()->first < 0) throw ValidationError("pade: input must be a Taylor series");
  if (a.order() < Order{p} + q + 1) throw ValidationError("pade: insufficient truncation order");
  auto coef = [&](long k) { return k < 0 ? GaussianRational() : a.coeff(static_cast<int>(k)); };

  PadeResult result;
  result.input_order = a.order();
  std::vector<std::vector<GaussianRational>> m(static_cast<std::size_t>(q),
                                               std::vector<GaussianRational>(static_cast<std::size_t>(q)));
  std::vector<GaussianRational> rhs(static_cast<std::size_t>(q));
  for (int row = 0; row < q; ++row) {
    const long k = p + 1 + row;
    for (int j = 1; j <= q; ++j) m[row][j - 1] = coef(k - j);
    rhs[row] = -coef(k);
  }
  auto sol = solve_linear(std::move(m), std::move(rhs));
  if (!sol) {
    result.residual_clear_to = 0;
    return result;
  }
  RationalFunction f;
  f.var = a.var();
  f.denominator.assign(static_cast<std::size_t>(q) + 1, GaussianRational());
  f.denominator[0] = 1;
  for (int j = 1; j <= q; ++j) f.denominator[j] = (*sol)[j - 1];
  f.numerator.assign(static_cast<std::size_t>(p) + 1, GaussianRational());
  for (int k = 0; k <= p; ++k) {
    GaussianRational acc;
    for (int j = 0; j <= std::min(k, q); ++j) acc += f.denominator[j] * coef(k - j);
    f.numerator[k] = acc;
  }
  while (f.numerator.size() > 1 && f.numerator.back().is_zero()) f.numerator.pop_back();
  while (f.denominator.size() > 1 && f.denominator.back().is_zero()) f.denominator.pop_back();

  const Series residual = a * f.denominator_series() - f.numerator_series();
  result.residual_clear_to = residual.valuation();
  result.fit = std::move(f);
  return result;
}

Series sin_half_norm(Order order) {
  if (order < 1) throw ValidationError("sin_half_norm: order must be >= 1");
  std::map<int, GaussianRational> t;
  Rational c = 1;
  for (long j = 0; 2 * j < order; ++j) {
    if (j > 0) c /= -4L * (2 * j) * (2 * j + 1);
    t.emplace(static_cast<int>(2 * j), GaussianRational(c));
  }
  return Series::from_terms(Var::u, t, order);
}

}  // namespace gwh
