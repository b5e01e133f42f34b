#include "gwh/hurwitz.hpp"

#include "gwh/characters.hpp"
#include "gwh/errors.hpp"
#include "gwh/permutations.hpp"

namespace gwh {

void validate(const HurwitzProblem& p) {
  if (p.genus < 0) throw ValidationError("target genus must be non-negative");
  if (p.degree < 1) throw ValidationError("cover degree must be >= 1");
  for (const auto& mu : p.profiles) {
    if (mu.size() != p.degree) {
      throw ValidationError("profile " + mu.to_string() + " is not a partition of " + std::to_string(p.degree));
    }
  }
}

HurwitzValue hurwitz_disconnected(const HurwitzProblem& p, Exec exec) {
  validate(p);
  const int n = p.degree;
  const CharTable table = character_table(n, exec);
  const long k = static_cast<long>(p.profiles.size());
  const long dim_exponent = k + 2L * p.genus - 2;

  std::vector<std::size_t> columns;
  Integer class_product = 1;
  for (const auto& mu : p.profiles) {
    columns.push_back(table.index_of(mu));
    class_product *= Integer(std::to_string(class_size(mu)));
  }

  std::vector<Rational> terms(table.size());
  auto term = [&](std::size_t row) {
    Integer numerator = 1;
    for (std::size_t c : columns) numerator *= Integer(std::to_string(table.at(row, c)));
    Integer dim(std::to_string(table.dimension(row)));
    Integer dim_power;
    mpz_pow_ui(dim_power.get_mpz_t(), dim.get_mpz_t(), static_cast<unsigned long>(dim_exponent < 0 ? -dim_exponent : dim_exponent));
    Rational t = dim_exponent >= 0 ? Rational(numerator, dim_power) : Rational(numerator * dim_power);
    t.canonicalize();
    terms[row] = t;
  };
  if (exec == Exec::parallel) {
    const auto rows = static_cast<std::int64_t>(table.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t row = 0; row < rows; ++row) term(static_cast<std::size_t>(row));
  } else {
    for (std::size_t row = 0; row < table.size(); ++row) term(row);
  }
  Rational sum = 0;
  for (const auto& t : terms) sum += t;

  const Integer nfact = factorial(static_cast<unsigned>(n));
  const long fact_exponent = 2L * p.genus - 2;
  Integer fact_power;
  mpz_pow_ui(fact_power.get_mpz_t(), nfact.get_mpz_t(), static_cast<unsigned long>(fact_exponent < 0 ? -fact_exponent : fact_exponent));
  Rational value = sum * Rational(class_product);
  if (fact_exponent >= 0) {
    value *= Rational(fact_power);
  } else {
    value /= Rational(fact_power);
  }
  Rational labelled = value * Rational(nfact);
  if (labelled.get_den() != 1) throw std::logic_error("Frobenius formula produced a non-integral tuple count");
  return {value, labelled.get_num()};
}

namespace {

HurwitzValue from_tuples(std::uint64_t tuples, int n) {
  Integer count(std::to_string(tuples));
  Rational value(count, factorial(static_cast<unsigned>(n)));
  value.canonicalize();
  return {value, count};
}

}  // namespace

HurwitzValue hurwitz_disconnected_enumerated(const HurwitzProblem& p, Exec exec) {
  validate(p);
  SymmetricGroup group(p.degree);
  TupleCount c = count_monodromy_tuples(group, p.genus, p.profiles, false, exec);
  return from_tuples(c.all, p.degree);
}

HurwitzValue hurwitz_connected(const HurwitzProblem& p, Exec exec) {
  validate(p);
  SymmetricGroup group(p.degree);
  TupleCount c = count_monodromy_tuples(group, p.genus, p.profiles, true, exec);
  return from_tuples(c.transitive, p.degree);
}

HurwitzValue hurwitz(const HurwitzProblem& p, Exec exec) {
  return p.connected ? hurwitz_connected(p, exec) : hurwitz_disconnected(p, exec);
}

int branch_degree_from_rh(int g_target, int h_source, int n, const std::vector<Partition>& profiles) {
  if (n < 1) throw ValidationError("cover degree must be >= 1");
  if (g_target < 0) throw ValidationError("target genus must be non-negative");
  int ages = 0;
  for (const auto& mu : profiles) {
    if (mu.size() != n) {
      throw ValidationError("profile " + mu.to_string() + " is not a partition of " + std::to_string(n));
    }
    ages += age(mu);
  }
  const int m = (2 * h_source - 2) - n * (2 * g_target - 2) - ages;
  if (m < 0) {
    throw InfeasibleError("Riemann-Hurwitz gives negative branch degree m = " + std::to_string(m) +
                          "; no such cover exists");
  }
  return m;
}

Partition simple_profile(int n) {
  if (n < 2) throw InfeasibleError("simple ramification needs degree >= 2");
  std::vector<int> parts(static_cast<std::size_t>(n - 1), 1);
  parts[0] = 2;
  return Partition(std::move(parts));
}

HurwitzValue simple_hurwitz(int g_target, int h_source, int n, const std::vector<Partition>& profiles, bool connected,
                            Exec exec) {
  const int m = branch_degree_from_rh(g_target, h_source, n, profiles);
  HurwitzProblem p{g_target, n, profiles, connected};
  if (m > 0) {
    const Partition simple = simple_profile(n);
    p.profiles.insert(p.profiles.end(), static_cast<std::size_t>(m), simple);
  }
  return hurwitz(p, exec);
}

}  // namespace gwh
