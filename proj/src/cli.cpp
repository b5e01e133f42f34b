#include "gwh/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <random>

#include "CLI11.hpp"

#include "gwh/characters.hpp"
#include "gwh/covergraph.hpp"
#include "gwh/errors.hpp"
#include "gwh/hodge.hpp"
#include "gwh/hurwitz.hpp"
#include "gwh/json_io.hpp"
#include "gwh/orbifold.hpp"
#include "gwh/partitions.hpp"
#include "gwh/series.hpp"
#include "gwh/wallcross.hpp"

namespace gwh {

namespace {

Exec exec_of(bool serial) { return serial ? Exec::serial : Exec::parallel; }

Json hurwitz_json(const HurwitzValue& v) {
  Json j = Json::object();
  j["value"] = rational_json(v.value);
  j["value_num"] = v.value.get_num().get_str();
  j["value_den"] = v.value.get_den().get_str();
  j["tuple_count"] = v.tuple_count.get_str();
  return j;
}

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json series_with_coefficients(const Series& s) {
  Json j = Json::object();
  Json coeffs = Json::array();
  for (long e = 0; e < s.order(); e += 2) coeffs.push_back(rational_json(s.coeff(static_cast<int>(e)).re()));
  j["even_coefficients"] = std::move(coeffs);
  j["series"] = series_json(s);
  return j;
}

Json weighted_json(const WeightedPartition& w, const GradedLabelSet& labels) {
  Json parts = Json::array();
  Json names = Json::array();
  for (const auto& [part, label] : w.pairs()) {
    parts.push_back(part);
    names.push_back(labels.labels()[static_cast<std::size_t>(label)].name);
  }
  return {{"partition", parts}, {"labels", names}};
}

Series y_or_s_input(const std::string& arg) { return series_from_json(load_json_argument(arg)); }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hurwitz, series and wall-crossing toolkit", "gwh"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("--output", output, "Write the JSON result to this file");

  Json result;
  std::string raw_text;  // non-JSON output (CSV)

  // partitions
  auto* cmd_part = app.add_subcommand("partitions", "All partitions of n in reverse-lexicographic order");
  int part_n = 0;
  cmd_part->add_option("n", part_n, "n >= 0")->required()->check(CLI::NonNegativeNumber);
  cmd_part->callback([&] {
    result = Json::array();
    for (const auto& p : partitions_of(part_n)) result.push_back(partition_json(p));
  });

  // chartable
  auto* cmd_ct = app.add_subcommand("chartable", "Character table of S_n");
  int ct_n = 0;
  std::string ct_format = "json";
  bool ct_serial = false;
  cmd_ct->add_option("n", ct_n, "degree")->required();
  cmd_ct->add_option("--format", ct_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd_ct->add_flag("--serial", ct_serial, "Use the serial reference kernel");
  cmd_ct->callback([&] {
    const CharTable t = character_table(ct_n, exec_of(ct_serial));
    if (ct_format == "csv") {
      raw_text = chartable_csv(t);
    } else {
      result = chartable_json(t);
    }
  });

  // hurwitz
  auto* cmd_hw = app.add_subcommand("hurwitz", "Hurwitz numbers");
  int hw_genus = 0;
  int hw_degree = 1;
  std::string hw_profiles = "[]";
  bool hw_connected = false;
  bool hw_serial = false;
  bool hw_enumerate = false;
  std::optional<int> hw_simple;
  std::optional<int> hw_source_genus;
  cmd_hw->add_option("--genus", hw_genus, "target genus")->check(CLI::NonNegativeNumber);
  cmd_hw->add_option("--degree", hw_degree, "cover degree")->required();
  cmd_hw->add_option("--profiles", hw_profiles, "JSON list of partitions");
  cmd_hw->add_flag("--connected", hw_connected, "Count connected covers only");
  cmd_hw->add_flag("--enumerate", hw_enumerate, "Use monodromy enumeration for disconnected counts");
  cmd_hw->add_flag("--serial", hw_serial, "Use the serial reference kernels");
  auto* opt_simple = cmd_hw->add_option("--simple-branch", hw_simple, "Append m simple branch profiles");
  cmd_hw->add_option("--source-genus", hw_source_genus, "Solve Riemann-Hurwitz for the simple branch count")
      ->excludes(opt_simple);
  cmd_hw->callback([&] {
    HurwitzProblem p;
    p.genus = hw_genus;
    p.degree = hw_degree;
    p.connected = hw_connected;
    const Json prof = load_json_argument(hw_profiles);
    if (!prof.is_array()) throw ValidationError("--profiles must be a JSON list");
    for (const auto& mu : prof) p.profiles.push_back(partition_from_json(mu));
    const Exec ex = exec_of(hw_serial);
    if (hw_source_genus) {
      const int m = branch_degree_from_rh(p.genus, *hw_source_genus, p.degree, p.profiles);
      result = hurwitz_json(simple_hurwitz(p.genus, *hw_source_genus, p.degree, p.profiles, p.connected, ex));
      result["simple_branch"] = m;
      return;
    }
    if (hw_simple) {
      if (*hw_simple < 0) throw InfeasibleError("negative number of simple branch points");
      for (int i = 0; i < *hw_simple; ++i) p.profiles.push_back(simple_profile(p.degree));
    }
    if (!p.connected && hw_enumerate) {
      result = hurwitz_json(hurwitz_disconnected_enumerated(p, ex));
    } else {
      result = hurwitz_json(hurwitz(p, ex));
    }
  });

  // series-op
  auto* cmd_so = app.add_subcommand("series-op", "Arithmetic on truncated Laurent series");
  std::string so_op;
  std::string so_a;
  std::string so_b;
  std::string so_exponent = "1";
  std::string so_branch = "i";
  long so_order = 16;
  int so_p = 0;
  int so_q = 0;
  cmd_so->add_option("--op", so_op, "add, sub, mul, inv, exp, log, pow, pade, subst, truncate")
      ->required()
      ->check(CLI::IsMember({"add", "sub", "mul", "inv", "exp", "log", "pow", "pade", "subst", "truncate"}));
  cmd_so->add_option("--a", so_a, "series JSON (file or inline)")->required();
  cmd_so->add_option("--b", so_b, "second series JSON for add/sub/mul");
  cmd_so->add_option("--exponent", so_exponent, "rational exponent for pow");
  cmd_so->add_option("--branch", so_branch, "branch unit for subst: 1, -1, i, -i");
  cmd_so->add_option("--order", so_order, "truncation order for subst/truncate");
  cmd_so->add_option("--p", so_p, "numerator degree for pade");
  cmd_so->add_option("--q", so_q, "denominator degree for pade");
  cmd_so->callback([&] {
    const Series a = y_or_s_input(so_a);
    auto b = [&] {
      if (so_b.empty()) throw ValidationError("--b is required for " + so_op);
      return y_or_s_input(so_b);
    };
    if (so_op == "add") result = series_json(a + b());
    if (so_op == "sub") result = series_json(a - b());
    if (so_op == "mul") result = series_json(a * b());
    if (so_op == "inv") result = series_json(invert(a));
    if (so_op == "exp") result = series_json(exp_series(a));
    if (so_op == "log") result = series_json(log_series(a));
    if (so_op == "pow") result = series_json(pow_rational(a, parse_rational(so_exponent)));
    if (so_op == "truncate") result = series_json(a.truncated(so_order));
    if (so_op == "subst") result = series_json(subst_exp(a, parse_gaussian(so_branch), so_order));
    if (so_op == "pade") {
      const PadeResult r = pade(a, so_p, so_q);
      result = Json::object();
      result["reproduces_input"] = r.reproduces_input();
      result["residual_clear_to"] = static_cast<long>(r.residual_clear_to);
      if (r.fit) {
        result["numerator"] = series_json(r.fit->numerator_series());
        result["denominator"] = series_json(r.fit->denominator_series());
      } else {
        result["numerator"] = nullptr;
        result["denominator"] = nullptr;
      }
    }
  });

  // hodge-f
  auto* cmd_hf = app.add_subcommand("hodge-f", "Hodge-integral series F(a,b)");
  std::string hf_a = "0";
  std::string hf_b = "1";
  long hf_order = 20;
  cmd_hf->add_option("--a", hf_a, "rational a");
  cmd_hf->add_option("--b", hf_b, "rational b");
  cmd_hf->add_option("--order", hf_order, "truncation order in u");
  cmd_hf->callback([&] {
    const Rational a = parse_rational(hf_a);
    const Rational b = parse_rational(hf_b);
    const HodgeSeries f = hodge_F(a, b, hf_order);
    const HodgeIdentityReport rep = verify_hodge_identities(a, b, hf_order);
    result = Json::object();
    result["a"] = rational_json(a);
    result["b"] = rational_json(b);
    result["order"] = hf_order;
    const Json body = series_with_coefficients(f.series);
    result["coefficients"] = body["even_coefficients"];
    result["series"] = body["series"];
    result["identities"] = {{"inverse_holds_to", static_cast<long>(rep.inverse_holds_to)},
                            {"shift_holds_to", static_cast<long>(rep.shift_holds_to)}};
  });

  // i1
  auto* cmd_i1 = app.add_subcommand("i1", "Scalar part of I_1 for del Pezzo targets");
  long i1_order = 12;
  cmd_i1->add_option("--order", i1_order, "truncation order in u");
  cmd_i1->callback([&] {
    const DelPezzoIFunction I = DelPezzoIFunction::truncated(i1_order);
    const Json body = series_with_coefficients(I.i1);
    result = Json::object();
    result["order"] = i1_order;
    result["class"] = I.class_tag;
    result["coefficients"] = body["even_coefficients"];
    result["series"] = body["series"];
  });

  // crc
  auto* cmd_crc = app.add_subcommand("crc", "Analytic continuation y = -e^{iu} and both normalization pipelines");
  std::string crc_input;
  int crc_c = 0;
  int crc_genus = 0;
  int crc_points = 0;
  std::vector<int> crc_ages;
  std::string crc_branch = "i";
  long crc_order = 12;
  int crc_p = 2;
  int crc_q = 2;
  cmd_crc->add_option("--input", crc_input, "y-series JSON (file or inline)")->required();
  cmd_crc->add_option("--c", crc_c, "gamma . c_1(S)");
  cmd_crc->add_option("--genus", crc_genus, "g");
  cmd_crc->add_option("--points", crc_points, "n");
  cmd_crc->add_option("--ages", crc_ages, "insertion ages")->delimiter(',');
  cmd_crc->add_option("--branch", crc_branch, "branch unit: 1, -1, i, -i");
  cmd_crc->add_option("--order", crc_order, "truncation order in u");
  cmd_crc->add_option("--pmax", crc_p, "numerator degree bound");
  cmd_crc->add_option("--qmax", crc_q, "denominator degree bound");
  cmd_crc->callback([&] {
    const Series x = y_or_s_input(crc_input);
    const GaussianRational unit = parse_gaussian(crc_branch);
    result = Json::object();
    result["branch"] = gaussian_json(unit);
    result["continued"] = series_json(crc_continue(x, crc_p, crc_q, unit, crc_order));
    if (x.var() == Var::y) {
      const EquivalenceReport rep =
          equivalence_check(crc_c, crc_genus, crc_points, crc_ages, x, crc_p, crc_q, unit, crc_order);
      result["dt_side"] = series_json(rep.dt_side);
      result["gw_side"] = series_json(rep.gw_side);
      result["discrepancy"] = series_json(rep.discrepancy);
    }
  });

  // equivalence
  auto* cmd_eq = app.add_subcommand("equivalence", "Randomized payload-independence check of the discrepancy");
  std::uint64_t eq_seed = 1;
  int eq_samples = 10;
  int eq_c = 2;
  std::string eq_branch = "i";
  long eq_order = 10;
  cmd_eq->add_option("--seed", eq_seed, "random seed");
  cmd_eq->add_option("--samples", eq_samples, "number of random payloads")->check(CLI::PositiveNumber);
  cmd_eq->add_option("--c", eq_c, "gamma . c_1(S)");
  cmd_eq->add_option("--branch", eq_branch, "branch unit: 1, -1, i, -i");
  cmd_eq->add_option("--order", eq_order, "truncation order in u");
  cmd_eq->callback([&] {
    std::mt19937_64 rng(eq_seed);
    const GaussianRational unit = parse_gaussian(eq_branch);
    const int p = 2;
    const int q = 2;
    std::optional<Series> first;
    bool independent = true;
    for (int k = 0; k < eq_samples; ++k) {
      const Series payload = random_rational_payload(rng, p, q, p + q + 2 * std::abs(eq_c) + 8);
      const Series d = equivalence_check(eq_c, 0, 0, {}, payload, p, q, unit, eq_order).discrepancy;
      if (!first) {
        first = d;
      } else if (!(d == *first)) {
        independent = false;
      }
    }
    result = Json::object();
    result["c"] = eq_c;
    result["branch"] = gaussian_json(unit);
    result["samples"] = eq_samples;
    result["payload_independent"] = independent;
    result["discrepancy"] = series_json(*first);
  });

  // orbifold-basis
  auto* cmd_ob = app.add_subcommand("orbifold-basis", "Basis of the orbifold cohomology of Sym^n X");
  int ob_n = 1;
  std::vector<int> ob_betti{1};
  bool ob_divide = false;
  cmd_ob->add_option("--n", ob_n, "n >= 1")->required();
  cmd_ob->add_option("--betti", ob_betti, "Betti numbers b_0,b_1,...")->delimiter(',');
  cmd_ob->add_flag("--divide-aut", ob_divide, "Report the 1/|Aut| normalization of each class");
  cmd_ob->callback([&] {
    const GradedLabelSet labels(ob_betti);
    result = Json::array();
    for_each_weighted_partition(ob_n, labels, [&](const WeightedPartition& w) {
      Json j = weighted_json(w, labels);
      j["degree"] = orbifold_degree(w, labels);
      j["L_scalar"] = gaussian_json(L_map(w).scalar);
      if (ob_divide) j["normalization"] = rational_json(Rational(1, weighted_aut_order(w)));
      result.push_back(std::move(j));
    });
  });

  // poincare
  auto* cmd_pc = app.add_subcommand("poincare", "Orbifold Poincare polynomial of Sym^n X");
  int pc_n = 1;
  std::vector<int> pc_betti{1};
  cmd_pc->add_option("--n", pc_n, "n >= 1")->required();
  cmd_pc->add_option("--betti", pc_betti, "Betti numbers b_0,b_1,...")->delimiter(',');
  cmd_pc->callback([&] {
    const auto poly = poincare_orbifold(pc_n, GradedLabelSet(pc_betti));
    Json coeffs = Json::array();
    for (const auto& c : poly) coeffs.push_back(integer_json(c));
    result = {{"n", pc_n}, {"betti", pc_betti}, {"coefficients", coeffs}};
  });

  // covergraph-check
  auto* cmd_cg = app.add_subcommand("covergraph-check", "Branch divisor, Riemann-Hurwitz and epsilon-admissibility");
  std::string cg_input;
  std::string cg_d0 = "1";
  bool cg_bridge = false;
  std::string cg_contract;
  cmd_cg->add_option("--input", cg_input, "graph JSON (file or inline)")->required();
  cmd_cg->add_option("--d0", cg_d0, "d0 = exp(-1/epsilon): rational or inf");
  cmd_cg->add_flag("--bridge-positivity", cg_bridge, "Also require positive weight on rational bridges");
  cmd_cg->add_option("--contract", cg_contract, "Contract this rational tail first");
  cmd_cg->callback([&] {
    CoverGraph g = graph_from_json(load_json_argument(cg_input));
    result = Json::object();
    if (!cg_contract.empty()) {
      g = contract_tail(g, cg_contract);
      result["contracted_graph"] = graph_json(g);
    }
    const Threshold d0 = Threshold::parse(cg_d0);
    const RhReport rh = rh_check(g);
    const Verdict v = is_epsilon_admissible(g, d0, {cg_bridge});
    const ExtremalClass ex = classify_extremal(g);
    result["degree"] = cover_degree(g);
    Json br = Json::object();
    for (const auto& [point, m] : branch_divisor(g)) br[point] = m;
    result["branch_divisor"] = br;
    result["rh"] = {{"source_genus", rh.source_genus},   {"target_genus", rh.target_genus},
                    {"branch_degree", rh.branch_degree}, {"marking_age", rh.marking_age},
                    {"consistent", rh.consistent}};
    result["d0"] = d0.to_string();
    result["admissible"] = v.admissible;
    result["violations"] = v.violations;
    result["extremal"] = {{"minus_infinity_stable", ex.minus_infinity_stable}, {"zero_stable", ex.zero_stable}};
    result["rational_tails"] = rational_tails(g);
    result["wall_spectrum"] = wall_spectrum(g);
  });

  // walls
  auto* cmd_w = app.add_subcommand("walls", "Chamber walls d0 for curve degree d");
  int w_d = 1;
  cmd_w->add_option("--d", w_d, "degree d >= 1")->required();
  cmd_w->callback([&] {
    result = Json::array();
    for (const auto& w : walls(w_d)) result.push_back({{"d0", w.d0}, {"epsilon", w.epsilon_tag}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return 2;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = raw_text.empty() ? result.dump(2) + "\n" : raw_text;
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output);
    if (!f) {
      err << "error: cannot write " << output << "\n";
      return 2;
    }
    f << text;
  }
  return 0;
}

}  // namespace gwh
