#include <random>

#include "doctest.h"
#include "gwh/covergraph.hpp"
#include "gwh/errors.hpp"
#include "graph_family.hpp"

using namespace gwh;

namespace {

SourceComponent cover(const std::string& id, const std::string& over, int degree, int genus,
                      std::map<std::string, Partition> profiles = {}) {
  SourceComponent v;
  v.id = id;
  v.over = over;
  v.degree = degree;
  v.genus = genus;
  v.profiles = std::move(profiles);
  return v;
}

SourceComponent contracted(const std::string& id, const std::string& over, const std::string& at, int genus,
                           int attach = 1, int L = 0) {
  SourceComponent v;
  v.id = id;
  v.over = over;
  v.contracted = true;
  v.at = at;
  v.genus = genus;
  v.attach = attach;
  v.L_degree = L;
  return v;
}

CoverGraph z2_cover() {
  CoverGraph g;
  g.target.push_back({"C", 0, {}});
  g.source.push_back(cover("P", "C", 2, 0, {{"0", Partition({2})}, {"inf", Partition({2})}}));
  return g;
}

CoverGraph identity_cover() {
  CoverGraph g;
  g.target.push_back({"C", 0, {}});
  g.source.push_back(cover("P", "C", 1, 0));
  return g;
}

/// z^2 cover of a tail T glued at p to a genus-2 double cover of an elliptic C.
CoverGraph tail_graph() {
  CoverGraph g;
  g.target.push_back({"C", 1, {}});
  g.target.push_back({"T", 0, {}});
  g.target_edges.push_back({"C", "T", "p"});
  g.source.push_back(cover("A", "C", 2, 2, {{"p", Partition({2})}, {"b", Partition({2})}}));
  g.source.push_back(cover("B", "T", 2, 0, {{"p", Partition({2})}, {"t", Partition({2})}}));
  return g;
}

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(validate(z2_cover()));
  CHECK(cover_degree(z2_cover()) == 2);
  CoverGraph bad = z2_cover();
  bad.source[0].profiles["0"] = Partition({2, 1});
  CHECK_THROWS_AS(validate(bad), ValidationError);
  CoverGraph mismatch = tail_graph();
  mismatch.source[1].profiles["p"] = Partition({1, 1});
  mismatch.source[1].profiles["t"] = Partition({1, 1});
  CHECK_THROWS_AS(validate(mismatch), ValidationError);
  CoverGraph degrees = tail_graph();
  degrees.source.push_back(cover("D", "T", 1, 0));
  CHECK_THROWS_AS(validate(degrees), ValidationError);
  CoverGraph on_node = tail_graph();
  on_node.source.push_back(contracted("E", "C", "p", 1));
  CHECK_THROWS_AS(validate(on_node), ValidationError);
}

TEST_CASE("branch divisor examples") {
  CHECK(branch_divisor(identity_cover()).empty());
  const auto br = branch_divisor(z2_cover());
  CHECK(br == std::map<std::string, int>{{"0", 1}, {"inf", 1}});
  CoverGraph g = identity_cover();
  g.source.push_back(contracted("E", "C", "q", 1));
  CHECK(branch_divisor(g) == std::map<std::string, int>{{"q", 2}});
  CoverGraph s = z2_cover();
  s.source[0].genus = 0;
  s.smooth_nodes.push_back({"C", "r", {"P", "P"}});
  CHECK(branch_divisor(s).at("r") == 2);
}

TEST_CASE("Riemann-Hurwitz examples") {
  CoverGraph lines;
  lines.target.push_back({"C", 0, {}});
  for (int i = 0; i < 3; ++i) lines.source.push_back(cover("L" + std::to_string(i), "C", 1, 0));
  const auto r = rh_check(lines);
  CHECK(r.source_genus == -2);
  CHECK(r.branch_degree == 0);
  CHECK(r.consistent);
  const auto z = rh_check(z2_cover());
  CHECK(z.source_genus == 0);
  CHECK(z.branch_degree == 2);
  CHECK(z.consistent);
  CHECK(rh_check(tail_graph()).consistent);
  CoverGraph broken = z2_cover();
  broken.source[0].genus = 1;
  CHECK_FALSE(rh_check(broken).consistent);
  CoverGraph marked = z2_cover();
  marked.target[0].markings.push_back("inf");
  const auto m = rh_check(marked);
  CHECK(m.marking_age == 1);
  CHECK(m.branch_degree == 1);
  CHECK(m.consistent);
}

TEST_CASE("admissibility examples") {
  const auto one = Threshold::finite(1);
  CHECK(is_epsilon_admissible(z2_cover(), one).admissible);
  CoverGraph triple;
  triple.target.push_back({"C", 0, {}});
  triple.source.push_back(cover("P", "C", 3, 0, {{"0", Partition({3})}, {"a", Partition({2, 1})}, {"b", Partition({2, 1})}}));
  REQUIRE(rh_check(triple).consistent);
  const Verdict v = is_epsilon_admissible(triple, one);
  CHECK_FALSE(v.admissible);
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0].rfind("(i)", 0) == 0);
  CHECK(is_epsilon_admissible(triple, Threshold::finite(2)).admissible);
  CHECK(is_epsilon_admissible(triple, Threshold::infinity()).admissible);

  // a z^2 tail branched at one point carries a C* of automorphisms
  CoverGraph t = tail_graph();
  CHECK_FALSE(is_epsilon_admissible(t, Threshold::infinity()).admissible);
  CHECK_FALSE(automorphisms_finite(t).admissible);
  t.source[1].L_degree = 1;
  CHECK(automorphisms_finite(t).admissible);
  CHECK(is_epsilon_admissible(t, one).admissible);
  CHECK_FALSE(is_epsilon_admissible(t, Threshold::finite(2)).admissible);
  CHECK_FALSE(is_epsilon_admissible(t, Threshold::infinity()).admissible);
}

TEST_CASE("bridge positivity flag") {
  CoverGraph g;
  g.target.push_back({"C", 1, {}});
  g.target.push_back({"B", 0, {}});
  g.target.push_back({"D", 1, {}});
  g.target_edges.push_back({"C", "B", "p"});
  g.target_edges.push_back({"B", "D", "q"});
  g.source.push_back(cover("c", "C", 1, 1));
  g.source.push_back(cover("b", "B", 1, 0));
  g.source.push_back(cover("d", "D", 1, 1));
  REQUIRE(rh_check(g).consistent);
  CHECK(rational_bridges(g) == std::vector<std::string>{"B"});
  CHECK(rational_tails(g).empty());
  CHECK_FALSE(automorphisms_finite(g).admissible);
  g.source[1].L_degree = 1;
  CHECK(is_epsilon_admissible(g, Threshold::finite(1)).admissible);
  CHECK(is_epsilon_admissible(g, Threshold::finite(1), {true}).admissible);
  g.source[1].L_degree = 0;
  g.source.push_back(contracted("E", "B", "r", 1));
  CHECK(automorphisms_finite(g).admissible);
  CHECK_FALSE(is_epsilon_admissible(g, Threshold::finite(1), {true}).admissible);
  CHECK(is_epsilon_admissible(g, Threshold::finite(2), {true}).admissible);
}

TEST_CASE("extremal classification") {
  const auto c = classify_extremal(z2_cover());
  CHECK(c.minus_infinity_stable);
  CHECK(c.zero_stable);
  CoverGraph e = identity_cover();
  e.source.push_back(contracted("E", "C", "q", 1));
  const auto ce = classify_extremal(e);
  CHECK_FALSE(ce.minus_infinity_stable);
  CHECK(ce.zero_stable);
  CoverGraph t;
  t.target.push_back({"C", 1, {}});
  t.target.push_back({"T", 0, {}});
  t.target_edges.push_back({"C", "T", "p"});
  t.source.push_back(cover("A", "C", 1, 1));
  t.source.push_back(cover("B", "T", 1, 0));
  const auto ct = classify_extremal(t);
  CHECK_FALSE(ct.minus_infinity_stable);
  CHECK_FALSE(ct.zero_stable);
}

TEST_CASE("tail contraction examples") {
  const CoverGraph g = tail_graph();
  CHECK(tail_weight(g, "T") == 1);
  const CoverGraph c = contract_tail(g, "T");
  CHECK(c.target.size() == 1);
  CHECK(point_weight(c, "p") == 1);
  CHECK(rh_check(c).consistent);
  CHECK(c.source.size() == 1);  // the z^2 piece is a rational tail of the source and is dropped

  CoverGraph h;
  h.target.push_back({"C", 1, {}});
  h.target.push_back({"T", 0, {}});
  h.target_edges.push_back({"C", "T", "p"});
  h.source.push_back(cover("A", "C", 2, 1, {{"p", Partition({1, 1})}}));
  // genus-2 double cover of T: 2 = 2(-2) + 6 branch points
  h.source.push_back(cover("B", "T", 2, 2, {{"p", Partition({1, 1})}, {"t1", Partition({2})}, {"t2", Partition({2})},
                                            {"t3", Partition({2})}, {"t4", Partition({2})}, {"t5", Partition({2})},
                                            {"t6", Partition({2})}}));
  h.source[1].L_degree = 3;
  REQUIRE(rh_check(h).consistent);
  const int w = tail_weight(h, "T");
  CHECK(w == 9);
  const CoverGraph hc = contract_tail(h, "T");
  REQUIRE(hc.source.size() == 2);
  const auto& piece = hc.source[1];
  CHECK(piece.contracted);
  CHECK(piece.genus == 2);
  CHECK(piece.attach == 2);
  // 2g - 2 + d + l(p) with d = 2 and l(p) = 2
  CHECK(point_weight(hc, "p") == 2 * 2 - 2 + 2 + 2 + 3);
  CHECK(rh_check(hc).consistent);
  CHECK_THROWS_AS(contract_tail(h, "C"), ValidationError);
}

TEST_CASE("wall spectrum") {
  CHECK(wall_spectrum(z2_cover()) == std::vector<int>{1});
  CHECK(wall_spectrum(identity_cover()).empty());
  CoverGraph g = tail_graph();
  g.source[1].L_degree = 2;
  g.source[0].profiles.erase("b");
  g.source[0].profiles["b"] = Partition({2});
  g.source.push_back(contracted("E", "C", "b", 0, 3));
  // point t: 1; tail: 1 + 2; point b: age 1 + contracted 2*0 - 2 + 6
  CHECK(wall_spectrum(g) == std::vector<int>{1, 3, 5});
}

TEST_CASE("random graphs") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 300; ++k) {
    CoverGraph g = random_cover_graph(rng);
    REQUIRE_NOTHROW(validate(g));
    CHECK(rh_check(g).consistent);

    CoverGraph m = g;
    const std::string what = mutate_multiplicity(m, rng);
    INFO(what);
    CHECK_FALSE(rh_check(m).consistent);

    int total = 0;
    for (const auto& [p, mult] : branch_divisor(g)) total += mult;
    for (const auto& v : g.source) total += v.L_degree;
    for (const auto& t : rational_tails(g)) {
      const CoverGraph c = contract_tail(g, t);
      CHECK(rh_check(c).consistent);
      int after = 0;
      for (const auto& [p, mult] : branch_divisor(c)) after += mult;
      for (const auto& v : c.source) after += v.L_degree;
      CHECK(after == total);
    }

    // the verdict only changes at the walls
    const auto walls = wall_spectrum(g);
    std::vector<Rational> starts{Rational(1, 3)};
    starts.insert(starts.end(), walls.begin(), walls.end());
    for (std::size_t i = 0; i < starts.size(); ++i) {
      const Rational lo = starts[i];
      const Rational hi = i + 1 < starts.size() ? Rational(starts[i + 1] - Rational(1, 3)) : Rational(lo + 5);
      const bool at_lo = is_epsilon_admissible(g, Threshold::finite(lo)).admissible;
      CHECK(is_epsilon_admissible(g, Threshold::finite(hi)).admissible == at_lo);
      CHECK(is_epsilon_admissible(g, Threshold::finite((lo + hi) / 2)).admissible == at_lo);
    }

    if (rational_tails(g).empty()) {
      bool seen = false;
      for (int d = 1; d <= 12; ++d) {
        const bool ok = is_epsilon_admissible(g, Threshold::finite(d)).admissible;
        if (seen) CHECK(ok);
        seen = seen || ok;
      }
    }
  }
}

TEST_CASE("minus infinity chamber on the small family") {
  long count = 0;
  long accepted = 0;
  family::for_each_graph(2, [&](const CoverGraph& g) {
    if (!rh_check(g).consistent) return;
    ++count;
    const bool expected = family::minus_infinity_expected(g);
    accepted += expected;
    CHECK(classify_extremal(g).minus_infinity_stable == expected);
    CHECK(is_epsilon_admissible(g, Threshold::finite(1)).admissible == expected);
  });
  CHECK(count > 100);
  CHECK(accepted > 0);
}

TEST_CASE("thresholds") {
  CHECK(Threshold::parse("inf").infinite);
  CHECK(Threshold::parse("3/2").value == Rational(3, 2));
  CHECK(Threshold::parse("2").to_string() == "2");
  CHECK_THROWS_AS(Threshold::parse("0"), ValidationError);
  CHECK_THROWS_AS(Threshold::parse("-1"), ValidationError);
}
