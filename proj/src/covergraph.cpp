#include "gwh/covergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gwh/errors.hpp"
#include "gwh/hurwitz.hpp"

namespace gwh {

namespace {

struct Layout {
  int n = 0;
  std::map<std::string, std::size_t> target_index;
  std::map<std::string, std::size_t> source_index;
  std::map<std::string, std::string> point_owner;  // smooth unmarked point -> target id
  std::set<std::string> node_names;
  std::set<std::string> marking_names;
  std::map<std::string, std::vector<std::size_t>> edges_of;
};

[[noreturn]] void fail(const std::string& msg) { throw ValidationError("cover graph: " + msg); }

void claim_point(Layout& lay, const std::string& point, const std::string& target) {
  if (point.empty()) fail("empty point name");
  if (lay.node_names.count(point)) fail("point " + point + " is a target node");
  if (lay.marking_names.count(point)) fail("point " + point + " is a marking");
  auto [it, inserted] = lay.point_owner.emplace(point, target);
  if (!inserted && it->second != target) fail("point " + point + " lies on two target components");
}

const std::string& edge_other(const TargetEdge& e, const std::string& side) { return e.a == side ? e.b : e.a; }

Layout analyze(const CoverGraph& g) {
  Layout lay;
  for (std::size_t i = 0; i < g.target.size(); ++i) {
    const auto& t = g.target[i];
    if (t.id.empty()) fail("empty target id");
    if (t.genus < 0) fail("negative genus on target " + t.id);
    if (!lay.target_index.emplace(t.id, i).second) fail("duplicate target id " + t.id);
    lay.edges_of[t.id];
  }
  if (g.target.empty()) fail("no target components");
  for (std::size_t i = 0; i < g.target_edges.size(); ++i) {
    const auto& e = g.target_edges[i];
    if (!lay.target_index.count(e.a) || !lay.target_index.count(e.b)) fail("edge references unknown component");
    if (e.a == e.b) fail("self-node on target component " + e.a);
    if (e.name.empty() || !lay.node_names.insert(e.name).second) fail("node names must be unique and non-empty");
    lay.edges_of[e.a].push_back(i);
    lay.edges_of[e.b].push_back(i);
  }
  for (const auto& t : g.target) {
    for (const auto& m : t.markings) {
      if (lay.node_names.count(m) || !lay.marking_names.insert(m).second) fail("marking " + m + " is not unique");
    }
  }
  auto node_on = [&](const std::string& point, const std::string& target) {
    for (std::size_t ei : lay.edges_of.at(target)) {
      if (g.target_edges[ei].name == point) return true;
    }
    return false;
  };
  auto marking_on = [&](const std::string& point, const std::string& target) {
    const auto& ms = g.target[lay.target_index.at(target)].markings;
    return std::find(ms.begin(), ms.end(), point) != ms.end();
  };

  for (std::size_t i = 0; i < g.source.size(); ++i) {
    const auto& v = g.source[i];
    if (v.id.empty()) fail("empty source id");
    if (!lay.source_index.emplace(v.id, i).second) fail("duplicate source id " + v.id);
    if (!lay.target_index.count(v.over)) fail("source " + v.id + " lies over unknown component " + v.over);
    if (v.genus < 0) fail("negative genus on source " + v.id);
    if (v.L_degree < 0) fail("negative L-degree on source " + v.id);
    if (v.contracted) continue;
    if (v.degree < 1) fail("non-contracted source " + v.id + " needs degree >= 1");
    for (const auto& [point, mu] : v.profiles) {
      if (mu.size() != v.degree) fail("profile of " + v.id + " at " + point + " is not a partition of its degree");
      if (lay.node_names.count(point)) {
        if (!node_on(point, v.over)) fail("node " + point + " is not on component " + v.over);
      } else if (lay.marking_names.count(point)) {
        if (!marking_on(point, v.over)) fail("marking " + point + " is not on component " + v.over);
      } else {
        claim_point(lay, point, v.over);
      }
    }
  }
  auto require_cover_over = [&](const std::string& id, const std::string& over, const std::string& who) {
    auto it = lay.source_index.find(id);
    if (it == lay.source_index.end()) fail(who + " references unknown source " + id);
    const auto& w = g.source[it->second];
    if (w.contracted || w.over != over) fail(who + " must attach to a non-contracted source over " + over);
  };
  for (const auto& v : g.source) {
    if (!v.contracted) continue;
    claim_point(lay, v.at, v.over);
    if (v.attach < 1) fail("contracted source " + v.id + " needs attach >= 1");
    if (!v.attached_to.empty() && static_cast<int>(v.attached_to.size()) != v.attach) {
      fail("attached_to of " + v.id + " must list attach entries");
    }
    for (const auto& id : v.attached_to) require_cover_over(id, v.over, "contracted source " + v.id);
  }
  for (const auto& sn : g.smooth_nodes) {
    if (!lay.target_index.count(sn.over)) fail("smooth node over unknown component " + sn.over);
    claim_point(lay, sn.at, sn.over);
    for (const auto& id : sn.between) require_cover_over(id, sn.over, "smooth node at " + sn.at);
  }

  std::map<std::string, int> deg;
  for (const auto& t : g.target) deg[t.id] = 0;
  for (const auto& v : g.source) {
    if (!v.contracted) deg[v.over] += v.degree;
  }
  lay.n = deg.begin()->second;
  for (const auto& [id, d] : deg) {
    if (d != lay.n) fail("cover degree differs over component " + id);
  }
  if (lay.n < 1) fail("cover degree must be >= 1");

  for (const auto& e : g.target_edges) {
    std::vector<int> side_a;
    std::vector<int> side_b;
    for (const auto& v : g.source) {
      if (v.contracted || (v.over != e.a && v.over != e.b)) continue;
      auto& side = v.over == e.a ? side_a : side_b;
      const auto parts = profile_at(v, e.name).parts();
      side.insert(side.end(), parts.begin(), parts.end());
    }
    std::sort(side_a.begin(), side_a.end());
    std::sort(side_b.begin(), side_b.end());
    if (side_a != side_b) fail("profiles over node " + e.name + " do not match");
  }
  return lay;
}

int contracted_contribution(const SourceComponent& v) { return 2 * v.genus - 2 + 2 * v.attach; }

std::map<std::string, int> divisor(const CoverGraph& g, const Layout& lay) {
  std::map<std::string, int> br;
  for (const auto& v : g.source) {
    if (v.contracted) {
      br[v.at] += contracted_contribution(v);
      continue;
    }
    for (const auto& [point, mu] : v.profiles) {
      if (lay.point_owner.count(point)) br[point] += age(mu);
    }
  }
  for (const auto& sn : g.smooth_nodes) br[sn.at] += 2;
  std::erase_if(br, [](const auto& kv) { return kv.second == 0; });
  return br;
}

std::vector<std::string> tails_of(const CoverGraph& g, const Layout& lay) {
  std::vector<std::string> out;
  for (const auto& t : g.target) {
    if (t.genus == 0 && lay.edges_of.at(t.id).size() == 1 && t.markings.empty()) out.push_back(t.id);
  }
  return out;
}

std::vector<std::string> bridges_of(const CoverGraph& g, const Layout& lay) {
  std::vector<std::string> out;
  for (const auto& t : g.target) {
    const std::size_t nodes = lay.edges_of.at(t.id).size();
    if (t.genus == 0 && nodes >= 1 && nodes + t.markings.size() == 2) out.push_back(t.id);
  }
  return out;
}

int weight_on(const CoverGraph& g, const Layout& lay, const std::map<std::string, int>& br, const std::string& comp) {
  int w = 0;
  for (const auto& [point, m] : br) {
    if (lay.point_owner.at(point) == comp) w += m;
  }
  for (const auto& v : g.source) {
    if (v.over == comp) w += v.L_degree;
  }
  return w;
}

int weight_at(const CoverGraph& g, const std::map<std::string, int>& br, const std::string& point) {
  auto it = br.find(point);
  int w = it == br.end() ? 0 : it->second;
  for (const auto& v : g.source) {
    if (v.contracted && v.at == point) w += v.L_degree;
  }
  return w;
}

Verdict aut_verdict(const CoverGraph& g, const Layout& lay, const std::map<std::string, int>& br) {
  Verdict out;
  auto violate = [&](const std::string& msg) {
    out.admissible = false;
    out.violations.push_back(msg);
  };
  for (const auto& v : g.source) {
    if (v.contracted && v.genus == 0 && v.L_degree == 0 && v.attach < 3) {
      violate("(iv) contracted component " + v.id + " is an unstable rational curve");
    }
  }
  auto special_support = [&](const std::string& comp, int& l_moving, bool& has_contracted) {
    std::set<std::string> pts;
    for (const auto& [point, m] : br) {
      if (lay.point_owner.at(point) == comp) pts.insert(point);
    }
    l_moving = 0;
    has_contracted = false;
    for (const auto& v : g.source) {
      if (v.over != comp) continue;
      if (v.contracted) {
        pts.insert(v.at);
        has_contracted = true;
      } else {
        l_moving += v.L_degree;
      }
    }
    return pts.size();
  };
  for (const auto& t : tails_of(g, lay)) {
    int l_moving = 0;
    bool has_contracted = false;
    if (special_support(t, l_moving, has_contracted) <= 1 && l_moving == 0) {
      violate("(iv) rational tail " + t + " carries a z^n cover branched over at most one point");
    }
  }
  for (const auto& b : bridges_of(g, lay)) {
    int l_moving = 0;
    bool has_contracted = false;
    if (special_support(b, l_moving, has_contracted) == 0 && l_moving == 0) {
      violate("(iv) rational bridge " + b + " carries an unbranched cover with trivial L");
    }
  }
  return out;
}

}  // namespace

Partition profile_at(const SourceComponent& v, const std::string& point) {
  auto it = v.profiles.find(point);
  return it == v.profiles.end() ? Partition::one_column(v.degree) : it->second;
}

void validate(const CoverGraph& g) { (void)analyze(g); }

int cover_degree(const CoverGraph& g) { return analyze(g).n; }

std::map<std::string, int> branch_divisor(const CoverGraph& g) { return divisor(g, analyze(g)); }

RhReport rh_check(const CoverGraph& g) {
  const Layout lay = analyze(g);
  RhReport r{};
  int source_chi = 0;
  int source_nodes = 0;
  for (const auto& v : g.source) {
    source_chi += 1 - v.genus;
    if (v.contracted) source_nodes += v.attach;
  }
  source_nodes += static_cast<int>(g.smooth_nodes.size());
  for (const auto& e : g.target_edges) {
    for (const auto& v : g.source) {
      if (!v.contracted && v.over == e.a) source_nodes += profile_at(v, e.name).length();
    }
  }
  r.source_genus = 1 - source_chi + source_nodes;
  int target_chi = 0;
  for (const auto& t : g.target) target_chi += 1 - t.genus;
  r.target_genus = 1 - target_chi + static_cast<int>(g.target_edges.size());
  for (const auto& [point, m] : divisor(g, lay)) r.branch_degree += m;
  for (const auto& v : g.source) {
    if (v.contracted) continue;
    for (const auto& [point, mu] : v.profiles) {
      if (lay.marking_names.count(point)) r.marking_age += age(mu);
    }
  }
  r.consistent =
      2 * r.source_genus - 2 == lay.n * (2 * r.target_genus - 2) + r.branch_degree + r.marking_age;
  return r;
}

Threshold Threshold::finite(Rational v) {
  if (sgn(v) <= 0) throw ValidationError("d0 must be positive");
  return {false, std::move(v)};
}

Threshold Threshold::parse(const std::string& text) {
  if (text == "inf" || text == "infinity") return infinity();
  return finite(parse_rational(text));
}

std::string Threshold::to_string() const { return infinite ? "inf" : gwh::to_string(value); }

Verdict automorphisms_finite(const CoverGraph& g) {
  const Layout lay = analyze(g);
  return aut_verdict(g, lay, divisor(g, lay));
}

Verdict is_epsilon_admissible(const CoverGraph& g, const Threshold& d0, const AdmissibilityOptions& opts) {
  const Layout lay = analyze(g);
  const auto br = divisor(g, lay);
  Verdict out;
  auto violate = [&](const std::string& msg) {
    out.admissible = false;
    out.violations.push_back(msg);
  };
  if (!d0.infinite) {
    for (const auto& [point, owner] : lay.point_owner) {
      const int w = weight_at(g, br, point);
      if (Rational(w) > d0.value) {
        violate("(i) point " + point + " has weight " + std::to_string(w) + " > " + d0.to_string());
      }
    }
  }
  for (const auto& t : tails_of(g, lay)) {
    const int w = weight_on(g, lay, br, t);
    if (d0.infinite || !(Rational(w) > d0.value)) {
      violate("(ii) rational tail " + t + " has weight " + std::to_string(w) + " <= " + d0.to_string());
    }
  }
  if (opts.bridge_positivity) {
    for (const auto& b : bridges_of(g, lay)) {
      if (weight_on(g, lay, br, b) <= 0) violate("(iii) rational bridge " + b + " has weight 0");
    }
  }
  const Verdict aut = aut_verdict(g, lay, br);
  if (!aut.admissible) {
    out.admissible = false;
    out.violations.insert(out.violations.end(), aut.violations.begin(), aut.violations.end());
  }
  return out;
}

std::vector<std::string> rational_tails(const CoverGraph& g) { return tails_of(g, analyze(g)); }

std::vector<std::string> rational_bridges(const CoverGraph& g) { return bridges_of(g, analyze(g)); }

ExtremalClass classify_extremal(const CoverGraph& g) {
  const Layout lay = analyze(g);
  const auto br = divisor(g, lay);
  const bool finite_aut = aut_verdict(g, lay, br).admissible;
  const bool none_contracted = std::none_of(g.source.begin(), g.source.end(), [](const auto& v) { return v.contracted; });
  const bool simple = std::all_of(br.begin(), br.end(), [](const auto& kv) { return kv.second <= 1; });
  return {none_contracted && simple && finite_aut, tails_of(g, lay).empty() && finite_aut};
}

int tail_weight(const CoverGraph& g, const std::string& component) {
  const Layout lay = analyze(g);
  if (!lay.target_index.count(component)) throw ValidationError("unknown target component " + component);
  return weight_on(g, lay, divisor(g, lay), component);
}

int point_weight(const CoverGraph& g, const std::string& point) {
  const Layout lay = analyze(g);
  return weight_at(g, divisor(g, lay), point);
}

CoverGraph contract_tail(const CoverGraph& g, const std::string& tail) {
  const Layout lay = analyze(g);
  const auto tails = tails_of(g, lay);
  if (std::find(tails.begin(), tails.end(), tail) == tails.end()) {
    throw ValidationError("cover graph: " + tail + " is not a rational tail");
  }
  const auto br = divisor(g, lay);
  const int before = weight_on(g, lay, br, tail);
  const TargetEdge edge = g.target_edges[lay.edges_of.at(tail).front()];
  const std::string& neighbour = edge_other(edge, tail);
  const std::string& p = edge.name;

  // Connected pieces of the source over the tail.
  std::vector<std::size_t> over;
  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < g.source.size(); ++i) {
    if (g.source[i].over == tail) {
      slot[g.source[i].id] = over.size();
      over.push_back(i);
    }
  }
  std::vector<std::size_t> parent(over.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  std::string first_cover;
  for (std::size_t i : over) {
    if (!g.source[i].contracted) {
      first_cover = g.source[i].id;
      break;
    }
  }
  std::vector<int> internal_nodes(over.size(), 0);
  for (std::size_t k = 0; k < over.size(); ++k) {
    const auto& v = g.source[over[k]];
    if (!v.contracted) continue;
    if (v.attached_to.empty()) {
      unite(k, slot.at(first_cover));
    } else {
      for (const auto& id : v.attached_to) unite(k, slot.at(id));
    }
    internal_nodes[k] += v.attach;
  }
  std::vector<std::size_t> smooth_node_slot;
  for (const auto& sn : g.smooth_nodes) {
    if (sn.over != tail) continue;
    unite(slot.at(sn.between[0]), slot.at(sn.between[1]));
    smooth_node_slot.push_back(slot.at(sn.between[0]));
  }

  struct Piece {
    int chi = 0;
    int nodes = 0;
    int L = 0;
    std::vector<int> node_parts;
  };
  std::map<std::size_t, Piece> pieces;  // keyed by root; std::map keeps listing order stable via first member below
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < over.size(); ++k) {
    const std::size_t r = find(k);
    if (!pieces.count(r)) order.push_back(r);
    Piece& pc = pieces[r];
    const auto& v = g.source[over[k]];
    pc.chi += 1 - v.genus;
    pc.nodes += internal_nodes[k];
    pc.L += v.L_degree;
    if (!v.contracted) {
      const auto parts = profile_at(v, p).parts();
      pc.node_parts.insert(pc.node_parts.end(), parts.begin(), parts.end());
    }
  }
  for (std::size_t k : smooth_node_slot) pieces[find(k)].nodes += 1;

  // Remaining node parts on the neighbour side, used to record gluing partners.
  std::vector<std::pair<std::string, std::vector<int>>> partners;
  for (const auto& v : g.source) {
    if (!v.contracted && v.over == neighbour) partners.emplace_back(v.id, profile_at(v, p).parts());
  }

  CoverGraph out;
  for (const auto& t : g.target) {
    if (t.id != tail) out.target.push_back(t);
  }
  for (const auto& e : g.target_edges) {
    if (e.name != p) out.target_edges.push_back(e);
  }
  for (const auto& v : g.source) {
    if (v.over != tail) out.source.push_back(v);
  }
  for (const auto& sn : g.smooth_nodes) {
    if (sn.over != tail) out.smooth_nodes.push_back(sn);
  }
  int idx = 0;
  for (std::size_t r : order) {
    Piece& pc = pieces[r];
    const int genus = 1 - pc.chi + pc.nodes;
    const int attach = static_cast<int>(pc.node_parts.size());
    if (genus == 0 && attach == 1 && pc.L == 0) continue;
    SourceComponent c;
    c.id = tail + ".piece" + std::to_string(idx++);
    c.genus = genus;
    c.over = neighbour;
    c.contracted = true;
    c.at = p;
    c.attach = attach;
    c.L_degree = pc.L;
    std::sort(pc.node_parts.begin(), pc.node_parts.end(), std::greater<>());
    for (int part : pc.node_parts) {
      for (auto& [id, parts] : partners) {
        auto it = std::find(parts.begin(), parts.end(), part);
        if (it != parts.end()) {
          parts.erase(it);
          c.attached_to.push_back(id);
          break;
        }
      }
    }
    out.source.push_back(std::move(c));
  }
  validate(out);
  const int after = point_weight(out, p);
  if (after != before) {
    throw ValidationError("cover graph: contraction changed branch + L degree (" + std::to_string(before) + " -> " +
                          std::to_string(after) + "); input is not Riemann-Hurwitz consistent");
  }
  return out;
}

std::vector<int> wall_spectrum(const CoverGraph& g) {
  const Layout lay = analyze(g);
  const auto br = divisor(g, lay);
  std::set<int> values;
  for (const auto& [point, owner] : lay.point_owner) {
    const int w = weight_at(g, br, point);
    if (w > 0) values.insert(w);
  }
  for (const auto& t : tails_of(g, lay)) {
    const int w = weight_on(g, lay, br, t);
    if (w > 0) values.insert(w);
  }
  return {values.begin(), values.end()};
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool chance(std::mt19937_64& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

Partition random_partition(std::mt19937_64& rng, int n) {
  const auto all = partitions_of(n);
  return all[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(all.size()) - 1))];
}

}  // namespace

CoverGraph random_cover_graph(std::mt19937_64& rng, const RandomGraphOptions& opts) {
  CoverGraph g;
  const int n = uniform(rng, 1, opts.max_degree);
  int k = uniform(rng, 1, opts.max_components);
  if (opts.require_tail) k = std::max(k, 2);
  for (int i = 0; i < k; ++i) {
    TargetComponent t;
    t.id = "C" + std::to_string(i);
    const int roll = uniform(rng, 0, 9);
    t.genus = roll < 6 ? 0 : (roll < 9 ? 1 : 2);
    if (chance(rng, 0.3)) t.markings.push_back("x" + std::to_string(i));
    g.target.push_back(std::move(t));
  }
  std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(k));
  for (int i = 1; i < k; ++i) {
    const int parent = uniform(rng, 0, i - 1);
    g.target_edges.push_back({g.target[parent].id, g.target[i].id, "node" + std::to_string(i - 1)});
    incident[parent].push_back(g.target_edges.size() - 1);
    incident[i].push_back(g.target_edges.size() - 1);
  }
  if (opts.require_tail) {
    for (int i = k - 1; i >= 0; --i) {
      if (incident[i].size() == 1) {
        g.target[i].genus = 0;
        g.target[i].markings.clear();
        break;
      }
    }
  }
  std::vector<Partition> node_profile;
  for (std::size_t e = 0; e < g.target_edges.size(); ++e) node_profile.push_back(random_partition(rng, n));

  int next_source = 0;
  for (int c = 0; c < k; ++c) {
    const auto& comp = g.target[c];
    std::vector<SourceComponent> covers;
    auto fresh = [&](int degree) {
      SourceComponent v;
      v.id = "P" + std::to_string(next_source++);
      v.over = comp.id;
      v.degree = degree;
      return v;
    };
    if (incident[c].empty()) {
      const Partition degrees = random_partition(rng, n);
      for (int d : degrees.parts()) covers.push_back(fresh(d));
    } else if (incident[c].size() == 1) {
      const std::size_t e = incident[c].front();
      std::vector<std::vector<int>> groups;
      for (int part : node_profile[e].parts()) {
        const int slot = uniform(rng, 0, static_cast<int>(groups.size()));
        if (slot == static_cast<int>(groups.size())) groups.emplace_back();
        groups[slot].push_back(part);
      }
      for (auto& grp : groups) {
        SourceComponent v = fresh(std::accumulate(grp.begin(), grp.end(), 0));
        v.profiles.emplace(g.target_edges[e].name, Partition(grp));
        covers.push_back(std::move(v));
      }
    } else {
      SourceComponent v = fresh(n);
      for (std::size_t e : incident[c]) v.profiles.emplace(g.target_edges[e].name, node_profile[e]);
      covers.push_back(std::move(v));
    }
    const int branch_points = uniform(rng, 0, 2);
    int extra = 0;
    for (auto& v : covers) {
      for (const auto& m : comp.markings) v.profiles.emplace(m, random_partition(rng, v.degree));
      for (int b = 0; b < branch_points; ++b) {
        const Partition mu = random_partition(rng, v.degree);
        if (age(mu) > 0) v.profiles.emplace("b" + std::to_string(c) + "_" + std::to_string(b), mu);
      }
      int ages = 0;
      for (const auto& [point, mu] : v.profiles) ages += age(mu);
      int twice = v.degree * (2 * comp.genus - 2) + ages;  // 2 g_v - 2
      auto add_simple = [&] {
        v.profiles.emplace("r" + std::to_string(c) + "_" + std::to_string(extra++), simple_profile(v.degree));
        ++twice;
      };
      if (twice % 2 != 0) add_simple();
      while (twice < -2) {
        add_simple();
        add_simple();
      }
      v.genus = (twice + 2) / 2;
      v.L_degree = uniform(rng, 0, 2);
    }
    for (auto& v : covers) g.source.push_back(std::move(v));
  }

  auto covers_over = [&](const std::string& comp) {
    std::vector<std::string> ids;
    for (const auto& v : g.source) {
      if (!v.contracted && v.over == comp) ids.push_back(v.id);
    }
    return ids;
  };
  if (opts.contracted) {
    const int count = chance(rng, 0.4) ? uniform(rng, 1, 2) : 0;
    for (int j = 0; j < count; ++j) {
      const auto& comp = g.target[uniform(rng, 0, k - 1)];
      const auto ids = covers_over(comp.id);
      SourceComponent e;
      e.id = "E" + std::to_string(j);
      e.contracted = true;
      e.over = comp.id;
      e.at = "p" + comp.id + "_" + std::to_string(j);
      e.genus = uniform(rng, 0, 2);
      e.attach = uniform(rng, 1, 2);
      for (int a = 0; a < e.attach; ++a) e.attached_to.push_back(ids[uniform(rng, 0, static_cast<int>(ids.size()) - 1)]);
      e.L_degree = uniform(rng, 0, 3);
      g.source.push_back(std::move(e));
    }
  }
  if (opts.smooth_nodes && chance(rng, 0.3)) {
    const auto& comp = g.target[uniform(rng, 0, k - 1)];
    const auto ids = covers_over(comp.id);
    const int last = static_cast<int>(ids.size()) - 1;
    g.smooth_nodes.push_back({comp.id, "s" + comp.id, {ids[uniform(rng, 0, last)], ids[uniform(rng, 0, last)]}});
  }
  return g;
}

std::string mutate_multiplicity(CoverGraph& g, std::mt19937_64& rng) {
  std::set<std::string> nodes;
  for (const auto& e : g.target_edges) nodes.insert(e.name);
  struct Site {
    std::size_t source;
    std::string point;  // empty for a genus change
  };
  std::vector<Site> sites;
  for (std::size_t i = 0; i < g.source.size(); ++i) {
    const auto& v = g.source[i];
    if (v.contracted) continue;
    sites.push_back({i, ""});
    for (const auto& [point, mu] : v.profiles) {
      if (!nodes.count(point) && mu.size() > 1) sites.push_back({i, point});
    }
  }
  if (sites.empty()) throw ValidationError("graph has nothing to mutate");
  const Site s = sites[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(sites.size()) - 1))];
  auto& v = g.source[s.source];
  if (s.point.empty()) {
    const int delta = v.genus > 0 && chance(rng, 0.5) ? -1 : 1;
    v.genus += delta;
    return "genus of " + v.id + (delta > 0 ? " +1" : " -1");
  }
  std::vector<int> parts = v.profiles.at(s.point).parts();
  const bool can_split = parts.front() > 1;
  const bool can_merge = parts.size() > 1;
  if (can_split && (!can_merge || chance(rng, 0.5))) {
    const int a = uniform(rng, 1, parts.front() - 1);
    const int b = parts.front() - a;
    parts.front() = a;
    parts.push_back(b);
    v.profiles.at(s.point) = Partition(parts);
    return "split a part of " + v.id + " at " + s.point;
  }
  parts[0] += parts.back();
  parts.pop_back();
  v.profiles.at(s.point) = Partition(parts);
  return "merged two parts of " + v.id + " at " + s.point;
}

}  // namespace gwh
