#pragma once

// Exhaustive family of small cover graphs and an independent reference for the
// epsilon = -infinity chamber.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gwh/covergraph.hpp"
#include "gwh/partitions.hpp"

namespace family {

using gwh::CoverGraph;
using gwh::Partition;
using gwh::SourceComponent;

namespace detail {

/// Every way to cover one target component of the given genus with total
/// degree n, with an explicit profile at each listed point. Source genera come
/// from local Riemann-Hurwitz; invalid ones are skipped.
inline std::vector<std::vector<SourceComponent>> covers(int n, int genus, const std::string& over,
                                                         const std::vector<std::string>& points) {
  std::vector<std::vector<SourceComponent>> out;
  for (const auto& degrees : gwh::partitions_of(n)) {
    const auto& ds = degrees.parts();
    std::vector<std::vector<Partition>> choices;  // per (component, point)
    for (int d : ds) {
      for (std::size_t p = 0; p < points.size(); ++p) choices.push_back(gwh::partitions_of(d));
    }
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      std::vector<SourceComponent> comps;
      bool ok = true;
      for (std::size_t i = 0; i < ds.size() && ok; ++i) {
        SourceComponent v;
        v.id = over + ".v" + std::to_string(i);
        v.over = over;
        v.degree = ds[i];
        int twice = ds[i] * (2 * genus - 2);
        for (std::size_t p = 0; p < points.size(); ++p) {
          const Partition& mu = choices[i * points.size() + p][pick[i * points.size() + p]];
          v.profiles.emplace(points[p], mu);
          twice += gwh::age(mu);
        }
        if (twice % 2 != 0 || twice < -2) ok = false;
        v.genus = (twice + 2) / 2;
        comps.push_back(std::move(v));
      }
      if (ok) out.push_back(std::move(comps));
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }
  return out;
}

inline std::vector<int> parts_at(const std::vector<SourceComponent>& comps, const std::string& point) {
  std::vector<int> parts;
  for (const auto& v : comps) {
    const auto& p = v.profiles.at(point).parts();
    parts.insert(parts.end(), p.begin(), p.end());
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

inline void decorate(const CoverGraph& base, const std::vector<std::string>& branch_points,
                     const std::function<void(const CoverGraph&)>& visit) {
  visit(base);
  std::map<std::string, std::vector<std::string>> by_target;
  for (const auto& v : base.source) by_target[v.over].push_back(v.id);
  for (const auto& [t, ids] : by_target) {
    std::vector<std::string> spots{"c"};
    for (const auto& b : branch_points) {
      for (const auto& v : base.source) {
        if (v.over == t && v.profiles.count(b)) {
          spots.push_back(b);
          break;
        }
      }
    }
    for (const auto& at : spots) {
      for (int h = 0; h <= 1; ++h) {
        for (int attach = 1; attach <= 2; ++attach) {
          for (int L = 0; L <= 2; L += 2) {
            CoverGraph g = base;
            SourceComponent e;
            e.id = "E";
            e.over = t;
            e.contracted = true;
            e.at = at;
            e.genus = h;
            e.attach = attach;
            e.L_degree = L;
            g.source.push_back(e);
            visit(g);
          }
        }
      }
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i; j < ids.size(); ++j) {
        CoverGraph g = base;
        g.smooth_nodes.push_back({t, "s", {ids[i], ids[j]}});
        visit(g);
      }
    }
  }
  for (std::size_t i = 0; i < base.source.size(); ++i) {
    CoverGraph g = base;
    g.source[i].L_degree = 2;
    visit(g);
  }
}

}  // namespace detail

/// Targets: one component C of genus 0 or 1, optionally with a rational tail T
/// and a marking x on C. Up to two branch points on either component, every
/// cover of degree n <= max_degree, then at most one decoration: a contracted
/// component, a smooth node or an L-degree.
inline void for_each_graph(int max_degree, const std::function<void(const CoverGraph&)>& visit) {
  for (int n = 1; n <= max_degree; ++n) {
    for (int gc = 0; gc <= 1; ++gc) {
      for (int tail = 0; tail <= 1; ++tail) {
        for (int marked = 0; marked <= 1; ++marked) {
          for (int nb = 0; nb <= 2; ++nb) {
            const int masks = tail ? 1 << nb : 1;
            for (int mask = 0; mask < masks; ++mask) {
              std::vector<std::string> on_c;
              std::vector<std::string> on_t;
              std::vector<std::string> bs;
              for (int b = 0; b < nb; ++b) {
                const std::string name = "b" + std::to_string(b + 1);
                bs.push_back(name);
                ((mask >> b) & 1 ? on_t : on_c).push_back(name);
              }
              if (tail) {
                on_c.push_back("p");
                on_t.push_back("p");
              }
              if (marked) on_c.push_back("x");
              CoverGraph shell;
              shell.target.push_back({"C", gc, marked ? std::vector<std::string>{"x"} : std::vector<std::string>{}});
              if (tail) {
                shell.target.push_back({"T", 0, {}});
                shell.target_edges.push_back({"C", "T", "p"});
              }
              const auto cs = detail::covers(n, gc, "C", on_c);
              const auto ts = tail ? detail::covers(n, 0, "T", on_t) : std::vector<std::vector<SourceComponent>>{{}};
              for (const auto& cc : cs) {
                for (const auto& tc : ts) {
                  if (tail && detail::parts_at(cc, "p") != detail::parts_at(tc, "p")) continue;
                  CoverGraph g = shell;
                  g.source = cc;
                  g.source.insert(g.source.end(), tc.begin(), tc.end());
                  detail::decorate(g, bs, visit);
                }
              }
            }
          }
        }
      }
    }
  }
}

/// Reference characterization of the epsilon = -infinity chamber computed from
/// the raw profiles: no contracted components or smooth nodes, total ramification
/// at most simple at every unmarked smooth point, and no rational component
/// touching a node whose special points (nodes, markings, branch points) number
/// at most two while carrying no L-degree.
inline bool minus_infinity_expected(const CoverGraph& g) {
  if (!g.smooth_nodes.empty()) return false;
  std::set<std::string> special;
  std::map<std::string, int> node_count;
  for (const auto& e : g.target_edges) {
    special.insert(e.name);
    ++node_count[e.a];
    ++node_count[e.b];
  }
  for (const auto& t : g.target) special.insert(t.markings.begin(), t.markings.end());
  std::map<std::string, int> ramification;
  std::map<std::string, std::string> owner;
  std::map<std::string, int> L;
  for (const auto& v : g.source) {
    if (v.contracted) return false;
    L[v.over] += v.L_degree;
    for (const auto& [point, mu] : v.profiles) {
      if (special.count(point)) continue;
      ramification[point] += mu.size() - mu.length();
      owner[point] = v.over;
    }
  }
  std::map<std::string, int> branch_points;
  for (const auto& [point, r] : ramification) {
    if (r > 1) return false;
    if (r > 0) ++branch_points[owner[point]];
  }
  for (const auto& t : g.target) {
    const int nodes = node_count[t.id];
    if (t.genus != 0 || nodes == 0) continue;
    const int points = nodes + static_cast<int>(t.markings.size()) + branch_points[t.id];
    if (points <= 2 && L[t.id] == 0) return false;
  }
  return true;
}

}  // namespace family
