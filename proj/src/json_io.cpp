#include "gwh/json_io.hpp"

#include <fstream>
#include <sstream>

#include "gwh/errors.hpp"

namespace gwh {

namespace {

Integer integer_from(const Json& j) {
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ValidationError("malformed integer " + j.dump());
    return z;
  }
  if (j.is_number_integer()) return Integer(j.get<long>());
  throw ValidationError("expected an integer, got " + j.dump());
}

Rational rational_from(const Json& num, const Json& den) {
  Integer d = integer_from(den);
  if (d == 0) throw ValidationError("zero denominator in series coefficient");
  Rational q(integer_from(num), d);
  q.canonicalize();
  return q;
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Json gaussian_json(const GaussianRational& z) {
  Json j = Json::object();
  j["re"] = to_string(z.re());
  j["im"] = to_string(z.im());
  return j;
}

Json partition_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  return guarded("partition", [&] {
    if (!j.is_array()) throw ValidationError("partition must be a JSON array");
    return Partition(j.get<std::vector<int>>());
  });
}

Json series_json(const Series& s) {
  Json j = Json::object();
  j["var"] = std::string(var_name(s.var()));
  j["floor"] = s.is_zero() ? Json(nullptr) : Json(static_cast<long>(s.valuation()));
  j["order"] = s.is_exact() ? Json(nullptr) : Json(static_cast<long>(s.order()));
  Json coeffs = Json::array();
  for (const auto& [e, c] : s.terms()) {
    coeffs.push_back(Json::array({e, c.re().get_num().get_str(), c.re().get_den().get_str(), c.im().get_num().get_str(),
                                  c.im().get_den().get_str()}));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

Series series_from_json(const Json& j) {
  return guarded("series", [&] {
    const Var var = parse_var(j.at("var").get<std::string>());
    Series::Order order = Series::kExact;
    if (j.contains("order") && !j.at("order").is_null()) order = j.at("order").get<long>();
    std::map<int, GaussianRational> terms;
    for (const auto& row : j.at("coeffs")) {
      if (!row.is_array() || row.size() < 2 || row.size() > 5 || row.size() == 4) {
        throw ValidationError("series coefficient rows are [exp, re_num, re_den, im_num, im_den] or [exp, value]");
      }
      const int e = row.at(0).get<int>();
      if (e >= order) throw ValidationError("series coefficient at exponent " + std::to_string(e) + " beyond order");
      GaussianRational c;
      if (row.size() == 2) {
        c = row.at(1).is_string() ? parse_gaussian(row.at(1).get<std::string>()) : GaussianRational(Rational(integer_from(row.at(1))));
      } else {
        c = GaussianRational(rational_from(row.at(1), row.at(2)),
                             row.size() == 5 ? rational_from(row.at(3), row.at(4)) : Rational(0));
      }
      if (!terms.emplace(e, c).second) throw ValidationError("duplicate series exponent " + std::to_string(e));
    }
    if (j.contains("floor") && !j.at("floor").is_null() && !terms.empty() && terms.begin()->first < j.at("floor").get<long>()) {
      throw ValidationError("series coefficient below declared floor");
    }
    return Series::from_terms(var, terms, order);
  });
}

Json chartable_json(const CharTable& t) {
  Json j = Json::object();
  j["n"] = t.degree();
  Json labels = Json::array();
  for (const auto& p : t.labels()) labels.push_back(partition_json(p));
  j["irreps"] = labels;
  j["classes"] = labels;
  Json rows = Json::array();
  for (std::size_t r = 0; r < t.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < t.size(); ++c) row.push_back(t.at(r, c));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

std::string chartable_csv(const CharTable& t) {
  std::ostringstream os;
  os << "irrep";
  for (const auto& p : t.labels()) os << ",\"" << p.to_string() << "\"";
  os << "\n";
  for (std::size_t r = 0; r < t.size(); ++r) {
    os << "\"" << t.labels()[r].to_string() << "\"";
    for (std::size_t c = 0; c < t.size(); ++c) os << "," << t.at(r, c);
    os << "\n";
  }
  return os.str();
}

Json graph_json(const CoverGraph& g) {
  Json j = Json::object();
  Json target = Json::array();
  for (const auto& t : g.target) target.push_back({{"id", t.id}, {"genus", t.genus}, {"markings", t.markings}});
  j["target"] = std::move(target);
  Json edges = Json::array();
  for (const auto& e : g.target_edges) edges.push_back(Json::array({e.a, e.b, e.name}));
  j["target_edges"] = std::move(edges);
  Json source = Json::array();
  for (const auto& v : g.source) {
    Json s = Json::object();
    s["id"] = v.id;
    s["genus"] = v.genus;
    s["over"] = v.over;
    if (v.contracted) {
      s["contracted"] = true;
      s["at"] = v.at;
      s["attach"] = v.attach;
      if (!v.attached_to.empty()) s["attached_to"] = v.attached_to;
    } else {
      s["degree"] = v.degree;
      Json prof = Json::object();
      for (const auto& [point, mu] : v.profiles) prof[point] = partition_json(mu);
      s["profiles"] = std::move(prof);
    }
    s["L_degree"] = v.L_degree;
    source.push_back(std::move(s));
  }
  j["source"] = std::move(source);
  Json nodes = Json::array();
  for (const auto& sn : g.smooth_nodes) {
    nodes.push_back({{"over", sn.over}, {"at", sn.at}, {"between", Json::array({sn.between[0], sn.between[1]})}});
  }
  j["smooth_nodes"] = std::move(nodes);
  return j;
}

CoverGraph graph_from_json(const Json& j) {
  return guarded("cover graph", [&] {
    CoverGraph g;
    for (const auto& t : j.at("target")) {
      TargetComponent c;
      c.id = t.at("id").get<std::string>();
      c.genus = t.value("genus", 0);
      if (t.contains("markings")) c.markings = t.at("markings").get<std::vector<std::string>>();
      g.target.push_back(std::move(c));
    }
    if (j.contains("target_edges")) {
      int k = 0;
      for (const auto& e : j.at("target_edges")) {
        if (!e.is_array() || (e.size() != 2 && e.size() != 3)) throw ValidationError("target edges are [a, b] or [a, b, name]");
        TargetEdge edge{e.at(0).get<std::string>(), e.at(1).get<std::string>(),
                        e.size() == 3 ? e.at(2).get<std::string>() : "node" + std::to_string(k)};
        g.target_edges.push_back(std::move(edge));
        ++k;
      }
    }
    for (const auto& s : j.at("source")) {
      SourceComponent v;
      v.id = s.at("id").get<std::string>();
      v.genus = s.value("genus", 0);
      v.over = s.at("over").get<std::string>();
      v.contracted = s.value("contracted", false);
      v.L_degree = s.value("L_degree", 0);
      if (v.contracted) {
        v.at = s.at("at").get<std::string>();
        if (s.contains("attached_to")) v.attached_to = s.at("attached_to").get<std::vector<std::string>>();
        v.attach = s.value("attach", v.attached_to.empty() ? 1 : static_cast<int>(v.attached_to.size()));
      } else {
        v.degree = s.at("degree").get<int>();
        if (s.contains("profiles")) {
          for (const auto& [point, mu] : s.at("profiles").items()) v.profiles.emplace(point, partition_from_json(mu));
        }
      }
      g.source.push_back(std::move(v));
    }
    if (j.contains("smooth_nodes")) {
      for (const auto& sn : j.at("smooth_nodes")) {
        const auto between = sn.at("between").get<std::vector<std::string>>();
        if (between.size() != 2) throw ValidationError("smooth node joins exactly two source components");
        g.smooth_nodes.push_back({sn.at("over").get<std::string>(), sn.at("at").get<std::string>(), {between[0], between[1]}});
      }
    }
    validate(g);
    return g;
  });
}

Json load_json_argument(const std::string& arg) {
  std::string text = arg;
  const auto first = arg.find_first_not_of(" \t\n");
  if (first == std::string::npos || (arg[first] != '{' && arg[first] != '[')) {
    std::ifstream in(arg);
    if (!in) throw ValidationError("cannot read " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace gwh
