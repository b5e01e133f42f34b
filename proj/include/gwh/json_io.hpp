#pragma once

#include <string>

#include "json.hpp"

#include "gwh/characters.hpp"
#include "gwh/covergraph.hpp"
#include "gwh/orbifold.hpp"
#include "gwh/series.hpp"

namespace gwh {

using Json = nlohmann::ordered_json;

/// "num/den", or "num" for integers.
Json rational_json(const Rational& q);
/// {"re": "a/b", "im": "c/d"}
Json gaussian_json(const GaussianRational& z);
Json partition_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// {"var", "floor", "order" (null when exact), "coeffs": [[exp, re_num, re_den, im_num, im_den], ...]}
/// Integers in coeffs are written as decimal strings; both strings and numbers are accepted on input,
/// as are short rows [exp, value] with an integer or a Gaussian-rational string such as "1/2-3*i".
Json series_json(const Series& s);
Series series_from_json(const Json& j);

Json chartable_json(const CharTable& t);
std::string chartable_csv(const CharTable& t);

Json graph_json(const CoverGraph& g);
/// Edges may be [a, b] (named node<k> by position) or [a, b, name].
CoverGraph graph_from_json(const Json& j);

/// Reads a file, or parses the argument itself when it starts with '{' or '['.
Json load_json_argument(const std::string& arg);

}  // namespace gwh
