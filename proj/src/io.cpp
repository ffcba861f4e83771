#include "ybpe/io.hpp"

#include <fstream>

namespace ybpe {

using nlohmann::json;

namespace {

std::vector<std::vector<int>> require_square(const json& j, const char* key, int rows, int cols) {
  if (!j.contains(key) || !j[key].is_array())
    throw BadParamsError(std::string("missing array field: ") + key);
  const auto& arr = j[key];
  if (static_cast<int>(arr.size()) != rows)
    throw BadParamsError(std::string(key) + " must have exactly " + std::to_string(rows) + " rows");
  std::vector<std::vector<int>> out;
  for (const auto& row : arr) {
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw BadParamsError(std::string(key) + " rows must have exactly " +
                           std::to_string(cols) + " entries");
    out.push_back(row.get<std::vector<int>>());
  }
  return out;
}

json rows_to_json(const std::vector<int>& flat, int n) {
  json out = json::array();
  for (int x = 0; x < n; ++x) {
    json row = json::array();
    for (int y = 0; y < n; ++y) row.push_back(flat[x * n + y]);
    out.push_back(row);
  }
  return out;
}

}  // namespace

json semigroup_to_json(const Semigroup& sg) {
  return json{{"order", sg.order()}, {"table", rows_to_json(sg.flat_table(), sg.order())}};
}

Semigroup semigroup_from_json(const json& j) {
  if (!j.contains("order") || !j["order"].is_number_integer())
    throw BadParamsError("semigroup object needs an integer `order`");
  const int n = j["order"].get<int>();
  if (n < 1) throw BadParamsError("order must be positive");
  return Semigroup::from_table(n, require_square(j, "table", n, n));
}

json pair_map_to_json(const PairMap& map, const std::optional<Semigroup>& cross_reference) {
  json out{{"order", map.order()},
           {"first", rows_to_json(map.first_table(), map.order())},
           {"second", rows_to_json(map.second_table(), map.order())}};
  if (cross_reference) out["semigroup"] = semigroup_to_json(*cross_reference);
  return out;
}

PairMap pair_map_from_json(const json& j) {
  if (!j.contains("order") || !j["order"].is_number_integer())
    throw BadParamsError("solution object needs an integer `order`");
  const int n = j["order"].get<int>();
  if (n < 1) throw BadParamsError("order must be positive");
  auto flatten = [&](const std::vector<std::vector<int>>& rows) {
    std::vector<int> flat;
    for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
    return flat;
  };
  return PairMap::from_tables(n, flatten(require_square(j, "first", n, n)),
                              flatten(require_square(j, "second", n, n)));
}

json matched_system_to_json(const MatchedSystem& sys) {
  json out{{"S", semigroup_to_json(sys.S)}, {"T", semigroup_to_json(sys.T)}};
  json alpha = json::array();
  for (const auto& row : sys.alpha) alpha.push_back(row);
  out["alpha"] = alpha;
  if (sys.beta) {
    json beta = json::array();
    for (const auto& row : *sys.beta) beta.push_back(row);
    out["beta"] = beta;
  } else {
    out["beta"] = nullptr;
  }
  return out;
}

MatchedSystem matched_system_from_json(const json& j) {
  if (!j.contains("S") || !j.contains("T"))
    throw BadParamsError("matched system needs `S` and `T` semigroups");
  Semigroup S = semigroup_from_json(j["S"]);
  Semigroup T = semigroup_from_json(j["T"]);
  MatchedSystem sys{std::move(S), std::move(T), {}, std::nullopt};
  sys.alpha = require_square(j, "alpha", sys.T.order(), sys.S.order());
  if (j.contains("beta") && !j["beta"].is_null())
    sys.beta = require_square(j, "beta", sys.S.order(), sys.T.order());
  validate_matched_system(sys);
  return sys;
}

json verdict_to_json(const Verdict& v, const std::string& equation) {
  json out{{"holds", v.holds},
           {"condition_tag", v.condition_tag},
           {"counterexample", v.holds ? json(nullptr) : json(v.counterexample)}};
  if (!equation.empty()) out["equation"] = equation;
  return out;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParamsError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw BadParamsError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

Semigroup load_semigroup(const std::string& path) { return semigroup_from_json(load_json(path)); }
PairMap load_pair_map(const std::string& path) { return pair_map_from_json(load_json(path)); }
MatchedSystem load_matched_system(const std::string& path) {
  return matched_system_from_json(load_json(path));
}

}  // namespace ybpe
