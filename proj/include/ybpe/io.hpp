// JSON file formats for semigroups, solutions and matched systems, and
// the machine-readable report objects emitted by the CLI.

#ifndef YBPE_IO_HPP_
#define YBPE_IO_HPP_

#include <optional>
#include <string>

#include <json.hpp>

#include "ybpe/equations.hpp"
#include "ybpe/matched.hpp"
#include "ybpe/semigroup.hpp"
#include "ybpe/verdict.hpp"

namespace ybpe {

// {"order": n, "table": [[...], ...]} — exactly n rows of n entries.
nlohmann::json semigroup_to_json(const Semigroup& sg);
Semigroup semigroup_from_json(const nlohmann::json& j);

// {"order": n, "first": [[...]], "second": [[...]], "semigroup": {...}?}
nlohmann::json pair_map_to_json(const PairMap& map,
                                const std::optional<Semigroup>& cross_reference = std::nullopt);
PairMap pair_map_from_json(const nlohmann::json& j);

// {"S": {...}, "T": {...}, "alpha": [[...]], "beta": [[...]] | null}
nlohmann::json matched_system_to_json(const MatchedSystem& sys);
MatchedSystem matched_system_from_json(const nlohmann::json& j);

// {"holds": b, "equation": e, "counterexample": [...]|null, "condition_tag": t}
nlohmann::json verdict_to_json(const Verdict& v, const std::string& equation = "");

Semigroup load_semigroup(const std::string& path);
PairMap load_pair_map(const std::string& path);
MatchedSystem load_matched_system(const std::string& path);
nlohmann::json load_json(const std::string& path);

}  // namespace ybpe

#endif  // YBPE_IO_HPP_
