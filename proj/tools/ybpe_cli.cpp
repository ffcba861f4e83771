// Command-line surface: verify / classify / construct / enumerate /
// analyze / corpus.  Reports are single machine-readable JSON objects on
// stdout (--human renders them readably); exit code 0 means every checked
// property holds, 1 means a checked property failed (counterexample in
// the report), 2 means a usage or input error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybpe/corpus.hpp"
#include "ybpe/enumeration.hpp"
#include "ybpe/io.hpp"
#include "ybpe/named_solutions.hpp"
#include "ybpe/pentagon_quadruple.hpp"
#include "ybpe/powers.hpp"

using nlohmann::json;
using namespace ybpe;

namespace {

constexpr int kReportVersion = 1;

json report(json body) {
  body["report_version"] = kReportVersion;
  return body;
}

void emit(const json& j, bool human) {
  if (!human) {
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << j.dump(2) << "\n";
}

std::vector<int> parse_csv_ints(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

std::string tuple_string(const std::vector<int>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i)
    out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

int emit_verdict(const Verdict& v, const std::string& equation, bool human) {
  if (human) {
    if (v.holds) {
      std::cout << equation << ": holds\n";
    } else {
      std::cout << equation << (equation.empty() ? "" : ": ") << "fails ["
                << v.condition_tag << "] at " << tuple_string(v.counterexample) << "\n";
    }
  } else {
    emit(report(verdict_to_json(v, equation)), false);
  }
  return v.holds ? 0 : 1;
}

// Solution files for the matched/quadruple builders: s is the product
// form on S, t is either the product form on T (matched product) or the
// reversed form (YBE constructions).
std::pair<Semigroup, ThetaFamily> decompose_or_die(const PairMap& m, const char* role) {
  auto dec = decompose_product_form(m);
  if (!dec) throw BadParamsError(std::string(role) + ": first component is not associative");
  return *dec;
}

SolutionQuadruple quadruple_from_files(const std::string& system_path,
                                       const std::string& s_path,
                                       const std::string& t_path, bool t_reversed) {
  MatchedSystem sys = load_matched_system(system_path);
  const PairMap s_map = load_pair_map(s_path);
  PairMap t_map = load_pair_map(t_path);
  if (t_reversed) t_map = conjugate_flip(t_map);
  auto [s_carrier, theta_s] = decompose_or_die(s_map, "s");
  auto [t_carrier, theta_t] = decompose_or_die(t_map, "t");
  if (!(s_carrier == sys.S)) throw BadParamsError("s is not defined over the system's S");
  if (!(t_carrier == sys.T)) throw BadParamsError("t is not defined over the system's T");
  return SolutionQuadruple{std::move(sys), std::move(theta_s), std::move(theta_t)};
}

json property_report_to_json(const PropertyReport& p) {
  return json{{"idempotent", p.idempotent},
              {"left_identities", p.left_identities},
              {"right_identities", p.right_identities},
              {"monoid", p.monoid},
              {"group", p.group},
              {"s2_equals_s", p.s2_equals_s},
              {"variety_s", p.variety_s},
              {"variety_w", p.variety_w},
              {"left_quasi_normal", p.left_quasi_normal},
              {"rectangular_band", p.rectangular_band},
              {"left_zero", p.left_zero},
              {"right_zero", p.right_zero}};
}

struct CommonFlags {
  bool human = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-algebra engine for set-theoretic pentagon and Yang-Baxter "
               "solutions on finite semigroups"};
  app.require_subcommand(1);
  CommonFlags flags;
  app.add_flag("--human", flags.human, "render reports for people instead of scripts");

  // verify ----------------------------------------------------------------
  std::string verify_equation_name, verify_solution_path;
  auto* verify_cmd = app.add_subcommand("verify", "check an equation on a solution file");
  verify_cmd->add_option("--equation", verify_equation_name,
                         "pentagon | reversed-pentagon | qybe | braid")->required();
  verify_cmd->add_option("--solution", verify_solution_path, "solution file")->required();

  // classify ---------------------------------------------------------------
  std::string classify_path;
  auto* classify_cmd = app.add_subcommand("classify", "structural report for a semigroup file");
  classify_cmd->add_option("--semigroup", classify_path, "semigroup file")->required();

  // construct --------------------------------------------------------------
  auto* construct_cmd = app.add_subcommand("construct", "build carriers and solutions");
  construct_cmd->require_subcommand(1);

  std::string infl_semigroup, infl_phi;
  auto* infl_cmd = construct_cmd->add_subcommand("inflation", "inflate a semigroup");
  infl_cmd->add_option("--semigroup", infl_semigroup, "base semigroup file")->required();
  infl_cmd->add_option("--phi", infl_phi, "comma-separated images of the extension points")
      ->required();

  std::string msg_system;
  auto* msg_cmd = construct_cmd->add_subcommand("matched-semigroup",
                                                "matched product of two semigroups");
  msg_cmd->add_option("--system", msg_system, "matched system file")->required();

  std::string msol_system, msol_s, msol_t;
  auto* msol_cmd = construct_cmd->add_subcommand("matched-solution",
                                                 "matched product of two pentagon solutions");
  msol_cmd->add_option("--system", msol_system, "matched system file")->required();
  msol_cmd->add_option("--s", msol_s, "product-form solution on S")->required();
  msol_cmd->add_option("--t", msol_t, "product-form solution on T")->required();

  std::string ybeq_system, ybeq_s, ybeq_t;
  auto* ybeq_cmd = construct_cmd->add_subcommand(
      "ybe-from-quadruple", "Yang-Baxter solution from a pentagon quadruple");
  ybeq_cmd->add_option("--system", ybeq_system, "matched system file (beta required)")->required();
  ybeq_cmd->add_option("--s", ybeq_s, "product-form solution on S")->required();
  ybeq_cmd->add_option("--t", ybeq_t, "reversed-form solution on T")->required();

  std::string ybea_system, ybea_s, ybea_t;
  auto* ybea_cmd = construct_cmd->add_subcommand(
      "ybe-from-alpha", "Yang-Baxter solution from the alpha-only system");
  ybea_cmd->add_option("--system", ybea_system, "matched system file (beta null)")->required();
  ybea_cmd->add_option("--s", ybea_s, "product-form solution on S")->required();
  ybea_cmd->add_option("--t", ybea_t, "reversed-form solution on T")->required();

  std::string named_kind, named_semigroup, named_map, named_map2, named_base, named_phi;
  int named_element = -1, named_order = 0;
  auto* named_cmd = construct_cmd->add_subcommand("named-solution", "one of the named families");
  named_cmd->add_option("--kind", named_kind,
                        "gamma | constant | militaru | right-zero | inflation")->required();
  named_cmd->add_option("--semigroup", named_semigroup, "carrier file (gamma, constant)");
  named_cmd->add_option("--map", named_map, "self-map as comma-separated images");
  named_cmd->add_option("--map2", named_map2, "second self-map (militaru)");
  named_cmd->add_option("--element", named_element, "idempotent element (constant)");
  named_cmd->add_option("--order", named_order, "carrier size (militaru, right-zero)");
  named_cmd->add_option("--base-solution", named_base, "base solution file (inflation)");
  named_cmd->add_option("--phi", named_phi, "extension images (inflation)");

  // enumerate ---------------------------------------------------------------
  std::string enum_shape = "product-form", enum_equation = "pentagon", enum_carrier,
              enum_mode = "count", enum_spec_file;
  int enum_order = 0, enum_workers = 1;
  std::size_t enum_limit = 100000;
  bool enum_force = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "search for solutions on small carriers");
  enum_cmd->add_option("--spec", enum_spec_file, "JSON spec file (overrides the flags)");
  enum_cmd->add_option("--shape", enum_shape, "full-map | product-form");
  enum_cmd->add_option("--order", enum_order, "bare carrier size (full-map)");
  enum_cmd->add_option("--carrier", enum_carrier, "carrier semigroup file (product-form)");
  enum_cmd->add_option("--equation", enum_equation, "pentagon | qybe | both");
  enum_cmd->add_option("--mode", enum_mode, "count | collect");
  enum_cmd->add_option("--limit", enum_limit, "collection cap");
  enum_cmd->add_option("--workers", enum_workers, "worker threads");
  enum_cmd->add_flag("--force", enum_force, "override the size guards");

  // analyze -----------------------------------------------------------------
  auto* analyze_cmd = app.add_subcommand("analyze", "power and kernel analysis");
  analyze_cmd->require_subcommand(1);
  std::string powers_solution;
  int powers_cap = 64;
  auto* powers_cmd = analyze_cmd->add_subcommand("powers", "index/period and power verdicts");
  powers_cmd->add_option("--solution", powers_solution, "solution file")->required();
  powers_cmd->add_option("--cap", powers_cap, "largest power to try");
  std::string kernel_solution;
  auto* kernel_cmd = analyze_cmd->add_subcommand("kernel", "kernel of a solution on a group");
  kernel_cmd->add_option("--solution", kernel_solution, "solution file")->required();

  // corpus --------------------------------------------------------------
  auto* corpus_cmd = app.add_subcommand("corpus", "the registered example fixtures");
  corpus_cmd->require_subcommand(1);
  auto* corpus_list_cmd = corpus_cmd->add_subcommand("list", "list fixture ids");
  std::vector<std::string> corpus_run_ids;
  auto* corpus_run_cmd = corpus_cmd->add_subcommand("run", "run fixtures (default: all)");
  corpus_run_cmd->add_option("ids", corpus_run_ids, "fixture ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify_cmd) {
      const auto eq = equation_from_name(verify_equation_name);
      if (!eq) throw BadParamsError("unknown equation: " + verify_equation_name);
      const PairMap m = load_pair_map(verify_solution_path);
      return emit_verdict(verify_equation(m, *eq), equation_name(*eq), flags.human);
    }

    if (*classify_cmd) {
      const Semigroup sg = load_semigroup(classify_path);
      const json rep = property_report_to_json(classify(sg));
      if (flags.human) {
        std::cout << "order " << sg.order() << "\n";
        for (const auto& [key, value] : rep.items())
          std::cout << "  " << key << ": " << value.dump() << "\n";
      } else {
        emit(report(rep), false);
      }
      return 0;
    }

    if (*infl_cmd) {
      const Semigroup base = load_semigroup(infl_semigroup);
      emit(report(semigroup_to_json(build_inflation(base, parse_csv_ints(infl_phi)))),
           flags.human);
      return 0;
    }
    if (*msg_cmd) {
      emit(report(semigroup_to_json(build_matched_semigroup(load_matched_system(msg_system)))),
           flags.human);
      return 0;
    }
    if (*msol_cmd) {
      const SolutionQuadruple quad = quadruple_from_files(msol_system, msol_s, msol_t, false);
      emit(report(pair_map_to_json(build_matched_solution(quad))), flags.human);
      return 0;
    }
    if (*ybeq_cmd) {
      const SolutionQuadruple quad = quadruple_from_files(ybeq_system, ybeq_s, ybeq_t, true);
      emit(report(pair_map_to_json(build_ybe_from_pentagon_quadruple(quad))), flags.human);
      return 0;
    }
    if (*ybea_cmd) {
      const SolutionQuadruple quad = quadruple_from_files(ybea_system, ybea_s, ybea_t, true);
      emit(report(pair_map_to_json(build_ybe_from_alpha_system(quad))), flags.human);
      return 0;
    }
    if (*named_cmd) {
      NamedSolutionSpec spec;
      spec.kind = named_kind;
      spec.element = named_element;
      spec.order = named_order;
      if (!named_semigroup.empty()) spec.semigroup = load_semigroup(named_semigroup);
      if (!named_map.empty()) spec.map_a = parse_csv_ints(named_map);
      if (!named_map2.empty()) spec.map_b = parse_csv_ints(named_map2);
      if (spec.kind == "inflation") {
        if (named_base.empty()) throw BadParamsError("inflation needs --base-solution");
        auto [base_sg, base_theta] = decompose_or_die(load_pair_map(named_base), "base");
        spec.semigroup = base_sg;
        spec.theta = base_theta;
        spec.map_a = parse_csv_ints(named_phi);
      }
      emit(report(pair_map_to_json(build_named_solution(spec))), flags.human);
      return 0;
    }

    if (*enum_cmd) {
      SearchSpec spec;
      if (!enum_spec_file.empty()) {
        const json j = load_json(enum_spec_file);
        enum_shape = j.value("shape", enum_shape);
        enum_equation = j.value("equation", enum_equation);
        enum_mode = j.value("mode", enum_mode);
        enum_order = j.value("order", enum_order);
        enum_workers = j.value("workers", enum_workers);
        enum_limit = j.value("limit", enum_limit);
        enum_force = j.value("force", enum_force);
        if (j.contains("carrier") && !j["carrier"].is_null())
          spec.carrier = semigroup_from_json(j["carrier"]);
      }
      if (enum_shape == "full-map") spec.shape = SearchShape::FullMap;
      else if (enum_shape == "product-form") spec.shape = SearchShape::ProductFormTheta;
      else throw BadParamsError("unknown shape: " + enum_shape);
      if (enum_equation == "pentagon") spec.target = TargetEquations::Pentagon;
      else if (enum_equation == "qybe") spec.target = TargetEquations::Qybe;
      else if (enum_equation == "both") spec.target = TargetEquations::Both;
      else throw BadParamsError("unknown equation set: " + enum_equation);
      if (enum_mode == "count") spec.mode = ResultMode::Count;
      else if (enum_mode == "collect") spec.mode = ResultMode::Collect;
      else throw BadParamsError("unknown mode: " + enum_mode);
      spec.order = enum_order;
      spec.workers = enum_workers;
      spec.collect_limit = enum_limit;
      spec.force = enum_force;
      if (!enum_carrier.empty()) spec.carrier = load_semigroup(enum_carrier);

      json header = report(json{{"spec",
                                 {{"shape", enum_shape},
                                  {"equation", enum_equation},
                                  {"mode", enum_mode},
                                  {"order", spec.carrier ? spec.carrier->order() : spec.order},
                                  {"workers", spec.workers}}}});
      std::cout << header.dump() << "\n";
      const EnumerationResult res = enumerate_solutions(spec);
      for (const PairMap& sol : res.solutions) std::cout << pair_map_to_json(sol).dump() << "\n";
      std::cout << json{{"count", res.count},
                        {"candidates", res.candidates},
                        {"elapsed_seconds", res.elapsed_seconds}}
                       .dump()
                << "\n";
      return 0;
    }

    if (*powers_cmd) {
      const PairMap m = load_pair_map(powers_solution);
      const PowerProfile p = power_profile(m, powers_cap);
      if (flags.human) {
        std::cout << "index " << p.index << ", period " << p.period << "\n";
        for (std::size_t j = 0; j < p.power_verdicts.size(); ++j)
          std::cout << "  power " << (j + 1) << ": pentagon "
                    << (p.power_verdicts[j].pentagon ? "yes" : "no ") << "  qybe "
                    << (p.power_verdicts[j].qybe ? "yes" : "no ") << "  braid "
                    << (p.power_verdicts[j].braid ? "yes" : "no") << "\n";
        return 0;
      }
      json verdicts = json::array();
      for (std::size_t j = 0; j < p.power_verdicts.size(); ++j)
        verdicts.push_back(json{{"power", j + 1},
                                {"pentagon", p.power_verdicts[j].pentagon},
                                {"qybe", p.power_verdicts[j].qybe},
                                {"braid", p.power_verdicts[j].braid}});
      emit(report(json{{"index", p.index}, {"period", p.period}, {"powers", verdicts}}),
           false);
      return 0;
    }
    if (*kernel_cmd) {
      const PairMap m = load_pair_map(kernel_solution);
      auto dec = decompose_product_form(m);
      if (!dec) throw PreconditionError("product-form");
      const KernelReport rep = kernel(dec->first, dec->second);
      emit(report(json{{"kernel", rep.kernel},
                       {"is_subgroup", rep.is_subgroup},
                       {"is_normal", rep.is_normal}}),
           flags.human);
      return 0;
    }

    if (*corpus_list_cmd) {
      emit(report(json{{"fixtures", corpus_ids()}}), flags.human);
      return 0;
    }
    if (*corpus_run_cmd) {
      std::vector<std::string> ids = corpus_run_ids;
      if (ids.empty()) ids = corpus_ids();
      int failed = 0, total = 0;
      for (const std::string& id : ids) {
        for (const ExpectationOutcome& o : run_fixture(id)) {
          ++total;
          if (!o.pass) ++failed;
          if (flags.human) {
            std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << o.fixture_id << " -- "
                      << o.description << "\n";
          } else {
            std::cout << json{{"fixture", o.fixture_id},
                              {"expectation", o.description},
                              {"pass", o.pass}}
                             .dump()
                      << "\n";
          }
        }
      }
      if (flags.human)
        std::cout << total << " expectations, " << failed << " failed\n";
      else
        std::cout << report(json{{"total", total}, {"failed", failed}}).dump() << "\n";
      return failed == 0 ? 0 : 1;
    }
  } catch (const PreconditionError& e) {
    Verdict v = Verdict::fail(e.tag, e.witness);
    emit(report(verdict_to_json(v)), flags.human);
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
