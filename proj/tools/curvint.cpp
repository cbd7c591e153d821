// curvint: intersection invariants of curves on surfaces.
//
//   curvint self <surface> <word> [--json]
//   curvint pair <surface> <w1> <w2> [--json]
//   curvint points <surface> <w1> <w2> --points <file> [--json]
//   curvint oracle-check <surface> [--max-len n] [--pairs n] [--seed s]
//
// Exit codes: 0 ok, 2 bad input, 3 surface not admissible, 4 internal or
// numeric failure (including oracle mismatches).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "curves/errors.hpp"
#include "curves/oracle.hpp"
#include "curves/points.hpp"
#include "curves/report_json.hpp"

using namespace curves;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitAdmissibility = 3;
constexpr int kExitInternal = 4;

void emit(const Json& doc, bool json) {
  if (json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << to_text(doc);
  }
}

int run_self(const std::string& surface, const std::string& word, bool json) {
  const SurfaceSpec s = build_surface(surface);
  const CyclicWord c = CyclicWord::parse(word);
  emit(to_json(self_report(s, c), surface, word), json);
  return 0;
}

int run_pair(const std::string& surface, const std::string& w1, const std::string& w2, bool json) {
  const SurfaceSpec s = build_surface(surface);
  const CyclicWord c1 = CyclicWord::parse(w1);
  const CyclicWord c2 = CyclicWord::parse(w2);
  emit(to_json(pair_report(s, c1, c2), surface, w1, w2), json);
  return 0;
}

int run_points(const std::string& surface, const std::string& w1, const std::string& w2,
               const std::string& file, bool json) {
  const SurfaceSpec s = build_surface(surface);
  const CyclicWord c1 = CyclicWord::parse(w1);
  const CyclicWord c2 = CyclicWord::parse(w2);
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open points file \"" + file + "\"");
  const std::vector<PointRow> rows = points_table(s, c1, c2, read_points(in));

  Json doc = Json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const PointRow& r = rows[i];
    Json j;
    j["point"] = i + 1;
    j["g"] = r.g;
    j["class"] = r.nielsen_class;
    if (r.trivial) j["trivial"] = *r.trivial;
    j["special"] = r.special;
    j["self_cancelling"] = r.self_cancelling;
    if (r.geom_special) j["geom_special"] = *r.geom_special;
    if (r.strict_class) j["strict_class"] = *r.strict_class;
    if (r.strict) {
      j["special_star"] = r.strict->special;
      j["geom_special_star"] = r.strict->geom_special;
      j["self_cancelling_star"] = r.strict->self_cancelling;
      j["geom_self_cancelling_star"] = r.strict->geom_self_cancelling;
    }
    doc.push_back(j);
  }
  if (json) {
    std::cout << doc.dump(2) << '\n';
    return 0;
  }
  for (const Json& row : doc) {
    std::string line;
    for (const auto& [key, value] : row.items()) {
      line += (line.empty() ? "" : " ") + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
    }
    std::cout << line << '\n';
  }
  return 0;
}

int run_oracle_check_cmd(const std::string& surface, std::size_t max_len, std::size_t pairs,
                         unsigned seed) {
  const SurfaceSpec s = build_surface(surface);
  const OracleCheckSummary sum = run_oracle_check(s, max_len, pairs, seed);
  for (const std::string& m : sum.mismatches) std::cout << "mismatch " << m << '\n';
  std::cout << "self_checked=" << sum.self_checked << '\n'
            << "pairs_checked=" << sum.pairs_checked << '\n'
            << "mismatches=" << sum.mismatches.size() << '\n'
            << "status=" << (sum.mismatches.empty() ? "pass" : "fail") << '\n';
  return sum.mismatches.empty() ? 0 : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection invariants of curves on surfaces"};
  app.require_subcommand(1);

  std::string surface;
  std::string w1;
  std::string w2;
  std::string points_file;
  bool json = false;
  std::size_t max_len = 6;
  std::size_t pairs = 200;
  unsigned seed = 20240601;

  auto* self_cmd = app.add_subcommand("self", "self-intersection report for one curve");
  self_cmd->add_option("surface", surface, "surface preset or fatgraph:order=...;twists=...")->required();
  self_cmd->add_option("word", w1, "curve class as a word in a-z / A-Z")->required();
  self_cmd->add_flag("--json", json, "emit JSON");

  auto* pair_cmd = app.add_subcommand("pair", "intersection report for two curves");
  pair_cmd->add_option("surface", surface)->required();
  pair_cmd->add_option("w1", w1)->required();
  pair_cmd->add_option("w2", w2)->required();
  pair_cmd->add_flag("--json", json, "emit JSON");

  auto* points_cmd = app.add_subcommand("points", "Nielsen classes of user supplied points");
  points_cmd->add_option("surface", surface)->required();
  points_cmd->add_option("w1", w1)->required();
  points_cmd->add_option("w2", w2)->required();
  points_cmd->add_option("--points", points_file, "one record per line: g=<word>[;eta=..;eta1=..;eta2=..;case=..]")
      ->required();
  points_cmd->add_flag("--json", json, "emit JSON");

  auto* oracle_cmd = app.add_subcommand("oracle-check", "compare the word algorithm with hyperbolic geometry");
  oracle_cmd->add_option("surface", surface)->required();
  oracle_cmd->add_option("--max-len", max_len, "longest cyclic word to check")->check(CLI::Range(1, 12));
  oracle_cmd->add_option("--pairs", pairs, "random pairs to check");
  oracle_cmd->add_option("--seed", seed, "seed for the pair sample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*self_cmd) return run_self(surface, w1, json);
    if (*pair_cmd) return run_pair(surface, w1, w2, json);
    if (*points_cmd) return run_points(surface, w1, w2, points_file, json);
    if (*oracle_cmd) return run_oracle_check_cmd(surface, max_len, pairs, seed);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const AdmissibilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitAdmissibility;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
