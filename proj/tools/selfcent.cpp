// selfcent command-line driver.
//
//   selfcent construct descriptor.json out.tbl
//   selfcent check group.tbl [--method auto|pairs|minimal|recursive|bruteforce|all]
//   selfcent survey --family king --p 3 --max-order 243 [--format json|csv]
//   selfcent verify --theorem metacyclic-in-A [--p 5] [--n 5] [--max-order 625] [--families a,b]
//
// Exit codes: check 0 in-A / 1 not-in-A / 2 error; verify 0 verified /
// 1 refuted / 3 vacuous / 2 error; other commands 0 on success, 2 on error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "selfcent/errors.hpp"
#include "selfcent/theorems.hpp"

using namespace selfcent;

namespace {

constexpr int kExitError = 2;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

int cmd_construct(const std::string& desc_path, const std::string& out_path) {
  const auto g = build_group(read_json_file(desc_path));
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write " + out_path);
  write_tbl(out, g);
  out.close();
  if (!out) throw InputError("write failed: " + out_path);
  std::cout << g.name() << ": order " << g.order() << ", exponent " << exponent(g);
  if (const auto c = nilpotency_class(g)) std::cout << ", class " << *c;
  else std::cout << ", not nilpotent";
  std::cout << "\n";
  return 0;
}

int cmd_check(const std::string& path, const std::string& method) {
  const auto g = read_tbl_file(path);
  if (method == "all") {
    const auto cc = cross_check(g);
    Json reports = Json::array();
    for (const auto& r : cc.reports) reports.push_back(to_json(r));
    Json skipped = Json::array();
    for (Method m : cc.skipped) skipped.push_back(to_string(m));
    Json out{{"group", g.name()},
             {"order", g.order()},
             {"verdict", verdict_string(cc.in_A)},
             {"reports", reports},
             {"skipped", skipped}};
    std::cout << out.dump(2) << "\n";
    return cc.in_A ? 0 : 1;
  }
  const auto r = method == "auto" ? is_A(g) : run_method(g, method_from_string(method));
  std::cout << to_json(r).dump(2) << "\n";
  return r.in_A ? 0 : 1;
}

std::vector<unsigned> primes_or_default(const std::vector<unsigned>& p) {
  return p.empty() ? std::vector<unsigned>{2, 3, 5} : p;
}

int cmd_survey(const std::string& family, const std::vector<unsigned>& primes, std::size_t max_ord,
               const std::string& format) {
  const auto members = corpus_family(family, primes_or_default(primes), max_ord);
  if (format == "csv") std::cout << "name,order,verdict,method,examined,micros\n";
  for (const auto& m : members) {
    const auto rec = survey_record(m);
    if (format == "csv") {
      std::cout << '"' << m.table.name() << "\"," << m.table.order() << ',';
      if (rec.contains("membership")) {
        const auto& mem = rec["membership"];
        std::cout << mem["verdict"].get<std::string>() << ',' << mem["method"].get<std::string>() << ','
                  << mem["stats"]["examined"] << ',' << mem["stats"]["micros"] << "\n";
      } else {
        std::cout << "error,,,\n";
      }
    } else {
      std::cout << rec.dump() << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& id, const std::vector<unsigned>& primes, std::optional<unsigned> n,
               std::optional<std::size_t> max_ord, const std::vector<std::string>& families, unsigned jobs) {
  auto spec = default_corpus(id);
  spec.primes = primes_or_default(primes);
  spec.n = n;
  if (max_ord) spec.max_order = max_ord;
  if (!families.empty()) spec.families = families;
  if (n && !max_ord) {
    std::size_t need = 1;
    for (unsigned p : spec.primes) {
      std::size_t q = 1;
      for (unsigned i = 0; i < *n; ++i) q *= p;
      need = std::max(need, q);
    }
    spec.max_order = std::min(need, max_order());
  }
  const auto rep = verify(id, spec, jobs);
  std::cout << rep.to_json().dump(2) << "\n";
  if (rep.verdict == "verified") return 0;
  if (rep.verdict == "refuted") return 1;
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groups in which every non-abelian subgroup contains its centralizer"};
  app.require_subcommand(1);
  std::optional<std::size_t> cap;
  app.add_option("--cap", cap, "Order cap for this run (at most " + std::to_string(kHardMaxOrder) + ")");

  auto* construct = app.add_subcommand("construct", "Build a group from a JSON descriptor and write a .tbl");
  std::string desc_path, out_path;
  construct->add_option("descriptor", desc_path)->required();
  construct->add_option("output", out_path)->required();

  auto* check = app.add_subcommand("check", "Decide membership for a .tbl file");
  std::string tbl_path, method = "auto";
  check->add_option("table", tbl_path)->required();
  check->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "pairs", "minimal", "recursive", "bruteforce", "all"}));

  auto* survey = app.add_subcommand("survey", "Profile and membership for every member of a family");
  std::string family;
  std::vector<unsigned> survey_primes;
  std::size_t survey_max = 256;
  std::string format = "json";
  survey->add_option("--family", family)->required()->check(CLI::IsMember(corpus_family_names()));
  survey->add_option("--p", survey_primes);
  survey->add_option("--max-order", survey_max);
  survey->add_flag("--json", "JSON lines (default)");
  survey->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run a theorem check over a corpus");
  std::string theorem;
  std::vector<unsigned> verify_primes;
  std::optional<unsigned> n;
  std::optional<std::size_t> verify_max;
  std::vector<std::string> families;
  unsigned jobs = 1;
  verify_cmd->add_option("--theorem", theorem)->required();
  verify_cmd->add_option("--p", verify_primes);
  verify_cmd->add_option("--n", n);
  verify_cmd->add_option("--max-order", verify_max);
  verify_cmd->add_option("--families", families)->delimiter(',');
  verify_cmd->add_option("--jobs", jobs)->check(CLI::Range(1u, 64u));

  auto* list = app.add_subcommand("theorems", "List registered theorem ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (cap) set_max_order(*cap);
    if (*construct) return cmd_construct(desc_path, out_path);
    if (*check) return cmd_check(tbl_path, method);
    if (*survey) return cmd_survey(family, survey_primes, survey_max, format);
    if (*verify_cmd) return cmd_verify(theorem, verify_primes, n, verify_max, families, jobs);
    if (*list) {
      for (const auto& id : theorem_ids()) std::cout << id << "  " << theorem_statement(id) << "\n";
      return 0;
    }
  } catch (const InconsistentPresentation& e) {
    std::cerr << "inconsistent presentation: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
