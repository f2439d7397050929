// Command-line front end: computes the Graovac-Ghorbani index, builds
// the bicyclic families, enumerates isomorphism-free catalogs, runs
// extremal scans and verifies the closed-form claims.
//
// Exit codes: 0 ok / all claims pass, 1 claim failure, 2 usage error,
// 3 domain or validation error, 4 resource limit.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "abcgg/certificate.hpp"
#include "abcgg/closed_form.hpp"
#include "abcgg/enumerate.hpp"
#include "abcgg/families.hpp"
#include "abcgg/graph.hpp"
#include "abcgg/index.hpp"
#include "abcgg/io.hpp"
#include "abcgg/verify.hpp"

namespace {

using namespace abcgg;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitLimit = 4;

// Relative output paths are placed under ABCGG_OUTPUT_DIR when set.
std::string resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  const char* dir = std::getenv("ABCGG_OUTPUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  return (std::filesystem::path(dir) / p).string();
}

void emit(const std::string& output, const std::string& content) {
  if (output.empty()) {
    std::cout << content;
    return;
  }
  const std::string resolved = resolve_output(output);
  std::ofstream f(resolved);
  if (!f) throw DomainError("cannot open output file: " + resolved);
  f << content;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  int lo = 0, hi = 0;
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n-range", "expected A..B, got \"" + text + "\"");
  }
  if (lo > hi) throw CLI::ValidationError("--n-range", "empty range " + text);
  return {lo, hi};
}

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw DomainError("--params entries must look like key=value: \"" + item + "\"");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

int param_int(const std::map<std::string, std::string>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw DomainError("formula: missing parameter \"" + key + "\"");
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw DomainError("formula: parameter \"" + key + "\" is not an integer");
  }
}

struct CommonArgs {
  int jobs = 1;
  int limit = kDefaultEnumerationLimit;
  double tolerance = 1e-9;
  std::string output;
  std::string format;
};

GraphClass class_from(const std::string& name) {
  if (name == "b1") return GraphClass::kB1Only;
  if (name == "no-pendant") return GraphClass::kNoPendant;
  if (name == "all") return GraphClass::kAllBicyclic;
  throw DomainError("unknown class \"" + name + "\" (expected b1, no-pendant, all)");
}

int run_compute(const std::string& edges_file, const std::string& family,
                const CommonArgs& args) {
  Graph g;
  std::string source;
  if (!family.empty()) {
    FamilyParams fp = parse_family(family);
    g = fp.build();
    source = fp.descriptor();
  } else {
    g = read_edge_list_file(edges_file);
    source = edges_file;
  }
  if (args.format == "edgelist") {
    std::ostringstream os;
    write_edge_list(os, g);
    emit(args.output, os.str());
    return kExitOk;
  }
  IndexReport report = abc_gg(g);
  if (args.format == "json")
    emit(args.output, index_report_json(g, report, source));
  else if (args.format == "csv")
    emit(args.output, index_report_csv(g, report));
  else
    emit(args.output, index_report_table(g, report, source));
  return kExitOk;
}

int run_enumerate(int n, const std::string& cls, bool with_index,
                  const CommonArgs& args) {
  EnumerateOptions opts;
  opts.jobs = args.jobs;
  opts.max_order = args.limit;
  opts.with_index = with_index;
  std::vector<CatalogEntry> entries;
  switch (class_from(cls)) {
    case GraphClass::kB1Only: entries = enumerate_b1(n, opts); break;
    case GraphClass::kNoPendant: entries = enumerate_no_pendant(n, opts); break;
    case GraphClass::kAllBicyclic: entries = enumerate_bicyclic(n, opts); break;
  }
  std::ostringstream os;
  write_catalog_jsonl(os, entries);
  emit(args.output, os.str());
  return kExitOk;
}

int run_extremal(int n, const std::string& cls, const std::string& objective,
                 const CommonArgs& args) {
  VerifyOptions opts;
  opts.jobs = args.jobs;
  opts.enumeration_limit = args.limit;
  opts.formula_tolerance = args.tolerance;
  Objective obj;
  if (objective == "min")
    obj = Objective::kMin;
  else if (objective == "max")
    obj = Objective::kMax;
  else
    throw DomainError("unknown objective \"" + objective + "\"");
  ExtremalResult res = extremal_scan(class_from(cls), n, obj, opts);
  emit(args.output, args.format == "csv" ? extremal_result_csv(res)
                                         : extremal_result_json(res));
  return kExitOk;
}

int run_verify(const std::string& suite, const std::string& range,
               const CommonArgs& args) {
  auto [lo, hi] = parse_range(range);
  VerifyOptions opts;
  opts.jobs = args.jobs;
  opts.enumeration_limit = args.limit;
  opts.formula_tolerance = args.tolerance;

  ClaimReport report;
  if (suite == "lemmas") {
    report = check_closed_forms(hi, opts);
  } else if (suite == "lemma-behavior") {
    report.claim = "lemma-behavior";
    report.range = std::to_string(lo) + ".." + std::to_string(hi);
    report.tolerance = 0.0;
    const std::pair<LemmaBehavior, int> suites[] = {
        {LemmaBehavior::kL1Monotone, 5}, {LemmaBehavior::kL2Min, 5},
        {LemmaBehavior::kL3MinLoc, 5},   {LemmaBehavior::kL5Monotone, 10},
        {LemmaBehavior::kL6Min, 10}};
    for (auto [which, min_lo] : suites) {
      if (hi < min_lo) continue;
      auto part = lemma_behavior_scan(which, std::max(lo, min_lo), hi, opts);
      report.rows.insert(report.rows.end(), part.rows.begin(), part.rows.end());
    }
  } else if (suite == "theorem1") {
    report.claim = "theorem1";
    report.range = std::to_string(lo) + ".." + std::to_string(hi);
    report.tolerance = opts.formula_tolerance;
    auto even = verify_claim(Claim::kTheorem1Even, lo, hi, opts);
    auto odd = verify_claim(Claim::kTheorem1Odd, lo, hi, opts);
    for (int n = lo; n <= hi; ++n) {
      const auto& src = n % 2 == 0 ? even : odd;
      for (const auto& row : src.rows)
        if (row.n == n) report.rows.push_back(row);
    }
  } else if (suite == "conjecture2") {
    report = verify_claim(Claim::kConjecture2, lo, hi, opts);
  } else if (suite == "conjecture3") {
    report = verify_claim(Claim::kConjecture3, lo, hi, opts);
  } else {
    throw DomainError("unknown suite \"" + suite + "\"");
  }

  emit(args.output, args.format == "json" ? claim_report_json(report)
                                          : claim_report_csv(report));
  if (!report.all_pass()) {
    std::cerr << "verify: " << report.failures() << " of " << report.rows.size()
              << " checks failed\n";
    return kExitClaimFailure;
  }
  return kExitOk;
}

int run_formula(const std::string& name, const std::string& params_text,
                bool unchecked, const CommonArgs& args) {
  auto params = parse_params(params_text);
  const Check check = unchecked ? Check::kOff : Check::kStrict;
  auto variant_of = [&](const char* dflt) {
    auto it = params.find("variant");
    return it == params.end() ? std::string(dflt) : it->second;
  };

  double value = 0.0;
  if (name == "lemma1" || name == "lemma1_oddodd") {
    value = lemma1_oddodd(param_int(params, "p"), param_int(params, "q"), check);
  } else if (name == "lemma2" || name == "lemma2_eveneven") {
    value = lemma2_eveneven(param_int(params, "p"), param_int(params, "q"), check);
  } else if (name == "lemma3" || name == "lemma3_oddeven") {
    value = lemma3_oddeven(param_int(params, "p"), param_int(params, "q"), check);
  } else if (name == "f_oddodd") {
    value = f_oddodd(param_int(params, "k"), param_int(params, "x"), check);
  } else if (name == "g_oddodd") {
    value = g_oddodd(param_int(params, "k"), param_int(params, "x"), check);
  } else if (name == "f_eveneven") {
    value = f_eveneven(param_int(params, "k"), param_int(params, "x"), check);
  } else if (name == "f_oddeven") {
    value = f_oddeven(param_int(params, "n"), param_int(params, "x"), check);
  } else if (name == "g_oddeven") {
    value = g_oddeven(param_int(params, "n"), param_int(params, "x"), check);
  } else if (name == "t_gap") {
    TGap t = t_gap(param_int(params, "k"), param_int(params, "x"));
    emit(args.output, std::to_string(t.lhs) + " " + std::to_string(t.rhs) + "\n");
    return kExitOk;
  } else if (name == "theorem1") {
    std::string v = variant_of("lemma-consistent");
    if (v != "printed" && v != "lemma-consistent")
      throw DomainError("theorem1 variant must be printed or lemma-consistent");
    value = theorem1_bound(param_int(params, "n"),
                           v == "printed" ? Theorem1Variant::kPrinted
                                          : Theorem1Variant::kLemmaConsistent,
                           check);
  } else if (name == "conjecture2") {
    value = conjecture2_bound(param_int(params, "n"), check);
  } else if (name == "conjecture3") {
    std::string v = variant_of("h-consistent");
    if (v != "printed" && v != "h-consistent")
      throw DomainError("conjecture3 variant must be printed or h-consistent");
    value = conjecture3_bound(param_int(params, "n"),
                              v == "printed" ? Conjecture3Variant::kPrinted
                                             : Conjecture3Variant::kHConsistent,
                              check);
  } else {
    throw DomainError("unknown formula \"" + name + "\"");
  }
  emit(args.output, format_double(value) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graovac-Ghorbani index toolkit for bicyclic graphs"};
  app.require_subcommand(1);

  CommonArgs common;

  auto add_common = [&](CLI::App* cmd, std::vector<std::string> formats = {}) {
    cmd->add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--limit", common.limit, "general enumeration order limit");
    cmd->add_option("--tolerance", common.tolerance, "comparison tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--output", common.output, "output file (stdout when omitted)");
    if (!formats.empty())
      cmd->add_option("--format", common.format, "output format")
          ->check(CLI::IsMember(formats));
  };

  auto* compute = app.add_subcommand("compute", "index of one graph");
  std::string edges_file, family;
  auto* eopt = compute->add_option("--edges", edges_file, "edge list file");
  auto* fopt = compute->add_option("--family", family, "family descriptor, e.g. b1:3,8");
  eopt->excludes(fopt);
  add_common(compute, {"table", "json", "csv", "edgelist"});

  auto* enumerate = app.add_subcommand("enumerate", "isomorphism-free catalog (JSONL)");
  int enum_n = 0;
  std::string enum_class = "all";
  bool with_index = false;
  enumerate->add_option("--n", enum_n, "order")->required();
  enumerate->add_option("--class", enum_class, "graph class")
      ->check(CLI::IsMember({"b1", "no-pendant", "all"}));
  enumerate->add_flag("--with-index", with_index, "fill abcgg values");
  add_common(enumerate);

  auto* extremal = app.add_subcommand("extremal", "optimum of the index over a class");
  int ext_n = 0;
  std::string ext_class = "all", ext_objective = "min";
  extremal->add_option("--n", ext_n, "order")->required();
  extremal->add_option("--class", ext_class, "graph class")
      ->check(CLI::IsMember({"b1", "no-pendant", "all"}));
  extremal->add_option("--objective", ext_objective, "objective")
      ->check(CLI::IsMember({"min", "max"}));
  add_common(extremal, {"json", "csv"});

  auto* verify = app.add_subcommand("verify", "run a claim suite");
  std::string suite, range;
  verify->add_option("--suite", suite, "claim suite")
      ->required()
      ->check(CLI::IsMember(
          {"lemmas", "lemma-behavior", "theorem1", "conjecture2", "conjecture3"}));
  verify->add_option("--n-range", range, "A..B")->required();
  add_common(verify, {"csv", "json"});

  auto* formula = app.add_subcommand("formula", "evaluate a closed form");
  std::string formula_name, formula_params;
  bool unchecked = false;
  formula->add_option("--name", formula_name, "formula name")->required();
  formula->add_option("--params", formula_params, "comma separated key=value");
  formula->add_flag("--unchecked", unchecked, "skip domain checks");
  add_common(formula);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(compute)) {
      if (family.empty() && edges_file.empty())
        throw DomainError("compute needs --edges or --family");
      return run_compute(edges_file, family, common);
    }
    if (app.got_subcommand(enumerate))
      return run_enumerate(enum_n, enum_class, with_index, common);
    if (app.got_subcommand(extremal))
      return run_extremal(ext_n, ext_class, ext_objective, common);
    if (app.got_subcommand(verify)) return run_verify(suite, range, common);
    if (app.got_subcommand(formula))
      return run_formula(formula_name, formula_params, unchecked, common);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
