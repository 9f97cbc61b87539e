#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toromaps/coset_graph.hpp"
#include "toromaps/report_json.hpp"
#include "toromaps/todd_coxeter.hpp"
#include "toromaps/toroidal_analysis.hpp"

namespace {

using namespace toromaps;

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kCapacity = 3,
  kUnachievableDegree = 4,
};

const std::vector<std::string> kFamilyNames{"44", "36", "63", "333"};

struct SpecArgs {
  std::string family;
  int s1 = 0;
  int s2 = 0;

  ToroidalSpec spec() const {
    ToroidalSpec s{parse_family(family), s1, s2};
    s.validate();
    return s;
  }
};

struct Config {
  std::size_t max_cosets = kDefaultMaxCosets;
  bool serial = false;
  std::string format;
  std::string layout = "circular";
  std::string out_path;
  std::size_t degree = 0;
  std::vector<std::string> words;
  std::vector<std::string> families;
  int min_sum = 0;
  int max_sum = 6;
  bool ordered = false;
  bool with_classes = false;

  AnalysisOptions analysis() const {
    return {max_cosets, serial ? Execution::Serial : Execution::Parallel};
  }
};

void add_spec_options(CLI::App* cmd, SpecArgs& args) {
  cmd->add_option("--family", args.family, "44, 36, 63 or 333")
      ->required()
      ->check(CLI::IsMember(kFamilyNames));
  cmd->add_option("--s1", args.s1, "first coordinate of the vector")->required();
  cmd->add_option("--s2", args.s2, "second coordinate of the vector")->required();
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return kUsage;
  }
  file << text;
  return file ? kOk : kUsage;
}

std::vector<Word> parse_words(const std::vector<std::string>& texts) {
  std::vector<Word> out;
  for (const auto& t : texts) out.push_back(parse_word(t));
  return out;
}

int cmd_order(const SpecArgs& args, const Config& cfg) {
  const ToroidalSpec spec = args.spec();
  const ToroidalGroup g = ToroidalGroup::build(spec, cfg.max_cosets);
  const OrderFacts f = order_facts(g);
  const auto expected_g = static_cast<std::uint64_t>(expected_group_order(spec));
  const auto expected_t = static_cast<std::uint64_t>(expected_translation_order(spec));
  const bool ok = f.group_order == expected_g && f.translation_order == expected_t;
  if (cfg.format == "json") {
    Json j{{"schema", kJsonSchemaVersion},
           {"family", std::string(family_name(spec.family))},
           {"s1", spec.s1},
           {"s2", spec.s2},
           {"group_order", f.group_order},
           {"expected_group_order", expected_g},
           {"translation_order", f.translation_order},
           {"expected_translation_order", expected_t},
           {"u_order", f.u_order},
           {"match", ok}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << spec.to_string() << "\n"
              << "|G| = " << f.group_order << " (expected " << expected_g << ")\n"
              << "|T| = " << f.translation_order << " (expected " << expected_t << ")\n"
              << "|u| = " << f.u_order << "\n";
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_degrees(const SpecArgs& args, const Config& cfg) {
  const ToroidalSpec spec = args.spec();
  const DegreeReport r = brute_force_degree_set(spec, cfg.analysis());
  if (cfg.format == "json") {
    std::cout << to_json(r, cfg.with_classes).dump(2) << "\n";
  } else {
    std::cout << degree_table(std::span<const DegreeReport>(&r, 1));
    for (const auto& [degree, w] : r.witnesses) {
      std::cout << "  degree " << degree << ": " << w.label << "\n";
    }
  }
  return r.match || !r.formula_asserted ? kOk : kVerificationFailed;
}

int cmd_reps(const SpecArgs& args, const Config& cfg) {
  const ToroidalSpec spec = args.spec();
  const ToroidalGroup g = ToroidalGroup::build(spec, cfg.max_cosets);
  EnumerationOptions eo;
  eo.execution = cfg.analysis().execution;
  const std::vector<SubgroupClass> classes = all_subgroup_classes(g.group, eo);
  Json list = Json::array();
  std::ostringstream text;
  text << spec.to_string() << "\n";
  for (const SubgroupClass& cls : classes) {
    if (!cls.corefree) continue;
    const PermutationRep rep = class_representation(g, cls, cfg.max_cosets);
    if (cfg.format == "json") {
      Json j = to_json(cls);
      j["degree"] = rep.degree();
      j["a"] = rep.a.to_cycle_string();
      j["b"] = rep.b.to_cycle_string();
      list.push_back(std::move(j));
    } else {
      text << "degree " << rep.degree() << ": " << rep.to_string() << "\n";
    }
  }
  if (cfg.format == "json") {
    Json j{{"schema", kJsonSchemaVersion},
           {"family", std::string(family_name(spec.family))},
           {"s1", spec.s1},
           {"s2", spec.s2},
           {"representations", std::move(list)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text.str();
  }
  return kOk;
}

int cmd_graph(const SpecArgs& args, const Config& cfg) {
  const ToroidalSpec spec = args.spec();
  const ToroidalGroup g = ToroidalGroup::build(spec, cfg.max_cosets);
  EnumerationOptions eo;
  eo.execution = cfg.analysis().execution;
  const std::vector<SubgroupClass> classes = all_subgroup_classes(g.group, eo);
  const SubgroupClass* chosen = nullptr;
  for (const SubgroupClass& cls : classes) {
    if (cls.corefree && cls.index == cfg.degree) {
      chosen = &cls;
      break;
    }
  }
  if (chosen == nullptr) {
    std::cerr << "error: degree " << cfg.degree << " is not achievable for "
              << spec.to_string() << "; valid degrees: "
              << format_degree_set(corefree_indices(classes)) << "\n";
    return kUnachievableDegree;
  }
  const PermutationRep rep = class_representation(g, *chosen, cfg.max_cosets);
  const std::string labels[] = {"a", "b"};
  const SchreierGraph graph = build_graph(rep, labels);
  const std::string text =
      cfg.format == "tikz"
          ? emit_tikz(graph, cfg.layout == "spring" ? Layout::Spring : Layout::Circular)
          : emit_dot(graph);
  return write_output(text, cfg.out_path);
}

int cmd_cosets(const SpecArgs& args, const Config& cfg) {
  const ToroidalSpec spec = args.spec();
  const std::vector<Word> subgens = parse_words(cfg.words);
  const CosetTable table = enumerate(toroidal_presentation(spec), subgens, cfg.max_cosets);
  const PermutationRep rep = to_permutation_rep(table);
  std::cout << "index " << table.size() << "\n" << rep.to_string() << "\n";
  return kOk;
}

int cmd_verify(const Config& cfg) {
  ScanRange range;
  if (!cfg.families.empty()) {
    range.families.clear();
    for (const auto& name : cfg.families) range.families.push_back(parse_family(name));
  }
  range.min_sum = cfg.min_sum;
  range.max_sum = cfg.max_sum;
  range.ordered_only = cfg.ordered;
  const std::vector<VerificationReport> reports = verify_range(range, cfg.analysis());
  std::size_t failed = 0;
  Json list = Json::array();
  for (const auto& r : reports) {
    if (!r.passed()) ++failed;
    if (cfg.format == "json") {
      list.push_back(to_json(r));
      continue;
    }
    std::cout << (r.passed() ? "PASS  " : "FAIL  ") << r.spec.to_string() << "\n";
    if (!r.error.empty()) std::cout << "      error: " << r.error << "\n";
    for (const auto& c : r.checks) {
      if (!c.passed) std::cout << "      " << c.name << ": " << c.detail << "\n";
    }
  }
  if (cfg.format == "json") {
    Json j{{"schema", kJsonSchemaVersion},
           {"specs", reports.size()},
           {"failed", failed},
           {"reports", std::move(list)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << reports.size() - failed << "/" << reports.size() << " specs passed\n";
  }
  return failed == 0 ? kOk : kVerificationFailed;
}

int cmd_table(const Config& cfg) {
  ScanRange range;
  if (!cfg.families.empty()) {
    range.families.clear();
    for (const auto& name : cfg.families) range.families.push_back(parse_family(name));
  }
  range.min_sum = cfg.min_sum;
  range.max_sum = cfg.max_sum;
  range.ordered_only = cfg.ordered;
  std::vector<DegreeReport> reports;
  bool ok = true;
  for (const ScanEntry& e : scan(range, cfg.analysis())) {
    if (!e.error.empty()) {
      std::cerr << "error: " << e.spec.to_string() << ": " << e.error << "\n";
      ok = false;
      continue;
    }
    ok = ok && (e.report.match || !e.report.formula_asserted);
    reports.push_back(e.report);
  }
  std::cout << degree_table(reports);
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Faithful transitive permutation representations of toroidal maps"};
  app.require_subcommand(1);
  Config cfg;
  SpecArgs spec;

  app.add_option("--max-cosets", cfg.max_cosets, "live coset limit for enumeration")
      ->envname("TOROMAPS_MAX_COSETS")
      ->check(CLI::PositiveNumber);
  app.add_flag("--serial", cfg.serial, "use the serial kernels");

  auto* order = app.add_subcommand("order", "group and translation subgroup orders");
  add_spec_options(order, spec);
  order->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

  auto* degrees = app.add_subcommand("degrees", "brute-force and predicted degree sets");
  add_spec_options(degrees, spec);
  degrees->add_option("--format", cfg.format)->check(CLI::IsMember({"table", "json"}));
  degrees->add_flag("--classes", cfg.with_classes, "include all subgroup classes in JSON");

  auto* reps = app.add_subcommand("reps", "one representation per core-free class");
  add_spec_options(reps, spec);
  reps->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

  auto* graph = app.add_subcommand("graph", "Schreier coset graph of a representation");
  add_spec_options(graph, spec);
  graph->add_option("--degree", cfg.degree)->required();
  graph->add_option("--format", cfg.format)->check(CLI::IsMember({"dot", "tikz"}));
  graph->add_option("--layout", cfg.layout)->check(CLI::IsMember({"circular", "spring"}));
  graph->add_option("--out", cfg.out_path, "output file (default stdout)");

  auto* cosets = app.add_subcommand("cosets", "coset action on a subgroup given by words");
  add_spec_options(cosets, spec);
  cosets->add_option("--word", cfg.words, "subgroup generator, e.g. a*b^-1");

  auto add_range = [&cfg](CLI::App* cmd) {
    cmd->add_option("--max-sum", cfg.max_sum, "largest s1 + s2")->check(CLI::NonNegativeNumber);
    cmd->add_option("--min-sum", cfg.min_sum, "smallest s1 + s2")->check(CLI::NonNegativeNumber);
    cmd->add_option("--family", cfg.families, "restrict to families (repeatable)")
        ->check(CLI::IsMember(kFamilyNames));
    cmd->add_flag("--ordered", cfg.ordered, "only vectors with s1 >= s2");
  };
  auto* verify = app.add_subcommand("verify", "run every check over a range of vectors");
  add_range(verify);
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
  auto* table = app.add_subcommand("table", "degree table over a range of vectors");
  add_range(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (order->parsed()) return cmd_order(spec, cfg);
    if (degrees->parsed()) return cmd_degrees(spec, cfg);
    if (reps->parsed()) return cmd_reps(spec, cfg);
    if (graph->parsed()) return cmd_graph(spec, cfg);
    if (cosets->parsed()) return cmd_cosets(spec, cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (table->parsed()) return cmd_table(cfg);
  } catch (const InvalidSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const toromaps::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapacity;
  }
  return kUsage;
}
