// z2z4q8: analyze, construct, reproduce and search Z2Z4Q8 codes.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "z2z4q8/constructions.hpp"
#include "z2z4q8/io.hpp"
#include "z2z4q8/report.hpp"
#include "z2z4q8/reproduce.hpp"
#include "z2z4q8/search.hpp"

namespace {

using namespace z2z4q8;

enum Exit { kOk = 0, kAnalysisError = 1, kParseError = 2, kMismatch = 3 };

struct Common {
  bool json = false;
  std::size_t max_order = kDefaultMaxOrder;
  bool full_kernel_check = false;
  std::uint64_t seed = 1;
  bool serial = false;

  [[nodiscard]] CheckOptions check() const {
    CheckOptions o;
    o.max_order = max_order;
    o.full_kernel_check = full_kernel_check;
    o.seed = seed;
    o.exec = serial ? Exec::Serial : Exec::Parallel;
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c, bool analysis_flags) {
  cmd->add_flag("--json", c.json, "Print a JSON report");
  cmd->add_option("--seed", c.seed, "Seed for sampled checks")->capture_default_str();
  cmd->add_flag("--serial", c.serial, "Use the serial reference kernels");
  if (analysis_flags) {
    cmd->add_option("--max-order", c.max_order, "Largest subgroup order to enumerate")->capture_default_str();
    cmd->add_flag("--full-kernel-check", c.full_kernel_check, "Also search the kernel over all of Z2^n (n <= 24)");
  }
}

CodeGroup load(const std::string& path, const Common& c) {
  const auto f = read_generator_file(path);
  return enumerate(f.signature, f.generators, c.max_order);
}

void emit(const CodeGroup& g, const Common& c) {
  if (c.json) {
    std::cout << to_json(analyze(g, c.check())) << "\n";
  } else {
    std::cout << print_generators({g.signature(), g.generators()});
  }
}

int cmd_analyze(const std::string& path, const Common& c) {
  const auto g = load(path, c);
  const auto rep = analyze(g, c.check());
  std::cout << (c.json ? to_json(rep) + "\n" : to_text(rep));
  return rep.bounds.all_ok() ? kOk : kAnalysisError;
}

GroupWord element_arg(const GroupSignature& sig, const std::string& text) {
  try {
    return parse_element(sig, text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.message(), "--element");
  }
}

int cmd_construct(const std::string& kind, const std::string& path, const std::string& element, bool lift,
                  const Common& c) {
  const auto base = load(path, c);
  if (kind == "lift") {
    emit(xi_lift(base), c);
  } else if (kind == "extend") {
    const auto cq = lift ? xi_lift(base) : base;
    if (element.empty()) throw CLI::ValidationError("--element", "extend needs --element");
    emit(extend(cq, element_arg(cq.signature(), element)), c);
  } else {
    const auto g = element.empty() ? GroupWord::identity(base.signature()) : element_arg(base.signature(), element);
    const auto r = generalized_kronecker(base, g);
    if (!c.json) std::cerr << "predicted type " << to_string(r.predicted_type) << "\n";
    emit(r.output, c);
  }
  return kOk;
}

int cmd_reproduce(const std::string& which, const Common& c, bool list, bool verbose) {
  if (list) {
    for (const auto& info : reproduce_cases()) std::cout << info.id << "  " << info.title << "\n";
    return kOk;
  }
  ReproduceOptions opt;
  opt.check = c.check();
  opt.seed = c.seed;
  std::vector<CaseResult> results;
  for (const auto& info : reproduce_cases())
    if (which == "all" || which == info.id) results.push_back(run_case(info.id, opt));
  if (results.empty()) throw CLI::ValidationError("case", "unknown case '" + which + "' (see --list)");

  bool all_ok = true;
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    all_ok = all_ok && r.ok();
    if (c.json) {
      auto checks = nlohmann::ordered_json::array();
      for (const auto& k : r.checks)
        checks.push_back({{"name", k.name}, {"expected", k.expected}, {"actual", k.actual}, {"ok", k.ok}});
      out.push_back({{"id", r.id}, {"ok", r.ok()}, {"error", r.error.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.error)},
                     {"checks", checks}});
      continue;
    }
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.id << "  " << r.title << "\n";
    if (!r.error.empty()) std::cout << "  error: " << r.error << "\n";
    for (const auto& k : r.checks)
      if (verbose || !k.ok)
        std::cout << "  " << (k.ok ? "ok   " : "FAIL ") << k.name << ": expected " << k.expected << ", got " << k.actual
                  << "\n";
  }
  if (c.json) std::cout << out.dump(2) << "\n";
  return all_ok ? kOk : kMismatch;
}

int cmd_search(const SearchOptions& so, const Common& c) {
  const auto res = search(so);
  if (c.json) {
    nlohmann::ordered_json hits = nlohmann::ordered_json::array();
    for (const auto& h : res.hits) {
      const auto& g = h.found.code;
      nlohmann::ordered_json gens = nlohmann::ordered_json::array();
      for (const auto& w : g.generators()) gens.push_back(to_string(w));
      hits.push_back({{"sample", h.sample},
                      {"recipe", h.found.recipe},
                      {"signature", {g.signature().k1, g.signature().k2, g.signature().k3}},
                      {"generators", gens},
                      {"type", {h.type.sigma, h.type.delta, h.type.rho}},
                      {"shape", h.shape},
                      {"rank", h.rank},
                      {"kernel_dim", h.kernel_dim}});
    }
    nlohmann::ordered_json counts = nlohmann::ordered_json::array();
    for (const auto& [rk, n] : res.rank_kernel_counts)
      counts.push_back({{"rank", rk.first}, {"kernel_dim", rk.second}, {"count", n}});
    nlohmann::ordered_json out = {{"length", so.length}, {"shape", so.shape == 0 ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(so.shape)},
                                  {"seed", so.seed},     {"budget", so.budget},
                                  {"rank_kernel_counts", counts}, {"codes", hits}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "# (rank, kernel):";
  for (const auto& [rk, n] : res.rank_kernel_counts) std::cout << " (" << rk.first << "," << rk.second << ")x" << n;
  std::cout << "\n";
  for (const auto& h : res.hits) {
    std::cout << "# sample " << h.sample << "  shape " << h.shape << "  type " << to_string(h.type) << "  r " << h.rank
              << "  k " << h.kernel_dim << "\n# " << h.found.recipe << "\n";
    std::cout << print_generators({h.found.code.signature(), h.found.code.generators()}) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank, kernel and structure of Z2Z4Q8 codes"};
  app.require_subcommand(1);

  Common common;
  std::string path, kind, element, which = "all";
  bool lift = false, list = false, verbose = false;
  SearchOptions so;

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze the code generated by a generator file");
  analyze_cmd->add_option("file", path, "Generator file")->required()->check(CLI::ExistingFile);
  add_common(analyze_cmd, common, true);

  auto* construct_cmd = app.add_subcommand("construct", "Build a code with lift, extend or kronecker");
  construct_cmd->add_option("kind", kind, "lift | extend | kronecker")
      ->required()
      ->check(CLI::IsMember({"lift", "extend", "kronecker"}));
  construct_cmd->add_option("file", path, "Generator file")->required()->check(CLI::ExistingFile);
  construct_cmd->add_option("--element", element, "Extension element x, or g for kronecker (default e)");
  construct_cmd->add_flag("--lift", lift, "Lift the input before extending");
  add_common(construct_cmd, common, true);

  auto* reproduce_cmd = app.add_subcommand("reproduce", "Run the built-in reference cases");
  reproduce_cmd->add_option("case", which, "Case id or 'all'")->capture_default_str();
  reproduce_cmd->add_flag("--list", list, "List case ids");
  reproduce_cmd->add_flag("-v,--verbose", verbose, "Print every check");
  add_common(reproduce_cmd, common, false);

  auto* search_cmd = app.add_subcommand("search", "Sample Hadamard codes from the constructions");
  search_cmd->add_option("--length", so.length, "Binary length (power of two)")->required();
  search_cmd->add_option("--shape", so.shape, "Shape 1..5, or 0 for any")->capture_default_str();
  search_cmd->add_option("--budget", so.budget, "Number of samples")->capture_default_str();
  add_common(search_cmd, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParseError;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(path, common);
    if (construct_cmd->parsed()) return cmd_construct(kind, path, element, lift, common);
    if (reproduce_cmd->parsed()) return cmd_reproduce(which, common, list, verbose);
    so.seed = common.seed;
    so.exec = common.serial ? Exec::Serial : Exec::Parallel;
    return cmd_search(so, common);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kAnalysisError;
  }
}
