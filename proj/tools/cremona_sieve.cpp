// cremona-sieve: command-line front end for the classification pipelines.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cremona/errors.hpp"
#include "cremona/filters.hpp"
#include "cremona/invariants.hpp"
#include "cremona/report_io.hpp"
#include "cremona/sieve.hpp"
#include "cremona/reference_table.hpp"

namespace {

using namespace cremona;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  std::string format = "table";
  std::string expect;
  std::optional<std::int64_t> d2_threshold;
  int bound_delta = 32;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open '" + path + "'");
  }
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

PipelineSpec resolve_pipeline(const std::string& value, const Globals& g) {
  PipelineSpec spec;
  const auto names = builtin_pipeline_names();
  if (std::find(names.begin(), names.end(), value) != names.end()) {
    spec = builtin_pipeline(value);
  } else if (std::filesystem::exists(value)) {
    if (std::filesystem::path(value).extension() == ".toml") {
      throw ConfigError("TOML pipeline files are not supported; use JSON");
    }
    spec = pipeline_spec_from_json(read_json_file(value));
  } else {
    throw ConfigError("unknown pipeline '" + value + "' (built-ins: cubic-p6, cubo-cubic-p7)");
  }
  if (g.d2_threshold) {
    spec.d2_threshold = *g.d2_threshold;
  }
  return spec;
}

int compare_expected(const Json& actual, const std::string& path) {
  const Json expected = read_json_file(path);
  if (golden_equal(expected, actual)) {
    std::cerr << "expectation " << path << ": match\n";
    return kOk;
  }
  std::cerr << "expectation " << path << ": MISMATCH\n";
  return kCheckFailed;
}

int cmd_classify(const Globals& g, const std::string& pipeline, const std::string& stage_sel) {
  const PipelineSpec spec = resolve_pipeline(pipeline, g);
  const ClassificationReport report = run_pipeline(spec);

  const StageReport* stage = nullptr;
  if (!stage_sel.empty()) {
    const bool numeric = std::all_of(stage_sel.begin(), stage_sel.end(), [](unsigned char c) { return std::isdigit(c); });
    if (numeric) {
      const auto index = std::stoul(stage_sel);
      if (index >= report.stages.size()) {
        throw ConfigError("stage index " + stage_sel + " out of range (pipeline has " +
                          std::to_string(report.stages.size()) + " stages)");
      }
      stage = &report.stages[index];
    } else {
      stage = &report.stage(stage_sel);
    }
  }

  Json json;
  if (stage) {
    json = Json{{"meta", meta_json()}};
    json.update(stage_to_json(*stage));
  } else {
    json = report_to_json(report);
  }

  if (g.format == "json") {
    std::cout << dump(json);
  } else if (g.format == "csv") {
    if (stage) {
      std::cout << "stage,lambda,genus,nu\n";
      write_csv(std::cout, *stage);
    } else {
      write_csv(std::cout, report);
    }
  } else if (stage) {
    write_table(std::cout, *stage);
  } else {
    write_table(std::cout, report);
  }
  return g.expect.empty() ? kOk : compare_expected(json, g.expect);
}

std::string join(const std::vector<Integer>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    os << (i ? "," : "") << values[i];
  }
  return os.str();
}

void warn_outside_domain(const PipelineSpec& spec, std::int64_t l, std::int64_t genus, std::int64_t nu) {
  const auto& cfg = spec.config;
  const std::int64_t lmax = spec.domain.lambda_max.value_or(cfg.degree_bound());
  bool inside = l >= spec.domain.lambda_min && l <= lmax && genus >= 0 && nu >= 0;
  if (inside && l >= 1) {
    inside = genus <= spec.domain.genus_max.value_or(castelnuovo_bound(l, cfg.curve_section_ambient()));
  }
  if (!inside) {
    std::cerr << "warning: (" << l << "," << genus << "," << nu << ") lies outside the enumeration domain\n";
  }
}

int cmd_invariants(const Globals& g, const std::string& pipeline, std::optional<std::int64_t> lambda,
                   std::optional<std::int64_t> genus, std::optional<std::int64_t> nu) {
  if (lambda.has_value() != genus.has_value()) {
    throw ConfigError("--lambda and --genus must be given together");
  }
  if (nu && !lambda) {
    throw ConfigError("--nu needs --lambda and --genus");
  }
  const PipelineSpec spec = resolve_pipeline(pipeline, g);
  const auto& cfg = spec.config;
  const InvariantTable base = solve_invariants(cfg);
  const InvariantTable reduction = reduction_table(base);
  const Multidegree md = multidegree(cfg, base);
  const auto d = pluridegrees(reduction);
  const Polynomial lebarz = lebarz_bound_polynomial(base);

  std::optional<Assignment> at;
  if (lambda) {
    warn_outside_domain(spec, *lambda, *genus, nu.value_or(0));
    at = Assignment{{Var::Lambda, Polynomial(Rational(*lambda))},
                    {Var::Genus, Polynomial(Rational(*genus))},
                    {Var::Nu, Polynomial(Rational(nu.value_or(0)))}};
  }
  const auto show = [&](const Polynomial& p) { return at ? evaluate(p, *at) : p; };

  Json entries = Json::object();
  for (const auto& [k, v] : base.entries()) {
    entries[k] = show(v).to_string();
  }
  Json section = Json::object();
  if (base.section()) {
    for (const auto& [k, v] : base.section()->entries()) {
      section[k] = show(v).to_string();
    }
  }
  Json mdj = Json::array();
  for (const auto& e : md.entries) {
    mdj.push_back(show(e).to_string());
  }
  Json dj = Json::array();
  for (const auto& e : d) {
    dj.push_back(show(e).to_string());
  }
  Json point = nullptr;
  if (lambda) {
    point = Json::array({*lambda, *genus, nu.value_or(0)});
  }

  if (g.format == "json") {
    Json out{{"meta", meta_json()},
             {"pipeline", spec.name},
             {"config", cfg.to_string()},
             {"point", point},
             {"hilbert_polynomial", show(base.hilbert().polynomial).to_string()},
             {"entries", entries}};
    if (base.section()) {
      out["section"] = section;
    }
    out["multidegree"] = mdj;
    out["pluridegrees"] = dj;
    out["le_barz_bound"] = show(lebarz).to_string();
    std::cout << dump(out);
    return kOk;
  }
  std::cout << cfg.to_string() << "\n";
  if (lambda) {
    std::cout << "at (lambda, g, nu) = (" << *lambda << ", " << *genus << ", " << nu.value_or(0) << ")\n";
  }
  std::cout << "hilbert polynomial: " << show(base.hilbert().polynomial) << "\n";
  std::cout << "invariants:\n";
  for (const auto& [k, v] : base.entries()) {
    std::cout << "  " << k << " = " << show(v) << "\n";
  }
  if (base.section()) {
    std::cout << "hyperplane section invariants:\n";
    for (const auto& [k, v] : base.section()->entries()) {
      std::cout << "  " << k << " = " << show(v) << "\n";
    }
  }
  std::cout << "multidegree:";
  for (std::size_t i = 0; i < md.size(); ++i) {
    std::cout << (i ? ", " : " ") << show(md[i]);
  }
  std::cout << "\npluridegrees:";
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::cout << (i ? ", " : " ") << show(d[i]);
  }
  std::cout << "\nle-barz bound: " << show(lebarz) << "\n";
  return kOk;
}

int cmd_check_multidegree(const std::string& sequence) {
  std::vector<Integer> md;
  std::stringstream ss(sequence);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    token = first == std::string::npos ? "" : token.substr(first, last - first + 1);
    Integer value;
    if (token.empty() || value.set_str(token, 10) != 0) {
      std::cerr << "error: '" << token << "' is not an integer\n";
      return kUsage;
    }
    md.push_back(value);
  }
  if (md.empty()) {
    std::cerr << "error: empty sequence\n";
    return kUsage;
  }
  const auto violations = multidegree_admissible(md);
  if (violations.empty()) {
    std::cout << "pass: " << join(md) << "\n";
    return kOk;
  }
  std::cout << "fail: " << join(md) << "\n";
  for (const auto& v : violations) {
    std::cout << "  " << v.describe() << "\n";
  }
  return kCheckFailed;
}

int cmd_verify_table(const Globals& g) {
  const auto checks = verify_reference_table();
  bool all = true;
  Json rows = Json::array();
  for (const auto& c : checks) {
    all = all && c.passed();
    if (g.format == "json") {
      Json row{{"row", c.row->row},
               {"n", c.row->n},
               {"r", c.row->r},
               {"multidegree", join(c.row->multidegree)},
               {"admissible", c.violations.empty()}};
      if (c.recomputed) {
        row["recomputed"] = join(*c.recomputed);
      }
      row["pass"] = c.passed();
      rows.push_back(std::move(row));
      continue;
    }
    std::cout << std::left << std::setw(5) << c.row->row << " n=" << c.row->n << " r=" << c.row->r << "  "
              << std::setw(24) << join(c.row->multidegree) << (c.violations.empty() ? " admissible" : " VIOLATION");
    if (c.recomputed) {
      std::cout << "; recomputed from (" << *c.row->lambda << "," << *c.row->genus << "): " << join(*c.recomputed)
                << (c.recomputation_matches() ? " match" : " MISMATCH");
    }
    std::cout << "  " << (c.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& v : c.violations) {
      std::cout << "      " << v.describe() << "\n";
    }
  }
  if (g.format == "json") {
    std::cout << dump(Json{{"meta", meta_json()}, {"rows", rows}, {"pass", all}});
  }
  return all ? kOk : kCheckFailed;
}

int cmd_admissible_types(const Globals& g, std::optional<int> n, std::optional<int> r) {
  const auto types = admissible_types({n, r, g.bound_delta});
  if (g.format == "json") {
    Json out = Json::array();
    for (const auto& t : types) {
      out.push_back({{"n", t.n},
                     {"delta1", t.delta1},
                     {"delta2", t.delta2},
                     {"dim_base", t.dim_base},
                     {"dim_inverse_base", t.dim_inverse_base}});
    }
    std::cout << dump(Json{{"meta", meta_json()}, {"types", out}});
  } else {
    for (const auto& t : types) {
      std::cout << t.to_string() << "\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sieve for special Cremona transformations"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--expect", g.expect, "Golden JSON file to compare against");
  app.add_option("--d2-threshold", g.d2_threshold, "Lower bound used for d2 in the log-general filters")
      ->check(CLI::IsMember({1, 3}));
  app.add_option("--bound-delta", g.bound_delta, "Search bound for delta1, delta2")->check(CLI::Range(2, 4096));

  std::string pipeline;
  std::string stage;
  auto* classify = app.add_subcommand("classify", "Run a pipeline and print its report");
  classify->add_option("--pipeline", pipeline, "Built-in name or JSON spec path")->required();
  classify->add_option("--stage", stage, "Print one stage (index or name)");

  std::string inv_pipeline;
  std::optional<std::int64_t> lambda;
  std::optional<std::int64_t> genus;
  std::optional<std::int64_t> nu;
  auto* invariants = app.add_subcommand("invariants", "Print the invariant table");
  invariants->add_option("--pipeline", inv_pipeline, "Built-in name or JSON spec path")->required();
  invariants->add_option("--lambda", lambda, "Degree");
  invariants->add_option("--genus", genus, "Sectional genus");
  invariants->add_option("--nu", nu, "Number of blown-up points");

  std::string sequence;
  auto* check = app.add_subcommand("check-multidegree", "Check a projective degree sequence");
  check->add_option("sequence", sequence, "Comma-separated integers")->required();

  auto* verify = app.add_subcommand("verify-table", "Verify the embedded classification table");

  std::optional<int> types_n;
  std::optional<int> types_r;
  auto* types = app.add_subcommand("admissible-types", "Solve the dimension formula");
  types->add_option("--n", types_n, "Fixed ambient dimension");
  types->add_option("--r", types_r, "Fixed base locus dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) return cmd_classify(g, pipeline, stage);
    if (*invariants) return cmd_invariants(g, inv_pipeline, lambda, genus, nu);
    if (*check) return cmd_check_multidegree(sequence);
    if (*verify) return cmd_verify_table(g);
    if (*types) return cmd_admissible_types(g, types_n, types_r);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
