#include "cremona/sieve.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <memory>
#include <set>
#include <thread>

#include "cremona/errors.hpp"
#include "cremona/invariants.hpp"

namespace cremona {

namespace {

const std::array<std::string_view, 4> kStageKinds = {"domain", "filter", "extend-nu", "solve-nu"};
const std::array<std::string_view, 4> kBranchKinds = {"plain", "log-general", "conic-bundle",
                                                      "del-pezzo-fibration"};

unsigned effective_threads(unsigned requested, std::size_t work) {
  unsigned threads = requested == 0 ? std::max(1U, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(work / 64, 1)));
}

// Linear nu-bound a*nu + b >= 0 with constant a < 0: returns the largest admissible nu,
// or nullopt when the expression is not of that shape.
std::optional<std::int64_t> nu_upper_bound(const Filter& f, const Tuple& pair) {
  const Polynomial& e = f.expression();
  if (e.degree(Var::Nu) != 1) {
    return std::nullopt;
  }
  const Polynomial a = e.coefficient_of(Var::Nu, 1);
  const Polynomial b = e.coefficient_of(Var::Nu, 0);
  const Rational av = evaluate_at(a, pair.point());
  if (av.sign() >= 0) {
    return std::nullopt;
  }
  const Rational bound = evaluate_at(b, pair.point()) / (-av);
  return bound.floor().get_si();
}

bool is_nu_bound(const Filter& f) {
  const Polynomial& e = f.expression();
  if (f.guard() || f.relation() != Relation::GreaterEqual || e.degree(Var::Nu) != 1) {
    return false;
  }
  const Polynomial a = e.coefficient_of(Var::Nu, 1);
  return a.is_constant() && a.constant_term().sign() < 0;
}

struct PreparedStage {
  const StageSpec* spec;
  int input = -1;
  bool has_nu = false;
  std::vector<const Filter*> filters;
};

struct Prepared {
  TransformationConfig cfg;
  std::vector<AdmissibleType> type_check;
  std::shared_ptr<const InvariantTable> base;
  FilterBank bank;
  std::vector<PreparedStage> stages;
};

Prepared prepare(const PipelineSpec& spec) {
  Prepared p{spec.config, {}, nullptr, {}, {}};
  if (spec.type_check_n) {
    p.type_check = admissible_types({*spec.type_check_n, std::nullopt, 32});
    const auto& c = spec.config;
    const bool found = std::any_of(p.type_check.begin(), p.type_check.end(), [&](const AdmissibleType& t) {
      return t.n == c.n() && t.delta1 == c.delta1() && t.delta2 == c.delta2() && t.dim_base == c.r();
    });
    if (!found) {
      throw ConfigError("the configured type is not admissible for n = " + std::to_string(*spec.type_check_n));
    }
  }
  if (spec.d2_threshold != 1 && spec.d2_threshold != 3) {
    throw ConfigError("d2 threshold must be 1 or 3");
  }
  if (spec.config.mode() != Mode::Generic) {
    p.base = std::make_shared<const InvariantTable>(solve_invariants(spec.config));
    p.bank = FilterBank::builtin(spec.config, *p.base, spec.d2_threshold);
  }
  for (const auto& f : spec.filters) {
    if (f.expression.depends_on(Var::T)) {
      throw ConfigError("filter '" + f.name + "' uses the variable t");
    }
    p.bank.add(Filter(f.name, f.relation, f.expression, "user"), {});
  }

  std::map<std::string, int, std::less<>> index;
  for (std::size_t i = 0; i < spec.stages.size(); ++i) {
    const StageSpec& s = spec.stages[i];
    PreparedStage ps{&s, -1, false, {}};
    if (s.name.empty() || index.count(s.name)) {
      throw ConfigError("stage names must be unique and nonempty: '" + s.name + "'");
    }
    if (s.kind == StageKind::Domain) {
      if (i != 0 || s.input) {
        throw ConfigError("the domain stage must come first and take no input");
      }
    } else {
      if (i == 0) {
        throw ConfigError("the first stage must be the domain stage");
      }
      if (s.input) {
        const auto it = index.find(*s.input);
        if (it == index.end()) {
          throw ConfigError("stage '" + s.name + "' reads unknown or later stage '" + *s.input + "'");
        }
        ps.input = it->second;
      } else {
        ps.input = static_cast<int>(i) - 1;
      }
    }
    std::set<std::string> seen;
    for (const auto& name : s.filters) {
      for (const Filter* f : p.bank.resolve(name)) {
        if (seen.insert(f->name()).second) {
          ps.filters.push_back(f);
        }
      }
    }
    const bool input_nu = ps.input >= 0 && p.stages[static_cast<std::size_t>(ps.input)].has_nu;
    switch (s.kind) {
      case StageKind::Domain:
      case StageKind::Filter:
        ps.has_nu = input_nu;
        for (const Filter* f : ps.filters) {
          if (!ps.has_nu && f->depends_on_nu()) {
            throw ConfigError("stage '" + s.name + "': filter '" + f->name() +
                              "' needs nu but the input tuples are pairs");
          }
        }
        break;
      case StageKind::ExtendNu:
        if (input_nu) {
          throw ConfigError("stage '" + s.name + "' extends tuples that already carry nu");
        }
        if (ps.filters.empty()) {
          throw ConfigError("stage '" + s.name + "' needs at least one nu bound");
        }
        for (const Filter* f : ps.filters) {
          if (!is_nu_bound(*f)) {
            throw ConfigError("stage '" + s.name + "': filter '" + f->name() +
                              "' is not an upper bound linear in nu");
          }
        }
        ps.has_nu = true;
        break;
      case StageKind::SolveNu:
        if (input_nu) {
          throw ConfigError("stage '" + s.name + "' solves for nu on tuples that already carry it");
        }
        if (ps.filters.empty()) {
          throw ConfigError("stage '" + s.name + "' needs an equality system");
        }
        for (const Filter* f : ps.filters) {
          if (f->kind() != FilterKind::Equality || f->expression().degree(Var::Nu) > 1) {
            throw ConfigError("stage '" + s.name + "': filter '" + f->name() +
                              "' is not an equality of degree <= 1 in nu");
          }
        }
        ps.has_nu = true;
        break;
    }
    index.emplace(s.name, static_cast<int>(i));
    p.stages.push_back(std::move(ps));
  }
  if (p.stages.empty()) {
    throw ConfigError("pipeline '" + spec.name + "' has no stages");
  }
  for (const auto& b : spec.branches) {
    if (!index.count(b.stage)) {
      throw ConfigError("branch '" + b.name + "' refers to unknown stage '" + b.stage + "'");
    }
    if (b.kind != BranchKind::Plain && !p.base) {
      throw ConfigError("branch '" + b.name + "' needs an invariant table");
    }
  }
  return p;
}

std::vector<std::string> filter_names(const std::vector<const Filter*>& filters) {
  std::vector<std::string> out;
  for (const Filter* f : filters) {
    out.push_back(f->name());
  }
  return out;
}

StageReport extend_nu(std::span<const Tuple> pairs, const std::vector<const Filter*>& bounds) {
  StageReport report;
  report.in = pairs.size();
  for (const Tuple& pair : pairs) {
    std::int64_t upper = std::numeric_limits<std::int64_t>::max();
    for (const Filter* f : bounds) {
      upper = std::min(upper, *nu_upper_bound(*f, pair));
    }
    if (upper < 0) {
      Tuple at_zero{pair.lambda, pair.genus, 0};
      ExclusionRecord record{at_zero, {}, {}};
      for (const Filter* f : bounds) {
        if (!f->passes(at_zero)) {
          record.filters.push_back(f->name());
        }
      }
      report.exclusions.push_back(std::move(record));
      continue;
    }
    for (std::int64_t v = 0; v <= upper; ++v) {
      report.survivors.push_back({pair.lambda, pair.genus, v});
    }
  }
  report.out = report.survivors.size();
  return report;
}

StageReport solve_nu(std::span<const Tuple> pairs, const std::vector<const Filter*>& system) {
  StageReport report;
  report.in = pairs.size();
  for (const Tuple& pair : pairs) {
    const Assignment at{{Var::Lambda, Polynomial(Rational(pair.lambda))},
                        {Var::Genus, Polynomial(Rational(pair.genus))}};
    std::optional<Rational> candidate;
    for (const Filter* f : system) {
      const Polynomial e = evaluate(f->expression(), at);
      if (e.degree(Var::Nu) == 1) {
        candidate = -e.coefficient_of(Var::Nu, 0).constant_term() / e.coefficient_of(Var::Nu, 1).constant_term();
        break;
      }
    }
    if (!candidate) {
      const Tuple t{pair.lambda, pair.genus, 0};
      ExclusionRecord record{pair, {}, {}};
      for (const Filter* f : system) {
        if (!f->passes(t)) {
          record.filters.push_back(f->name());
        }
      }
      if (record.filters.empty()) {
        throw SolveError("nu is not determined by the system at " + pair.to_string());
      }
      record.note = "system independent of nu and violated";
      report.exclusions.push_back(std::move(record));
      continue;
    }
    if (!candidate->is_integer() || candidate->sign() < 0) {
      report.exclusions.push_back(
          {pair, filter_names(system), "nu = " + candidate->to_string() + " is not a non-negative integer"});
      continue;
    }
    const Tuple t{pair.lambda, pair.genus, candidate->to_int64()};
    ExclusionRecord record{t, {}, {}};
    for (const Filter* f : system) {
      if (!f->passes(t)) {
        record.filters.push_back(f->name());
      }
    }
    if (record.filters.empty()) {
      report.survivors.push_back(t);
    } else {
      report.exclusions.push_back(std::move(record));
    }
  }
  std::sort(report.survivors.begin(), report.survivors.end());
  report.out = report.survivors.size();
  return report;
}

Rational at_tuple(const Polynomial& p, const Tuple& t) { return evaluate_at(p, t.point()); }

Finalist make_finalist(const BranchReport& branch, const Tuple& t, const TransformationConfig& cfg,
                       const InvariantTable& base) {
  Finalist f;
  f.branch = branch.name;
  f.tuple = t;
  f.multidegree = multidegree(cfg, base).evaluate_at(t.lambda, t.genus, t.nu.value_or(0));
  f.multidegree_admissible = multidegree_admissible(f.multidegree).empty();
  const InvariantTable reduction = reduction_table(base.threefold());
  const auto d = pluridegrees(reduction);
  for (const auto& dj : d) {
    f.pluridegrees.push_back(at_tuple(dj, t).numerator());
  }
  for (const auto& [key, value] : reduction.entries()) {
    f.invariants.emplace_back(key, at_tuple(value, t));
  }
  const Rational chi0 = at_tuple(reduction.at(inv::kChi0), t);
  const Rational chim = at_tuple(reduction.at(inv::kChiMinusH), t);
  const auto& pd = f.pluridegrees;
  switch (branch.kind) {
    case BranchKind::Plain:
      f.label = branch.name;
      break;
    case BranchKind::LogGeneral:
      if (pd[0] == pd[1] && pd[1] == pd[2] && pd[2] == pd[3]) {
        f.label = "log-general type, numerically trivial canonical class";
      } else {
        f.label = "log-general type";
      }
      break;
    case BranchKind::ConicBundle: {
      const Rational h0 = -chim;  // h^0(K'+H') = h^3(-H') = -chi(O(-H'))
      f.facts = {{"h0(K+H)", h0}, {"d2", Rational(pd[2])}};
      f.label = (h0 == Rational(3) && pd[2] == 2) ? "conic bundle over P^2" : "conic bundle over a surface";
      break;
    }
    case BranchKind::DelPezzoFibration: {
      const Rational genus_c = Rational(1) - chi0;
      const Rational deg_hc = -chi0 - chim;
      f.facts = {{"g(C)", genus_c}, {"deg(H_C)", deg_hc}};
      std::string fibre;
      if (!deg_hc.is_zero()) {
        const Rational deg_f = Rational(pd[1]) / deg_hc;
        f.facts.emplace_back("deg(F)", deg_f);
        fibre = ", fibre degree " + deg_f.to_string();
      }
      f.label = genus_c.is_zero() ? "del Pezzo fibration over P^1" + fibre
                                  : "del Pezzo fibration over a curve of genus " + genus_c.to_string() + fibre;
      break;
    }
  }
  return f;
}

}  // namespace

std::string_view stage_kind_name(StageKind kind) { return kStageKinds[static_cast<std::size_t>(kind)]; }

StageKind parse_stage_kind(std::string_view name) {
  for (std::size_t i = 0; i < kStageKinds.size(); ++i) {
    if (kStageKinds[i] == name) {
      return static_cast<StageKind>(i);
    }
  }
  throw ConfigError("unknown stage kind '" + std::string(name) + "'");
}

std::string_view branch_kind_name(BranchKind kind) { return kBranchKinds[static_cast<std::size_t>(kind)]; }

BranchKind parse_branch_kind(std::string_view name) {
  for (std::size_t i = 0; i < kBranchKinds.size(); ++i) {
    if (kBranchKinds[i] == name) {
      return static_cast<BranchKind>(i);
    }
  }
  throw ConfigError("unknown branch kind '" + std::string(name) + "'");
}

StageReport enumerate(std::span<const Tuple> domain, std::span<const Filter* const> filters,
                      const EnumerateOptions& options) {
  std::vector<std::vector<std::string>> violated(domain.size());
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (const Filter* f : filters) {
        if (!f->passes(domain[i])) {
          violated[i].push_back(f->name());
        }
      }
    }
  };
  const unsigned threads = effective_threads(options.threads, domain.size());
  if (threads <= 1) {
    work(0, domain.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (domain.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < domain.size(); begin += chunk) {
      pool.emplace_back(work, begin, std::min(domain.size(), begin + chunk));
    }
    for (auto& th : pool) {
      th.join();
    }
  }

  StageReport report;
  report.in = domain.size();
  for (const Filter* f : filters) {
    report.filters.push_back(f->name());
  }
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (violated[i].empty()) {
      report.survivors.push_back(domain[i]);
    } else {
      std::sort(violated[i].begin(), violated[i].end());
      report.exclusions.push_back({domain[i], std::move(violated[i]), {}});
    }
  }
  std::sort(report.survivors.begin(), report.survivors.end());
  std::sort(report.exclusions.begin(), report.exclusions.end(),
            [](const ExclusionRecord& a, const ExclusionRecord& b) { return a.tuple < b.tuple; });
  report.out = report.survivors.size();
  return report;
}

StageReport enumerate(std::span<const Tuple> domain, const std::vector<Filter>& filters,
                      const EnumerateOptions& options) {
  std::vector<const Filter*> pointers;
  for (const auto& f : filters) {
    pointers.push_back(&f);
  }
  return enumerate(domain, pointers, options);
}

std::vector<Tuple> generate_domain(const DomainSpec& domain, const TransformationConfig& cfg) {
  const std::int64_t lambda_max = domain.lambda_max.value_or(cfg.degree_bound());
  std::vector<Tuple> out;
  for (std::int64_t l = domain.lambda_min; l <= lambda_max; ++l) {
    const std::int64_t gmax = domain.genus_max.value_or(castelnuovo_bound(l, cfg.curve_section_ambient()));
    for (std::int64_t g = 0; g <= gmax; ++g) {
      out.push_back({l, g, std::nullopt});
    }
  }
  return out;
}

std::vector<std::string> builtin_pipeline_names() { return {"cubic-p6", "cubo-cubic-p7"}; }

PipelineSpec builtin_pipeline(std::string_view name) {
  PipelineSpec spec;
  spec.name = std::string(name);
  const auto stage = [](std::string n, StageKind kind, std::vector<std::string> filters,
                        std::optional<std::string> input = std::nullopt, bool expect_empty = false) {
    return StageSpec{std::move(n), kind, std::move(input), std::move(filters), expect_empty};
  };
  using K = StageKind;
  if (name == "cubic-p6") {
    spec.config = TransformationConfig::cubic_p6();
    spec.stages = {
        stage("domain", K::Domain, {}),
        stage("livorni-sommese", K::Filter, {"livorni-sommese"}),
        stage("cremona-degrees", K::Filter, {"cremona-degrees"}),
        stage("reduction-existence.scroll-over-curve", K::Filter, {"scroll-over-curve"}, "cremona-degrees", true),
        stage("reduction-existence.adjunction-map-degenerate", K::Filter, {"adjunction-map-degenerate"},
              "cremona-degrees", true),
        stage("log-general.nu-range", K::ExtendNu, {"log-general.nu-range"}, "cremona-degrees"),
        stage("log-general.hodge", K::Filter, {"log-general.hodge"}),
        stage("log-general.all", K::Filter, {"log-general"}),
        stage("log-general.le-barz", K::Filter, {"le-barz"}),
        stage("special.veronese-fibration", K::SolveNu, {"veronese-fibration"}, "cremona-degrees", true),
        stage("special.mukai", K::SolveNu, {"mukai"}, "cremona-degrees", true),
        stage("special.del-pezzo-fibration", K::SolveNu, {"del-pezzo-fibration"}, "cremona-degrees", true),
        stage("special.conic-bundle", K::SolveNu, {"conic-bundle"}, "cremona-degrees"),
        stage("special.conic-bundle.le-barz", K::Filter, {"le-barz"}),
        stage("special.conic-bundle.surface-base", K::Filter, {"conic-bundle.surface-base"}),
    };
    spec.branches = {{"log-general", "log-general.le-barz", BranchKind::LogGeneral},
                     {"conic-bundle", "special.conic-bundle.surface-base", BranchKind::ConicBundle}};
    return spec;
  }
  if (name == "cubo-cubic-p7") {
    spec.config = TransformationConfig::cubo_cubic_p7();
    spec.type_check_n = 7;
    spec.stages = {
        stage("domain", K::Domain, {}),
        stage("livorni-sommese", K::Filter, {"livorni-sommese"}),
        stage("cremona-degrees", K::Filter, {"cremona-degrees"}),
        stage("reduction-existence.scroll-over-curve", K::Filter, {"scroll-over-curve"}, "cremona-degrees", true),
        stage("reduction-existence.adjunction-map-degenerate", K::Filter, {"adjunction-map-degenerate"},
              "cremona-degrees", true),
        stage("le-barz.nu-range", K::ExtendNu, {"le-barz"}, "cremona-degrees"),
        stage("log-general.all", K::Filter, {"log-general"}),
        stage("log-general.hodge-equality", K::Filter, {"log-general.hodge-equality"}),
        stage("special.veronese-fibration", K::Filter, {"veronese-fibration"}, "le-barz.nu-range", true),
        stage("special.mukai", K::Filter, {"mukai"}, "le-barz.nu-range", true),
        stage("special.d3-zero", K::Filter, {"conic-bundle"}, "le-barz.nu-range"),
        stage("special.del-pezzo-fibration", K::Filter, {"del-pezzo-fibration"}),
        stage("special.conic-bundle", K::Filter, {"conic-bundle.surface-base"}, "special.d3-zero"),
    };
    spec.branches = {{"log-general", "log-general.hodge-equality", BranchKind::LogGeneral},
                     {"del-pezzo-fibration", "special.del-pezzo-fibration", BranchKind::DelPezzoFibration},
                     {"conic-bundle", "special.conic-bundle", BranchKind::ConicBundle}};
    return spec;
  }
  throw ConfigError("unknown pipeline '" + std::string(name) + "'");
}

const StageReport& ClassificationReport::stage(std::string_view name) const {
  for (const auto& s : stages) {
    if (s.name == name) {
      return s;
    }
  }
  throw ConfigError("report has no stage '" + std::string(name) + "'");
}

void validate_pipeline(const PipelineSpec& spec) { (void)prepare(spec); }

ClassificationReport run_pipeline(const PipelineSpec& spec) {
  const Prepared p = prepare(spec);
  ClassificationReport report;
  report.pipeline = spec.name;
  report.config = p.cfg.to_string();
  report.type_check = p.type_check;

  const EnumerateOptions options{spec.threads};
  for (const auto& ps : p.stages) {
    const StageSpec& s = *ps.spec;
    StageReport stage;
    switch (s.kind) {
      case StageKind::Domain: {
        const auto domain = generate_domain(spec.domain, p.cfg);
        stage = enumerate(domain, ps.filters, options);
        break;
      }
      case StageKind::Filter:
        stage = enumerate(report.stages[static_cast<std::size_t>(ps.input)].survivors, ps.filters, options);
        break;
      case StageKind::ExtendNu:
        stage = extend_nu(report.stages[static_cast<std::size_t>(ps.input)].survivors, ps.filters);
        break;
      case StageKind::SolveNu:
        stage = solve_nu(report.stages[static_cast<std::size_t>(ps.input)].survivors, ps.filters);
        break;
    }
    stage.name = s.name;
    stage.kind = s.kind;
    stage.input = ps.input >= 0 ? p.stages[static_cast<std::size_t>(ps.input)].spec->name : "";
    stage.filters = filter_names(ps.filters);
    stage.expect_empty = s.expect_empty;
    report.stages.push_back(std::move(stage));
  }

  for (const auto& b : spec.branches) {
    BranchReport branch{b.name, b.stage, b.kind, report.stage(b.stage).survivors};
    if (p.base) {
      for (const auto& t : branch.tuples) {
        report.finalists.push_back(make_finalist(branch, t, p.cfg, *p.base));
      }
    }
    report.branches.push_back(std::move(branch));
  }
  return report;
}

}  // namespace cremona
