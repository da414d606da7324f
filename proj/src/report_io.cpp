#include "cremona/report_io.hpp"

#include <iomanip>
#include <ostream>
#include <set>

#include "cremona/errors.hpp"
#include "cremona/version.hpp"

namespace cremona {

namespace {

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) {
    return v.get_si();
  }
  return v.get_str();
}

Json rational_json(const Rational& v) {
  if (v.is_integer()) {
    return integer_json(v.numerator());
  }
  return v.to_string();
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) {
    return Rational(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    return Rational::parse(j.get<std::string>());
  }
  throw ConfigError("expected an exact number, got " + j.dump());
}

Integer integer_from(const Json& j) {
  const Rational r = rational_from(j);
  if (!r.is_integer()) {
    throw ConfigError("expected an integer, got " + j.dump());
  }
  return r.numerator();
}

Json tuple_json(const Tuple& t) {
  Json out = Json::array({t.lambda, t.genus});
  if (t.nu) {
    out.push_back(*t.nu);
  }
  return out;
}

Tuple tuple_from(const Json& j) {
  if (!j.is_array() || j.size() < 2 || j.size() > 3) {
    throw ConfigError("a tuple is [lambda, g] or [lambda, g, nu], got " + j.dump());
  }
  Tuple t{j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), std::nullopt};
  if (j.size() == 3) {
    t.nu = j[2].get<std::int64_t>();
  }
  return t;
}

Json tuples_json(const std::vector<Tuple>& tuples) {
  Json out = Json::array();
  for (const auto& t : tuples) {
    out.push_back(tuple_json(t));
  }
  return out;
}

std::vector<Tuple> tuples_from(const Json& j) {
  std::vector<Tuple> out;
  for (const auto& t : j) {
    out.push_back(tuple_from(t));
  }
  return out;
}

Json integers_json(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const auto& v : values) {
    out.push_back(integer_json(v));
  }
  return out;
}

std::vector<Integer> integers_from(const Json& j) {
  std::vector<Integer> out;
  for (const auto& v : j) {
    out.push_back(integer_from(v));
  }
  return out;
}

Json pairs_json(const std::vector<std::pair<std::string, Rational>>& pairs) {
  Json out = Json::object();
  for (const auto& [k, v] : pairs) {
    out[k] = rational_json(v);
  }
  return out;
}

std::vector<std::pair<std::string, Rational>> pairs_from(const Json& j) {
  std::vector<std::pair<std::string, Rational>> out;
  for (const auto& [k, v] : j.items()) {
    out.emplace_back(k, rational_from(v));
  }
  return out;
}

void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& what) {
  if (!j.is_object()) {
    throw ConfigError(what + " must be a JSON object");
  }
  for (const auto& [k, _] : j.items()) {
    if (!allowed.count(k)) {
      throw ConfigError("unknown key '" + k + "' in " + what);
    }
  }
}

template <class F>
auto guarded(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed " + what + ": " + e.what());
  }
}

std::string tuple_cell(const Tuple& t) { return t.to_string(); }

}  // namespace

Json meta_json() { return Json{{"version", kVersion}}; }

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

bool golden_equal(Json expected, Json actual) {
  if (expected.is_object()) {
    expected.erase("meta");
  }
  if (actual.is_object()) {
    actual.erase("meta");
  }
  return expected == actual;
}

Json stage_to_json(const StageReport& stage) {
  Json exclusions = Json::array();
  for (const auto& e : stage.exclusions) {
    Json rec{{"tuple", tuple_json(e.tuple)}, {"filters", e.filters}};
    if (!e.note.empty()) {
      rec["note"] = e.note;
    }
    exclusions.push_back(std::move(rec));
  }
  return Json{{"name", stage.name},
              {"kind", stage_kind_name(stage.kind)},
              {"input", stage.input},
              {"filters", stage.filters},
              {"in", stage.in},
              {"out", stage.out},
              {"expect_empty", stage.expect_empty},
              {"survivors", tuples_json(stage.survivors)},
              {"exclusions", std::move(exclusions)}};
}

StageReport stage_from_json(const Json& j) {
  return guarded("stage report", [&] {
    check_keys(j, {"meta", "name", "kind", "input", "filters", "in", "out", "expect_empty", "survivors",
                   "exclusions"},
               "stage report");
    StageReport s;
    s.name = j.at("name").get<std::string>();
    s.kind = parse_stage_kind(j.at("kind").get<std::string>());
    s.input = j.at("input").get<std::string>();
    s.filters = j.at("filters").get<std::vector<std::string>>();
    s.in = j.at("in").get<std::size_t>();
    s.out = j.at("out").get<std::size_t>();
    s.expect_empty = j.at("expect_empty").get<bool>();
    s.survivors = tuples_from(j.at("survivors"));
    for (const auto& e : j.at("exclusions")) {
      check_keys(e, {"tuple", "filters", "note"}, "exclusion record");
      s.exclusions.push_back({tuple_from(e.at("tuple")), e.at("filters").get<std::vector<std::string>>(),
                              e.value("note", std::string())});
    }
    return s;
  });
}

Json report_to_json(const ClassificationReport& report) {
  Json types = Json::array();
  for (const auto& t : report.type_check) {
    types.push_back({{"n", t.n},
                     {"delta1", t.delta1},
                     {"delta2", t.delta2},
                     {"dim_base", t.dim_base},
                     {"dim_inverse_base", t.dim_inverse_base}});
  }
  Json stages = Json::array();
  for (const auto& s : report.stages) {
    stages.push_back(stage_to_json(s));
  }
  Json branches = Json::array();
  for (const auto& b : report.branches) {
    branches.push_back({{"name", b.name},
                        {"stage", b.stage},
                        {"kind", branch_kind_name(b.kind)},
                        {"tuples", tuples_json(b.tuples)}});
  }
  Json finalists = Json::array();
  for (const auto& f : report.finalists) {
    finalists.push_back({{"branch", f.branch},
                         {"tuple", tuple_json(f.tuple)},
                         {"label", f.label},
                         {"multidegree", integers_json(f.multidegree)},
                         {"multidegree_admissible", f.multidegree_admissible},
                         {"pluridegrees", integers_json(f.pluridegrees)},
                         {"facts", pairs_json(f.facts)},
                         {"invariants", pairs_json(f.invariants)}});
  }
  return Json{{"meta", meta_json()},
              {"pipeline", report.pipeline},
              {"config", report.config},
              {"type_check", std::move(types)},
              {"stages", std::move(stages)},
              {"branches", std::move(branches)},
              {"finalists", std::move(finalists)}};
}

ClassificationReport report_from_json(const Json& j) {
  return guarded("report", [&] {
    check_keys(j, {"meta", "pipeline", "config", "type_check", "stages", "branches", "finalists"}, "report");
    ClassificationReport r;
    r.pipeline = j.at("pipeline").get<std::string>();
    r.config = j.at("config").get<std::string>();
    for (const auto& t : j.at("type_check")) {
      r.type_check.push_back({t.at("n").get<int>(), t.at("delta1").get<int>(), t.at("delta2").get<int>(),
                              t.at("dim_base").get<int>(), t.at("dim_inverse_base").get<int>()});
    }
    for (const auto& s : j.at("stages")) {
      r.stages.push_back(stage_from_json(s));
    }
    for (const auto& b : j.at("branches")) {
      r.branches.push_back({b.at("name").get<std::string>(), b.at("stage").get<std::string>(),
                            parse_branch_kind(b.at("kind").get<std::string>()), tuples_from(b.at("tuples"))});
    }
    for (const auto& f : j.at("finalists")) {
      Finalist out;
      out.branch = f.at("branch").get<std::string>();
      out.tuple = tuple_from(f.at("tuple"));
      out.label = f.at("label").get<std::string>();
      out.multidegree = integers_from(f.at("multidegree"));
      out.multidegree_admissible = f.at("multidegree_admissible").get<bool>();
      out.pluridegrees = integers_from(f.at("pluridegrees"));
      out.facts = pairs_from(f.at("facts"));
      out.invariants = pairs_from(f.at("invariants"));
      r.finalists.push_back(std::move(out));
    }
    return r;
  });
}

Json pipeline_spec_to_json(const PipelineSpec& spec) {
  const auto& c = spec.config;
  Json domain{{"lambda_min", spec.domain.lambda_min}};
  if (spec.domain.lambda_max) {
    domain["lambda_max"] = *spec.domain.lambda_max;
  }
  if (spec.domain.genus_max) {
    domain["genus_max"] = *spec.domain.genus_max;
  }
  Json filters = Json::array();
  for (const auto& f : spec.filters) {
    filters.push_back({{"name", f.name},
                       {"relation", relation_symbol(f.relation)},
                       {"expression", f.expression.to_string()}});
  }
  Json stages = Json::array();
  for (const auto& s : spec.stages) {
    Json stage{{"name", s.name}, {"kind", stage_kind_name(s.kind)}};
    if (s.input) {
      stage["input"] = *s.input;
    }
    stage["filters"] = s.filters;
    stage["expect_empty"] = s.expect_empty;
    stages.push_back(std::move(stage));
  }
  Json branches = Json::array();
  for (const auto& b : spec.branches) {
    branches.push_back({{"name", b.name}, {"stage", b.stage}, {"kind", branch_kind_name(b.kind)}});
  }
  Json out{{"name", spec.name},
           {"config", {{"n", c.n()}, {"delta1", c.delta1()}, {"delta2", c.delta2()}, {"r", c.r()}}}};
  if (spec.type_check_n) {
    out["type_check_n"] = *spec.type_check_n;
  }
  out["d2_threshold"] = spec.d2_threshold;
  out["threads"] = spec.threads;
  out["domain"] = std::move(domain);
  out["filters"] = std::move(filters);
  out["stages"] = std::move(stages);
  out["branches"] = std::move(branches);
  return out;
}

PipelineSpec pipeline_spec_from_json(const Json& j) {
  return guarded("pipeline spec", [&] {
    check_keys(j, {"base", "name", "config", "type_check_n", "d2_threshold", "threads", "domain", "filters",
                   "stages", "branches"},
               "pipeline spec");
    PipelineSpec spec;
    if (j.contains("base")) {
      spec = builtin_pipeline(j.at("base").get<std::string>());
    } else {
      spec.stages.clear();
      spec.branches.clear();
    }
    if (j.contains("name")) {
      spec.name = j.at("name").get<std::string>();
    }
    if (j.contains("config")) {
      const Json& c = j.at("config");
      if (c.is_string()) {
        spec.config = builtin_pipeline(c.get<std::string>()).config;
      } else {
        check_keys(c, {"n", "delta1", "delta2", "r"}, "config");
        spec.config = TransformationConfig::make(c.at("n").get<int>(), c.at("delta1").get<int>(),
                                                 c.at("delta2").get<int>(), c.at("r").get<int>());
      }
    } else if (!j.contains("base")) {
      throw ConfigError("pipeline spec needs either \"base\" or \"config\"");
    }
    if (j.contains("type_check_n")) {
      spec.type_check_n = j.at("type_check_n").get<int>();
    }
    if (j.contains("d2_threshold")) {
      spec.d2_threshold = j.at("d2_threshold").get<std::int64_t>();
    }
    if (j.contains("threads")) {
      spec.threads = j.at("threads").get<unsigned>();
    }
    if (j.contains("domain")) {
      const Json& d = j.at("domain");
      check_keys(d, {"lambda_min", "lambda_max", "genus_max"}, "domain");
      spec.domain = DomainSpec{};
      spec.domain.lambda_min = d.value("lambda_min", std::int64_t{3});
      if (d.contains("lambda_max")) {
        spec.domain.lambda_max = d.at("lambda_max").get<std::int64_t>();
      }
      if (d.contains("genus_max")) {
        spec.domain.genus_max = d.at("genus_max").get<std::int64_t>();
      }
    }
    if (j.contains("filters")) {
      spec.filters.clear();
      for (const auto& f : j.at("filters")) {
        check_keys(f, {"name", "relation", "expression"}, "filter spec");
        spec.filters.push_back({f.at("name").get<std::string>(), parse_relation(f.value("relation", ">=")),
                                Polynomial::parse(f.at("expression").get<std::string>())});
      }
    }
    if (j.contains("stages")) {
      spec.stages.clear();
      for (const auto& s : j.at("stages")) {
        check_keys(s, {"name", "kind", "input", "filters", "expect_empty"}, "stage spec");
        StageSpec stage;
        stage.name = s.at("name").get<std::string>();
        stage.kind = parse_stage_kind(s.value("kind", "filter"));
        if (s.contains("input")) {
          stage.input = s.at("input").get<std::string>();
        }
        stage.filters = s.value("filters", std::vector<std::string>{});
        stage.expect_empty = s.value("expect_empty", false);
        spec.stages.push_back(std::move(stage));
      }
    }
    if (j.contains("branches")) {
      spec.branches.clear();
      for (const auto& b : j.at("branches")) {
        check_keys(b, {"name", "stage", "kind"}, "branch spec");
        spec.branches.push_back({b.at("name").get<std::string>(), b.at("stage").get<std::string>(),
                                 parse_branch_kind(b.value("kind", "plain"))});
      }
    }
    return spec;
  });
}

void write_csv(std::ostream& os, const StageReport& stage) {
  for (const auto& t : stage.survivors) {
    os << stage.name << ',' << t.lambda << ',' << t.genus << ',';
    if (t.nu) {
      os << *t.nu;
    }
    os << '\n';
  }
}

void write_csv(std::ostream& os, const ClassificationReport& report) {
  os << "stage,lambda,genus,nu\n";
  for (const auto& s : report.stages) {
    write_csv(os, s);
  }
}

void write_table(std::ostream& os, const StageReport& stage) {
  os << "stage " << stage.name << " [" << stage_kind_name(stage.kind) << "]";
  if (!stage.input.empty()) {
    os << " <- " << stage.input;
  }
  os << "\n  in " << stage.in << ", out " << stage.out << ", excluded records " << stage.exclusions.size();
  if (stage.expect_empty) {
    os << (stage.expectation_met() ? ", expected empty: ok" : ", expected empty: VIOLATED");
  }
  os << "\n";
  if (!stage.filters.empty()) {
    os << "  filters:";
    for (const auto& f : stage.filters) {
      os << ' ' << f;
    }
    os << "\n";
  }
  os << "  survivors:";
  for (const auto& t : stage.survivors) {
    os << ' ' << tuple_cell(t);
  }
  os << "\n";
}

void write_table(std::ostream& os, const ClassificationReport& report) {
  os << "pipeline " << report.pipeline << ": " << report.config << "\n";
  if (!report.type_check.empty()) {
    os << "admissible types:";
    for (const auto& t : report.type_check) {
      os << ' ' << t.to_string() << ';';
    }
    os << "\n";
  }
  os << "\n  #  " << std::left << std::setw(48) << "stage" << std::setw(10) << "kind" << std::right
     << std::setw(7) << "in" << std::setw(7) << "out" << "\n";
  for (std::size_t i = 0; i < report.stages.size(); ++i) {
    const auto& s = report.stages[i];
    os << std::right << std::setw(3) << i << "  " << std::left << std::setw(48) << s.name << std::setw(10)
       << stage_kind_name(s.kind) << std::right << std::setw(7) << s.in << std::setw(7) << s.out;
    if (s.expect_empty) {
      os << (s.expectation_met() ? "  (empty as expected)" : "  (EXPECTED EMPTY)");
    }
    os << "\n";
  }
  os << "\nbranches\n";
  for (const auto& b : report.branches) {
    os << "  " << b.name << " <- " << b.stage << ":";
    if (b.tuples.empty()) {
      os << " none";
    }
    for (const auto& t : b.tuples) {
      os << ' ' << tuple_cell(t);
    }
    os << "\n";
  }
  if (!report.finalists.empty()) {
    os << "\nfinalists\n";
  }
  for (const auto& f : report.finalists) {
    os << "  " << tuple_cell(f.tuple) << "  " << f.label << "\n    multidegree";
    for (std::size_t i = 0; i < f.multidegree.size(); ++i) {
      os << (i ? "," : " ") << f.multidegree[i];
    }
    os << (f.multidegree_admissible ? " (admissible)" : " (NOT admissible)") << "\n    pluridegrees";
    for (std::size_t i = 0; i < f.pluridegrees.size(); ++i) {
      os << (i ? "," : " ") << f.pluridegrees[i];
    }
    os << "\n";
    for (const auto& [k, v] : f.facts) {
      os << "    " << k << " = " << v << "\n";
    }
  }
}

}  // namespace cremona
