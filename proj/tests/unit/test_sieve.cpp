#include <doctest.h>

#include "cremona/errors.hpp"
#include "cremona/sieve.hpp"

using namespace cremona;

namespace {
const ClassificationReport& p6() {
  static const ClassificationReport r = run_pipeline(builtin_pipeline("cubic-p6"));
  return r;
}
const ClassificationReport& p7() {
  static const ClassificationReport r = run_pipeline(builtin_pipeline("cubo-cubic-p7"));
  return r;
}
std::vector<Tuple> pairs(std::initializer_list<std::pair<int, int>> list) {
  std::vector<Tuple> out;
  for (const auto& [l, g] : list) out.push_back({l, g, std::nullopt});
  return out;
}
}  // namespace

TEST_CASE("cubic-p6 pair stages") {
  const auto& r = p6();
  CHECK(r.stages[0].out == 889);
  CHECK(r.stage("livorni-sommese").out == 312);
  CHECK(r.stages[2].name == "cremona-degrees");
  CHECK(r.stages[2].survivors ==
        pairs({{8, 1},   {9, 3},   {9, 4},   {10, 5},  {10, 6},  {11, 7},  {11, 8},  {11, 9},  {12, 9},
               {12, 10}, {12, 11}, {12, 12}, {13, 12}, {13, 13}, {13, 14}, {13, 15}, {14, 14}, {14, 15},
               {14, 16}, {14, 17}, {14, 18}, {15, 17}, {15, 18}, {15, 19}, {15, 20}, {15, 21}, {16, 21},
               {16, 22}, {16, 23}, {17, 24}, {17, 25}, {18, 27}, {18, 28}}));
}

TEST_CASE("cubic-p6 empty systems") {
  for (const char* name : {"reduction-existence.scroll-over-curve", "reduction-existence.adjunction-map-degenerate",
                           "special.veronese-fibration", "special.mukai", "special.del-pezzo-fibration"}) {
    CHECK_MESSAGE(p6().stage(name).survivors.empty(), name);
    CHECK(p6().stage(name).expectation_met());
  }
}

TEST_CASE("cubic-p6 log-general branch") {
  const auto& r = p6();
  CHECK(r.stage("log-general.nu-range").out == 478);
  CHECK(r.stage("log-general.hodge").out == 18);
  CHECK(r.stage("log-general.all").survivors == std::vector<Tuple>{{14, 15, 0}, {18, 27, 0}});
  CHECK(r.stage("log-general.le-barz").survivors == std::vector<Tuple>{{14, 15, 0}});
}

TEST_CASE("cubic-p6 conic bundle branch") {
  const auto& r = p6();
  CHECK(r.stage("special.conic-bundle").out == 30);
  CHECK(r.stage("special.conic-bundle.le-barz").survivors == std::vector<Tuple>{{13, 12, 0}});
}

TEST_CASE("cubic-p6 finalists") {
  const auto& f = p6().finalists;
  REQUIRE(f.size() == 2);
  CHECK(f[0].tuple == Tuple{14, 15, 0});
  CHECK(f[0].label == "log-general type, numerically trivial canonical class");
  CHECK(f[0].pluridegrees == std::vector<Integer>{14, 14, 14, 14});
  CHECK(f[1].tuple == Tuple{13, 12, 0});
  CHECK(f[1].label == "conic bundle over P^2");
  CHECK(f[1].pluridegrees == std::vector<Integer>{13, 9, 2, 0});
  for (const auto& x : f) CHECK(x.multidegree_admissible);
}

TEST_CASE("d2 threshold 1 gives the same log-general survivors") {
  PipelineSpec spec = builtin_pipeline("cubic-p6");
  spec.d2_threshold = 1;
  const auto r = run_pipeline(spec);
  CHECK(r.stage("log-general.all").survivors == p6().stage("log-general.all").survivors);
}

TEST_CASE("cubo-cubic-p7 stages") {
  const auto& r = p7();
  REQUIRE(r.type_check.size() == 1);
  CHECK(r.type_check[0] == AdmissibleType{7, 3, 3, 4, 4});
  CHECK(r.stage("livorni-sommese").out == 319);
  CHECK(r.stage("cremona-degrees").survivors ==
        pairs({{8, 2},   {9, 4},   {10, 6},  {10, 7},  {11, 8},  {11, 9},  {11, 10}, {12, 10}, {12, 11},
               {12, 12}, {12, 13}, {13, 12}, {13, 13}, {13, 14}, {13, 15}, {13, 16}, {14, 15}, {14, 16},
               {14, 17}, {14, 18}, {15, 19}, {15, 20}, {15, 21}, {16, 22}, {16, 23}, {17, 25}, {18, 28}}));
  CHECK(r.stage("le-barz.nu-range").out == 859);
  CHECK(r.stage("log-general.all").survivors == std::vector<Tuple>{{18, 28, 0}});
  CHECK(r.stage("log-general.hodge-equality").survivors.empty());
  CHECK(r.stage("special.d3-zero").survivors == std::vector<Tuple>{{12, 10, 0}});
  CHECK(r.stage("special.conic-bundle").survivors.empty());
}

TEST_CASE("cubo-cubic-p7 finalist") {
  const auto& f = p7().finalists;
  REQUIRE(f.size() == 1);
  CHECK(f[0].tuple == Tuple{12, 10, 0});
  CHECK(f[0].label == "del Pezzo fibration over P^1, fibre degree 6");
  CHECK(f[0].pluridegrees == std::vector<Integer>{12, 6, 0, 0});
  const std::vector<std::pair<std::string, Rational>> facts = {{"g(C)", 0}, {"deg(H_C)", 1}, {"deg(F)", 6}};
  CHECK(f[0].facts == facts);
  CHECK(f[0].multidegree_admissible);
}

TEST_CASE("always-true filter keeps the domain") {
  PipelineSpec spec;
  spec.name = "trivial";
  spec.config = TransformationConfig::make(8, 2, 5, 3);
  spec.filters = {{"always", Relation::GreaterEqual, Polynomial(1)}};
  spec.domain.lambda_max = 10;
  spec.stages = {{"domain", StageKind::Domain, std::nullopt, {"always"}, false}};
  const auto r = run_pipeline(spec);
  CHECK(r.stages[0].in == r.stages[0].out);
  CHECK(r.stages[0].survivors == generate_domain(spec.domain, spec.config));
}

TEST_CASE("enumerate on an empty domain") {
  const std::vector<Filter> none;
  const auto r = enumerate(std::vector<Tuple>{}, none);
  CHECK(r.in == 0);
  CHECK(r.out == 0);
}

TEST_CASE("configuration errors surface before enumeration") {
  PipelineSpec spec = builtin_pipeline("cubic-p6");
  SUBCASE("nu filter on pairs") { spec.stages[1].filters = {"le-barz"}; }
  SUBCASE("unknown filter") { spec.stages[1].filters = {"no-such-filter"}; }
  SUBCASE("unknown input") { spec.stages[2].input = "later"; }
  SUBCASE("extend with a non-bound") { spec.stages[5].filters = {"livorni-sommese"}; }
  SUBCASE("solve with an inequality") { spec.stages[12].filters = {"log-general.hodge"}; }
  SUBCASE("domain not first") { std::swap(spec.stages[0], spec.stages[1]); }
  SUBCASE("bad threshold") { spec.d2_threshold = 2; }
  SUBCASE("unknown branch stage") { spec.branches[0].stage = "missing"; }
  CHECK_THROWS_AS(validate_pipeline(spec), ConfigError);
}

TEST_CASE("unknown built-in") { CHECK_THROWS_AS(builtin_pipeline("quadro-quintic"), ConfigError); }

TEST_CASE("type check rejects an inconsistent ambient dimension") {
  PipelineSpec spec = builtin_pipeline("cubo-cubic-p7");
  spec.type_check_n = 6;
  CHECK_THROWS_AS(validate_pipeline(spec), ConfigError);
}
