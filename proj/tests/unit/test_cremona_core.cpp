#include <doctest.h>

#include "cremona/cremona_core.hpp"
#include "cremona/errors.hpp"
#include "cremona/invariants.hpp"

using namespace cremona;

namespace {
Polynomial P(const char* text) { return Polynomial::parse(text); }

std::vector<Integer> ints(std::initializer_list<long> values) {
  return std::vector<Integer>(values.begin(), values.end());
}
}  // namespace

TEST_CASE("P6 multidegree") {
  const auto cfg = TransformationConfig::cubic_p6();
  const Multidegree md = multidegree(cfg, solve_invariants(cfg));
  const std::vector<Polynomial> expected = {P("1"), P("3"), P("9"), P("27 - lambda"), P("-7*lambda + 2*g + 79"),
                                            P("5"), P("1")};
  CHECK(md.entries == expected);
  CHECK(md.evaluate_at(14, 15) == ints({1, 3, 9, 13, 11, 5, 1}));
}

TEST_CASE("P7 multidegree") {
  const auto cfg = TransformationConfig::cubo_cubic_p7();
  const Multidegree md = multidegree(cfg, solve_invariants(cfg));
  REQUIRE(md.size() == 8);
  CHECK(md[3] == P("27 - lambda"));
  CHECK(md[4] == P("-7*lambda + 2*g + 79"));
  CHECK(md.evaluate_at(12, 10) == ints({1, 3, 9, 15, 15, 9, 3, 1}));
}

TEST_CASE("projective degrees need enough Segre degrees") {
  const auto cfg = TransformationConfig::cubic_p6();
  CHECK_THROWS_AS(projective_degrees(cfg, symbols::lambda(), {P("1")}), DomainError);
}

TEST_CASE("multidegree admissibility") {
  CHECK(multidegree_admissible(ints({1, 3, 9, 14, 12, 5, 1})).empty());
  CHECK(multidegree_admissible(ints({1, 2, 4, 3, 1})).empty());
  CHECK(multidegree_admissible(ints({1, 2, 4, 8, 16, 19, 13, 5, 1})).empty());

  const auto bad = multidegree_admissible(ints({1, 3, 10, 27, 81, 5, 1}));
  const bool log_concave_5 = std::any_of(bad.begin(), bad.end(), [](const MultidegreeViolation& v) {
    return v.kind == MultidegreeViolation::Kind::LogConcavity && v.i == 5 && v.lhs == 25 && v.rhs == 81;
  });
  CHECK(log_concave_5);
  CHECK(bad.size() > 1);  // every violation is reported

  const auto zero = multidegree_admissible(ints({1, 0, 1}));
  REQUIRE_FALSE(zero.empty());
  CHECK(zero.front().kind == MultidegreeViolation::Kind::LowerBound);
}

TEST_CASE("admissible types") {
  auto triples = [](const std::vector<AdmissibleType>& types) {
    std::vector<std::array<int, 3>> out;
    for (const auto& t : types) out.push_back({t.n, t.delta1, t.delta2});
    return out;
  };
  using V = std::vector<std::array<int, 3>>;
  CHECK(triples(admissible_types({std::nullopt, 3, 32})) == V{{5, 5, 5}, {6, 3, 5}, {8, 2, 5}});
  CHECK(triples(admissible_types({std::nullopt, 1, 32})) == V{{3, 3, 3}, {4, 2, 3}});
  const auto seven = admissible_types({7, std::nullopt, 32});
  REQUIRE(seven.size() == 1);
  CHECK(seven[0] == AdmissibleType{7, 3, 3, 4, 4});
}

TEST_CASE("admissible types are stable under a larger bound") {
  for (int r = 1; r <= 4; ++r) {
    CHECK(admissible_types({std::nullopt, r, 32}) == admissible_types({std::nullopt, r, 64}));
  }
  CHECK(admissible_types({std::nullopt, 3, 8}) == admissible_types({std::nullopt, 3, 32}));
  CHECK(admissible_types({7, std::nullopt, 32}) == admissible_types({7, std::nullopt, 64}));
}

TEST_CASE("every returned type satisfies the cross-multiplied formulas") {
  for (const auto& t : admissible_types({std::nullopt, std::nullopt, 24})) {
    CHECK(t.n * (t.delta1 - 1) * t.delta2 == (t.delta1 * t.delta2 - 1) * t.dim_base + (t.delta1 + 1) * t.delta2 - 2);
    CHECK(t.n * (t.delta2 - 1) * t.delta1 ==
          (t.delta1 * t.delta2 - 1) * t.dim_inverse_base + (t.delta2 + 1) * t.delta1 - 2);
  }
}

TEST_CASE("vanishing threshold") {
  CHECK(vanishing_threshold(TransformationConfig::cubic_p6()) == 2);
  CHECK(vanishing_threshold(TransformationConfig::cubo_cubic_p7()) == 1);
  CHECK(vanishing_threshold(TransformationConfig::make(8, 2, 5, 3)) == 1);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(TransformationConfig::make(6, 3, 5, 2), ConfigError);
  CHECK_THROWS_AS(TransformationConfig::make(6, 6, 5, 3), ConfigError);
  const auto cfg = TransformationConfig::cubic_p6();
  CHECK(cfg.inverse_r() == 4);
  CHECK(cfg.degree_bound() == 27);
  CHECK(cfg.curve_section_ambient() == 4);
  CHECK(TransformationConfig::cubo_cubic_p7().mode() == Mode::FourfoldInP7);
}
