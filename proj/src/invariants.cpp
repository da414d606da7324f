#include "cremona/invariants.hpp"

#include <vector>

#include "cremona/errors.hpp"
#include "cremona/linear_system.hpp"

namespace cremona {

using symbols::genus;
using symbols::lambda;
using symbols::nu;

namespace {

Polynomial constant(const Integer& value) { return Polynomial(Rational(value)); }

Integer int_pow(int base, int exponent) {
  Integer out = 1;
  for (int i = 0; i < exponent; ++i) {
    out *= base;
  }
  return out;
}

std::string segre_name(int i) { return "s" + std::to_string(i); }

// Cremona equations deg_{n-k} = delta2^k for 0 <= k < n - r', with the projective degree
// expanded through the Segre degrees s_1..s_r of the normal bundle.
void add_cremona_equations(LinearSystem& system, const TransformationConfig& cfg) {
  const int n = cfg.n();
  const int r = cfg.r();
  const int d1 = cfg.delta1();
  for (int k = 0; k < n - cfg.inverse_r(); ++k) {
    std::vector<std::pair<std::string, Rational>> lhs;
    for (int i = k; i <= r - 1; ++i) {
      lhs.emplace_back(segre_name(r - i), Rational(Integer(binomial(n - k, i - k) * int_pow(d1, i - k))));
    }
    const Polynomial rhs = constant(int_pow(d1, n - k)) -
                           constant(Integer(binomial(n - k, r - k) * int_pow(d1, r - k))) * lambda() -
                           constant(int_pow(cfg.delta2(), k));
    system.add("deg" + std::to_string(n - k) + "=" + int_pow(cfg.delta2(), k).get_str(), lhs, rhs);
  }
}

// Threefold X in P^ambient (codimension 3). When `segre` is empty, the normal Segre degrees
// come from the Cremona equations of `cfg`; otherwise s_i = segre[i-1].
InvariantTable solve_threefold(int ambient, const HilbertPolynomial& hp,
                               const TransformationConfig* cfg, const std::vector<Polynomial>& segre) {
  if (ambient != 6) {
    throw ConfigError("the double point formula is only available for threefolds in P^6");
  }
  const ChiValues chi = chi_values(hp);
  const Polynomial& l = lambda();
  const auto b = [ambient](int j) { return Rational(binomial(ambient + 1, j)); };
  const auto bp = [&](int j) { return Polynomial(b(j)); };

  LinearSystem system({"KH2", "K2H", "K3", "c2H", "c3", "s1", "s2", "s3", "ts2", "ts3", "nc1H2",
                       "nc2H", "nc3", "KSHS", "KS2", "c2TS"});
  system.add("sectional-genus", {{"KH2", 1}}, Polynomial(2) * genus() - Polynomial(2) - Polynomial(2) * l);
  system.add("riemann-roch", {{"K2H", 1}, {"KH2", -3}, {"c2H", 1}},
             Polynomial(12) * (chi.chi_h - chi.chi0) - Polynomial(2) * l);
  system.add("double-point",
             {{"K3", 1}, {"c3", -1}, {"c2H", -b(1)}, {"KH2", b(2)}, {"K2H", b(1)}},
             l * l - bp(3) * l - Polynomial(48) * chi.chi0);
  system.add("normal-ladder-1", {{"KH2", -1}, {"s1", -1}}, bp(1) * l);
  system.add("normal-ladder-2", {{"c2H", 1}, {"s1", -b(1)}, {"s2", -1}}, bp(2) * l);
  system.add("normal-ladder-3", {{"c3", 1}, {"s1", -b(2)}, {"s2", -b(1)}, {"s3", -1}}, bp(3) * l);
  if (segre.empty()) {
    add_cremona_equations(system, *cfg);
  } else {
    for (int i = 1; i <= 3; ++i) {
      system.add("restricted-segre-" + std::to_string(i), {{segre_name(i), 1}},
                 segre[static_cast<std::size_t>(i - 1)]);
    }
  }
  system.add("tangent-segre-2", {{"ts2", 1}, {"K2H", -1}, {"c2H", 1}}, Polynomial(0));
  system.add("tangent-segre-3", {{"ts3", 1}, {"K3", -1}, {"c3", 1}}, Polynomial(48) * chi.chi0);
  system.add("tangent-ladder-1", {{"nc1H2", 1}, {"KH2", -1}}, bp(1) * l);
  system.add("tangent-ladder-2", {{"nc2H", 1}, {"KH2", -b(1)}, {"ts2", -1}}, bp(2) * l);
  system.add("tangent-ladder-3", {{"nc3", 1}, {"KH2", -b(2)}, {"ts2", -b(1)}, {"ts3", -1}},
             bp(3) * l);
  system.add("section-adjunction", {{"KSHS", 1}, {"KH2", -1}}, l);
  system.add("section-c2", {{"c2TS", 1}, {"c2H", -1}, {"KH2", -1}}, l);
  system.add("section-noether", {{"KS2", 1}, {"c2TS", 1}},
             Polynomial(12) * (chi.chi0 - chi.chi_minus_h));

  const Solution solution = solve_linear_system(system);
  InvariantTable::Entries entries(solution.begin(), solution.end());
  entries.emplace(inv::kH3, l);
  entries.emplace(inv::kC1H2, -solution.at("KH2"));
  entries.emplace(inv::kTS1, solution.at("KH2"));
  entries.emplace(inv::kChi0, chi.chi0);
  entries.emplace(inv::kChiH, chi.chi_h);
  entries.emplace(inv::kChiMinusH, chi.chi_minus_h);
  entries.emplace(inv::kChiMinus2H, chi.chi_minus_2h);
  return InvariantTable(InvariantTable::Kind::Threefold, std::move(entries), hp);
}

InvariantTable solve_fourfold(const TransformationConfig& cfg) {
  const HilbertPolynomial hp = hilbert_polynomial(cfg);
  const Polynomial& l = lambda();

  LinearSystem system({"KH3", "s1", "s2", "s3", "s4"});
  system.add("sectional-genus", {{"KH3", 1}},
             Polynomial(2) * genus() - Polynomial(2) - Polynomial(3) * l);
  system.add("normal-ladder-1", {{"KH3", -1}, {"s1", -1}},
             Polynomial(Rational(binomial(cfg.n() + 1, 1))) * l);
  add_cremona_equations(system, cfg);
  const Solution solution = solve_linear_system(system);

  const std::vector<Polynomial> segre = {solution.at("s1"), solution.at("s2"), solution.at("s3")};
  auto section = std::make_shared<const InvariantTable>(
      solve_threefold(cfg.n() - 1, hyperplane_section(hp), nullptr, segre));

  const ChiValues chi = chi_values(hp);
  InvariantTable::Entries entries(solution.begin(), solution.end());
  entries.emplace(inv::kH4, l);
  entries.emplace(inv::kChi0, chi.chi0);
  entries.emplace(inv::kChiH, chi.chi_h);
  entries.emplace(inv::kChiMinusH, chi.chi_minus_h);
  entries.emplace(inv::kChiMinus2H, chi.chi_minus_2h);
  return InvariantTable(InvariantTable::Kind::Fourfold, std::move(entries), hp, std::move(section));
}

}  // namespace

InvariantTable::InvariantTable(Kind kind, Entries entries, HilbertPolynomial hilbert,
                               std::shared_ptr<const InvariantTable> section)
    : kind_(kind), entries_(std::move(entries)), hilbert_(std::move(hilbert)), section_(std::move(section)) {}

const Polynomial& InvariantTable::at(std::string_view key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) {
    throw ConfigError("invariant '" + std::string(key) + "' is not available in this table");
  }
  return it->second;
}

const InvariantTable& InvariantTable::threefold() const {
  return kind_ == Kind::Fourfold ? *section_ : *this;
}

InvariantTable InvariantTable::evaluated(const Assignment& assignment) const {
  Entries entries;
  for (const auto& [key, value] : entries_) {
    entries.emplace(key, evaluate(value, assignment));
  }
  std::vector<Polynomial> coefficients;
  for (const auto& c : hilbert_.coefficients) {
    coefficients.push_back(evaluate(c, assignment));
  }
  HilbertPolynomial hp = HilbertPolynomial::from_coefficients(std::move(coefficients));
  hp.constraints = hilbert_.constraints;
  std::shared_ptr<const InvariantTable> section;
  if (section_) {
    section = std::make_shared<const InvariantTable>(section_->evaluated(assignment));
  }
  return InvariantTable(kind_, std::move(entries), std::move(hp), std::move(section));
}

InvariantTable solve_invariants(const TransformationConfig& cfg) {
  switch (cfg.mode()) {
    case Mode::ThreefoldInP6:
      return solve_threefold(cfg.n(), hilbert_polynomial(cfg), &cfg, {});
    case Mode::FourfoldInP7:
      return solve_fourfold(cfg);
    case Mode::Generic:
      break;
  }
  throw ConfigError("no invariant engine for " + cfg.to_string());
}

InvariantTable reduction_table(const InvariantTable& base_table, bool with_nu) {
  const InvariantTable& base = base_table.threefold();
  if (base.kind() == InvariantTable::Kind::Reduction) {
    throw ConfigError("reduction_table expects an unreduced threefold table");
  }
  const Polynomial v = with_nu ? nu() : Polynomial(0);
  const auto shifted = [&](std::string_view key, std::int64_t times_nu) {
    return base.at(key) + Polynomial(Rational(times_nu)) * v;
  };

  InvariantTable::Entries entries = base.entries();
  const auto set = [&](std::string_view key, std::int64_t times_nu) {
    entries.find(key)->second = shifted(key, times_nu);
  };
  set(inv::kH3, 1);
  set(inv::kKH2, -2);
  set(inv::kK2H, 4);
  set(inv::kK3, -8);
  set(inv::kC1H2, 2);
  set(inv::kC3, -2);
  set(inv::kTS1, -2);
  set(inv::kTS2, 4);
  set(inv::kTS3, -6);
  set(inv::kKSHS, -1);
  set(inv::kKS2, 1);
  set(inv::kC2TS, -1);

  // chi(O_R(t)) = chi(O_B(t)) + nu * C(t + 2, 3); C(t+3,3) - C(t+2,2) = C(t+2,3).
  std::vector<Polynomial> coefficients = base.hilbert().coefficients;
  coefficients[0] += v;
  coefficients[1] -= v;
  HilbertPolynomial hp = HilbertPolynomial::from_coefficients(std::move(coefficients));
  hp.constraints = base.hilbert().constraints;
  const ChiValues chi = chi_values(hp);
  entries.find(inv::kChi0)->second = chi.chi0;
  entries.find(inv::kChiH)->second = chi.chi_h;
  entries.find(inv::kChiMinusH)->second = chi.chi_minus_h;
  entries.find(inv::kChiMinus2H)->second = chi.chi_minus_2h;
  return InvariantTable(InvariantTable::Kind::Reduction, std::move(entries), std::move(hp));
}

Polynomial adjoint_power(const InvariantTable& table, std::int64_t a, std::int64_t b, int j) {
  if (j < 0 || j > 3) {
    throw DomainError("adjoint_power: j = " + std::to_string(j) + " outside 0..3");
  }
  // K^i . H^(3-i) for i = 0..3
  const std::array<const Polynomial*, 4> powers = {&table.at(inv::kH3), &table.at(inv::kKH2),
                                                   &table.at(inv::kK2H), &table.at(inv::kK3)};
  Polynomial out;
  for (int i = 0; i <= j; ++i) {
    Integer coefficient = binomial(j, i);
    for (int k = 0; k < i; ++k) {
      coefficient *= static_cast<long>(a);
    }
    for (int k = 0; k < j - i; ++k) {
      coefficient *= static_cast<long>(b);
    }
    out += Polynomial(Rational(coefficient)) * *powers[static_cast<std::size_t>(i)];
  }
  return out;
}

std::array<Polynomial, 4> pluridegrees(const InvariantTable& table) {
  return {adjoint_power(table, 1, 1, 0), adjoint_power(table, 1, 1, 1),
          adjoint_power(table, 1, 1, 2), adjoint_power(table, 1, 1, 3)};
}

}  // namespace cremona
