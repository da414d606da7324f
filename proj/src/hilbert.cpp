#include "cremona/hilbert.hpp"

#include "cremona/cremona_core.hpp"
#include "cremona/errors.hpp"
#include "cremona/linear_system.hpp"

namespace cremona {

using symbols::genus;
using symbols::lambda;

Polynomial HilbertPolynomial::at(std::int64_t t) const {
  return evaluate(polynomial, {{Var::T, Polynomial(Rational(t))}});
}

HilbertPolynomial HilbertPolynomial::from_coefficients(std::vector<Polynomial> coefficients) {
  HilbertPolynomial hp;
  hp.dimension = static_cast<int>(coefficients.size()) - 1;
  for (int i = 0; i <= hp.dimension; ++i) {
    hp.polynomial += coefficients[static_cast<std::size_t>(i)] *
                     binomial_poly(hp.dimension - i, hp.dimension - i);
  }
  hp.coefficients = std::move(coefficients);
  return hp;
}

std::vector<InterpolationConstraint> interpolation_constraints(const TransformationConfig& cfg) {
  const int count = cfg.r() - 1;
  const int k0 = vanishing_threshold(cfg);
  std::vector<InterpolationConstraint> out;
  for (int k = cfg.delta1() - count + 1; k <= cfg.delta1(); ++k) {
    if (k < k0 || k < 1) {
      throw ConfigError("interpolation degree " + std::to_string(k) +
                        " is below the vanishing threshold " + std::to_string(k0));
    }
    Integer value = binomial(cfg.n() + k, cfg.n());
    if (k == cfg.delta1()) {
      value -= cfg.n() + 1;
    }
    out.push_back({k, value});
  }
  return out;
}

HilbertPolynomial hilbert_polynomial(const TransformationConfig& cfg) {
  const int r = cfg.r();
  if (r < 2) {
    throw ConfigError("hilbert_polynomial needs a base locus of dimension >= 2");
  }
  const auto constraints = interpolation_constraints(cfg);

  std::vector<std::string> unknowns;
  for (int i = 2; i <= r; ++i) {
    unknowns.push_back("a" + std::to_string(i));
  }
  const Polynomial a0 = lambda();
  const Polynomial a1 = Polynomial(1) - lambda() - genus();

  LinearSystem system(unknowns);
  for (const auto& c : constraints) {
    std::vector<Rational> row;
    for (int i = 2; i <= r; ++i) {
      row.emplace_back(binomial(c.t + r - i, r - i));
    }
    Polynomial rhs = Polynomial(Rational(c.value)) - a0 * Polynomial(Rational(binomial(c.t + r, r))) -
                     a1 * Polynomial(Rational(binomial(c.t + r - 1, r - 1)));
    system.add_row("chi(" + std::to_string(c.t) + ")", std::move(row), std::move(rhs));
  }
  const Solution solution = solve_linear_system(system);

  std::vector<Polynomial> coefficients = {a0, a1};
  for (const auto& name : unknowns) {
    coefficients.push_back(solution.at(name));
  }
  HilbertPolynomial hp = HilbertPolynomial::from_coefficients(std::move(coefficients));
  hp.constraints = constraints;
  return hp;
}

HilbertPolynomial hyperplane_section(const HilbertPolynomial& hp) {
  // C(t+k, k) - C(t-1+k, k) = C(t+k-1, k-1): the basis shifts down by one.
  std::vector<Polynomial> coefficients(hp.coefficients.begin(), hp.coefficients.end() - 1);
  return HilbertPolynomial::from_coefficients(std::move(coefficients));
}

ChiValues chi_values(const HilbertPolynomial& hp) {
  return {hp.at(0), hp.at(1), hp.at(-1), hp.at(-2)};
}

}  // namespace cremona
