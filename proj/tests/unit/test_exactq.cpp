#include <doctest.h>

#include "cremona/errors.hpp"
#include "cremona/linear_system.hpp"
#include "cremona/polynomial.hpp"
#include "cremona/rational.hpp"

using namespace cremona;

namespace {
Polynomial P(const char* text) { return Polynomial::parse(text); }
}  // namespace

TEST_CASE("rational is kept in lowest terms with positive denominator") {
  const Rational q(6, -4);
  CHECK(q.numerator() == -3);
  CHECK(q.denominator() == 2);
  CHECK(q.to_string() == "-3/2");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational(-7, 2).floor() == -4);
}

TEST_CASE("rational division by zero is a domain error") {
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(3) / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/x"), DomainError);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-1, 3) == -1);  // (-1)(-2)(-3)/6
}

TEST_CASE("polynomial normal form") {
  CHECK(P("-453/8*lambda^2 + 3").to_string() == "-453/8*lambda^2 + 3");
  CHECK(P("14*g + lambda^2 - 77*lambda + 672").to_string() == "lambda^2 - 77*lambda + 14*g + 672");
  CHECK(P("(lambda + g)^2").to_string() == "lambda^2 + 2*lambda*g + g^2");
  CHECK(P("nu - nu").is_zero());
  CHECK(P("0").to_string() == "0");
  CHECK(P("-(t - 1)/2").to_string() == "-1/2*t + 1/2");
}

TEST_CASE("polynomial parse errors") {
  CHECK_THROWS_AS(P("lambda +"), DomainError);
  CHECK_THROWS_AS(P("x + 1"), DomainError);
  CHECK_THROWS_AS(P("1/lambda"), DomainError);
  CHECK_THROWS_AS(P("(g"), DomainError);
}

TEST_CASE("content and primitive part keep the sign") {
  const Polynomial p = P("-10*g + lambda^2/2 + 7/2*lambda - 51");
  CHECK(p.primitive_part() == P("lambda^2 + 7*lambda - 20*g - 102"));
  CHECK(P("-4*g + 6").primitive_part() == P("-2*g + 3"));
  CHECK(Polynomial().primitive_part().is_zero());
}

TEST_CASE("degree and coefficient extraction") {
  const Polynomial p = P("3*lambda^2*nu - nu + g");
  CHECK(p.degree(Var::Nu) == 1);
  CHECK(p.degree(Var::Lambda) == 2);
  CHECK(p.total_degree() == 3);
  CHECK(p.coefficient_of(Var::Nu, 1) == P("3*lambda^2 - 1"));
  CHECK(p.coefficient_of(Var::Nu, 0) == P("g"));
  CHECK_FALSE(p.depends_on(Var::T));
}

TEST_CASE("binomial_poly examples") {
  CHECK(binomial_poly(3, 3) == P("(t^3 + 6*t^2 + 11*t + 6)/6"));
  CHECK(binomial_poly(2, 2) == P("(t^2 + 3*t + 2)/2"));
  CHECK(binomial_poly(0, 0) == Polynomial(1));
  CHECK_THROWS_AS(binomial_poly(1, -1), DomainError);
}

TEST_CASE("evaluate on the P6 Hilbert polynomial") {
  const Polynomial hp = symbols::lambda() * binomial_poly(3, 3) +
                        P("-lambda - g + 1") * binomial_poly(2, 2) + P("-6*lambda + 4*g + 45") * binomial_poly(1, 1) +
                        P("14*lambda - 6*g - 113");
  CHECK(evaluate(hp, {{Var::T, Polynomial(3)}}) == Polynomial(77));
  CHECK(evaluate(hp, {{Var::T, Polynomial(2)}}) == Polynomial(28));
  CHECK(evaluate(hp, {{Var::T, Polynomial(0)}}) == P("8*lambda - 3*g - 67"));
  // partial evaluation leaves the other variables
  CHECK(evaluate(P("lambda*t + g"), {{Var::Lambda, P("nu + 1")}}) == P("nu*t + t + g"));
}

TEST_CASE("solve small systems") {
  LinearSystem sys({"x", "y"});
  sys.add("sum", {{"x", 1}, {"y", 1}}, Polynomial(2));
  sys.add("diff", {{"x", 1}, {"y", -1}}, Polynomial(0));
  const auto sol = solve_linear_system(sys);
  CHECK(sol.at("x") == Polynomial(1));
  CHECK(sol.at("y") == Polynomial(1));
}

TEST_CASE("inconsistent system names the offending equation") {
  LinearSystem sys({"x", "y"});
  sys.add("first", {{"x", 1}, {"y", 1}}, Polynomial(1));
  sys.add("second", {{"x", 1}, {"y", 1}}, Polynomial(2));
  try {
    solve_linear_system(sys);
    FAIL("expected InconsistentSystemError");
  } catch (const InconsistentSystemError& e) {
    CHECK(e.equation() == "second");
  }
}

TEST_CASE("singular system carries the rank defect") {
  LinearSystem sys({"x", "y", "z"});
  sys.add("a", {{"x", 1}, {"y", 1}}, symbols::lambda());
  sys.add("b", {{"x", 2}, {"y", 2}}, Polynomial(2) * symbols::lambda());
  try {
    solve_linear_system(sys);
    FAIL("expected SingularSystemError");
  } catch (const SingularSystemError& e) {
    CHECK(e.rank_defect() == 2);
    CHECK(e.dependent_equation() == "b");
  }
}

TEST_CASE("unknowns must not clash with polynomial variables") {
  CHECK_THROWS_AS(LinearSystem({"g"}), DomainError);
  CHECK_THROWS_AS(LinearSystem({"x", "x"}), DomainError);
}

TEST_CASE("symbolic right-hand sides") {
  LinearSystem sys({"a", "b"});
  sys.add("one", {{"a", 2}, {"b", 1}}, P("lambda + g"));
  sys.add("two", {{"a", 1}, {"b", -1}}, P("2*lambda"));
  const auto sol = solve_linear_system(sys);
  CHECK(sol.at("a") == P("lambda + g/3"));
  CHECK(sol.at("b") == P("-lambda + g/3"));
  for (std::size_t i = 0; i < sys.equations().size(); ++i) {
    CHECK(residual(sys, i, sol).is_zero());
  }
}
