#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "cremona/rational.hpp"

namespace cremona {

/// Global symbols. Declaration order is the monomial order: lambda > g > nu > t.
enum class Var : std::uint8_t { Lambda = 0, Genus = 1, Nu = 2, T = 3 };

inline constexpr std::size_t kVarCount = 4;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

using Exponents = std::array<std::uint32_t, kVarCount>;

/// Sparse polynomial over Q in the global variables.
///
/// Terms are kept in descending lexicographic order of their exponent vectors and no
/// stored coefficient is zero, so structural equality is semantic equality.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, std::greater<>>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Polynomial(I constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial variable(Var v);
  static Polynomial monomial(const Rational& coefficient, const Exponents& exponents);

  /// Parses +, -, *, / (by constants), ^ (non-negative integer), parentheses, integers
  /// and the names lambda, g, nu, t. Throws DomainError on malformed input.
  static Polynomial parse(std::string_view text);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& exponents) const;

  std::uint32_t degree(Var v) const;
  std::uint32_t total_degree() const;
  bool depends_on(Var v) const { return degree(v) > 0; }

  /// Coefficient of v^power, as a polynomial in the remaining variables.
  Polynomial coefficient_of(Var v, std::uint32_t power) const;

  /// Positive rational c such that p / c has coprime integer coefficients.
  Rational content() const;
  Polynomial primitive_part() const;

  Polynomial pow(std::uint32_t exponent) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Normal form: descending lexicographic terms, explicit signs, `^` for powers,
  /// e.g. "lambda^2 - 77*lambda + 14*g + 672".
  std::string to_string() const;

 private:
  void add_term(const Exponents& exponents, const Rational& coefficient);

  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Partial substitution; unassigned variables stay symbolic.
using Assignment = std::map<Var, Polynomial>;

Polynomial evaluate(const Polynomial& p, const Assignment& assignment);

/// Full evaluation at an integer point given in variable order (lambda, g, nu, t).
Rational evaluate_at(const Polynomial& p, const std::array<std::int64_t, kVarCount>& point);

/// C(v + shift, k) expanded as a polynomial in v (default t). Throws DomainError if k < 0.
Polynomial binomial_poly(std::int64_t shift, std::int64_t k, Var v = Var::T);

namespace symbols {
inline const Polynomial& lambda() {
  static const Polynomial p = Polynomial::variable(Var::Lambda);
  return p;
}
inline const Polynomial& genus() {
  static const Polynomial p = Polynomial::variable(Var::Genus);
  return p;
}
inline const Polynomial& nu() {
  static const Polynomial p = Polynomial::variable(Var::Nu);
  return p;
}
inline const Polynomial& t() {
  static const Polynomial p = Polynomial::variable(Var::T);
  return p;
}
}  // namespace symbols

}  // namespace cremona
