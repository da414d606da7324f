#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/cremona_core.hpp"
#include "cremona/invariants.hpp"
#include "cremona/polynomial.hpp"
#include "cremona/tuple.hpp"

namespace cremona {

enum class Relation { GreaterEqual, Greater, Equal, NotEqual };

std::string_view relation_symbol(Relation relation);
/// Accepts ">=", ">", "=", "==", "!=". Throws ConfigError otherwise.
Relation parse_relation(std::string_view symbol);

bool relation_holds(Relation relation, const Rational& value);

/// expression (relation) 0
struct Condition {
  Polynomial expression;
  Relation relation = Relation::GreaterEqual;

  bool holds(const Tuple& tuple) const;

  friend bool operator==(const Condition&, const Condition&) = default;
};

/// all_of conditions, optionally negated. A guarded filter constrains only the tuples
/// its guard admits.
struct Guard {
  std::vector<Condition> all_of;
  bool negated = false;

  bool admits(const Tuple& tuple) const;

  friend bool operator==(const Guard&, const Guard&) = default;
};

enum class FilterKind { Inequality, StrictInequality, Equality, Disequality, Conditional };

std::string_view filter_kind_name(FilterKind kind);

/// A named exact predicate on candidate tuples. The expression is stored as its primitive
/// part, so rational bounds become integer polynomials with the same sign.
class Filter {
 public:
  Filter(std::string name, Relation relation, const Polynomial& expression, std::string source = {},
         std::optional<Guard> guard = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  FilterKind kind() const noexcept;
  Relation relation() const noexcept { return relation_; }
  const Polynomial& expression() const noexcept { return expression_; }
  const std::string& source() const noexcept { return source_; }
  const std::optional<Guard>& guard() const noexcept { return guard_; }

  bool depends_on_nu() const;

  Rational value(const Tuple& tuple) const;
  bool passes(const Tuple& tuple) const;

  /// "expr >= 0", with the guard prefixed when present.
  std::string to_string() const;

 private:
  std::string name_;
  Relation relation_;
  Polynomial expression_;
  std::string source_;
  std::optional<Guard> guard_;
};

/// Classical genus bound for a nondegenerate degree-d curve in P^s:
/// C(m,2)(s-1) + m*eps with m = floor((d-1)/(s-1)), eps = d-1-m(s-1).
/// Throws DomainError for d < 1 or s < 2.
std::int64_t castelnuovo_bound(std::int64_t d, std::int64_t s);

/// The four adjunction-theoretic inequalities for a smooth threefold.
std::vector<Filter> livorni_sommese_filters(const InvariantTable& table);

/// deg1 deg3 >= deg4, deg1 deg4 >= deg5, deg3^2 >= deg2 deg4, deg4^2 >= deg3 deg5,
/// deg5^2 >= deg4 deg6. Requires n >= 6.
std::vector<Filter> cremona_degree_filters(const Multidegree& md);

/// kappa = K_S.H_S, zeta = K_S^2, theta = c2(T_S), lambda = H_S^2.
template <class T>
struct SectionInvariants {
  T kappa;
  T zeta;
  T theta;
  T lambda;
};

/// Le Barz count of 4-secant lines of a surface, without the correction for lines.
Rational lebarz_quadrisecant_count(const SectionInvariants<Rational>& si);
Polynomial lebarz_quadrisecant_count(const SectionInvariants<Polynomial>& si);

SectionInvariants<Polynomial> section_invariants(const InvariantTable& table);

/// The quadrisecant count of a hyperplane section as a polynomial in lambda and g.
Polynomial lebarz_bound_polynomial(const InvariantTable& table);

/// bound - nu >= 0.
Filter lebarz_nu_bound(const InvariantTable& table);

/// Numerical consequences of K' + H' nef and big on the reduction table.
std::vector<Filter> log_general_filters(const InvariantTable& reduction, std::int64_t d2_threshold = 3);

/// d1^2 - d2 d0 = 0 implies d2^2 - d3 d1 = 0.
Filter hodge_equality_implication(const InvariantTable& reduction);

enum class AdjunctionCase {
  ScrollOverCurve,
  AdjunctionMapDegenerate,
  VeroneseFibration,
  Mukai,
  DelPezzoFibration,
  ConicBundle,
};

std::string_view adjunction_case_name(AdjunctionCase c);
/// Throws ConfigError for unknown names.
AdjunctionCase parse_adjunction_case(std::string_view name);

/// Defining equalities of an adjunction case. The first two take the base table; the
/// rest take the reduction table.
std::vector<Filter> adjunction_case_system(AdjunctionCase c, const InvariantTable& table);

/// Named filters and filter groups constructible for one configuration.
class FilterBank {
 public:
  FilterBank() = default;

  /// Builds every built-in filter from the solved tables of `cfg`.
  static FilterBank builtin(const TransformationConfig& cfg, const InvariantTable& base,
                            std::int64_t d2_threshold = 3);

  /// Throws ConfigError on a duplicate name.
  void add(Filter filter, const std::vector<std::string>& groups = {});

  bool contains(std::string_view name) const;
  const Filter& at(std::string_view name) const;

  /// A group name expands to its members, a filter name to itself.
  /// Throws ConfigError for unknown names.
  std::vector<const Filter*> resolve(std::string_view name) const;

  std::vector<std::string> names() const;
  std::vector<std::string> group_names() const;

 private:
  std::map<std::string, Filter, std::less<>> filters_;
  std::map<std::string, std::vector<std::string>, std::less<>> groups_;
};

}  // namespace cremona
