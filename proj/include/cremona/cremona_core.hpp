#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cremona/config.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

class InvariantTable;

/// Projective degrees deg_0 .. deg_n of the graph of a Cremona transformation.
struct Multidegree {
  std::vector<Polynomial> entries;

  std::size_t size() const noexcept { return entries.size(); }
  const Polynomial& operator[](std::size_t i) const { return entries[i]; }

  /// Throws DomainError if an entry does not evaluate to an integer.
  std::vector<Integer> evaluate_at(std::int64_t lambda, std::int64_t genus, std::int64_t nu = 0) const;
};

/// deg_{n-k} = delta1^{n-k} - C(n-k, r-k) delta1^{r-k} deg - sum_{i=k}^{r-1} C(n-k, i-k) delta1^{i-k} s_{r-i}
/// for k = 0..n; segre[i-1] is s_i. Binomials with out-of-range arguments vanish.
Multidegree projective_degrees(const TransformationConfig& cfg, const Polynomial& deg,
                               const std::vector<Polynomial>& segre);

/// projective_degrees with deg and the normal Segre degrees taken from a solved table.
Multidegree multidegree(const TransformationConfig& cfg, const InvariantTable& table);

struct MultidegreeViolation {
  enum class Kind { LowerBound, Product, LogConcavity };

  Kind kind;
  int i;
  int j;        // second index for Product; unused otherwise
  Integer lhs;  // the side that should be the smaller one
  Integer rhs;

  std::string describe() const;

  friend bool operator==(const MultidegreeViolation&, const MultidegreeViolation&) = default;
};

/// Checks 1 <= deg_{i+j} <= deg_i deg_j and deg_{i-1} deg_{i+1} <= deg_i^2.
/// Returns every violation; empty iff admissible.
std::vector<MultidegreeViolation> multidegree_admissible(std::span<const Integer> md);

struct AdmissibleType {
  int n;
  int delta1;
  int delta2;
  int dim_base;
  int dim_inverse_base;

  std::string to_string() const;

  friend auto operator<=>(const AdmissibleType&, const AdmissibleType&) = default;
};

/// The type (n, delta1, delta2) with dim B = r if it passes the dimension formula for the
/// map and its inverse (checked by cross-multiplication) and the range bounds.
std::optional<AdmissibleType> admissible_type(int n, int delta1, int delta2, int r);

struct TypeQuery {
  std::optional<int> n;
  std::optional<int> r;
  int bound_delta = 32;
};

/// Exhaustive enumeration over 2 <= delta1, delta2 <= bound_delta; sorted.
std::vector<AdmissibleType> admissible_types(const TypeQuery& query);

/// k0 = (n - r) delta1 - (n + 1): h^1(I_B(k)) vanishes for k >= k0.
int vanishing_threshold(const TransformationConfig& cfg);

}  // namespace cremona
