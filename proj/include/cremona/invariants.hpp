#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "cremona/config.hpp"
#include "cremona/hilbert.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

/// Entry names of an InvariantTable. Intersection numbers are written without dots:
/// "KH2" is K.H^2, "c2H" is c2(T).H, "nc" is a normal-bundle Chern degree and "ts" a
/// tangent-bundle Segre degree; "s" alone is a normal-bundle Segre degree.
namespace inv {
inline constexpr std::string_view kH3 = "H3";
inline constexpr std::string_view kKH2 = "KH2";
inline constexpr std::string_view kK2H = "K2H";
inline constexpr std::string_view kK3 = "K3";
inline constexpr std::string_view kC1H2 = "c1H2";
inline constexpr std::string_view kC2H = "c2H";
inline constexpr std::string_view kC3 = "c3";
inline constexpr std::string_view kS1 = "s1";
inline constexpr std::string_view kS2 = "s2";
inline constexpr std::string_view kS3 = "s3";
inline constexpr std::string_view kS4 = "s4";
inline constexpr std::string_view kNC1H2 = "nc1H2";
inline constexpr std::string_view kNC2H = "nc2H";
inline constexpr std::string_view kNC3 = "nc3";
inline constexpr std::string_view kTS1 = "ts1";
inline constexpr std::string_view kTS2 = "ts2";
inline constexpr std::string_view kTS3 = "ts3";
inline constexpr std::string_view kKSHS = "KSHS";    // K_S.H_S of a hyperplane section S
inline constexpr std::string_view kKS2 = "KS2";      // K_S^2
inline constexpr std::string_view kC2TS = "c2TS";    // c2(T_S)
inline constexpr std::string_view kChi0 = "chi0";
inline constexpr std::string_view kChiH = "chiH";
inline constexpr std::string_view kChiMinusH = "chiMinusH";
inline constexpr std::string_view kChiMinus2H = "chiMinus2H";
inline constexpr std::string_view kH4 = "H4";
inline constexpr std::string_view kKH3 = "KH3";
}  // namespace inv

/// Named invariants of a base locus (or of its reduction), each a polynomial in lambda
/// and g (and nu for reductions). Immutable once built.
class InvariantTable {
 public:
  enum class Kind { Threefold, Fourfold, Reduction };

  using Entries = std::map<std::string, Polynomial, std::less<>>;

  InvariantTable(Kind kind, Entries entries, HilbertPolynomial hilbert,
                 std::shared_ptr<const InvariantTable> section = nullptr);

  Kind kind() const noexcept { return kind_; }
  int dimension() const noexcept { return kind_ == Kind::Fourfold ? 4 : 3; }

  /// Throws ConfigError naming the missing invariant.
  const Polynomial& at(std::string_view key) const;
  bool contains(std::string_view key) const { return entries_.find(key) != entries_.end(); }
  const Entries& entries() const noexcept { return entries_; }

  const HilbertPolynomial& hilbert() const noexcept { return hilbert_; }

  /// The induced table of a general hyperplane section (fourfold tables only).
  const InvariantTable* section() const noexcept { return section_.get(); }

  /// The threefold the adjunction machinery works on: the table itself, or its section.
  const InvariantTable& threefold() const;

  InvariantTable evaluated(const Assignment& assignment) const;

 private:
  Kind kind_;
  Entries entries_;
  HilbertPolynomial hilbert_;
  std::shared_ptr<const InvariantTable> section_;
};

/// Solves the intersection-theoretic linear system for every invariant of the base locus.
///
/// Threefold-in-P6: Riemann-Roch, sectional genus, the double point formula, the tangent
/// and normal Chern ladders (coefficients C(n+1, j)), and the Cremona equations
/// deg_{n-k} = delta2^k for k below the codimension of the inverse base locus.
/// Fourfold-in-P7: s1..s4 from the sectional genus and the same Cremona equations, then
/// the hyperplane section X in P^6 is solved as a threefold with s_i(X) = s_i(B).
///
/// Throws ConfigError for generic configs and SingularSystemError if assembly is wrong.
InvariantTable solve_invariants(const TransformationConfig& cfg);

/// Invariants of the reduction (X', H') when X is X' blown up at nu points. With
/// `with_nu` false the result equals `base` entry for entry. Fourfold tables are reduced
/// through their threefold section.
InvariantTable reduction_table(const InvariantTable& base, bool with_nu = true);

/// (a K + b H)^j . H^(3-j) on a threefold table; throws DomainError unless 0 <= j <= 3.
Polynomial adjoint_power(const InvariantTable& table, std::int64_t a, std::int64_t b, int j);

/// d_j = (K + H)^j . H^(3-j), j = 0..3.
std::array<Polynomial, 4> pluridegrees(const InvariantTable& table);

}  // namespace cremona
