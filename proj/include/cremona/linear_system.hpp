#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cremona/polynomial.hpp"
#include "cremona/rational.hpp"

namespace cremona {

struct LinearEquation {
  std::string label;
  std::vector<Rational> coefficients;  // one per unknown
  Polynomial rhs;
};

/// A x = b with rational coefficients and right-hand sides in Q[lambda, g, nu, t].
class LinearSystem {
 public:
  /// Unknown names must be distinct and must not clash with the polynomial variables.
  explicit LinearSystem(std::vector<std::string> unknowns);

  /// Adds sum(coefficient * unknown) = rhs; unknowns not mentioned get coefficient zero.
  LinearSystem& add(std::string label, const std::vector<std::pair<std::string, Rational>>& lhs,
                    Polynomial rhs);

  LinearSystem& add_row(std::string label, std::vector<Rational> coefficients, Polynomial rhs);

  const std::vector<std::string>& unknowns() const noexcept { return unknowns_; }
  const std::vector<LinearEquation>& equations() const noexcept { return equations_; }

  std::size_t index_of(const std::string& unknown) const;

 private:
  std::vector<std::string> unknowns_;
  std::vector<LinearEquation> equations_;
};

using Solution = std::map<std::string, Polynomial>;

/// Exact Gauss-Jordan elimination. Among the candidate pivots of a column the one with the
/// smallest bit size wins, ties going to the lowest row. Overdetermined systems are fine
/// as long as they are consistent.
///
/// Throws InconsistentSystemError when some equation reduces to 0 = nonzero, and
/// SingularSystemError (carrying the rank defect and the first dependent equation) when
/// the solution is not unique.
Solution solve_linear_system(const LinearSystem& system);

/// A x - b for one equation under `solution`; identically zero for a correct solve.
Polynomial residual(const LinearSystem& system, std::size_t equation, const Solution& solution);

}  // namespace cremona
