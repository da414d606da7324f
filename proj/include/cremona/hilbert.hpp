#pragma once

#include <cstdint>
#include <vector>

#include "cremona/config.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

/// chi(O_B(t)) = value, coming from h^0 of the ideal sheaf and the vanishing threshold.
struct InterpolationConstraint {
  std::int64_t t;
  Integer value;

  friend bool operator==(const InterpolationConstraint&, const InterpolationConstraint&) = default;
};

/// Hilbert polynomial chi(O(t)) of an r-dimensional polarized variety written in the
/// binomial basis: sum_i coefficients[i] * C(t + r - i, r - i).
struct HilbertPolynomial {
  int dimension = 0;
  std::vector<Polynomial> coefficients;  // size dimension + 1, in lambda, g (and nu)
  Polynomial polynomial;                 // expanded, in t, lambda, g (and nu)
  std::vector<InterpolationConstraint> constraints;

  Polynomial at(std::int64_t t) const;

  static HilbertPolynomial from_coefficients(std::vector<Polynomial> coefficients);
};

struct ChiValues {
  Polynomial chi0;        // chi(O)
  Polynomial chi_h;       // chi(O(H))
  Polynomial chi_minus_h;   // chi(O(-H))
  Polynomial chi_minus_2h;  // chi(O(-2H))
};

/// chi(O_B(k)) = C(n + k, n) - h^0(I_B(k)) for the r - 1 largest k <= delta1, using
/// h^0(I_B(k)) = 0 for k < delta1 and h^0(I_B(delta1)) = n + 1.
std::vector<InterpolationConstraint> interpolation_constraints(const TransformationConfig& cfg);

/// Leading coefficient lambda, second -lambda - g + 1 (sectional genus), the rest solved
/// exactly from interpolation_constraints. Throws SolveError on inconsistent constraints.
HilbertPolynomial hilbert_polynomial(const TransformationConfig& cfg);

/// chi(O_S(t)) = chi(O_B(t)) - chi(O_B(t - 1)) for a hyperplane section S.
HilbertPolynomial hyperplane_section(const HilbertPolynomial& hp);

ChiValues chi_values(const HilbertPolynomial& hp);

}  // namespace cremona
