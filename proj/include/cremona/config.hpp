#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cremona {

/// Which invariant engine applies. Generic configs support the Diophantine and
/// multidegree machinery but not solve_invariants.
enum class Mode { Generic, ThreefoldInP6, FourfoldInP7 };

std::string_view mode_name(Mode mode);

/// Ambient data of a special Cremona transformation of P^n of type (delta1, delta2)
/// whose base locus has dimension r.
class TransformationConfig {
 public:
  /// Validates the dimension formula for both the map and its inverse, the bounds
  /// 2 <= delta_i <= n, 1 <= r, r' <= n - 2, and for n >= 6 also delta1 <= n - 1,
  /// r <= n - 3. Throws ConfigError otherwise.
  static TransformationConfig make(int n, int delta1, int delta2, int r);

  /// Type (3,5) on P^6 with a threefold base locus.
  static TransformationConfig cubic_p6();
  /// Type (3,3) on P^7 with a fourfold base locus.
  static TransformationConfig cubo_cubic_p7();

  int n() const noexcept { return n_; }
  int delta1() const noexcept { return delta1_; }
  int delta2() const noexcept { return delta2_; }
  int r() const noexcept { return r_; }
  /// Dimension of the base locus of the inverse map.
  int inverse_r() const noexcept { return inverse_r_; }
  Mode mode() const noexcept { return mode_; }

  int codimension() const noexcept { return n_ - r_; }
  /// delta1^codimension: the base locus is cut out by hypersurfaces of degree delta1.
  std::int64_t degree_bound() const;
  /// Ambient dimension of a curve section of the base locus.
  int curve_section_ambient() const noexcept { return n_ - r_ + 1; }

  std::string to_string() const;

  friend bool operator==(const TransformationConfig&, const TransformationConfig&) = default;

 private:
  TransformationConfig(int n, int delta1, int delta2, int r, int inverse_r, Mode mode)
      : n_(n), delta1_(delta1), delta2_(delta2), r_(r), inverse_r_(inverse_r), mode_(mode) {}

  int n_;
  int delta1_;
  int delta2_;
  int r_;
  int inverse_r_;
  Mode mode_;
};

}  // namespace cremona
