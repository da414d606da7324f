#include "cremona/config.hpp"

#include <sstream>

#include "cremona/cremona_core.hpp"
#include "cremona/errors.hpp"

namespace cremona {

std::string_view mode_name(Mode mode) {
  switch (mode) {
    case Mode::ThreefoldInP6:
      return "threefold-in-P6";
    case Mode::FourfoldInP7:
      return "fourfold-in-P7";
    case Mode::Generic:
      break;
  }
  return "generic";
}

TransformationConfig TransformationConfig::make(int n, int delta1, int delta2, int r) {
  const auto type = admissible_type(n, delta1, delta2, r);
  if (!type) {
    std::ostringstream os;
    os << "(n, delta1, delta2, r) = (" << n << ", " << delta1 << ", " << delta2 << ", " << r
       << ") is not an admissible special Cremona type";
    throw ConfigError(os.str());
  }
  Mode mode = Mode::Generic;
  if (n == 6 && delta1 == 3 && delta2 == 5 && r == 3) {
    mode = Mode::ThreefoldInP6;
  } else if (n == 7 && delta1 == 3 && delta2 == 3 && r == 4) {
    mode = Mode::FourfoldInP7;
  }
  return TransformationConfig(n, delta1, delta2, r, type->dim_inverse_base, mode);
}

TransformationConfig TransformationConfig::cubic_p6() { return make(6, 3, 5, 3); }

TransformationConfig TransformationConfig::cubo_cubic_p7() { return make(7, 3, 3, 4); }

std::int64_t TransformationConfig::degree_bound() const {
  std::int64_t bound = 1;
  for (int i = 0; i < codimension(); ++i) {
    bound *= delta1_;
  }
  return bound;
}

std::string TransformationConfig::to_string() const {
  std::ostringstream os;
  os << "P^" << n_ << " type (" << delta1_ << "," << delta2_ << "), dim B = " << r_
     << ", dim B' = " << inverse_r_ << " [" << mode_name(mode_) << "]";
  return os.str();
}

}  // namespace cremona
