#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace cremona {

/// A candidate (lambda, g) or (lambda, g, nu).
struct Tuple {
  std::int64_t lambda = 0;
  std::int64_t genus = 0;
  std::optional<std::int64_t> nu;

  /// Point for evaluate_at; a missing nu evaluates as 0.
  std::array<std::int64_t, 4> point() const { return {lambda, genus, nu.value_or(0), 0}; }

  std::string to_string() const {
    std::string out = "(" + std::to_string(lambda) + "," + std::to_string(genus);
    if (nu) {
      out += "," + std::to_string(*nu);
    }
    return out + ")";
  }

  friend auto operator<=>(const Tuple&, const Tuple&) = default;
  friend bool operator==(const Tuple&, const Tuple&) = default;
};

}  // namespace cremona
