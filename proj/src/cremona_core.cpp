#include "cremona/cremona_core.hpp"

#include <algorithm>
#include <sstream>

#include "cremona/errors.hpp"
#include "cremona/invariants.hpp"

namespace cremona {

namespace {

Integer int_pow(int base, int exponent) {
  Integer out = 1;
  for (int i = 0; i < exponent; ++i) {
    out *= base;
  }
  return out;
}

// C(a, b) for integers with the convention that it vanishes outside 0 <= b <= a.
Integer range_binomial(int a, int b) {
  if (b < 0 || a < 0 || b > a) {
    return 0;
  }
  return binomial(a, b);
}

// The dimension formula for (n, d1, d2) with dim B = r, cross-multiplied.
bool dimension_formula(int n, int d1, int d2, int r) {
  const std::int64_t lhs = static_cast<std::int64_t>(n) * (d1 - 1) * d2;
  const std::int64_t rhs = (static_cast<std::int64_t>(d1) * d2 - 1) * r + (d1 + 1) * d2 - 2;
  return lhs == rhs;
}

// Solves the same formula for r; nullopt if it is not an integer.
std::optional<int> solve_dimension(int n, int d1, int d2) {
  const std::int64_t num = static_cast<std::int64_t>(n) * (d1 - 1) * d2 - (d1 + 1) * d2 + 2;
  const std::int64_t den = static_cast<std::int64_t>(d1) * d2 - 1;
  if (num % den != 0) {
    return std::nullopt;
  }
  return static_cast<int>(num / den);
}

}  // namespace

std::vector<Integer> Multidegree::evaluate_at(std::int64_t lambda, std::int64_t genus,
                                              std::int64_t nu) const {
  std::vector<Integer> out;
  out.reserve(entries.size());
  for (const auto& e : entries) {
    const Rational v = cremona::evaluate_at(e, {lambda, genus, nu, 0});
    if (!v.is_integer()) {
      throw DomainError("projective degree " + v.to_string() + " is not an integer");
    }
    out.push_back(v.numerator());
  }
  return out;
}

Multidegree projective_degrees(const TransformationConfig& cfg, const Polynomial& deg,
                               const std::vector<Polynomial>& segre) {
  const int n = cfg.n();
  const int r = cfg.r();
  const int d1 = cfg.delta1();
  Multidegree md;
  md.entries.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Polynomial value(Rational(int_pow(d1, n - k)));
    if (r - k >= 0) {
      value -= Polynomial(Rational(Integer(range_binomial(n - k, r - k) * int_pow(d1, r - k)))) * deg;
    }
    for (int i = k; i <= r - 1; ++i) {
      const Integer c = range_binomial(n - k, i - k);
      if (c == 0) {
        continue;
      }
      const auto index = static_cast<std::size_t>(r - i - 1);
      if (index >= segre.size()) {
        throw DomainError("projective_degrees: missing Segre degree s" + std::to_string(r - i));
      }
      value -= Polynomial(Rational(Integer(c * int_pow(d1, i - k)))) * segre[index];
    }
    md.entries[static_cast<std::size_t>(n - k)] = std::move(value);
  }
  return md;
}

Multidegree multidegree(const TransformationConfig& cfg, const InvariantTable& table) {
  std::vector<Polynomial> segre;
  for (int i = 1; i <= cfg.r(); ++i) {
    segre.push_back(table.at("s" + std::to_string(i)));
  }
  const Polynomial& deg = table.at(table.kind() == InvariantTable::Kind::Fourfold ? inv::kH4 : inv::kH3);
  return projective_degrees(cfg, deg, segre);
}

std::string MultidegreeViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::LowerBound:
      os << "deg_" << i << " = " << rhs << " < 1";
      break;
    case Kind::Product:
      os << "deg_" << i << "*deg_" << j << " = " << lhs << " < deg_" << (i + j) << " = " << rhs;
      break;
    case Kind::LogConcavity:
      os << "deg_" << i << "^2 = " << lhs << " < deg_" << (i - 1) << "*deg_" << (i + 1) << " = "
         << rhs;
      break;
  }
  return os.str();
}

std::vector<MultidegreeViolation> multidegree_admissible(std::span<const Integer> md) {
  std::vector<MultidegreeViolation> out;
  const int n = static_cast<int>(md.size()) - 1;
  for (int i = 0; i <= n; ++i) {
    if (md[static_cast<std::size_t>(i)] < 1) {
      out.push_back({MultidegreeViolation::Kind::LowerBound, i, 0, 1, md[static_cast<std::size_t>(i)]});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i; i + j <= n; ++j) {
      const Integer product = md[static_cast<std::size_t>(i)] * md[static_cast<std::size_t>(j)];
      const Integer& target = md[static_cast<std::size_t>(i + j)];
      if (product < target) {
        out.push_back({MultidegreeViolation::Kind::Product, i, j, product, target});
      }
    }
  }
  for (int i = 1; i < n; ++i) {
    const Integer square = md[static_cast<std::size_t>(i)] * md[static_cast<std::size_t>(i)];
    const Integer product = md[static_cast<std::size_t>(i - 1)] * md[static_cast<std::size_t>(i + 1)];
    if (square < product) {
      out.push_back({MultidegreeViolation::Kind::LogConcavity, i, 0, square, product});
    }
  }
  return out;
}

std::string AdmissibleType::to_string() const {
  std::ostringstream os;
  os << "n=" << n << " type (" << delta1 << "," << delta2 << ") dim B=" << dim_base
     << " dim B'=" << dim_inverse_base;
  return os.str();
}

std::optional<AdmissibleType> admissible_type(int n, int d1, int d2, int r) {
  if (n < 3 || d1 < 2 || d2 < 2 || d1 > n || d2 > n || r < 1 || r > n - 2) {
    return std::nullopt;
  }
  if (n >= 6 && (d1 > n - 1 || r > n - 3)) {
    return std::nullopt;
  }
  if (!dimension_formula(n, d1, d2, r)) {
    return std::nullopt;
  }
  const auto r_inv = solve_dimension(n, d2, d1);
  if (!r_inv || *r_inv < 1 || *r_inv > n - 2 || !dimension_formula(n, d2, d1, *r_inv)) {
    return std::nullopt;
  }
  return AdmissibleType{n, d1, d2, r, *r_inv};
}

std::vector<AdmissibleType> admissible_types(const TypeQuery& query) {
  std::vector<AdmissibleType> out;
  const int bound = query.bound_delta;
  // The formula gives n <= r d1 / (d1 - 1) + (d1 + 1) / (d1 - 1) <= 2r + 3.
  const int n_lo = query.n.value_or(3);
  const int n_hi = query.n ? *query.n : (query.r ? 2 * *query.r + 3 : std::max(bound, 3));
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int d1 = 2; d1 <= std::min(bound, n); ++d1) {
      for (int d2 = 2; d2 <= std::min(bound, n); ++d2) {
        const auto r = solve_dimension(n, d1, d2);
        if (!r || (query.r && *r != *query.r)) {
          continue;
        }
        if (auto type = admissible_type(n, d1, d2, *r)) {
          out.push_back(*type);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int vanishing_threshold(const TransformationConfig& cfg) {
  return (cfg.n() - cfg.r()) * cfg.delta1() - (cfg.n() + 1);
}

}  // namespace cremona
