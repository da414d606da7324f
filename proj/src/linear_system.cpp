#include "cremona/linear_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cremona/errors.hpp"

namespace cremona {

LinearSystem::LinearSystem(std::vector<std::string> unknowns) : unknowns_(std::move(unknowns)) {
  std::set<std::string> seen;
  for (const auto& name : unknowns_) {
    if (var_from_name(name)) {
      throw DomainError("unknown '" + name + "' clashes with a polynomial variable");
    }
    if (!seen.insert(name).second) {
      throw DomainError("duplicate unknown '" + name + "'");
    }
  }
}

std::size_t LinearSystem::index_of(const std::string& unknown) const {
  const auto it = std::find(unknowns_.begin(), unknowns_.end(), unknown);
  if (it == unknowns_.end()) {
    throw DomainError("no unknown named '" + unknown + "'");
  }
  return static_cast<std::size_t>(it - unknowns_.begin());
}

LinearSystem& LinearSystem::add(std::string label,
                                const std::vector<std::pair<std::string, Rational>>& lhs,
                                Polynomial rhs) {
  std::vector<Rational> row(unknowns_.size());
  for (const auto& [name, coefficient] : lhs) {
    row[index_of(name)] += coefficient;
  }
  return add_row(std::move(label), std::move(row), std::move(rhs));
}

LinearSystem& LinearSystem::add_row(std::string label, std::vector<Rational> coefficients,
                                    Polynomial rhs) {
  if (coefficients.size() != unknowns_.size()) {
    throw DomainError("equation '" + label + "' has " + std::to_string(coefficients.size()) +
                      " coefficients for " + std::to_string(unknowns_.size()) + " unknowns");
  }
  equations_.push_back({std::move(label), std::move(coefficients), std::move(rhs)});
  return *this;
}

namespace {

struct Row {
  std::size_t origin;
  std::vector<Rational> coefficients;
  Polynomial rhs;
};

}  // namespace

Solution solve_linear_system(const LinearSystem& system) {
  const std::size_t columns = system.unknowns().size();
  std::vector<Row> rows;
  rows.reserve(system.equations().size());
  for (std::size_t i = 0; i < system.equations().size(); ++i) {
    const auto& eq = system.equations()[i];
    rows.push_back({i, eq.coefficients, eq.rhs});
  }

  std::vector<std::size_t> pivot_row_of_column(columns, rows.size());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns && rank < rows.size(); ++col) {
    std::size_t best = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      const Rational& c = rows[r].coefficients[col];
      if (c.is_zero()) {
        continue;
      }
      if (best == rows.size() ||
          c.bit_size() < rows[best].coefficients[col].bit_size() ||
          (c.bit_size() == rows[best].coefficients[col].bit_size() &&
           rows[r].origin < rows[best].origin)) {
        best = r;
      }
    }
    if (best == rows.size()) {
      continue;
    }
    std::swap(rows[rank], rows[best]);
    Row& pivot = rows[rank];
    const Rational inverse = Rational(1) / pivot.coefficients[col];
    for (auto& c : pivot.coefficients) {
      c *= inverse;
    }
    pivot.rhs *= Polynomial(inverse);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r].coefficients[col].is_zero()) {
        continue;
      }
      const Rational factor = rows[r].coefficients[col];
      for (std::size_t k = 0; k < columns; ++k) {
        rows[r].coefficients[k] -= factor * pivot.coefficients[k];
      }
      rows[r].rhs -= Polynomial(factor) * pivot.rhs;
    }
    pivot_row_of_column[col] = rank;
    ++rank;
  }

  // Rows past the rank are all-zero on the left; order them by original position.
  std::vector<const Row*> dependent;
  for (std::size_t r = rank; r < rows.size(); ++r) {
    dependent.push_back(&rows[r]);
  }
  std::sort(dependent.begin(), dependent.end(),
            [](const Row* a, const Row* b) { return a->origin < b->origin; });
  for (const Row* row : dependent) {
    if (!row->rhs.is_zero()) {
      throw InconsistentSystemError(system.equations()[row->origin].label);
    }
  }
  if (rank < columns) {
    const std::string label =
        dependent.empty() ? std::string("<underdetermined>")
                          : system.equations()[dependent.front()->origin].label;
    throw SingularSystemError(columns - rank, label);
  }

  Solution solution;
  for (std::size_t col = 0; col < columns; ++col) {
    solution.emplace(system.unknowns()[col], rows[pivot_row_of_column[col]].rhs);
  }
  return solution;
}

Polynomial residual(const LinearSystem& system, std::size_t equation, const Solution& solution) {
  const auto& eq = system.equations().at(equation);
  Polynomial lhs;
  for (std::size_t k = 0; k < system.unknowns().size(); ++k) {
    if (!eq.coefficients[k].is_zero()) {
      lhs += Polynomial(eq.coefficients[k]) * solution.at(system.unknowns()[k]);
    }
  }
  return lhs - eq.rhs;
}

}  // namespace cremona
