#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cremona {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (negative binomial index, j > 3, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid transformation type, pipeline spec, filter name or missing invariant.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class SolveError : public Error {
 public:
  using Error::Error;
};

class SingularSystemError : public SolveError {
 public:
  SingularSystemError(std::size_t rank_defect, std::string dependent_equation)
      : SolveError("singular linear system: rank defect " + std::to_string(rank_defect) +
                   ", first dependent equation '" + dependent_equation + "'"),
        rank_defect_(rank_defect),
        dependent_equation_(std::move(dependent_equation)) {}

  std::size_t rank_defect() const noexcept { return rank_defect_; }
  const std::string& dependent_equation() const noexcept { return dependent_equation_; }

 private:
  std::size_t rank_defect_;
  std::string dependent_equation_;
};

class InconsistentSystemError : public SolveError {
 public:
  explicit InconsistentSystemError(std::string equation)
      : SolveError("inconsistent linear system at equation '" + equation + "'"),
        equation_(std::move(equation)) {}

  const std::string& equation() const noexcept { return equation_; }

 private:
  std::string equation_;
};

}  // namespace cremona
